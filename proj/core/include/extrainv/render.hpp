#pragma once

// SVG pictures of the residue partition of a window of tiles (d = 1 or 2).
// Tiles are drawn as k + Omega and filled with one color per residue class;
// representatives sigma (tiles with k = sigma) carry a black dot at k.

#include "extrainv/subgroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace extrainv {

struct RenderSpec {
  std::size_t dim = 0;
  std::vector<Tile> window;
  /// Fill color ("#rrggbb") per class representative.
  std::map<Tile, std::string> colors;
  /// Pixels per unit length.
  int unit = 40;
  int margin = 10;
};

/// Assigns distinct colors to the classes met by the window, in sigma order.
/// Throws std::invalid_argument for d outside {1, 2} or an empty window.
RenderSpec make_render_spec(const ClosedSubgroup& m, std::vector<Tile> window, int unit = 40);

/// Byte-deterministic SVG document.
std::string render_svg(const ClosedSubgroup& m, const RenderSpec& spec);

/// n evenly spaced hues, returned as "#rrggbb".
std::vector<std::string> class_palette(std::size_t n);

}  // namespace extrainv
