#include "extrainv/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace extrainv {

namespace {

std::string hex_color(int r, int g, int b) {
  std::array<char, 8> buf{};
  std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", r, g, b);
  return buf.data();
}

// HSV with s = 0.55, v = 0.92, channels rounded to integers.
std::string hue_color(double hue) {
  const double v = 0.92, s = 0.55;
  const double c = v * s;
  const double h = hue / 60.0;
  const double x = c * (1.0 - std::abs(std::fmod(h, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h) % 6) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double mm = v - c;
  auto channel = [&](double t) { return static_cast<int>(std::lround((t + mm) * 255.0)); };
  return hex_color(channel(r), channel(g), channel(b));
}

std::string tile_label(const Tile& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s;
}

void check_dim(std::size_t d) {
  if (d == 0 || d > 2) throw std::invalid_argument("rendering supports d = 1 or d = 2 only, got d = " + std::to_string(d));
}

}  // namespace

std::vector<std::string> class_palette(std::size_t n) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::string c = hue_color(360.0 * static_cast<double>(i) / static_cast<double>(n));
    // Rounding can merge neighbouring hues for very large n; fall back to a grey ramp.
    for (int shade = 0; seen.contains(c); ++shade) c = hex_color(shade % 256, (shade / 256) % 256, 200);
    seen.insert(c);
    out.push_back(std::move(c));
  }
  return out;
}

RenderSpec make_render_spec(const ClosedSubgroup& m, std::vector<Tile> window, int unit) {
  check_dim(m.dim());
  if (window.empty()) throw std::invalid_argument("render window is empty");
  if (unit <= 0) throw std::invalid_argument("render unit must be positive");
  for (const auto& k : window)
    if (k.size() != m.dim()) throw std::invalid_argument("window tile dimension mismatch");
  RenderSpec spec;
  spec.dim = m.dim();
  spec.unit = unit;
  const auto classes = partition_tiles(m, window);
  const auto palette = class_palette(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) spec.colors[classes[i].sigma] = palette[i];
  std::sort(window.begin(), window.end());
  window.erase(std::unique(window.begin(), window.end()), window.end());
  spec.window = std::move(window);
  return spec;
}

std::string render_svg(const ClosedSubgroup& m, const RenderSpec& spec) {
  check_dim(spec.dim);
  if (spec.dim != m.dim()) throw std::invalid_argument("render spec dimension mismatch");
  const std::size_t d = spec.dim;
  const auto& w = m.dual_basis();
  // Corners of Omega = W [0,1)^d in standard coordinates.
  std::vector<std::array<std::int64_t, 2>> corners;
  if (d == 1) {
    const auto w1 = w(0, 0).convert_to<std::int64_t>();
    corners = {{0, 0}, {w1, 0}};
  } else {
    const std::array<std::int64_t, 2> w1{w(0, 0).convert_to<std::int64_t>(), w(1, 0).convert_to<std::int64_t>()};
    const std::array<std::int64_t, 2> w2{w(0, 1).convert_to<std::int64_t>(), w(1, 1).convert_to<std::int64_t>()};
    corners = {{0, 0}, w1, {w1[0] + w2[0], w1[1] + w2[1]}, w2};
  }
  auto point = [&](const Tile& k) { return std::array<std::int64_t, 2>{k[0], d == 2 ? k[1] : 0}; };

  std::int64_t xmin = std::numeric_limits<std::int64_t>::max(), xmax = std::numeric_limits<std::int64_t>::min();
  std::int64_t ymin = xmin, ymax = xmax;
  for (const auto& k : spec.window) {
    const auto p = point(k);
    for (const auto& c : corners) {
      xmin = std::min(xmin, p[0] + c[0]);
      xmax = std::max(xmax, p[0] + c[0]);
      ymin = std::min(ymin, p[1] + c[1]);
      ymax = std::max(ymax, p[1] + c[1]);
    }
  }
  const std::int64_t u = spec.unit, pad = spec.margin;
  // d = 1 draws a strip half a unit tall.
  const std::int64_t strip = u / 2;
  const std::int64_t width = (xmax - xmin) * u + 2 * pad;
  const std::int64_t height = d == 1 ? strip + 2 * pad : (ymax - ymin) * u + 2 * pad;
  auto px = [&](std::int64_t x) { return pad + (x - xmin) * u; };
  auto py = [&](std::int64_t y) { return pad + (ymax - y) * u; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  std::vector<Tile> dots;
  for (const auto& k : spec.window) {
    const auto residue = reduce_tile(m, k);
    const auto it = spec.colors.find(residue.sigma);
    if (it == spec.colors.end()) throw std::invalid_argument("render spec has no color for class " + tile_label(residue.sigma));
    const auto p = point(k);
    out << "<polygon class=\"tile\" data-k=\"" << tile_label(k) << "\" fill=\"" << it->second
        << "\" stroke=\"#333333\" stroke-width=\"1\" points=\"";
    if (d == 1) {
      const std::int64_t a = px(p[0] + std::min(corners[0][0], corners[1][0]));
      const std::int64_t b = px(p[0] + std::max(corners[0][0], corners[1][0]));
      out << a << ',' << pad << ' ' << b << ',' << pad << ' ' << b << ',' << pad + strip << ' ' << a << ','
          << pad + strip;
    } else {
      for (std::size_t c = 0; c < corners.size(); ++c) {
        if (c) out << ' ';
        out << px(p[0] + corners[c][0]) << ',' << py(p[1] + corners[c][1]);
      }
    }
    out << "\"/>\n";
    if (residue.sigma == k) dots.push_back(k);
  }
  const std::int64_t r = std::max<std::int64_t>(2, u / 10);
  for (const auto& k : dots) {
    const auto p = point(k);
    out << "<circle class=\"representative\" data-k=\"" << tile_label(k) << "\" cx=\"" << px(p[0]) << "\" cy=\""
        << (d == 1 ? pad + strip / 2 : py(p[1])) << "\" r=\"" << r << "\" fill=\"#000000\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace extrainv
