#pragma once

// Random instances shared by the unit, property and acceptance suites.

#include "extrainv/fibered.hpp"
#include "extrainv/subgroup.hpp"

#include <random>
#include <string>
#include <vector>

namespace extrainv::testing {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound);
/// Product of random elementary operations; determinant +-1.
IntMatrix random_unimodular(Rng& rng, std::size_t d);

/// d <= 3; at most two discrete generators with entries in (-1/2, 1/2] over
/// denominators {1, 2, 3, 6}; at most one continuous direction with entries
/// in {-1, 0, 1}.
SubgroupSpec random_spec(Rng& rng);

/// Either a small combination of the spec's generators plus an integer vector,
/// or such a combination shifted by a vector with denominators dividing 6.
RatVector random_point(const SubgroupSpec& spec, Rng& rng);

/// Subgroups used by the windowed sweeps, d in {1, 2}.
SubgroupSpec random_window_spec(Rng& rng, std::size_t dim);

/// A discrete generator of the canonical form halved (strictly larger), or
/// R^d when the group has no discrete part.
SubgroupSpec refine(const SubgroupSpec& spec, Rng& rng);

/// Box of tiles with at most max_tiles elements.
std::vector<Tile> random_window(Rng& rng, std::size_t dim, std::size_t max_tiles);

/// Values either from {0, +-1, +-i} or Gaussian.
Complex random_value(Rng& rng, bool exact);

FiberedGenerator random_generator(Rng& rng, std::size_t dim, const std::vector<Tile>& window,
                                  const std::vector<std::size_t>& grid, bool exact);

struct WindowInstance {
  std::string label;
  SubgroupSpec spec;
  ClosedSubgroup group;
  /// Z^d, the group itself and a strict supergroup, in inclusion order.
  std::vector<ClosedSubgroup> chain;
  GeneratorSet phi;
};

/// d <= 2, ell <= 3, |K| <= 12, grid <= 8^d cells. Generators are dense,
/// supported on single residue classes, or mixtures of both.
WindowInstance random_window_instance(Rng& rng);

SubgroupSpec make_spec(std::size_t dim, std::vector<std::vector<Rational>> discrete,
                       std::vector<std::vector<Rational>> continuous = {});

}  // namespace extrainv::testing
