#pragma once

// Brute-force verifiers for small instances. They search directly over the
// user's generators with native integers and never call into the Smith/Hermite
// machinery, so they can be used to check it.

#include "extrainv/subgroup.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace extrainv::oracle {

struct BruteForceBudget {
  /// Coefficient bound B: integer coefficients and Z^d offsets lie in [-B, B].
  std::int64_t bound = 6;
  /// Continuous coefficients range over {p / denominator : |p| <= B * denominator}.
  std::int64_t denominator = 12;
  std::size_t max_dim = 3;
  std::size_t max_window = 12;

  /// Throws std::invalid_argument unless every field is positive.
  void validate() const;
};

/// Searches x = sum c_g g + sum t_v v + z within the budget. Sound; complete
/// only for representations inside the budget.
bool brute_membership(const SubgroupSpec& spec, const RatVector& x, const BruteForceBudget& budget = {});

/// All x in Z^d ∩ [-B, B]^d pairing integrally with the discrete generators and
/// to zero with the continuous directions, in lexicographic order.
std::vector<Tile> brute_dual(const SubgroupSpec& spec, const BruteForceBudget& budget = {});

/// Euclidean distance from v to the span of `spanning`, by Gram-Schmidt with
/// reorthogonalization. A candidate direction is dropped when its remainder is
/// at most tol times the largest spanning norm.
double brute_span_membership(const std::vector<std::complex<double>>& v,
                             const std::vector<std::vector<std::complex<double>>>& spanning,
                             double tol = 1e-10);

}  // namespace extrainv::oracle
