#pragma once

// Closed subgroups Z^d ⊆ M ⊆ R^d in canonical form.
//
// A canonical subgroup is described by a Z^d basis v_1..v_d (columns of V),
// its dual basis w_1..w_d (columns of W, V^T W = I) and invariant factors
// a_1 | a_2 | ... | a_q:
//
//   M  = { sum_{i<q} (k_i / a_i) v_i + sum_{j>=q} t_j v_j : k_i in Z, t_j in R }
//   M* = { sum_{i<q} n_i a_i w_i : n_i in Z }
//
// Integer tiles k are reduced modulo M* to a representative sigma whose
// W-coordinates c = V^T sigma satisfy 0 <= c_i < a_i for i < q.

#include "extrainv/exact_linalg.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace extrainv {

/// Integer translate of the fundamental domain; also used for points of Z^d.
using Tile = std::vector<std::int64_t>;

/// User-facing description: M is the closure of the group generated by Z^d,
/// the discrete generators and the real span of the continuous directions.
struct SubgroupSpec {
  std::size_t dim = 0;
  std::vector<RatVector> discrete;
  std::vector<RatVector> continuous;

  /// Throws std::invalid_argument when a vector's length differs from dim.
  void validate() const;
};

class ClosedSubgroup {
 public:
  /// Canonical form of the subgroup described by spec.
  static ClosedSubgroup canonicalize(const SubgroupSpec& spec);

  /// Z^d itself.
  static ClosedSubgroup integer_lattice(std::size_t dim);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  /// Number of discrete directions q; the continuous dimension is dim() - q.
  [[nodiscard]] std::size_t discrete_rank() const noexcept { return factors_.size(); }
  [[nodiscard]] std::size_t continuous_dim() const noexcept { return dim_ - factors_.size(); }
  [[nodiscard]] const IntVector& factors() const noexcept { return factors_; }
  [[nodiscard]] const IntMatrix& basis() const noexcept { return v_; }
  [[nodiscard]] const IntMatrix& dual_basis() const noexcept { return w_; }

  /// Generators of M modulo its subspace: (1/a_i) v_i for i < q.
  [[nodiscard]] std::vector<RatVector> discrete_generators() const;
  /// Spanning vectors v_j, j >= q, of the largest subspace inside M.
  [[nodiscard]] std::vector<RatVector> continuous_directions() const;

  /// W-coordinates V^T k of an integer vector.
  [[nodiscard]] IntVector w_coordinates(std::span<const std::int64_t> k) const;

  friend bool operator==(const ClosedSubgroup&, const ClosedSubgroup&) = default;

 private:
  ClosedSubgroup(std::size_t dim, IntVector factors, IntMatrix v, IntMatrix w);

  std::size_t dim_ = 0;
  IntVector factors_;
  IntMatrix v_;
  IntMatrix w_;
};

/// Decomposition k = sigma + mstar with sigma in the canonical section and
/// mstar in M*.
struct TileResidue {
  Tile sigma;
  Tile mstar;
};

/// Tiles of a window sharing one residue modulo M*.
struct ResidueClass {
  Tile sigma;
  std::vector<Tile> members;
};

/// Columns a_1 w_1, ..., a_q w_q: a Z-basis of M*.
IntMatrix dual(const ClosedSubgroup& m);

/// Exact membership: the V-coordinates u = W^T x satisfy u_i a_i in Z for i < q.
bool contains(const ClosedSubgroup& m, const RatVector& x);

/// True iff the integer vector lies in M*.
bool dual_contains(const ClosedSubgroup& m, std::span<const std::int64_t> x);

TileResidue reduce_tile(const ClosedSubgroup& m, std::span<const std::int64_t> k);

/// Groups the tiles by residue. Classes are ordered by sigma, members keep
/// the lexicographic order of the input; duplicates are kept once.
std::vector<ResidueClass> partition_tiles(const ClosedSubgroup& m, std::span<const Tile> tiles);

/// True iff m ⊆ other. Throws std::invalid_argument on dimension mismatch.
bool is_subgroup_of(const ClosedSubgroup& m, const ClosedSubgroup& other);

/// Spec whose canonicalization reproduces m (its own generators).
SubgroupSpec to_spec(const ClosedSubgroup& m);

}  // namespace extrainv
