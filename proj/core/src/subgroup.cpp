#include "extrainv/subgroup.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace extrainv {

namespace {

std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("tile coordinate does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

// Flip signs so the first nonzero entry of every w_i is positive; v_i follows.
void normalize_signs(IntMatrix& v, IntMatrix& w) {
  const std::size_t d = w.rows();
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t i = 0;
    while (i < d && w(i, j) == 0) ++i;
    if (i < d && w(i, j) < 0) {
      for (std::size_t r = 0; r < d; ++r) {
        w(r, j) = -w(r, j);
        v(r, j) = -v(r, j);
      }
    }
  }
}

}  // namespace

void SubgroupSpec::validate() const {
  auto check = [this](const std::vector<RatVector>& vs, const char* what) {
    for (const auto& v : vs)
      if (v.size() != dim)
        throw std::invalid_argument(std::string(what) + " vector has length " +
                                    std::to_string(v.size()) + ", expected " +
                                    std::to_string(dim));
  };
  if (dim == 0) throw std::invalid_argument("subgroup dimension must be positive");
  check(discrete, "discrete");
  check(continuous, "continuous");
}

ClosedSubgroup::ClosedSubgroup(std::size_t dim, IntVector factors, IntMatrix v, IntMatrix w)
    : dim_(dim), factors_(std::move(factors)), v_(std::move(v)), w_(std::move(w)) {}

ClosedSubgroup ClosedSubgroup::integer_lattice(std::size_t dim) {
  return ClosedSubgroup(dim, IntVector(dim, Integer(1)), IntMatrix::identity(dim),
                        IntMatrix::identity(dim));
}

ClosedSubgroup ClosedSubgroup::canonicalize(const SubgroupSpec& spec) {
  spec.validate();
  const std::size_t d = spec.dim;
  // Pairings with Z^d are automatic for integer x, so only the extra
  // generators constrain M*.
  const IntMatrix mstar = constraint_lattice(RatMatrix::from_rows(d, spec.discrete),
                                             RatMatrix::from_rows(d, spec.continuous));
  const std::size_t q = mstar.cols();
  if (q == 0) {
    return ClosedSubgroup(d, {}, IntMatrix::identity(d), IntMatrix::identity(d));
  }
  // U * H * P = D  =>  H = U^{-1} D P^{-1}; the columns of U^{-1} are a Z^d
  // basis w_1..w_d and {D_ii w_i} spans the same lattice as H.
  const LatticeSNF f = snf(mstar);
  IntMatrix w = to_integer(rational_inverse(to_rational(f.U)));
  IntVector factors(q);
  for (std::size_t i = 0; i < q; ++i) factors[i] = f.D(i, i);
  IntMatrix v = extrainv::dual_basis(w);
  normalize_signs(v, w);
  return ClosedSubgroup(d, std::move(factors), std::move(v), std::move(w));
}

std::vector<RatVector> ClosedSubgroup::discrete_generators() const {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < discrete_rank(); ++i) {
    RatVector g(dim_);
    for (std::size_t r = 0; r < dim_; ++r) g[r] = Rational(v_(r, i), factors_[i]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<RatVector> ClosedSubgroup::continuous_directions() const {
  std::vector<RatVector> out;
  for (std::size_t j = discrete_rank(); j < dim_; ++j) {
    RatVector c(dim_);
    for (std::size_t r = 0; r < dim_; ++r) c[r] = Rational(v_(r, j));
    out.push_back(std::move(c));
  }
  return out;
}

IntVector ClosedSubgroup::w_coordinates(std::span<const std::int64_t> k) const {
  if (k.size() != dim_) throw std::invalid_argument("tile dimension mismatch");
  IntVector c(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t r = 0; r < dim_; ++r) c[i] += v_(r, i) * k[r];
  return c;
}

IntMatrix dual(const ClosedSubgroup& m) {
  const std::size_t d = m.dim();
  IntMatrix out(d, m.discrete_rank());
  for (std::size_t i = 0; i < m.discrete_rank(); ++i)
    for (std::size_t r = 0; r < d; ++r) out(r, i) = m.factors()[i] * m.dual_basis()(r, i);
  return out;
}

bool contains(const ClosedSubgroup& m, const RatVector& x) {
  if (x.size() != m.dim()) throw std::invalid_argument("contains: dimension mismatch");
  for (std::size_t i = 0; i < m.discrete_rank(); ++i) {
    Rational u = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) u += Rational(m.dual_basis()(r, i)) * x[r];
    if (!is_integer(u * Rational(m.factors()[i]))) return false;
  }
  return true;
}

bool dual_contains(const ClosedSubgroup& m, std::span<const std::int64_t> x) {
  const IntVector c = m.w_coordinates(x);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i < m.discrete_rank()) {
      if (c[i] % m.factors()[i] != 0) return false;
    } else if (c[i] != 0) {
      return false;
    }
  }
  return true;
}

TileResidue reduce_tile(const ClosedSubgroup& m, std::span<const std::int64_t> k) {
  const std::size_t d = m.dim();
  const IntVector c = m.w_coordinates(k);
  IntVector rest(d), lattice(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (i < m.discrete_rank()) {
      auto [t, r] = floor_divmod(c[i], m.factors()[i]);
      rest[i] = r;
      lattice[i] = t * m.factors()[i];
    } else {
      rest[i] = c[i];
    }
  }
  const IntVector sigma = m.dual_basis() * rest;
  const IntVector mstar = m.dual_basis() * lattice;
  TileResidue out{Tile(d), Tile(d)};
  for (std::size_t i = 0; i < d; ++i) {
    out.sigma[i] = to_int64(sigma[i]);
    out.mstar[i] = to_int64(mstar[i]);
  }
  return out;
}

std::vector<ResidueClass> partition_tiles(const ClosedSubgroup& m, std::span<const Tile> tiles) {
  std::map<Tile, std::vector<Tile>> groups;
  for (const auto& k : tiles) groups[reduce_tile(m, k).sigma].push_back(k);
  std::vector<ResidueClass> out;
  out.reserve(groups.size());
  for (auto& [sigma, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    out.push_back({sigma, std::move(members)});
  }
  return out;
}

bool is_subgroup_of(const ClosedSubgroup& m, const ClosedSubgroup& other) {
  if (m.dim() != other.dim()) throw std::invalid_argument("is_subgroup_of: dimension mismatch");
  for (const auto& g : m.discrete_generators())
    if (!contains(other, g)) return false;
  // v lies in the subspace of `other` iff it pairs to zero with every w_i, i < q.
  for (const auto& v : m.continuous_directions()) {
    for (std::size_t i = 0; i < other.discrete_rank(); ++i) {
      Rational p = 0;
      for (std::size_t r = 0; r < m.dim(); ++r) p += v[r] * Rational(other.dual_basis()(r, i));
      if (p != 0) return false;
    }
  }
  return true;
}

SubgroupSpec to_spec(const ClosedSubgroup& m) {
  return {m.dim(), m.discrete_generators(), m.continuous_directions()};
}

}  // namespace extrainv
