#include "extrainv/exact_linalg.hpp"

#include <algorithm>
#include <optional>

namespace extrainv {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
struct Bezout {
  Integer g, x, y;
};
Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// row_dst += factor * row_src
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}
void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}
void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}
void negate_col(IntMatrix& m, std::size_t c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = -m(i, c);
}

// Position of the smallest nonzero |entry| in the trailing block starting at t.
std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& d,
                                                                  std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs_value(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

IntVector LatticeSNF::diagonal() const {
  const std::size_t n = std::min(D.rows(), D.cols());
  IntVector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = D(i, i);
  return diag;
}

std::size_t LatticeSNF::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (x != 0) ++r;
  return r;
}

LatticeSNF snf(const IntMatrix& a) {
  if (a.empty()) throw std::invalid_argument("snf: empty matrix");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool finished = false;
    while (true) {
      auto pivot = smallest_pivot(d, t);
      if (!pivot) {
        finished = true;
        break;
      }
      d.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder exists; re-pivot

      // Row and column t are clear. Enforce divisibility of the trailing block.
      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < m && !offending_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending_row = i;
            break;
          }
      if (!offending_row) break;
      add_row_multiple(d, t, *offending_row, Integer(1));
      add_row_multiple(u, t, *offending_row, Integer(1));
    }
    if (finished) break;
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("is_unimodular: matrix is not square");
  Integer det = determinant(a);
  return det == 1 || det == -1;
}

RatMatrix rational_inverse(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("rational_inverse: matrix is not square");
  const std::size_t n = a.rows();
  RatMatrix work = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work(piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrixError("rational_inverse: matrix is singular");
    work.swap_rows(col, piv);
    inv.swap_rows(col, piv);
    const Rational scale = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work(i, col) == 0) continue;
      const Rational f = work(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(i, j) -= f * work(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

IntMatrix dual_basis(const IntMatrix& v) {
  if (!v.is_square() || !is_unimodular(v))
    throw std::invalid_argument("dual_basis: columns do not form a basis of Z^d");
  return to_integer(rational_inverse(to_rational(v.transposed())));
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0 || n == 0) return IntMatrix::identity(n);
  const LatticeSNF f = snf(a);
  const std::size_t r = f.rank();
  IntMatrix k(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - r) = f.V(i, j);
  return k;
}

IntMatrix hermite_columns(const IntMatrix& basis) {
  IntMatrix h = basis;
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  std::size_t col = 0;
  for (std::size_t row = 0; row < rows && col < cols; ++row) {
    for (std::size_t j = col + 1; j < cols; ++j) {
      if (h(row, j) == 0) continue;
      const Integer a = h(row, col);
      const Integer b = h(row, j);
      const Bezout bz = extended_gcd(a, b);
      const Integer a_g = a / bz.g;
      const Integer b_g = b / bz.g;
      for (std::size_t i = 0; i < rows; ++i) {
        const Integer ci = h(i, col);
        const Integer cj = h(i, j);
        h(i, col) = bz.x * ci + bz.y * cj;
        h(i, j) = -b_g * ci + a_g * cj;
      }
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) negate_col(h, col);
    for (std::size_t i = 0; i < col; ++i) {
      const auto [q, r] = floor_divmod(h(row, i), h(row, col));
      add_col_multiple(h, i, col, -q);
    }
    ++col;
  }
  if (col != cols) throw std::invalid_argument("hermite_columns: basis is not full column rank");
  return h;
}

IntMatrix constraint_lattice(const RatMatrix& pairings, const RatMatrix& annihilated) {
  const std::size_t d = std::max(pairings.cols(), annihilated.cols());
  if ((pairings.rows() > 0 && pairings.cols() != d) ||
      (annihilated.rows() > 0 && annihilated.cols() != d))
    throw std::invalid_argument("constraint_lattice: column counts differ");
  const std::size_t r = pairings.rows();
  const std::size_t s = annihilated.rows();
  if (r + s == 0) return IntMatrix::identity(d);

  // Unknowns (x, y) in Z^{d+r}: L_i * p_i . x - L_i * y_i = 0 encodes p_i . x in Z,
  // and the annihilated rows are cleared of denominators.
  IntMatrix system(r + s, d + r);
  for (std::size_t i = 0; i < r; ++i) {
    const RatVector row = pairings.row(i);
    const Integer l = denominator_lcm(row);
    for (std::size_t j = 0; j < d; ++j)
      system(i, j) = boost::multiprecision::numerator(row[j] * Rational(l));
    system(i, d + i) = -l;
  }
  for (std::size_t i = 0; i < s; ++i) {
    const RatVector row = annihilated.row(i);
    const Integer l = denominator_lcm(row);
    for (std::size_t j = 0; j < d; ++j)
      system(r + i, j) = boost::multiprecision::numerator(row[j] * Rational(l));
  }
  const IntMatrix kernel = integer_kernel(system);
  // y is determined by x, so projecting onto the x block keeps independence.
  IntMatrix x_part(d, kernel.cols());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < kernel.cols(); ++j) x_part(i, j) = kernel(i, j);
  if (x_part.cols() == 0) return x_part;
  return hermite_columns(x_part);
}

RatMatrix to_rational(const IntMatrix& a) {
  std::vector<Rational> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) e.emplace_back(x);
  return RatMatrix(a.rows(), a.cols(), std::move(e));
}

IntMatrix to_integer(const RatMatrix& a) {
  std::vector<Integer> e;
  e.reserve(a.entries().size());
  for (const auto& x : a.entries()) {
    if (!is_integer(x)) throw std::domain_error("to_integer: non-integral entry");
    e.push_back(boost::multiprecision::numerator(x));
  }
  return IntMatrix(a.rows(), a.cols(), std::move(e));
}

Integer denominator_lcm(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  return l;
}

std::pair<Integer, Integer> floor_divmod(const Integer& a, const Integer& b) {
  if (b <= 0) throw std::invalid_argument("floor_divmod: divisor must be positive");
  Integer q = a / b;
  Integer r = a - q * b;
  if (r < 0) {
    q -= 1;
    r += b;
  }
  return {q, r};
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace extrainv
