#include "extrainv/exact_linalg.hpp"

#include "support/instances.hpp"

#include <doctest.h>

using namespace extrainv;

namespace {

bool divisibility_chain(const IntVector& diag) {
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i] == 0 && diag[i + 1] != 0) return false;
    if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
  }
  return true;
}

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("snf of diag(2,3) has invariant factors 1 and 6") {
  const IntMatrix a{{2, 0}, {0, 3}};
  const LatticeSNF f = snf(a);
  CHECK(f.U * a * f.V == f.D);
  CHECK(f.diagonal() == IntVector{1, 6});
}

TEST_CASE("snf of the identity is the identity") {
  const IntMatrix a = IntMatrix::identity(3);
  const LatticeSNF f = snf(a);
  CHECK(f.D == a);
  CHECK(f.U * a * f.V == f.D);
}

TEST_CASE("snf of a rank-deficient matrix keeps zeros last") {
  const IntMatrix a{{1, 0}, {0, 0}};
  const LatticeSNF f = snf(a);
  CHECK(f.diagonal() == IntVector{1, 0});
  CHECK(f.rank() == 1);
  const IntMatrix b{{0, 0}, {0, 4}};
  CHECK(snf(b).diagonal() == IntVector{4, 0});
}

TEST_CASE("snf handles rectangular and zero matrices") {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}};
  const LatticeSNF f = snf(a);
  CHECK(f.U * a * f.V == f.D);
  CHECK(f.diagonal() == IntVector{2, 6});
  const IntMatrix z(2, 3);
  CHECK(snf(z).diagonal() == IntVector{0, 0});
}

TEST_CASE("snf properties on random matrices") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
    const auto c = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
    const IntMatrix a = testing::random_int_matrix(rng, r, c, 5);
    const LatticeSNF f = snf(a);
    REQUIRE(f.U * a * f.V == f.D);
    CHECK(is_unimodular(f.U));
    CHECK(is_unimodular(f.V));
    CHECK(is_diagonal(f.D));
    CHECK(divisibility_chain(f.diagonal()));
    for (const auto& e : f.diagonal()) CHECK(e >= 0);
    const IntMatrix b = testing::random_unimodular(rng, r) * a * testing::random_unimodular(rng, c);
    CHECK(snf(b).diagonal() == f.diagonal());
  }
}

TEST_CASE("determinant and unimodularity") {
  CHECK(determinant(IntMatrix{{1, 3}, {1, 2}}) == -1);
  CHECK(is_unimodular(IntMatrix::identity(3)));
  CHECK(is_unimodular(IntMatrix{{1, 3}, {1, 2}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  CHECK_THROWS_AS((void)is_unimodular(IntMatrix(2, 3)), std::invalid_argument);
  CHECK(determinant(IntMatrix{{0, 1, 2}, {3, 4, 5}, {6, 7, 9}}) == -3);
}

TEST_CASE("rational inverse") {
  CHECK(rational_inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));
  // Inverse of the transpose of columns (1,1,0), (3,2,0), (0,0,1).
  const RatMatrix at{{1, 1, 0}, {3, 2, 0}, {0, 0, 1}};
  const RatMatrix expected{{-2, 1, 0}, {3, -1, 0}, {0, 0, 1}};
  const RatMatrix inv = rational_inverse(at);
  CHECK(inv == expected);
  CHECK(at * inv == RatMatrix::identity(3));
  CHECK_THROWS_AS((void)rational_inverse(RatMatrix{{1, 1}, {1, 1}}), SingularMatrixError);
  const RatMatrix h{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 3), Rational(1, 4)}};
  CHECK(h * rational_inverse(h) == RatMatrix::identity(2));
}

TEST_CASE("dual basis") {
  CHECK(dual_basis(IntMatrix::identity(2)) == IntMatrix::identity(2));
  const IntMatrix v = IntMatrix::from_columns(3, {{1, 1, 0}, {3, 2, 0}, {0, 0, 1}});
  const IntMatrix w = dual_basis(v);
  CHECK(w == IntMatrix::from_columns(3, {{-2, 3, 0}, {1, -1, 0}, {0, 0, 1}}));
  CHECK(v.transposed() * w == IntMatrix::identity(3));
  CHECK(dual_basis(w) == v);

  const IntMatrix v2 = IntMatrix::from_columns(2, {{1, 0}, {-1, 1}});
  CHECK(dual_basis(v2) == IntMatrix::from_columns(2, {{1, 1}, {0, 1}}));
  CHECK_THROWS_AS((void)dual_basis(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("constraint lattice") {
  CHECK(constraint_lattice(RatMatrix(0, 3), RatMatrix(0, 3)) == IntMatrix::identity(3));

  const RatMatrix pairings{{Rational(1, 2), 0, 0}, {0, Rational(1, 3), 0}};
  const RatMatrix annihilated{{0, 0, 1}};
  CHECK(constraint_lattice(pairings, annihilated) == IntMatrix::from_columns(3, {{2, 0, 0}, {0, 3, 0}}));

  const RatMatrix p2{{Rational(1, 3), 0}};
  const RatMatrix a2{{-1, 1}};
  CHECK(constraint_lattice(p2, a2) == IntMatrix::from_columns(2, {{3, 3}}));

  // Every annihilated direction removed: the zero lattice.
  CHECK(constraint_lattice(RatMatrix(0, 2), RatMatrix{{1, 0}, {0, 1}}).cols() == 0);
}

TEST_CASE("constraint lattice is saturated against enumeration") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const SubgroupSpec spec = testing::random_spec(rng);
    const std::size_t d = spec.dim;
    const RatMatrix p = RatMatrix::from_rows(d, spec.discrete);
    const RatMatrix a = RatMatrix::from_rows(d, spec.continuous);
    const IntMatrix basis = constraint_lattice(p, a);
    // Every basis vector satisfies the constraints.
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      const RatVector col = to_rational(basis).column(j);
      for (const auto& row : spec.discrete) CHECK(is_integer(dot(row, col)));
      for (const auto& row : spec.continuous) CHECK(dot(row, col) == 0);
    }
    // Every satisfying box vector is an integer combination of the basis.
    const int b = 3;
    Tile x(d, -b);
    while (true) {
      RatVector xr(x.begin(), x.end());
      bool ok = true;
      for (const auto& row : spec.discrete) ok = ok && is_integer(dot(row, xr));
      for (const auto& row : spec.continuous) ok = ok && dot(row, xr) == 0;
      if (ok && basis.cols() > 0) {
        // Solve in HNF: lower echelon with positive pivots.
        IntMatrix aug(d, basis.cols() + 1);
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < basis.cols(); ++j) aug(i, j) = basis(i, j);
          aug(i, basis.cols()) = x[i];
        }
        const IntVector lo = snf(basis).diagonal(), hi = snf(aug).diagonal();
        Integer plo = 1, phi = 1;
        for (const auto& e : lo) if (e != 0) plo *= e;
        for (const auto& e : hi) if (e != 0) phi *= e;
        CHECK(snf(basis).rank() == snf(aug).rank());
        CHECK(plo == phi);
      } else if (ok) {
        for (auto e : x) CHECK(e == 0);
      }
      std::size_t pos = d;
      bool done = true;
      while (pos-- > 0) {
        if (x[pos] < b) {
          ++x[pos];
          done = false;
          break;
        }
        x[pos] = -b;
      }
      if (done) break;
    }
  }
}

TEST_CASE("integer kernel and hermite form") {
  const IntMatrix a{{1, 2, 3}};
  const IntMatrix k = integer_kernel(a);
  CHECK(k.cols() == 2);
  CHECK(a * k == IntMatrix(1, 2));
  const IntMatrix h = hermite_columns(IntMatrix::from_columns(2, {{4, 6}, {2, 4}}));
  CHECK(h == hermite_columns(IntMatrix::from_columns(2, {{2, 4}, {4, 6}})));
  CHECK(h(0, 1) == 0);
  CHECK(h(0, 0) > 0);
  CHECK(h(1, 1) > 0);
  CHECK_THROWS_AS((void)hermite_columns(IntMatrix::from_columns(2, {{1, 1}, {2, 2}})), std::invalid_argument);
}

TEST_CASE("floor division and rationals") {
  CHECK(floor_divmod(Integer(-7), Integer(3)) == std::pair<Integer, Integer>{-3, 2});
  CHECK(floor_divmod(Integer(7), Integer(3)) == std::pair<Integer, Integer>{2, 1});
  CHECK(denominator_lcm({Rational(1, 4), Rational(1, 6)}) == 12);
  CHECK(denominator_lcm({}) == 1);
  CHECK(is_integer(Rational(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 2)));
  CHECK_THROWS_AS((void)to_integer(RatMatrix{{Rational(1, 2)}}), std::domain_error);
}
