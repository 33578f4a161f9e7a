#include "extrainv/oracle.hpp"
#include "extrainv/subgroup.hpp"

#include "support/instances.hpp"

#include <doctest.h>

using namespace extrainv;
using testing::make_spec;

namespace {

const Rational half(1, 2), third(1, 3), quarter(1, 4);

SubgroupSpec half_third_real() { return make_spec(3, {{half, 0, 0}, {0, third, 0}}, {{0, 0, 1}}); }
SubgroupSpec skew_third() { return make_spec(2, {{third, 0}}, {{-1, 1}}); }
SubgroupSpec half_real() { return make_spec(2, {{half, 0}}, {{0, 1}}); }
SubgroupSpec one_over(int n) { return make_spec(1, {{Rational(1, n)}}); }

IntMatrix lattice_hnf(const IntMatrix& basis) { return hermite_columns(basis); }

}  // namespace

TEST_CASE("canonical data of the half-third-real group") {
  const ClosedSubgroup m = ClosedSubgroup::canonicalize(half_third_real());
  CHECK(m.discrete_rank() == 2);
  CHECK(m.continuous_dim() == 1);
  CHECK(m.factors() == IntVector{1, 6});
  CHECK(lattice_hnf(dual(m)) == IntMatrix::from_columns(3, {{2, 0, 0}, {0, 3, 0}}));
  CHECK(m.basis().transposed() * m.dual_basis() == IntMatrix::identity(3));
  CHECK(is_unimodular(m.basis()));
}

TEST_CASE("the integer lattice has all factors one") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const ClosedSubgroup m = ClosedSubgroup::canonicalize(make_spec(d, {}));
    CHECK(m.discrete_rank() == d);
    CHECK(m.factors() == IntVector(d, 1));
    CHECK(dual(m) == IntMatrix::identity(d));
    CHECK(m == ClosedSubgroup::integer_lattice(d));
  }
}

TEST_CASE("skew third group") {
  const ClosedSubgroup m = ClosedSubgroup::canonicalize(skew_third());
  CHECK(m.discrete_rank() == 1);
  CHECK(m.factors() == IntVector{3});
  CHECK(dual(m) == IntMatrix::from_columns(2, {{3, 3}}));
  CHECK(m.basis() == IntMatrix::from_columns(2, {{1, 0}, {-1, 1}}));
  CHECK(m.dual_basis() == IntMatrix::from_columns(2, {{1, 1}, {0, 1}}));
}

TEST_CASE("dual of one-over-n and half-real") {
  for (int n = 1; n <= 6; ++n) CHECK(dual(ClosedSubgroup::canonicalize(one_over(n))) == IntMatrix{{n}});
  CHECK(dual(ClosedSubgroup::canonicalize(half_real())) == IntMatrix::from_columns(2, {{2, 0}}));
}

TEST_CASE("membership") {
  const ClosedSubgroup skew = ClosedSubgroup::canonicalize(skew_third());
  CHECK(contains(skew, {third, 0}));
  CHECK_FALSE(contains(skew, {half, 0}));
  CHECK(contains(skew, {Rational(-5, 7), Rational(5, 7)}));
  CHECK(contains(skew, {Rational(4, 3) + Rational(2, 9), Rational(-2, 9)}));
  CHECK(contains(skew, {0, 0}));
  testing::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    RatVector k{testing::uniform_int(rng, -9, 9), testing::uniform_int(rng, -9, 9)};
    CHECK(contains(skew, k));
  }
}

TEST_CASE("an alternative basis describes the same group") {
  // (1,1,0), (3,2,1), (0,0,1) describe the same group as the canonical basis.
  const ClosedSubgroup a = ClosedSubgroup::canonicalize(half_third_real());
  const ClosedSubgroup b = ClosedSubgroup::canonicalize(
      make_spec(3, {{Rational(1, 6) * 3, Rational(1, 6) * 2, Rational(1, 6)}}, {{0, 0, 1}}));
  CHECK(a.factors() == b.factors());
  CHECK(is_subgroup_of(a, b));
  CHECK(is_subgroup_of(b, a));
}

TEST_CASE("reduce tile") {
  const ClosedSubgroup q4 = ClosedSubgroup::canonicalize(one_over(4));
  const TileResidue r = reduce_tile(q4, Tile{6});
  CHECK(r.sigma == Tile{2});
  CHECK(r.mstar == Tile{4});
  CHECK(reduce_tile(q4, Tile{-7}).sigma == Tile{1});
  CHECK(reduce_tile(q4, Tile{3}).sigma == Tile{3});
  CHECK(reduce_tile(q4, Tile{3}).mstar == Tile{0});

  const ClosedSubgroup skew = ClosedSubgroup::canonicalize(skew_third());
  const TileResidue s = reduce_tile(skew, Tile{4, 4});
  CHECK(s.sigma == Tile{1, 1});
  CHECK(s.mstar == Tile{3, 3});
}

TEST_CASE("reduce tile properties") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const SubgroupSpec spec = testing::random_spec(rng);
    const ClosedSubgroup m = ClosedSubgroup::canonicalize(spec);
    CHECK(abs(determinant(m.dual_basis())) == 1);
    for (std::size_t i = 0; i + 1 < m.factors().size(); ++i) CHECK(m.factors()[i + 1] % m.factors()[i] == 0);
    for (int t = 0; t < 10; ++t) {
      Tile k(spec.dim);
      for (auto& e : k) e = testing::uniform_int(rng, -20, 20);
      const TileResidue r = reduce_tile(m, k);
      for (std::size_t i = 0; i < k.size(); ++i) CHECK(r.sigma[i] + r.mstar[i] == k[i]);
      CHECK(dual_contains(m, r.mstar));
      const IntVector c = m.w_coordinates(r.sigma);
      for (std::size_t i = 0; i < m.discrete_rank(); ++i) {
        CHECK(c[i] >= 0);
        CHECK(c[i] < m.factors()[i]);
      }
      CHECK(reduce_tile(m, r.sigma).sigma == r.sigma);
      // <mstar, x> is an integer for members x.
      for (int s = 0; s < 5; ++s) {
        const RatVector x = testing::random_point(spec, rng);
        if (!contains(m, x)) continue;
        Rational p = 0;
        for (std::size_t i = 0; i < k.size(); ++i) p += Rational(r.mstar[i]) * x[i];
        CHECK(is_integer(p));
      }
    }
  }
}

TEST_CASE("partition tiles") {
  const ClosedSubgroup z = ClosedSubgroup::integer_lattice(2);
  const std::vector<Tile> box{{0, 0}, {0, 1}, {1, 0}, {5, -3}};
  CHECK(partition_tiles(z, box).size() == 1);

  const ClosedSubgroup h = ClosedSubgroup::canonicalize(one_over(2));
  const auto parts = partition_tiles(h, std::vector<Tile>{{0}, {1}, {2}, {3}});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].sigma == Tile{0});
  CHECK(parts[0].members == std::vector<Tile>{{0}, {2}});
  CHECK(parts[1].members == std::vector<Tile>{{1}, {3}});

  const ClosedSubgroup hr = ClosedSubgroup::canonicalize(half_real());
  const auto p2 = partition_tiles(hr, std::vector<Tile>{{0, 0}, {1, 1}, {1, -1}, {2, 0}});
  REQUIRE(p2.size() == 3);
  std::vector<std::vector<Tile>> groups;
  for (const auto& c : p2) groups.push_back(c.members);
  std::sort(groups.begin(), groups.end());
  CHECK(groups == std::vector<std::vector<Tile>>{{{0, 0}, {2, 0}}, {{1, -1}}, {{1, 1}}});
}

TEST_CASE("subgroup order") {
  const ClosedSubgroup h = ClosedSubgroup::canonicalize(one_over(2));
  const ClosedSubgroup q = ClosedSubgroup::canonicalize(one_over(4));
  const ClosedSubgroup t = ClosedSubgroup::canonicalize(one_over(3));
  CHECK(is_subgroup_of(h, h));
  CHECK(is_subgroup_of(h, q));
  CHECK_FALSE(is_subgroup_of(q, h));
  CHECK_FALSE(is_subgroup_of(t, h));
  const ClosedSubgroup r = ClosedSubgroup::canonicalize(make_spec(1, {}, {{1}}));
  CHECK(is_subgroup_of(t, r));
  CHECK_FALSE(is_subgroup_of(r, t));
  const ClosedSubgroup hr = ClosedSubgroup::canonicalize(half_real());
  const ClosedSubgroup qr = ClosedSubgroup::canonicalize(make_spec(2, {{quarter, 0}}, {{0, 1}}));
  CHECK(is_subgroup_of(hr, qr));
  CHECK_FALSE(is_subgroup_of(qr, hr));
  CHECK_THROWS_AS((void)is_subgroup_of(h, hr), std::invalid_argument);
}

TEST_CASE("canonical round trip") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const SubgroupSpec spec = testing::random_spec(rng);
    const ClosedSubgroup m = ClosedSubgroup::canonicalize(spec);
    const ClosedSubgroup again = ClosedSubgroup::canonicalize(to_spec(m));
    CHECK(again.factors() == m.factors());
    CHECK(is_subgroup_of(m, again));
    CHECK(is_subgroup_of(again, m));
    for (const auto& g : spec.discrete) CHECK(contains(m, g));
    for (const auto& v : spec.continuous) CHECK(contains(m, v));
  }
}

TEST_CASE("double dual returns the group") {
  // M* as a lattice; its annihilator pairing data regenerates M.
  testing::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const ClosedSubgroup m = ClosedSubgroup::canonicalize(testing::random_spec(rng));
    const IntMatrix mstar = dual(m);
    // {x : <x, y> in Z for y in M*} = M: generated by Z^d, rational duals of a
    // basis of M* inside span(M*), and the orthogonal complement of span(M*).
    SubgroupSpec back;
    back.dim = m.dim();
    if (mstar.cols() > 0) {
      const RatMatrix y = to_rational(mstar);
      const RatMatrix gram = y.transposed() * y;
      const RatMatrix dual_cols = y * rational_inverse(gram);
      for (std::size_t j = 0; j < dual_cols.cols(); ++j) back.discrete.push_back(dual_cols.column(j));
    }
    const IntMatrix orth = integer_kernel(mstar.transposed());
    for (std::size_t j = 0; j < orth.cols(); ++j) back.continuous.push_back(to_rational(orth).column(j));
    const ClosedSubgroup mm = ClosedSubgroup::canonicalize(back);
    CHECK(mm.factors() == m.factors());
    CHECK(is_subgroup_of(mm, m));
    CHECK(is_subgroup_of(m, mm));
  }
}

TEST_CASE("membership agrees with brute force") {
  testing::Rng rng(29);
  oracle::BruteForceBudget budget;
  budget.bound = 8;
  for (int trial = 0; trial < 30; ++trial) {
    const SubgroupSpec spec = testing::random_spec(rng);
    const ClosedSubgroup m = ClosedSubgroup::canonicalize(spec);
    for (int p = 0; p < 10; ++p) {
      const RatVector x = testing::random_point(spec, rng);
      CHECK(contains(m, x) == oracle::brute_membership(spec, x, budget));
    }
  }
}

TEST_CASE("spec validation") {
  SubgroupSpec bad = make_spec(2, {{half}});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS((void)ClosedSubgroup::canonicalize(bad), std::invalid_argument);
}
