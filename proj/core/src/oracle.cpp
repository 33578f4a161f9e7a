#include "extrainv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace extrainv::oracle {

namespace {

using Fraction = std::pair<std::int64_t, std::int64_t>;  // numerator, positive denominator

Fraction to_fraction(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  constexpr auto lim = std::numeric_limits<std::int32_t>::max();
  if (num > lim || num < -lim || den > lim) throw std::invalid_argument("oracle: rational entry too large");
  return {num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>()};
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  if (l <= 0 || l > (std::int64_t{1} << 30)) throw std::invalid_argument("oracle: common denominator too large");
  return l;
}

// Vectors scaled by a common denominator L to integer vectors.
struct Scaled {
  std::int64_t common = 1;
  std::vector<std::vector<std::int64_t>> discrete;
  std::vector<std::vector<std::int64_t>> continuous;  // scaled by L / denominator only
  std::vector<std::int64_t> point;
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void BruteForceBudget::validate() const {
  if (bound <= 0 || denominator <= 0 || max_dim == 0 || max_window == 0)
    throw std::invalid_argument("brute-force budget fields must be positive");
}

bool brute_membership(const SubgroupSpec& spec, const RatVector& x, const BruteForceBudget& budget) {
  budget.validate();
  spec.validate();
  const std::size_t d = spec.dim;
  if (d > budget.max_dim) throw std::invalid_argument("oracle: dimension exceeds budget");
  if (x.size() != d) throw std::invalid_argument("oracle: point dimension mismatch");

  // Everything is scaled by L = base * denominator, where base clears every
  // denominator in the data. A continuous coefficient t = p / denominator then
  // contributes p * (base * v), which is integral.
  std::int64_t base = 1;
  auto absorb = [&](const RatVector& v) {
    for (const auto& e : v) base = checked_lcm(base, to_fraction(e).second);
  };
  for (const auto& g : spec.discrete) absorb(g);
  for (const auto& v : spec.continuous) absorb(v);
  absorb(x);
  Scaled s;
  s.common = checked_lcm(base, 1) * budget.denominator;
  auto scale = [&](const RatVector& v, std::int64_t factor) {
    std::vector<std::int64_t> out(d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto [n, q] = to_fraction(v[i]);
      out[i] = n * (factor / q);
    }
    return out;
  };
  for (const auto& g : spec.discrete) s.discrete.push_back(scale(g, s.common));
  for (const auto& v : spec.continuous) s.continuous.push_back(scale(v, base));
  s.point = scale(x, s.common);

  const std::size_t nd = s.discrete.size();
  const std::size_t nc = s.continuous.size();
  const std::int64_t cont_bound = budget.bound * budget.denominator;
  std::vector<std::int64_t> coeff(nd + nc);
  for (std::size_t i = 0; i < nd; ++i) coeff[i] = -budget.bound;
  for (std::size_t i = nd; i < nd + nc; ++i) coeff[i] = -cont_bound;

  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < d && ok; ++r) {
      std::int64_t val = s.point[r];
      for (std::size_t i = 0; i < nd; ++i) val -= coeff[i] * s.discrete[i][r];
      for (std::size_t i = 0; i < nc; ++i) val -= coeff[nd + i] * s.continuous[i][r];
      if (floor_mod(val, s.common) != 0) ok = false;
      else if (std::abs(val / s.common) > budget.bound) ok = false;
    }
    if (ok) return true;
    // odometer
    std::size_t pos = 0;
    while (pos < coeff.size()) {
      const std::int64_t hi = pos < nd ? budget.bound : cont_bound;
      const std::int64_t lo = -hi;
      if (coeff[pos] < hi) {
        ++coeff[pos];
        break;
      }
      coeff[pos] = lo;
      ++pos;
    }
    if (pos == coeff.size()) return false;
  }
}

std::vector<Tile> brute_dual(const SubgroupSpec& spec, const BruteForceBudget& budget) {
  budget.validate();
  spec.validate();
  const std::size_t d = spec.dim;
  if (d > budget.max_dim) throw std::invalid_argument("oracle: dimension exceeds budget");
  std::vector<std::vector<Fraction>> disc, cont;
  for (const auto& g : spec.discrete) {
    std::vector<Fraction> f;
    for (const auto& e : g) f.push_back(to_fraction(e));
    disc.push_back(std::move(f));
  }
  for (const auto& v : spec.continuous) {
    std::vector<Fraction> f;
    for (const auto& e : v) f.push_back(to_fraction(e));
    cont.push_back(std::move(f));
  }
  // <x, g> as a fraction over the lcm of g's denominators.
  auto pairing = [](const Tile& x, const std::vector<Fraction>& g) {
    std::int64_t l = 1;
    for (const auto& [n, q] : g) l = std::lcm(l, q);
    std::int64_t num = 0;
    for (std::size_t i = 0; i < x.size(); ++i) num += x[i] * g[i].first * (l / g[i].second);
    return Fraction{num, l};
  };

  std::vector<Tile> out;
  Tile x(d, -budget.bound);
  while (true) {
    bool ok = true;
    for (const auto& g : disc) {
      const auto [n, l] = pairing(x, g);
      if (n % l != 0) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < cont.size(); ++i)
      if (pairing(x, cont[i]).first != 0) ok = false;
    if (ok) out.push_back(x);
    std::size_t pos = d;
    while (pos-- > 0) {
      if (x[pos] < budget.bound) {
        ++x[pos];
        break;
      }
      x[pos] = -budget.bound;
      if (pos == 0) return out;
    }
  }
}

double brute_span_membership(const std::vector<std::complex<double>>& v,
                             const std::vector<std::vector<std::complex<double>>>& spanning, double tol) {
  using Vec = std::vector<std::complex<double>>;
  auto inner = [](const Vec& a, const Vec& b) {
    std::complex<double> s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
  };
  auto norm = [&](const Vec& a) { return std::sqrt(std::max(0.0, inner(a, a).real())); };
  auto remove_components = [&](Vec& r, const std::vector<Vec>& basis) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) {
        const auto c = inner(q, r);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * q[i];
      }
  };

  double largest = 0.0;
  for (const auto& s : spanning) {
    if (s.size() != v.size()) throw std::invalid_argument("oracle: span vector length mismatch");
    largest = std::max(largest, norm(s));
  }
  std::vector<Vec> basis;
  for (const auto& s : spanning) {
    Vec r = s;
    remove_components(r, basis);
    const double n = norm(r);
    if (n > tol * largest && n > 0.0) {
      for (auto& e : r) e /= n;
      basis.push_back(std::move(r));
    }
  }
  Vec r = v;
  remove_components(r, basis);
  return norm(r);
}

}  // namespace extrainv::oracle
