#include "extrainv/fibered.hpp"

#include "extrainv/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace extrainv {

namespace {

std::size_t grid_product(const std::vector<std::size_t>& grid) {
  std::size_t n = 1;
  for (auto g : grid) {
    if (g == 0) throw std::invalid_argument("grid subdivision counts must be positive");
    n *= g;
  }
  return n;
}

std::size_t tile_index(const std::vector<Tile>& window, const Tile& k) {
  auto it = std::lower_bound(window.begin(), window.end(), k);
  if (it == window.end() || *it != k) throw std::logic_error("tile outside the window");
  return static_cast<std::size_t>(it - window.begin());
}

// Rows of the window grouped by residue class, in class order.
std::vector<std::vector<std::size_t>> class_rows(const std::vector<Tile>& window,
                                                 const std::vector<ResidueClass>& classes) {
  std::vector<std::vector<std::size_t>> rows;
  rows.reserve(classes.size());
  for (const auto& cls : classes) {
    std::vector<std::size_t> r;
    for (const auto& k : cls.members) r.push_back(tile_index(window, k));
    rows.push_back(std::move(r));
  }
  return rows;
}

Eigen::MatrixXcd select_rows(const Eigen::MatrixXcd& f, const std::vector<std::size_t>& rows) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(rows.size()), f.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = f.row(static_cast<Eigen::Index>(rows[i]));
  return out;
}

// G_ij = sum_t F(t, i) conj(F(t, j)).
Eigen::MatrixXcd gram_of(const Eigen::MatrixXcd& f) { return (f.transpose() * f.conjugate()).eval(); }

int count_above(const Eigen::VectorXd& sv, double threshold) {
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > threshold && sv(i) > 0.0) ++r;
  return r;
}

struct CellRanks {
  int total = 0;
  std::vector<int> by_class;
  double scale = 0.0;  // largest singular value of the full Gramian
};

CellRanks cell_ranks(const Eigen::MatrixXcd& f, const std::vector<std::vector<std::size_t>>& rows,
                     double tol) {
  CellRanks out;
  const Eigen::VectorXd sv = hermitian_singular_values(gram_of(f));
  out.scale = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold = tol * out.scale;
  out.total = count_above(sv, threshold);
  out.by_class.reserve(rows.size());
  for (const auto& r : rows) {
    if (out.scale == 0.0) {
      out.by_class.push_back(0);
      continue;
    }
    out.by_class.push_back(count_above(hermitian_singular_values(gram_of(select_rows(f, r))), threshold));
  }
  return out;
}

// Orthonormal basis of the numerical column span of F. A direction is kept
// when its squared singular value exceeds tol times the largest one, which is
// the same criterion the Gramian rank uses.
struct SpanBasis {
  Eigen::MatrixXcd q;
  double scale2 = 0.0;
};

SpanBasis span_basis(const Eigen::MatrixXcd& f, double tol) {
  SpanBasis b;
  if (f.rows() == 0 || f.cols() == 0) {
    b.q = Eigen::MatrixXcd(f.rows(), 0);
    return b;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f, Eigen::ComputeThinU);
  const Eigen::VectorXd& s = svd.singularValues();
  b.scale2 = s(0) * s(0);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > 0.0 && s(r) * s(r) > tol * b.scale2) ++r;
  b.q = svd.matrixU().leftCols(r);
  return b;
}

double relative_residual(const SpanBasis& b, const Eigen::VectorXcd& v, double tol) {
  const double n2 = v.squaredNorm();
  if (n2 == 0.0 || n2 <= tol * b.scale2) return 0.0;
  const Eigen::VectorXcd r = v - b.q * (b.q.adjoint() * v);
  return r.norm() / std::sqrt(n2);
}

double fractional_part(const Rational& r) {
  const auto [q, rem] = floor_divmod(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
  return Rational(rem, boost::multiprecision::denominator(r)).convert_to<double>();
}

Rational dot_integer(const IntMatrix& w, std::size_t col, const RatVector& x) {
  Rational s = 0;
  for (std::size_t r = 0; r < w.rows(); ++r) s += Rational(w(r, col)) * x[r];
  return s;
}

// Phases <k, m> per tile and <w_cell, m> per cell midpoint, reduced mod 1
// exactly before going to double.
struct ModulationPhases {
  std::vector<double> tile;
  std::vector<double> cell;
};

ModulationPhases modulation_phases(const std::vector<Tile>& window, const std::vector<std::size_t>& grid,
                                   const ClosedSubgroup& m, const RatVector& x) {
  const std::size_t d = m.dim();
  ModulationPhases out;
  out.tile.resize(window.size());
  for (std::size_t t = 0; t < window.size(); ++t) {
    Rational p = 0;
    for (std::size_t r = 0; r < d; ++r) p += Rational(window[t][r]) * x[r];
    out.tile[t] = fractional_part(p);
  }
  RatVector w_pair(d);
  for (std::size_t i = 0; i < d; ++i) w_pair[i] = dot_integer(m.dual_basis(), i, x);
  const std::size_t cells = grid_product(grid);
  out.cell.resize(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    const auto idx = cell_multi_index(grid, c);
    Rational p = 0;
    for (std::size_t i = 0; i < d; ++i)
      p += Rational(2 * static_cast<long>(idx[i]) + 1, 2 * static_cast<long>(grid[i])) * w_pair[i];
    out.cell[c] = fractional_part(p);
  }
  return out;
}

InvarianceReport make_report(TestMethod method, double tol, const std::vector<ResidueClass>& classes,
                             std::size_t cells) {
  InvarianceReport rep;
  rep.method = method;
  rep.tol = tol;
  for (const auto& c : classes) rep.classes.push_back(c.sigma);
  rep.cells.resize(cells);
  return rep;
}

void finish_report(InvarianceReport& rep) {
  rep.worst_residual = 0.0;
  rep.worst_defect = 0;
  bool ranks_additive = true;
  for (const auto& c : rep.cells) {
    rep.worst_residual = std::max(rep.worst_residual, c.residual);
    rep.worst_defect = std::max(rep.worst_defect, c.defect);
    if (c.defect != 0) ranks_additive = false;
  }
  // Residuals are lengths; the Gramian threshold acts on squared lengths.
  rep.verdict = rep.method == TestMethod::rank ? ranks_additive : rep.worst_residual * rep.worst_residual <= rep.tol;
}

void fill_rank_ledger(CellLedger& ledger, std::size_t cell, const CellRanks& ranks) {
  ledger.index = cell;
  ledger.rank_total = ranks.total;
  ledger.ranks_by_class = ranks.by_class;
  int sum = 0;
  for (int r : ranks.by_class) sum += r;
  ledger.defect = sum - ranks.total;
}

}  // namespace

// ---------------------------------------------------------------- generators

FiberedGenerator::FiberedGenerator(std::size_t dim, std::vector<std::size_t> grid)
    : dim_(dim), grid_(std::move(grid)), cell_count_(0) {
  if (dim_ == 0) throw std::invalid_argument("generator dimension must be positive");
  if (grid_.size() != dim_) throw std::invalid_argument("grid must have one count per axis");
  cell_count_ = grid_product(grid_);
}

void FiberedGenerator::set_tile(const Tile& k, std::vector<Complex> values) {
  if (k.size() != dim_) throw std::invalid_argument("tile dimension mismatch");
  if (values.size() != cell_count_)
    throw std::invalid_argument("tile has " + std::to_string(values.size()) + " values, expected " +
                                std::to_string(cell_count_));
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("tile values must be finite");
  tiles_[k] = std::move(values);
}

void FiberedGenerator::add_zero_tile(const Tile& k) {
  if (k.size() != dim_) throw std::invalid_argument("tile dimension mismatch");
  tiles_.try_emplace(k, cell_count_, Complex{});
}

std::vector<Tile> FiberedGenerator::window() const {
  std::vector<Tile> w;
  w.reserve(tiles_.size());
  for (const auto& [k, _] : tiles_) w.push_back(k);
  return w;
}

Complex FiberedGenerator::value(const Tile& k, std::size_t cell) const {
  auto it = tiles_.find(k);
  return it == tiles_.end() ? Complex{} : it->second.at(cell);
}

double FiberedGenerator::norm_squared() const {
  double s = 0.0;
  for (const auto& [k, values] : tiles_)
    for (const auto& v : values) s += std::norm(v);
  return s * cell_volume();
}

std::vector<std::size_t> cell_multi_index(std::span<const std::size_t> grid, std::size_t cell) {
  std::vector<std::size_t> idx(grid.size());
  for (std::size_t i = grid.size(); i-- > 0;) {
    idx[i] = cell % grid[i];
    cell /= grid[i];
  }
  return idx;
}

GeneratorSet::GeneratorSet(std::vector<FiberedGenerator> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("a generator set needs at least one generator");
  const auto& first = generators_.front();
  std::set<Tile> window;
  for (const auto& g : generators_) {
    if (g.dim() != first.dim() || g.grid() != first.grid())
      throw std::invalid_argument("generators differ in dimension or grid");
    for (const auto& [k, _] : g.tiles()) window.insert(k);
  }
  window_.assign(window.begin(), window.end());
  for (auto& g : generators_)
    for (const auto& k : window_) g.add_zero_tile(k);

  const std::size_t cells = first.cell_count();
  dense_.resize(generators_.size() * window_.size() * cells);
  for (std::size_t g = 0; g < generators_.size(); ++g)
    for (std::size_t t = 0; t < window_.size(); ++t) {
      const auto& values = generators_[g].tiles().at(window_[t]);
      std::copy(values.begin(), values.end(),
                dense_.begin() + static_cast<std::ptrdiff_t>((g * window_.size() + t) * cells));
    }
}

Eigen::MatrixXcd GeneratorSet::fiber_matrix(std::size_t cell) const {
  const std::size_t cells = cell_count();
  Eigen::MatrixXcd f(static_cast<Eigen::Index>(window_.size()), static_cast<Eigen::Index>(size()));
  for (std::size_t g = 0; g < size(); ++g)
    for (std::size_t t = 0; t < window_.size(); ++t)
      f(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(g)) = dense_[(g * window_.size() + t) * cells + cell];
  return f;
}

// ------------------------------------------------------------------- gramians

Eigen::VectorXd hermitian_singular_values(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("Hermitian matrix must be square");
  if (h.rows() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  Eigen::VectorXd sv = eig.eigenvalues().cwiseAbs();
  std::sort(sv.data(), sv.data() + sv.size(), std::greater<>());
  return sv;
}

int numerical_rank(const Eigen::MatrixXcd& h, double tol_rel) {
  const Eigen::VectorXd sv = hermitian_singular_values(h);
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return count_above(sv, tol_rel * sv(0));
}

GramianField gramian(const GeneratorSet& phi, const FiberOptions& options) {
  GramianField field;
  field.ell = phi.size();
  field.tol = options.tol_rel;
  const std::size_t cells = phi.cell_count();
  field.matrices.resize(cells);
  field.singular_values.resize(cells);
  field.ranks.resize(cells);
  parallel_for(cells, options.threads, [&](std::size_t c) {
    field.matrices[c] = gram_of(phi.fiber_matrix(c));
    field.singular_values[c] = hermitian_singular_values(field.matrices[c]);
    const auto& sv = field.singular_values[c];
    field.ranks[c] = (sv.size() == 0 || sv(0) == 0.0) ? 0 : count_above(sv, options.tol_rel * sv(0));
  });
  return field;
}

std::vector<int> dimension_function(const GeneratorSet& phi, const FiberOptions& options) {
  return gramian(phi, options).ranks;
}

FiberedGenerator cutoff(const FiberedGenerator& phi, const ResidueClass& cls) {
  FiberedGenerator out(phi.dim(), phi.grid());
  for (const auto& [k, values] : phi.tiles()) {
    if (std::binary_search(cls.members.begin(), cls.members.end(), k))
      out.set_tile(k, values);
    else
      out.add_zero_tile(k);
  }
  return out;
}

// ---------------------------------------------------------- invariance tests

const char* to_string(TestMethod method) {
  switch (method) {
    case TestMethod::rank: return "rank";
    case TestMethod::fiber: return "fiber";
    case TestMethod::modulation: return "modulation";
  }
  return "unknown";
}

TestMethod parse_test_method(std::string_view name) {
  if (name == "rank") return TestMethod::rank;
  if (name == "fiber") return TestMethod::fiber;
  if (name == "modulation") return TestMethod::modulation;
  throw std::invalid_argument("unknown test method '" + std::string(name) + "'");
}

InvarianceReport test_invariance_rank(const GeneratorSet& phi, const ClosedSubgroup& m,
                                      const FiberOptions& options) {
  if (phi.dim() != m.dim()) throw std::invalid_argument("generator and subgroup dimensions differ");
  const auto classes = partition_tiles(m, phi.window());
  const auto rows = class_rows(phi.window(), classes);
  InvarianceReport rep = make_report(TestMethod::rank, options.tol_rel, classes, phi.cell_count());
  parallel_for(phi.cell_count(), options.threads, [&](std::size_t c) {
    fill_rank_ledger(rep.cells[c], c, cell_ranks(phi.fiber_matrix(c), rows, options.tol_rel));
  });
  finish_report(rep);
  return rep;
}

InvarianceReport test_invariance_fiber(const GeneratorSet& phi, const ClosedSubgroup& m,
                                       const FiberOptions& options) {
  if (phi.dim() != m.dim()) throw std::invalid_argument("generator and subgroup dimensions differ");
  const auto classes = partition_tiles(m, phi.window());
  const auto rows = class_rows(phi.window(), classes);
  InvarianceReport rep = make_report(TestMethod::fiber, options.tol_rel, classes, phi.cell_count());
  parallel_for(phi.cell_count(), options.threads, [&](std::size_t c) {
    const Eigen::MatrixXcd f = phi.fiber_matrix(c);
    CellLedger& ledger = rep.cells[c];
    fill_rank_ledger(ledger, c, cell_ranks(f, rows, options.tol_rel));
    const SpanBasis basis = span_basis(f, options.tol_rel);
    double worst = 0.0;
    for (Eigen::Index h = 0; h < f.cols(); ++h)
      for (const auto& r : rows) {
        Eigen::VectorXcd cut = Eigen::VectorXcd::Zero(f.rows());
        for (auto t : r) cut(static_cast<Eigen::Index>(t)) = f(static_cast<Eigen::Index>(t), h);
        worst = std::max(worst, relative_residual(basis, cut, options.tol_rel));
      }
    ledger.residual = worst;
  });
  finish_report(rep);
  return rep;
}

InvarianceReport test_invariance_modulation(const GeneratorSet& phi, const ClosedSubgroup& m,
                                            std::span<const RatVector> samples,
                                            const FiberOptions& options) {
  if (phi.dim() != m.dim()) throw std::invalid_argument("generator and subgroup dimensions differ");
  for (const auto& s : samples)
    if (s.size() != m.dim() || !contains(m, s))
      throw std::invalid_argument("modulation sample is not a member of the subgroup");

  const auto& window = phi.window();
  const std::size_t cells = phi.cell_count();

  std::vector<ModulationPhases> phases;
  phases.reserve(samples.size());
  for (const auto& s : samples) phases.push_back(modulation_phases(window, phi.grid(), m, s));

  const auto classes = partition_tiles(m, window);
  const auto rows = class_rows(window, classes);
  InvarianceReport rep = make_report(TestMethod::modulation, options.tol_rel, classes, cells);
  parallel_for(cells, options.threads, [&](std::size_t c) {
    const Eigen::MatrixXcd f = phi.fiber_matrix(c);
    CellLedger& ledger = rep.cells[c];
    fill_rank_ledger(ledger, c, cell_ranks(f, rows, options.tol_rel));
    const SpanBasis basis = span_basis(f, options.tol_rel);
    double worst = 0.0;
    for (std::size_t s = 0; s < samples.size(); ++s)
      for (Eigen::Index h = 0; h < f.cols(); ++h) {
        Eigen::VectorXcd mod(f.rows());
        for (Eigen::Index t = 0; t < f.rows(); ++t) {
          const double phase = phases[s].tile[static_cast<std::size_t>(t)] + phases[s].cell[c];
          mod(t) = std::polar(1.0, -2.0 * std::numbers::pi * phase) * f(t, h);
        }
        worst = std::max(worst, relative_residual(basis, mod, options.tol_rel));
      }
    ledger.residual = worst;
  });
  finish_report(rep);
  return rep;
}

std::vector<RatVector> default_modulation_samples(const ClosedSubgroup& m, std::span<const Tile> window) {
  std::vector<RatVector> samples = m.discrete_generators();
  const std::size_t q = m.discrete_rank();
  for (std::size_t j = q; j < m.dim(); ++j) {
    Integer lo = 0, hi = 0;
    bool first = true;
    for (const auto& k : window) {
      const Integer c = m.w_coordinates(k)[j];
      if (first || c < lo) lo = c;
      if (first || c > hi) hi = c;
      first = false;
    }
    const Integer spread = hi - lo + 1;
    RatVector s(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) s[r] = Rational(m.basis()(r, j), spread);
    samples.push_back(std::move(s));
  }
  return samples;
}

FiberedGenerator modulate(const FiberedGenerator& phi, const ClosedSubgroup& m, const RatVector& x) {
  if (phi.dim() != m.dim() || x.size() != m.dim()) throw std::invalid_argument("modulate: dimension mismatch");
  const std::vector<Tile> window = phi.window();
  const ModulationPhases phases = modulation_phases(window, phi.grid(), m, x);
  FiberedGenerator out(phi.dim(), phi.grid());
  for (std::size_t t = 0; t < window.size(); ++t) {
    std::vector<Complex> values = phi.tiles().at(window[t]);
    for (std::size_t c = 0; c < values.size(); ++c)
      values[c] *= std::polar(1.0, -2.0 * std::numbers::pi * (phases.tile[t] + phases.cell[c]));
    out.set_tile(window[t], std::move(values));
  }
  return out;
}

// ---------------------------------------------------- principal M-invariance

BracketField bracket(const FiberedGenerator& f, const FiberedGenerator& g, const ClosedSubgroup& m) {
  if (f.dim() != g.dim() || f.grid() != g.grid()) throw std::invalid_argument("bracket: incompatible generators");
  if (f.dim() != m.dim()) throw std::invalid_argument("bracket: subgroup dimension mismatch");
  std::set<Tile> joint;
  for (const auto& [k, _] : f.tiles()) joint.insert(k);
  for (const auto& [k, _] : g.tiles()) joint.insert(k);
  const std::vector<Tile> window(joint.begin(), joint.end());

  BracketField out;
  out.classes = partition_tiles(m, window);
  out.cells = f.cell_count();
  out.values.assign(out.classes.size() * out.cells, Complex{});
  for (std::size_t ci = 0; ci < out.classes.size(); ++ci)
    for (const auto& k : out.classes[ci].members) {
      auto fi = f.tiles().find(k);
      auto gi = g.tiles().find(k);
      if (fi == f.tiles().end() || gi == g.tiles().end()) continue;
      for (std::size_t c = 0; c < out.cells; ++c)
        out.values[ci * out.cells + c] += fi->second[c] * std::conj(gi->second[c]);
    }
  return out;
}

FiberedGenerator project_principal(const FiberedGenerator& f, const FiberedGenerator& g,
                                   const ClosedSubgroup& m, double tol_rel) {
  const BracketField gf = bracket(g, f, m);
  const BracketField ff = bracket(f, f, m);
  double peak = 0.0;
  for (const auto& v : ff.values) peak = std::max(peak, v.real());

  std::map<Tile, std::size_t> class_of;
  for (std::size_t ci = 0; ci < ff.classes.size(); ++ci)
    for (const auto& k : ff.classes[ci].members) class_of[k] = ci;

  FiberedGenerator out(f.dim(), f.grid());
  for (const auto& [k, values] : f.tiles()) {
    const std::size_t ci = class_of.at(k);
    std::vector<Complex> projected(values.size());
    for (std::size_t c = 0; c < values.size(); ++c) {
      const double norm = ff.at(ci, c).real();
      if (peak > 0.0 && norm > tol_rel * peak) projected[c] = gf.at(ci, c) / norm * values[c];
    }
    out.set_tile(k, std::move(projected));
  }
  return out;
}

FiberedGenerator exact_invariant_generator(const ClosedSubgroup& m, std::span<const Tile> window,
                                           std::vector<std::size_t> grid) {
  FiberedGenerator out(m.dim(), std::move(grid));
  bool any = false;
  for (const auto& k : window) {
    if (dual_contains(m, k)) {
      out.set_tile(k, std::vector<Complex>(out.cell_count(), Complex{1.0, 0.0}));
      any = true;
    } else {
      out.add_zero_tile(k);
    }
  }
  if (!any) throw std::invalid_argument("window contains no tile of the zero residue class");
  return out;
}

// -------------------------------------------------------------- support bound

SupportReport support_report(const GeneratorSet& phi, const ClosedSubgroup& m, const FiberOptions& options) {
  if (phi.dim() != m.dim()) throw std::invalid_argument("generator and subgroup dimensions differ");
  const auto classes = partition_tiles(m, phi.window());
  const auto rows = class_rows(phi.window(), classes);
  const std::size_t ell = phi.size();
  const std::size_t cells = phi.cell_count();

  std::vector<int> rank(cells);
  std::vector<std::vector<std::size_t>> nonzero(cells, std::vector<std::size_t>(ell, 0));
  parallel_for(cells, options.threads, [&](std::size_t c) {
    const Eigen::MatrixXcd f = phi.fiber_matrix(c);
    const Eigen::VectorXd sv = hermitian_singular_values(gram_of(f));
    const double scale = sv.size() > 0 ? sv(0) : 0.0;
    const double threshold = options.tol_rel * scale;
    rank[c] = scale == 0.0 ? 0 : count_above(sv, threshold);
    if (scale == 0.0) return;
    // A class counts as occupied when the generator's energy on it would
    // register in the class Gramian at the same threshold.
    for (std::size_t h = 0; h < ell; ++h)
      for (const auto& r : rows) {
        double energy = 0.0;
        for (auto t : r) energy += std::norm(f(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(h)));
        if (energy > threshold && energy > 0.0) ++nonzero[c][h];
      }
  });

  SupportReport rep;
  rep.ell = ell;
  rep.cell_volume = phi.cell_volume();
  rep.support_cells.assign(ell, 0);
  rep.level_cells.assign(ell + 1, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t h = 0; h < ell; ++h) rep.support_cells[h] += nonzero[c][h];
    rep.level_cells[static_cast<std::size_t>(rank[c])] += 1;
  }
  for (std::size_t j = 0; j <= ell; ++j) rep.dimension_cells += j * rep.level_cells[j];
  for (auto s : rep.support_cells) rep.support_measure.push_back(static_cast<double>(s) * rep.cell_volume);
  for (auto l : rep.level_cells) rep.level_measure.push_back(static_cast<double>(l) * rep.cell_volume);
  rep.dimension_integral = static_cast<double>(rep.dimension_cells) * rep.cell_volume;
  rep.bound_holds = rep.dimension_cells <= ell * cells;
  for (auto s : rep.support_cells)
    if (s > rep.dimension_cells) rep.bound_holds = false;
  return rep;
}

// --------------------------------------------------------------------- sweeps

bool window_distinguishes(const ClosedSubgroup& m, const ClosedSubgroup& other, std::span<const Tile> window) {
  auto a = partition_tiles(m, window);
  auto b = partition_tiles(other, window);
  auto members = [](std::vector<ResidueClass>& cs) {
    std::vector<std::vector<Tile>> out;
    for (auto& c : cs) out.push_back(std::move(c.members));
    std::sort(out.begin(), out.end());
    return out;
  };
  return members(a) != members(b);
}

SweepResult find_extra_invariance(const GeneratorSet& phi, std::span<const ClosedSubgroup> candidates,
                                  const FiberOptions& options) {
  SweepResult out;
  for (const auto& m : candidates) out.verdicts.push_back(test_invariance_rank(phi, m, options).verdict);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (i == j || !is_subgroup_of(candidates[i], candidates[j])) continue;
      if (out.verdicts[j] && !out.verdicts[i]) out.monotonicity_violations.emplace_back(i, j);
      const bool strict = !is_subgroup_of(candidates[j], candidates[i]);
      if (strict && !window_distinguishes(candidates[i], candidates[j], phi.window()))
        out.indistinguishable.emplace_back(i, j);
    }
  return out;
}

}  // namespace extrainv
