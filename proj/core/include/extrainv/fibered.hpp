#pragma once

// Windowed Fourier-domain model of finitely generated shift-invariant spaces.
//
// A generator is stored through its fibers: for every integer tile k in a
// finite window, the function w -> phi^(w + k) on the fundamental domain
// Omega = W [0,1)^d is piecewise constant on an n_1 x ... x n_d grid of cells
// (row-major in W-coordinates). Tiles outside the window are zero. Since
// |det W| = 1, each cell has Lebesgue measure 1 / (n_1 ... n_d).

#include "extrainv/subgroup.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace extrainv {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-8;

class FiberedGenerator {
 public:
  FiberedGenerator(std::size_t dim, std::vector<std::size_t> grid);

  /// Stores the cell values of one tile. Throws std::invalid_argument on a
  /// wrong length, a wrong tile dimension or non-finite values.
  void set_tile(const Tile& k, std::vector<Complex> values);
  /// Adds an all-zero tile unless the tile is already present.
  void add_zero_tile(const Tile& k);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<std::size_t>& grid() const noexcept { return grid_; }
  [[nodiscard]] std::size_t cell_count() const noexcept { return cell_count_; }
  [[nodiscard]] double cell_volume() const noexcept { return 1.0 / static_cast<double>(cell_count_); }
  [[nodiscard]] const std::map<Tile, std::vector<Complex>>& tiles() const noexcept { return tiles_; }
  [[nodiscard]] std::vector<Tile> window() const;

  /// Value on tile k at a cell; zero for tiles outside the window.
  [[nodiscard]] Complex value(const Tile& k, std::size_t cell) const;

  /// Squared L2 norm of the modeled function (sum of |value|^2 times cell volume).
  [[nodiscard]] double norm_squared() const;

  friend bool operator==(const FiberedGenerator&, const FiberedGenerator&) = default;

 private:
  std::size_t dim_;
  std::vector<std::size_t> grid_;
  std::size_t cell_count_;
  std::map<Tile, std::vector<Complex>> tiles_;
};

/// Multi-index of a flat row-major cell index.
std::vector<std::size_t> cell_multi_index(std::span<const std::size_t> grid, std::size_t cell);

/// Ordered generators sharing dimension, grid and window. The window is the
/// union of the members' windows; missing tiles are filled with zeros.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<FiberedGenerator> generators);

  [[nodiscard]] std::size_t size() const noexcept { return generators_.size(); }
  [[nodiscard]] std::size_t dim() const noexcept { return generators_.front().dim(); }
  [[nodiscard]] const std::vector<std::size_t>& grid() const noexcept { return generators_.front().grid(); }
  [[nodiscard]] std::size_t cell_count() const noexcept { return generators_.front().cell_count(); }
  [[nodiscard]] double cell_volume() const noexcept { return generators_.front().cell_volume(); }
  [[nodiscard]] const std::vector<Tile>& window() const noexcept { return window_; }
  [[nodiscard]] const FiberedGenerator& operator[](std::size_t i) const { return generators_[i]; }
  [[nodiscard]] const std::vector<FiberedGenerator>& generators() const noexcept { return generators_; }

  /// Fiber matrix at a cell: rows index window tiles, columns generators.
  [[nodiscard]] Eigen::MatrixXcd fiber_matrix(std::size_t cell) const;

 private:
  std::vector<FiberedGenerator> generators_;
  std::vector<Tile> window_;
  // dense_[(g * window_.size() + t) * cells + cell]
  std::vector<Complex> dense_;
};

struct GramianField {
  std::size_t ell = 0;
  double tol = kDefaultTolerance;
  std::vector<Eigen::MatrixXcd> matrices;
  /// Descending singular values per cell.
  std::vector<Eigen::VectorXd> singular_values;
  std::vector<int> ranks;
};

/// Options shared by the per-cell computations.
struct FiberOptions {
  double tol_rel = kDefaultTolerance;
  unsigned threads = 1;
};

/// Gramian G_ij(w) = sum_k phi_i(w + k) conj(phi_j(w + k)) for every cell.
GramianField gramian(const GeneratorSet& phi, const FiberOptions& options = {});

/// Singular values of a Hermitian matrix, in descending order.
Eigen::VectorXd hermitian_singular_values(const Eigen::MatrixXcd& h);

/// Count of singular values above tol_rel times the largest one (0 for H = 0).
int numerical_rank(const Eigen::MatrixXcd& h, double tol_rel = kDefaultTolerance);

/// dim_S per cell: the numerical rank of the Gramian.
std::vector<int> dimension_function(const GeneratorSet& phi, const FiberOptions& options = {});

/// Keeps the tiles of the class and zeroes the rest (the window is unchanged).
FiberedGenerator cutoff(const FiberedGenerator& phi, const ResidueClass& cls);

enum class TestMethod { rank, fiber, modulation };

const char* to_string(TestMethod method);
/// Throws std::invalid_argument for unknown names.
TestMethod parse_test_method(std::string_view name);

struct CellLedger {
  std::size_t index = 0;
  int rank_total = 0;
  std::vector<int> ranks_by_class;
  /// sum of class ranks minus the total rank; never negative in exact arithmetic.
  int defect = 0;
  /// Worst relative membership residual at the cell (0 for the rank method).
  double residual = 0.0;
};

struct InvarianceReport {
  TestMethod method = TestMethod::rank;
  bool verdict = true;
  double tol = kDefaultTolerance;
  std::vector<Tile> classes;
  std::vector<CellLedger> cells;
  double worst_residual = 0.0;
  int worst_defect = 0;
};

/// Rank additivity: rank G_Phi(w) = sum_sigma rank G_{Phi^sigma}(w) at every cell.
InvarianceReport test_invariance_rank(const GeneratorSet& phi, const ClosedSubgroup& m,
                                      const FiberOptions& options = {});

/// Every cutoff fiber lies in the span of the generator fibers at its cell.
/// Passes when every squared relative residual is at most tol_rel.
InvarianceReport test_invariance_fiber(const GeneratorSet& phi, const ClosedSubgroup& m,
                                       const FiberOptions& options = {});

/// Every modulated fiber e_m phi^_w, m in samples, lies in the fiber span.
/// Throws std::invalid_argument if a sample is not a member of m.
InvarianceReport test_invariance_modulation(const GeneratorSet& phi, const ClosedSubgroup& m,
                                            std::span<const RatVector> samples,
                                            const FiberOptions& options = {});

/// Samples whose modulations separate every residue class met by the window:
/// (1/a_i) v_i and v_j / (spread_j + 1) for the continuous directions.
std::vector<RatVector> default_modulation_samples(const ClosedSubgroup& m,
                                                  std::span<const Tile> window);

/// e_m phi: multiplies every cell value by exp(-2 pi i <w + k, x>), with w the
/// cell midpoint W (j + 1/2) / n.
FiberedGenerator modulate(const FiberedGenerator& phi, const ClosedSubgroup& m, const RatVector& x);

/// Bracket [f, g] evaluated on each (residue class, cell) of the joint window.
struct BracketField {
  std::vector<ResidueClass> classes;
  std::size_t cells = 0;
  std::vector<Complex> values;  // class-major

  [[nodiscard]] Complex at(std::size_t cls, std::size_t cell) const {
    return values[cls * cells + cell];
  }
};

BracketField bracket(const FiberedGenerator& f, const FiberedGenerator& g, const ClosedSubgroup& m);

/// Orthogonal projection of g onto the M-invariant space generated by f.
FiberedGenerator project_principal(const FiberedGenerator& f, const FiberedGenerator& g,
                                   const ClosedSubgroup& m, double tol_rel = kDefaultTolerance);

/// Windowed indicator of B_0 = Omega + M*: ones on the tiles of the zero class.
/// Throws std::invalid_argument if no window tile lies in M*.
FiberedGenerator exact_invariant_generator(const ClosedSubgroup& m, std::span<const Tile> window,
                                           std::vector<std::size_t> grid);

struct SupportReport {
  std::size_t ell = 0;
  double cell_volume = 0.0;
  /// Per generator: number of (class, cell) pairs where the generator is nonzero.
  std::vector<std::size_t> support_cells;
  std::vector<double> support_measure;
  /// level_cells[j] = #{cells : dim_S = j}, j = 0..ell.
  std::vector<std::size_t> level_cells;
  std::vector<double> level_measure;
  /// sum_j j |E_j|, also as an exact cell count.
  std::size_t dimension_cells = 0;
  double dimension_integral = 0.0;
  bool bound_holds = true;
};

SupportReport support_report(const GeneratorSet& phi, const ClosedSubgroup& m,
                             const FiberOptions& options = {});

struct SweepResult {
  std::vector<bool> verdicts;
  /// Pairs (i, j) with candidate i ⊆ candidate j, j passing and i failing.
  std::vector<std::pair<std::size_t, std::size_t>> monotonicity_violations;
  /// Pairs (i, j), i ⊊ j, that the window cannot tell apart.
  std::vector<std::pair<std::size_t, std::size_t>> indistinguishable;
};

SweepResult find_extra_invariance(const GeneratorSet& phi, std::span<const ClosedSubgroup> candidates,
                                  const FiberOptions& options = {});

/// True iff the residue partitions of the window under m and other differ.
bool window_distinguishes(const ClosedSubgroup& m, const ClosedSubgroup& other,
                          std::span<const Tile> window);

}  // namespace extrainv
