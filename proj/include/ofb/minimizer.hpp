/// @file minimizer.hpp
/// @brief Discrete minimization of ||grad v||^2 / ||v||^2_{L4} over H^1_0 of
///        the pierced rectangle, free or restricted to functions even in x.
///
/// Discretization: uniform grid over the closed rectangle [-R,R] x [-h,h] with
/// spacing step; nodes on the outer boundary or with x^2 + y^2 <= 1 are pinned
/// to zero. ||grad v||^2 is the sum of squared differences over grid edges
/// (equivalently v^T A v for the 5-point graph Laplacian A) and ||v||^4_{L4}
/// is step^2 * sum v^4.
///
/// Iteration: with ||v_k||_{L4} = 1, solve A u = step^2 v_k^3 by conjugate
/// gradients, then v_{k+1} = |u| / ||u||_{L4}. Because
///   1 = a(u, v_k) <= ||u||_A ||v_k||_A  and  ||u||_A^2 = <u, v_k^3> <= ||u||_{L4},
/// the quotient of v_{k+1} never exceeds that of v_k. A fixed point solves
/// -Delta v = S v^3 with S the quotient. Translation of a localized bump is a
/// nearly neutral mode of this map, so the plain iteration crawls once R is
/// large; Anderson mixing (safeguarded, see MinimizeOptions) removes that.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ofb/geometry.hpp"

namespace ofb::minimizer {

enum class NodeKind : std::uint8_t { dirichlet_zero = 0, interior = 1 };

class GridField {
public:
    /// Throws DomainError unless 2R/step and 2h/step are integers and the unit
    /// radius spans at least 8 steps. with_obstacle = false pins only the
    /// outer boundary (plain rectangle).
    GridField(const ChannelGeometry& geom, double step, bool with_obstacle = true);

    [[nodiscard]] const ChannelGeometry& geom() const noexcept { return geom_; }
    [[nodiscard]] double step() const noexcept { return step_; }
    [[nodiscard]] int nx() const noexcept { return nx_; }
    [[nodiscard]] int ny() const noexcept { return ny_; }
    [[nodiscard]] bool with_obstacle() const noexcept { return with_obstacle_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    /// Node coordinates, exactly antisymmetric about the center.
    [[nodiscard]] double x(int i) const noexcept { return (i - 0.5 * (nx_ - 1)) * step_; }
    [[nodiscard]] double y(int j) const noexcept { return (j - 0.5 * (ny_ - 1)) * step_; }
    [[nodiscard]] std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * nx_ + i;
    }

    [[nodiscard]] std::vector<double>& values() noexcept { return values_; }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
    [[nodiscard]] const std::vector<std::uint8_t>& mask() const noexcept { return mask_; }
    [[nodiscard]] NodeKind kind(int i, int j) const noexcept {
        return static_cast<NodeKind>(mask_[index(i, j)]);
    }

    /// v o sigma with sigma(x, y) = (-x, y).
    [[nodiscard]] GridField reflected() const;
    /// Zero every pinned node.
    void apply_mask();

private:
    ChannelGeometry geom_;
    double step_;
    int nx_;
    int ny_;
    bool with_obstacle_;
    std::vector<double> values_;
    std::vector<std::uint8_t> mask_;
};

/// ||grad v||^2 (edge sum).
double dirichlet_energy(const GridField& v);
/// step^2 sum v^4.
double l4_4(const GridField& v);
double l2_norm(const GridField& v);
/// dirichlet_energy / sqrt(l4_4).
double discrete_quotient(const GridField& v);
/// ||v - v o sigma||_{L2} / ||v||_{L2}.
double asymmetry(const GridField& v);

/// (A v)_i = 4 v_i - sum of the four neighbours on interior nodes, 0 on pinned ones.
void apply_laplacian(const GridField& grid, const std::vector<double>& in, std::vector<double>& out);

struct CgResult {
    int iterations;
    double relative_residual;
};

/// Solves A x = b on the interior nodes, x used as the initial guess.
/// Throws SingularSolve on breakdown or if rel_tol is not reached in max_iter.
CgResult conjugate_gradient(const GridField& grid, const std::vector<double>& b, std::vector<double>& x,
                            double rel_tol, int max_iter);

/// even_bump: cos(pi x / 2R) cos(pi y / 2h), one bump over the obstacle.
/// offset_bump: a sine bump on 1 < x < R only.
/// twin_bump: offset_bump plus its mirror image (even).
/// random: i.i.d. uniform(0, 1) node values.
enum class InitKind { even_bump, offset_bump, twin_bump, random };

struct InitSpec {
    InitKind kind = InitKind::even_bump;
    std::uint64_t seed = 0;
    [[nodiscard]] std::string label() const;
};

/// Nonnegative starting field, masked, not normalized.
GridField make_initial(const ChannelGeometry& geom, double step, const InitSpec& init, bool with_obstacle = true);

enum class LinearSolver { cholesky, cg };

struct MinimizeOptions {
    bool even_constrained = false;
    /// cholesky factors A once per run; cg re-solves every iteration.
    LinearSolver solver = LinearSolver::cholesky;
    int max_iter = 5000;
    double tol = 1e-10;
    double cg_tol = 1e-10;  ///< cg only
    /// Anderson mixing depth (0: plain iteration). A mixed iterate is kept
    /// only if its quotient does not exceed that of the plain step.
    int anderson_depth = 5;
};

struct MinimizeResult {
    double S_estimate;
    double asymmetry;
    int iterations;
    bool converged;
    double residual;  ///< ||v - S u||_A / ||v||_A at the last iterate
    bool constrained_even;
    std::vector<double> quotient_history;  ///< quotient of v_0, v_1, ...
    GridField field;                       ///< last iterate, ||v||_{L4} = 1
};

/// Runs the iteration from an arbitrary nonnegative start.
MinimizeResult minimize_from(GridField start, const MinimizeOptions& opts);

MinimizeResult minimize(const ChannelGeometry& geom, double step, const InitSpec& init, bool even_constrained,
                        int max_iter, double tol);

/// Bilinear interpolation of a step-s field onto the step-s/2 grid of the same geometry.
GridField prolongate(const GridField& coarse);

struct RunSummary {
    std::string init;
    double S;
    double asymmetry;
    int iterations;
    bool converged;
};

/// Even runs start from even_bump and twin_bump, free runs from offset_bump
/// and the random seeds; each side keeps its smallest S.
struct ScanRow {
    double R;
    double S_even;
    double S_free;
    double gap;             ///< S_even - S_free
    double asymmetry_free;
    double asymmetry_even;
    double S_even_fine;     ///< at step / 2
    double S_free_fine;
    double margin_even;     ///< 2 |S_even - S_even_fine|
    double margin_free;
    double margin;          ///< max of the two
    std::string best_init;       ///< free side
    std::string best_even_init;
    bool even_converged;         ///< of the kept even run
    bool free_converged;         ///< of the kept free run
    std::vector<RunSummary> even_runs;
    std::vector<RunSummary> free_runs;
};

struct ScanOptions {
    double h = 2.0;
    std::vector<double> R_list;
    double step = 0.05;
    double tol = 1e-9;
    int max_iter = 4000;
    int seeds = 3;
    unsigned threads = 0;  ///< 0: OFB_THREADS or hardware concurrency
};

struct ScanTable {
    double h;
    double step;
    std::vector<ScanRow> rows;
    /// Smallest listed R with gap > 3 margin (grid-dependent, not a sharp threshold).
    std::optional<double> R0_empirical;
};

ScanTable symmetry_breaking_scan(const ScanOptions& opts);

}  // namespace ofb::minimizer
