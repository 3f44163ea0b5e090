#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "flowlab/chebyshev.hpp"
#include "flowlab/field.hpp"
#include "flowlab/grid.hpp"
#include "flowlab/sampled.hpp"
#include "flowlab/seminorms.hpp"
#include "flowlab/weight_sequence.hpp"

namespace flowlab {

// A time window on which the Picard operator is a 1/2-contraction.
struct PicardWindow {
    double t0 = 0.0;
    double delta = 0.0;
    double rho = 1.0;
    double m1 = 1.0;                 // M_1 of the weight sequence
    double contraction_value = 0.0;  // max(1,rho) M_1 int_J ||u(s)||^M_rho ds
};

struct FlowOptions {
    GridSpec grid{1, 8.0, 64, QuadratureRule::gauss_legendre};
    int jet_order = 4;

    // seminorm evaluation for the window rule
    GridSpec seminorm_grid{1, 8.0, 257, QuadratureRule::simpson};
    int seminorm_kmax = 8;

    double fixed_point_tol = 1e-10;
    int max_iter = 60;
    int jet_max_iter = 250;
    int cheb_intervals = 16;  // Chebyshev-Lobatto nodes per window = this + 1
    int gl_points = 8;        // Gauss-Legendre nodes per window segment
    double contraction_bound = 0.5;
    double min_delta = 1e-6;

    FlowOptions with_dim(int d) const {
        FlowOptions o = *this;
        o.grid.d = d;
        o.seminorm_grid.d = d;
        // the window rule only needs a sup estimate; keep the tensor grid flat
        if (d == 2) o.seminorm_grid.points_per_axis = 33;
        if (d == 3) o.seminorm_grid.points_per_axis = 11;
        return o;
    }
};

// int_{t0}^{t1} ||u(s)||^M_rho ds (truncated B^M_rho sup-seminorm), composite
// Gauss-Legendre respecting the field's breakpoints.
double field_seminorm_integral(const FieldExpr& u, const WeightSequence& M, double rho, double t0,
                               double t1, const FlowOptions& opts);

// Roumieu ladder search: smallest rho in {1,2,4,8,16} whose truncated
// seminorm sup is attained strictly below the truncation order at every
// quadrature time.  Throws if none qualifies.
double pick_rho_ladder(const FieldExpr& u, const WeightSequence& M, const FlowOptions& opts);

// Largest dyadic delta (halving search from the remaining interval) with
// max(1,rho) M_1 int_J ||u||^M_rho <= 1/2.
PicardWindow pick_delta(const FieldExpr& u, double rho, const WeightSequence& M, double t0,
                        const FlowOptions& opts);

// One window of the glued flow, solved per grid node on Chebyshev time nodes.
struct WindowData {
    PicardWindow window;
    std::shared_ptr<const ChebyshevWindow> times;
    // per node, per time node
    std::vector<std::vector<Vec>> positions;
    std::vector<std::vector<JetPoly>> jets;  // accumulated jets of Phi(t,.) at the grid node
    std::vector<int> iterations;
    std::vector<double> decay_factors;  // pooled per-iteration sup-change ratios
};

class FlowTrajectory {
public:
    FlowTrajectory(FieldPtr field, std::shared_ptr<const Grid> grid, int jet_order,
                   std::vector<WindowData> windows);

    const FieldExpr& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }
    const Grid& grid() const { return *grid_; }
    int jet_order() const { return jet_order_; }
    const std::vector<WindowData>& windows() const { return windows_; }
    const std::vector<double>& partition() const { return partition_; }

    Vec position(double t, std::size_t node) const;
    Vec displacement(double t, std::size_t node) const;
    // accumulated jet of Phi(t, .) at a grid node; t must lie on a window
    // time node (no interpolation of jets across time)
    const JetPoly& jet_at_time_node(std::size_t window, int time_node, std::size_t node) const;
    JetPoly jet_at_partition(double t, std::size_t node) const;  // t on the partition
    SampledFunction displacement_field(double t) const;  // jets of phi(t) on the grid

    int window_of(double t) const;

private:
    FieldPtr field_;
    std::shared_ptr<const Grid> grid_;
    int jet_order_;
    std::vector<WindowData> windows_;
    std::vector<double> partition_;
};

// Solve the flow on [0, 1] by gluing Picard windows; windows come from
// pick_delta capped at field breakpoints, or are supplied explicitly.
FlowTrajectory glue_flow(FieldPtr u, double rho, const WeightSequence& M,
                         const FlowOptions& opts);
FlowTrajectory glue_flow(FieldPtr u, const std::vector<PicardWindow>& windows,
                         const FlowOptions& opts);

// Time-1 flow positions from arbitrary start points (positions only; used
// for composition cross-checks where the second flow starts off-grid).
std::vector<Vec> flow_endpoints(const FieldExpr& u, double rho, const WeightSequence& M,
                                const FlowOptions& opts, const std::vector<Vec>& starts);

// max over samples of |phi(t,x) - int_0^t u(s, x + phi(s,x)) ds| with an
// independent composite Gauss-Legendre quadrature
double flow_residual(const FlowTrajectory& traj, const FlowOptions& opts);

// min over all samples of det d Phi_u(t, x)
double det_jacobian_min(const FlowTrajectory& traj);

// worst per-iteration sup-change decay factor over all nodes and windows
double max_decay_factor(const FlowTrajectory& traj);

// Continuity-in-t check: rows (r, t, lhs, rhs) with
// lhs = ||phi(t) - phi(r)||^M_sigma (truncated, p = inf over the grid) and
// rhs = int_r^t ||jet(u(s) o Phi(s))||^M_sigma ds; the paper's inequality
// demands lhs <= rhs at every partition pair r < t.
struct ContinuityRow {
    double r, t, lhs, rhs;
};
std::vector<ContinuityRow> flow_continuity_check(const FlowTrajectory& traj,
                                                 const WeightSequence& M, double sigma, int k_max,
                                                 const FlowOptions& opts);

} // namespace flowlab
