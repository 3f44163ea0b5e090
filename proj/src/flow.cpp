#include "flowlab/flow.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace flowlab {

namespace {

// composite Gauss-Legendre nodes over [t0, t1] split at breakpoints
void composite_gl(const std::vector<double>& breakpoints, double t0, double t1, int gl_points,
                  std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.clear();
    weights.clear();
    std::vector<double> cuts{t0};
    for (double b : breakpoints)
        if (b > t0 + 1e-14 && b < t1 - 1e-14) cuts.push_back(b);
    cuts.push_back(t1);
    std::vector<double> n, w;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        gauss_legendre(gl_points, cuts[s], cuts[s + 1], n, w);
        nodes.insert(nodes.end(), n.begin(), n.end());
        weights.insert(weights.end(), w.begin(), w.end());
    }
}

SampledFunction sample_field_at(const FieldExpr& u, double s, const GridSpec& spec, int order) {
    auto grid = Grid::make(spec);
    std::vector<JetPoly> jets;
    jets.reserve(grid->size());
    for (std::size_t f = 0; f < grid->size(); ++f) jets.push_back(u.jet(s, grid->node(f), order));
    return SampledFunction(grid, u.dim(), order, std::move(jets));
}

// order at which the truncated sup is attained
int seminorm_argmax_order(const SampledFunction& f, const WeightSequence& M, double rho,
                          int k_max) {
    double best = -1.0;
    int best_order = 0;
    for (const MultiIndex& alpha : enumerate_multiindices(f.dim(), k_max)) {
        const int q = alpha.order();
        double v = lp_derivative_norm(f, alpha, p_infinity) / (std::pow(rho, q) * factorial(q) * M[q]);
        if (v > best) {
            best = v;
            best_order = q;
        }
    }
    return best_order;
}

} // namespace

double field_seminorm_integral(const FieldExpr& u, const WeightSequence& M, double rho, double t0,
                               double t1, const FlowOptions& opts) {
    std::vector<double> nodes, weights;
    composite_gl(field_breakpoints(u), t0, t1, opts.gl_points, nodes, weights);
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto sample = sample_field_at(u, nodes[i], opts.seminorm_grid, opts.seminorm_kmax);
        acc += weights[i] * ultradiff_seminorm(sample, M, rho, p_infinity, opts.seminorm_kmax);
    }
    return acc;
}

double pick_rho_ladder(const FieldExpr& u, const WeightSequence& M, const FlowOptions& opts) {
    std::vector<double> nodes, weights;
    composite_gl(field_breakpoints(u), 0.0, 1.0, opts.gl_points, nodes, weights);
    for (double rho : {1.0, 2.0, 4.0, 8.0, 16.0}) {
        bool stable = true;
        for (double s : nodes) {
            auto sample = sample_field_at(u, s, opts.seminorm_grid, opts.seminorm_kmax);
            if (seminorm_argmax_order(sample, M, rho, opts.seminorm_kmax) >= opts.seminorm_kmax) {
                stable = false;
                break;
            }
        }
        if (stable) return rho;
    }
    throw std::runtime_error(
        "field not admissible at (M, rho): seminorm sup pinned at the truncation order on the "
        "whole rho ladder");
}

PicardWindow pick_delta(const FieldExpr& u, double rho, const WeightSequence& M, double t0,
                        const FlowOptions& opts) {
    if (!(rho > 0.0)) throw std::invalid_argument("pick_delta: rho > 0 required");
    const double remaining = 1.0 - t0;
    if (remaining <= 0.0) throw std::invalid_argument("pick_delta: t0 must lie in [0, 1)");
    const double m1 = M[1];
    double delta = remaining;
    for (;;) {
        double val =
            std::max(1.0, rho) * m1 * field_seminorm_integral(u, M, rho, t0, t0 + delta, opts);
        if (val <= opts.contraction_bound + 1e-15) return {t0, delta, rho, m1, val};
        delta /= 2;
        if (delta < opts.min_delta)
            throw std::runtime_error(
                "field not admissible at (M, rho): contraction window shrank below minimum");
    }
}

namespace {

struct NodeScalarSolve {
    std::vector<Vec> positions;  // per time node
    int iterations = 0;
    std::vector<double> decays;
};

// Field evaluation times are nudged strictly inside the window so piecewise
// fields (concatenations) resolve to the branch this window belongs to; the
// collocation nodes themselves stay exact.
double interior_time(const ChebyshevWindow& cheb, int j) {
    const double eps = 1e-12 * (cheb.b() - cheb.a());
    return std::min(std::max(cheb.nodes()[j], cheb.a() + eps), cheb.b() - eps);
}

NodeScalarSolve solve_node_scalar(const FieldExpr& u, const ChebyshevWindow& cheb,
                                  const Vec& start, const FlowOptions& opts) {
    const int m = cheb.n() + 1;
    const int d = u.dim();
    NodeScalarSolve out;
    std::vector<Vec> phi(m, Vec(d, 0.0));
    std::vector<Vec> uval(m, Vec(d, 0.0));
    std::vector<double> integrand(m), integral(m);
    double prev_change = -1.0;
    const double decay_floor = 1e3 * opts.fixed_point_tol;
    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        for (int j = 0; j < m; ++j) {
            Vec x = start;
            for (int c = 0; c < d; ++c) x[c] += phi[j][c];
            uval[j] = u.eval(interior_time(cheb, j), x);
        }
        double change = 0.0;
        for (int c = 0; c < d; ++c) {
            for (int j = 0; j < m; ++j) integrand[j] = uval[j][c];
            cheb.integrate_values(integrand, integral);
            for (int j = 0; j < m; ++j) {
                change = std::max(change, std::abs(integral[j] - phi[j][c]));
                phi[j][c] = integral[j];
            }
        }
        out.iterations = iter;
        if (prev_change > decay_floor && change > decay_floor)
            out.decays.push_back(change / prev_change);
        prev_change = change;
        if (change <= opts.fixed_point_tol) {
            out.positions.assign(m, start);
            for (int j = 0; j < m; ++j)
                for (int c = 0; c < d; ++c) out.positions[j][c] += phi[j][c];
            return out;
        }
    }
    throw std::runtime_error(
        "picard iteration did not converge: window precondition violated (contraction > 1/2?)");
}

// jets of the window map at basepoint `start`, driven by the converged
// positions; the jet ODE is integrated by Picard with the same spectral
// antiderivative
std::vector<JetPoly> solve_node_jets(const FieldExpr& u, const ChebyshevWindow& cheb,
                                     const Vec& start, const std::vector<Vec>& positions,
                                     int order, const FlowOptions& opts) {
    const int m = cheb.n() + 1;
    const int d = u.dim();
    JetPoly ident = JetPoly::identity(d, order, start);
    std::vector<JetPoly> jets(m, ident);
    for (int j = 0; j < m; ++j)
        for (int c = 0; c < d; ++c) jets[j].set_coeff(0, c, positions[j][c]);

    const std::size_t n_coeff = ident.raw().size();
    std::vector<std::vector<double>> rhs(m);
    std::vector<double> integrand(m), integral(m);
    double scale = 1.0;
    for (int iter = 1; iter <= opts.jet_max_iter; ++iter) {
        for (int j = 0; j < m; ++j) {
            JetPoly uj = u.jet(interior_time(cheb, j), positions[j], order);
            // force exact basepoint match against roundoff in positions
            JetPoly cur = jets[j];
            for (int c = 0; c < d; ++c) cur.set_coeff(0, c, uj.basepoint()[c]);
            rhs[j] = jet_compose(uj, cur).raw();
        }
        double change = 0.0;
        for (std::size_t k = 0; k < n_coeff; ++k) {
            for (int j = 0; j < m; ++j) integrand[j] = rhs[j][k];
            cheb.integrate_values(integrand, integral);
            for (int j = 0; j < m; ++j) {
                double next = ident.raw()[k] + integral[j];
                change = std::max(change, std::abs(next - jets[j].raw()[k]));
                scale = std::max(scale, std::abs(next));
                jets[j].raw()[k] = next;
            }
        }
        // keep the value row pinned to the converged trajectory
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < d; ++c) jets[j].set_coeff(0, c, positions[j][c]);
        if (change <= opts.fixed_point_tol * scale) return jets;
    }
    throw std::runtime_error("jet transport did not converge within the iteration budget");
}

} // namespace

FlowTrajectory::FlowTrajectory(FieldPtr field, std::shared_ptr<const Grid> grid, int jet_order,
                               std::vector<WindowData> windows)
    : field_(std::move(field)), grid_(std::move(grid)), jet_order_(jet_order),
      windows_(std::move(windows)) {
    partition_.push_back(windows_.front().window.t0);
    for (const auto& w : windows_) partition_.push_back(w.window.t0 + w.window.delta);
}

int FlowTrajectory::window_of(double t) const {
    for (std::size_t w = 0; w < windows_.size(); ++w) {
        const auto& win = windows_[w].window;
        if (t <= win.t0 + win.delta + 1e-12) return static_cast<int>(w);
    }
    return static_cast<int>(windows_.size()) - 1;
}

Vec FlowTrajectory::position(double t, std::size_t node) const {
    const int w = window_of(t);
    const auto& win = windows_[w];
    const int m = win.times->n() + 1;
    const int d = grid_->dim();
    Vec out(d);
    std::vector<double> vals(m);
    for (int c = 0; c < d; ++c) {
        for (int j = 0; j < m; ++j) vals[j] = win.positions[node][j][c];
        out[c] = win.times->interpolate(vals, t);
    }
    return out;
}

Vec FlowTrajectory::displacement(double t, std::size_t node) const {
    Vec p = position(t, node);
    Vec x = grid_->node(node);
    for (int c = 0; c < grid_->dim(); ++c) p[c] -= x[c];
    return p;
}

const JetPoly& FlowTrajectory::jet_at_time_node(std::size_t window, int time_node,
                                                std::size_t node) const {
    return windows_[window].jets[node][time_node];
}

JetPoly FlowTrajectory::jet_at_partition(double t, std::size_t node) const {
    for (std::size_t w = 0; w < windows_.size(); ++w) {
        const auto& win = windows_[w];
        if (std::abs(win.window.t0 - t) < 1e-12 && w == 0) return win.jets[node].front();
        if (std::abs(win.window.t0 + win.window.delta - t) < 1e-12)
            return win.jets[node].back();
    }
    // interior time: interpolate jet coefficients within the window
    const int w = window_of(t);
    const auto& win = windows_[w];
    const int m = win.times->n() + 1;
    JetPoly out = win.jets[node].front();
    std::vector<double> vals(m);
    for (std::size_t k = 0; k < out.raw().size(); ++k) {
        for (int j = 0; j < m; ++j) vals[j] = win.jets[node][j].raw()[k];
        out.raw()[k] = win.times->interpolate(vals, t);
    }
    return out;
}

SampledFunction FlowTrajectory::displacement_field(double t) const {
    const int d = grid_->dim();
    std::vector<JetPoly> jets;
    jets.reserve(grid_->size());
    for (std::size_t n = 0; n < grid_->size(); ++n) {
        JetPoly a = jet_at_partition(t, n);
        // phi = Phi - Id
        Vec x = grid_->node(n);
        for (int c = 0; c < d; ++c) {
            a.set_coeff(0, c, a.coeff(0, c) - x[c]);
            a.set_coeff(MultiIndex::unit(d, c), c, a.coeff(MultiIndex::unit(d, c), c) - 1.0);
        }
        jets.push_back(std::move(a));
    }
    return SampledFunction(grid_, d, jet_order_, std::move(jets));
}

FlowTrajectory glue_flow(FieldPtr u, double rho, const WeightSequence& M,
                         const FlowOptions& opts) {
    std::vector<PicardWindow> windows;
    const auto breakpoints = field_breakpoints(*u);
    double t = 0.0;
    while (t < 1.0 - 1e-12) {
        PicardWindow w = pick_delta(*u, rho, M, t, opts);
        double delta = w.delta;
        for (double b : breakpoints)
            if (b > t + 1e-14 && b < t + delta - 1e-14) delta = std::min(delta, b - t);
        if (delta < w.delta) {
            w.delta = delta;
            w.contraction_value =
                std::max(1.0, rho) * w.m1 * field_seminorm_integral(*u, M, rho, t, t + delta, opts);
        }
        windows.push_back(w);
        t += w.delta;
        if (windows.size() > 4096)
            throw std::runtime_error("glue_flow: window count exploded; field too strong");
    }
    return glue_flow(std::move(u), windows, opts);
}

FlowTrajectory glue_flow(FieldPtr u, const std::vector<PicardWindow>& windows,
                         const FlowOptions& opts) {
    if (windows.empty()) throw std::invalid_argument("glue_flow: empty window list");
    double cursor = 0.0;
    for (const auto& w : windows) {
        if (std::abs(w.t0 - cursor) > 1e-10)
            throw std::invalid_argument("glue_flow: window chain broken (gap or overlap)");
        cursor = w.t0 + w.delta;
    }
    if (std::abs(cursor - 1.0) > 1e-10)
        throw std::invalid_argument("glue_flow: windows must cover [0, 1]");

    auto grid = Grid::make(opts.grid);
    const std::size_t n_nodes = grid->size();
    const int d = grid->dim();
    if (d != u->dim()) throw std::invalid_argument("glue_flow: grid and field dimension differ");

    std::vector<WindowData> data;
    data.reserve(windows.size());
    std::vector<Vec> starts(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) starts[i] = grid->node(i);
    std::vector<JetPoly> accum;  // accumulated jets at window start per node
    accum.reserve(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i)
        accum.push_back(JetPoly::identity(d, opts.jet_order, starts[i]));

    for (const auto& w : windows) {
        WindowData wd;
        wd.window = w;
        wd.times = std::make_shared<const ChebyshevWindow>(w.t0, w.t0 + w.delta,
                                                           opts.cheb_intervals);
        wd.positions.resize(n_nodes);
        wd.jets.resize(n_nodes);
        wd.iterations.resize(n_nodes);
        const int m = wd.times->n() + 1;
        for (std::size_t i = 0; i < n_nodes; ++i) {
            auto scalar = solve_node_scalar(*u, *wd.times, starts[i], opts);
            auto window_jets =
                solve_node_jets(*u, *wd.times, starts[i], scalar.positions, opts.jet_order, opts);
            wd.positions[i] = std::move(scalar.positions);
            wd.iterations[i] = scalar.iterations;
            wd.decay_factors.insert(wd.decay_factors.end(), scalar.decays.begin(),
                                    scalar.decays.end());
            // accumulate through the previous windows: Phi(t) = Psi_w(t) o y_prev
            wd.jets[i].reserve(m);
            const bool first_window = data.empty();
            for (int j = 0; j < m; ++j) {
                if (first_window)
                    wd.jets[i].push_back(window_jets[j]);
                else
                    wd.jets[i].push_back(jet_compose(window_jets[j], accum[i]));
            }
        }
        // new starts and accumulated jets for the next window
        for (std::size_t i = 0; i < n_nodes; ++i) {
            starts[i] = wd.positions[i].back();
            accum[i] = wd.jets[i].back();
        }
        data.push_back(std::move(wd));
    }
    return FlowTrajectory(std::move(u), grid, opts.jet_order, std::move(data));
}

std::vector<Vec> flow_endpoints(const FieldExpr& u, double rho, const WeightSequence& M,
                                const FlowOptions& opts, const std::vector<Vec>& starts) {
    const auto breakpoints = field_breakpoints(u);
    std::vector<Vec> positions = starts;
    double t = 0.0;
    int guard = 0;
    while (t < 1.0 - 1e-12) {
        PicardWindow w = pick_delta(u, rho, M, t, opts);
        double delta = w.delta;
        for (double b : breakpoints)
            if (b > t + 1e-14 && b < t + delta - 1e-14) delta = std::min(delta, b - t);
        ChebyshevWindow cheb(t, t + delta, opts.cheb_intervals);
        for (auto& p : positions) p = solve_node_scalar(u, cheb, p, opts).positions.back();
        t += delta;
        if (++guard > 4096) throw std::runtime_error("flow_endpoints: window count exploded");
    }
    return positions;
}

double flow_residual(const FlowTrajectory& traj, const FlowOptions& opts) {
    const auto& windows = traj.windows();
    const int d = traj.grid().dim();
    const FieldExpr& u = traj.field();
    const auto breakpoints = field_breakpoints(u);
    double worst = 0.0;
    std::vector<double> nodes, weights;
    for (std::size_t i = 0; i < traj.grid().size(); ++i) {
        // prefix integrals over full windows
        Vec prefix(d, 0.0);
        for (std::size_t w = 0; w < windows.size(); ++w) {
            const auto& win = windows[w];
            const double t0 = win.window.t0, t1 = win.window.t0 + win.window.delta;
            const int m = win.times->n() + 1;
            // residual at each interior time node
            for (int j = 0; j < m; ++j) {
                const double tj = win.times->nodes()[j];
                if (tj <= t0 + 1e-14 && w == 0) continue;
                composite_gl(breakpoints, t0, tj, 2 * opts.gl_points, nodes, weights);
                Vec integral = prefix;
                for (std::size_t q = 0; q < nodes.size(); ++q) {
                    Vec pos = traj.position(nodes[q], i);
                    Vec uv = u.eval(nodes[q], pos);
                    for (int c = 0; c < d; ++c) integral[c] += weights[q] * uv[c];
                }
                Vec disp = traj.displacement(tj, i);
                for (int c = 0; c < d; ++c)
                    worst = std::max(worst, std::abs(disp[c] - integral[c]));
            }
            composite_gl(breakpoints, t0, t1, 2 * opts.gl_points, nodes, weights);
            for (std::size_t q = 0; q < nodes.size(); ++q) {
                Vec pos = traj.position(nodes[q], i);
                Vec uv = u.eval(nodes[q], pos);
                for (int c = 0; c < d; ++c) prefix[c] += weights[q] * uv[c];
            }
        }
    }
    return worst;
}

double det_jacobian_min(const FlowTrajectory& traj) {
    const int d = traj.grid().dim();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& win : traj.windows()) {
        for (const auto& node_jets : win.jets) {
            for (const JetPoly& jet : node_jets) {
                auto jac = jet.jacobian();
                best = std::min(best, det_dense(jac, d));
            }
        }
    }
    return best;
}

double max_decay_factor(const FlowTrajectory& traj) {
    double worst = 0.0;
    for (const auto& win : traj.windows())
        for (double r : win.decay_factors) worst = std::max(worst, r);
    return worst;
}

std::vector<ContinuityRow> flow_continuity_check(const FlowTrajectory& traj,
                                                 const WeightSequence& M, double sigma, int k_max,
                                                 const FlowOptions& opts) {
    if (k_max > traj.jet_order())
        throw std::invalid_argument("flow_continuity_check: k_max above transported jet order");
    const auto& partition = traj.partition();
    const int d = traj.grid().dim();
    const std::size_t n_nodes = traj.grid().size();

    // displacement jets at the partition points
    std::vector<SampledFunction> phis;
    phis.reserve(partition.size());
    for (double t : partition) phis.push_back(traj.displacement_field(t));

    // integrand g(s) = || jet(u(s) o Phi(s)) ||^M_sigma on Gauss-Legendre
    // nodes per window, accumulated into prefix integrals at partition points
    std::vector<double> prefix{0.0};
    const auto breakpoints = field_breakpoints(traj.field());
    for (std::size_t w = 0; w < traj.windows().size(); ++w) {
        const auto& win = traj.windows()[w];
        std::vector<double> nodes, weights;
        composite_gl(breakpoints, win.window.t0, win.window.t0 + win.window.delta, opts.gl_points,
                     nodes, weights);
        double acc = prefix.back();
        for (std::size_t q = 0; q < nodes.size(); ++q) {
            double g = 0.0;
            for (std::size_t i = 0; i < n_nodes; ++i) {
                JetPoly a = traj.jet_at_partition(nodes[q], i);
                JetPoly uj = traj.field().jet(nodes[q], a.value(), k_max);
                JetPoly composed = jet_compose(uj, [&] {
                    // truncate the accumulated jet to k_max for the compose
                    JetPoly at(d, d, k_max, a.basepoint());
                    for (int f = 0; f < at.n_coeffs(); ++f)
                        for (int c = 0; c < d; ++c)
                            at.set_coeff(f, c, a.coeff(a.layout().flat(at.layout().index(f)), c));
                    return at;
                }());
                for (const MultiIndex& alpha : enumerate_multiindices(d, k_max)) {
                    const int q_ord = alpha.order();
                    double denom = std::pow(sigma, q_ord) * factorial(q_ord) * M[q_ord];
                    for (int c = 0; c < d; ++c) {
                        double val = std::abs(composed.coeff(composed.layout().flat(alpha), c)) *
                                     alpha.factorial();
                        g = std::max(g, val / denom);
                    }
                }
            }
            acc += weights[q] * g;
        }
        prefix.push_back(acc);
    }

    auto seminorm_diff = [&](const SampledFunction& a, const SampledFunction& b) {
        double sup = 0.0;
        for (const MultiIndex& alpha : enumerate_multiindices(d, k_max)) {
            const int q = alpha.order();
            const double denom = std::pow(sigma, q) * factorial(q) * M[q];
            const int flat = a.jet(0).layout().flat(alpha);
            const double fact = alpha.factorial();
            for (std::size_t i = 0; i < n_nodes; ++i)
                for (int c = 0; c < d; ++c)
                    sup = std::max(sup, std::abs(a.jet(i).coeff(flat, c) - b.jet(i).coeff(flat, c)) *
                                            fact / denom);
        }
        return sup;
    };

    std::vector<ContinuityRow> rows;
    for (std::size_t ri = 0; ri < partition.size(); ++ri) {
        for (std::size_t ti = ri + 1; ti < partition.size(); ++ti) {
            ContinuityRow row;
            row.r = partition[ri];
            row.t = partition[ti];
            row.lhs = seminorm_diff(phis[ti], phis[ri]);
            row.rhs = prefix[ti] - prefix[ri];
            rows.push_back(row);
        }
    }
    return rows;
}

} // namespace flowlab
