#include "flowlab/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace flowlab {

const char* quadrature_name(QuadratureRule r) {
    switch (r) {
        case QuadratureRule::trapezoid: return "trapezoid";
        case QuadratureRule::simpson: return "simpson";
        case QuadratureRule::gauss_legendre: return "gauss-legendre";
    }
    return "unknown";
}

QuadratureRule quadrature_from_name(const std::string& name) {
    if (name == "trapezoid") return QuadratureRule::trapezoid;
    if (name == "simpson") return QuadratureRule::simpson;
    if (name == "gauss-legendre" || name == "gauss_legendre")
        return QuadratureRule::gauss_legendre;
    throw std::invalid_argument("unknown quadrature rule: " + name);
}

std::string GridSpec::to_string() const {
    std::ostringstream os;
    os << "d=" << d << " X=" << extent << " n=" << points_per_axis << " "
       << quadrature_name(rule);
    return os.str();
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n(x) by recurrence
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[i] = mid - half * x;
        nodes[n - 1 - i] = mid + half * x;
        weights[i] = weights[n - 1 - i] = half * w;
    }
}

void quadrature_nodes(QuadratureRule rule, int n, double a, double b,
                      std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 2) throw std::invalid_argument("quadrature needs >= 2 points per axis");
    switch (rule) {
        case QuadratureRule::gauss_legendre:
            gauss_legendre(n, a, b, nodes, weights);
            return;
        case QuadratureRule::trapezoid: {
            nodes.resize(n);
            weights.assign(n, 0.0);
            double h = (b - a) / (n - 1);
            for (int i = 0; i < n; ++i) {
                nodes[i] = a + i * h;
                weights[i] = (i == 0 || i == n - 1) ? h / 2 : h;
            }
            return;
        }
        case QuadratureRule::simpson: {
            if (n < 3 || n % 2 == 0)
                throw std::invalid_argument("simpson rule needs an odd point count >= 3");
            nodes.resize(n);
            weights.assign(n, 0.0);
            double h = (b - a) / (n - 1);
            for (int i = 0; i < n; ++i) {
                nodes[i] = a + i * h;
                if (i == 0 || i == n - 1)
                    weights[i] = h / 3;
                else
                    weights[i] = (i % 2 == 1) ? 4 * h / 3 : 2 * h / 3;
            }
            return;
        }
    }
    throw std::invalid_argument("unknown quadrature rule");
}

Grid::Grid(const GridSpec& spec) : spec_(spec) {
    if (spec_.d < 1 || spec_.d > 3)
        throw std::invalid_argument("grid dimension must be 1..3");
    if (spec_.extent <= 0.0) throw std::invalid_argument("grid extent must be positive");
    quadrature_nodes(spec_.rule, spec_.points_per_axis, -spec_.extent, spec_.extent, nodes_,
                     weights_);
    size_ = 1;
    for (int i = 0; i < spec_.d; ++i) size_ *= nodes_.size();

    node_weights_.resize(size_);
    node_radii_.resize(size_);
    std::vector<int> idx(spec_.d);
    for (std::size_t f = 0; f < size_; ++f) {
        axis_indices(f, idx);
        double w = 1.0, r2 = 0.0;
        for (int i = 0; i < spec_.d; ++i) {
            w *= weights_[idx[i]];
            r2 += nodes_[idx[i]] * nodes_[idx[i]];
        }
        node_weights_[f] = w;
        node_radii_[f] = std::sqrt(r2);
    }
}

std::shared_ptr<const Grid> Grid::make(const GridSpec& spec) {
    return std::make_shared<const Grid>(spec);
}

Vec Grid::node(std::size_t flat) const {
    Vec x(spec_.d);
    std::vector<int> idx(spec_.d);
    axis_indices(flat, idx);
    for (int i = 0; i < spec_.d; ++i) x[i] = nodes_[idx[i]];
    return x;
}

void Grid::axis_indices(std::size_t flat, std::vector<int>& out) const {
    out.resize(spec_.d);
    const std::size_t n = nodes_.size();
    for (int i = spec_.d - 1; i >= 0; --i) {
        out[i] = static_cast<int>(flat % n);
        flat /= n;
    }
}

bool Grid::on_boundary_layer(std::size_t flat) const {
    std::vector<int> idx(spec_.d);
    axis_indices(flat, idx);
    const int last = static_cast<int>(nodes_.size()) - 1;
    for (int i = 0; i < spec_.d; ++i)
        if (idx[i] == 0 || idx[i] == last) return true;
    return false;
}

} // namespace flowlab
