#include "flowlab/diffeo.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "flowlab/chebyshev.hpp"

namespace flowlab {

namespace {

class IdentityMap final : public DiffeoMap {
public:
    explicit IdentityMap(int d) : d_(d) {}
    int dim() const override { return d_; }
    Vec eval(const Vec& x) const override { return x; }
    JetPoly jet(const Vec& x, int order) const override {
        return JetPoly::identity(d_, order, x);
    }

private:
    int d_;
};

class IdentityPlusForm final : public DiffeoMap {
public:
    explicit IdentityPlusForm(VectorForm phi) : phi_(std::move(phi)) {
        if (phi_.dim() != phi_.dim_out())
            throw std::invalid_argument("diffeo displacement must map R^d -> R^d");
    }
    int dim() const override { return phi_.dim(); }
    Vec eval(const Vec& x) const override {
        Vec v = phi_.eval(x);
        for (int i = 0; i < dim(); ++i) v[i] += x[i];
        return v;
    }
    JetPoly jet(const Vec& x, int order) const override {
        return jet_add(JetPoly::identity(dim(), order, x), phi_.jet(x, order));
    }

private:
    VectorForm phi_;
};

class ComposedMap final : public DiffeoMap {
public:
    ComposedMap(DiffeoMapPtr inner, DiffeoMapPtr outer)
        : inner_(std::move(inner)), outer_(std::move(outer)) {
        if (inner_->dim() != outer_->dim())
            throw std::invalid_argument("composed map: dimension mismatch");
    }
    int dim() const override { return inner_->dim(); }
    Vec eval(const Vec& x) const override { return outer_->eval(inner_->eval(x)); }
    JetPoly jet(const Vec& x, int order) const override {
        JetPoly gi = inner_->jet(x, order);
        JetPoly go = outer_->jet(gi.value(), order);
        return jet_compose(go, gi);
    }

private:
    DiffeoMapPtr inner_, outer_;
};

class InvertedMap final : public DiffeoMap {
public:
    InvertedMap(DiffeoMapPtr inner, NewtonOptions opts)
        : inner_(std::move(inner)), opts_(opts) {}
    int dim() const override { return inner_->dim(); }
    Vec eval(const Vec& x) const override { return newton_invert(*inner_, x, opts_); }
    JetPoly jet(const Vec& x, int order) const override {
        Vec y = newton_invert(*inner_, x, opts_);
        return jet_invert(inner_->jet(y, order));
    }

private:
    DiffeoMapPtr inner_;
    NewtonOptions opts_;
};

class ChartBlendMap final : public DiffeoMap {
public:
    ChartBlendMap(DiffeoMapPtr a, DiffeoMapPtr b, double s)
        : a_(std::move(a)), b_(std::move(b)), s_(s) {
        if (a_->dim() != b_->dim()) throw std::invalid_argument("chart blend: dimension mismatch");
    }
    int dim() const override { return a_->dim(); }
    Vec eval(const Vec& x) const override {
        Vec va = a_->eval(x), vb = b_->eval(x);
        for (int i = 0; i < dim(); ++i) va[i] = (1 - s_) * va[i] + s_ * vb[i];
        return va;
    }
    JetPoly jet(const Vec& x, int order) const override {
        return jet_add(jet_scale(a_->jet(x, order), 1 - s_), jet_scale(b_->jet(x, order), s_));
    }

private:
    DiffeoMapPtr a_, b_;
    double s_;
};

class SampledMap final : public DiffeoMap {
public:
    explicit SampledMap(SampledFunction phi) : phi_(std::move(phi)) {
        if (phi_.dim() != phi_.dim_out())
            throw std::invalid_argument("sampled diffeo displacement must map R^d -> R^d");
    }
    int dim() const override { return phi_.dim(); }
    Vec eval(const Vec& x) const override {
        Vec v = interpolate_value(phi_, x);
        for (int i = 0; i < dim(); ++i) v[i] += x[i];
        return v;
    }
    JetPoly jet(const Vec& x, int order) const override {
        JetPoly j = jet_truncate(interpolate_jet(phi_, x), order);
        return jet_add(JetPoly::identity(dim(), order, x), j);
    }
    const SampledFunction& displacement() const { return phi_; }

private:
    SampledFunction phi_;
};

double det_at_node(const SampledFunction& phi, std::size_t node) {
    const int d = phi.dim();
    auto jac = phi.jet(node).jacobian();
    for (int i = 0; i < d; ++i) jac[i * d + i] += 1.0;
    return det_dense(jac, d);
}

// phi = Phi - Id, rebased onto the requested node.  Jets coming out of
// inverted map trees sit a Newton tolerance away from the node, so the
// identity is subtracted relative to the jet's own basepoint.
JetPoly displacement_from_full(const JetPoly& full, const Vec& node) {
    const int d = full.dim_in();
    JetPoly phi(d, d, full.order(), node);
    phi.raw() = full.raw();
    for (int c = 0; c < d; ++c) {
        phi.set_coeff(0, c, full.coeff(0, c) - full.basepoint()[c]);
        const MultiIndex unit = MultiIndex::unit(d, c);
        phi.set_coeff(unit, c, phi.coeff(unit, c) - 1.0);
    }
    return phi;
}

} // namespace

DiffeoMapPtr identity_map(int d) { return std::make_shared<IdentityMap>(d); }

DiffeoMapPtr identity_plus(VectorForm displacement) {
    return std::make_shared<IdentityPlusForm>(std::move(displacement));
}

DiffeoMapPtr composed_map(DiffeoMapPtr inner, DiffeoMapPtr outer) {
    return std::make_shared<ComposedMap>(std::move(inner), std::move(outer));
}

DiffeoMapPtr inverted_map(DiffeoMapPtr inner, NewtonOptions opts) {
    return std::make_shared<InvertedMap>(std::move(inner), opts);
}

DiffeoMapPtr chart_blend(DiffeoMapPtr a, DiffeoMapPtr b, double s) {
    return std::make_shared<ChartBlendMap>(std::move(a), std::move(b), s);
}

DiffeoMapPtr sampled_map(SampledFunction displacement) {
    return std::make_shared<SampledMap>(std::move(displacement));
}

Vec newton_invert(const DiffeoMap& map, const Vec& x, const NewtonOptions& opts) {
    const int d = map.dim();
    Vec y = map.eval(x);
    for (int i = 0; i < d; ++i) y[i] = 2 * x[i] - y[i];  // seed 2x - Phi(x) = x - phi(x)
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        JetPoly j = map.jet(y, 1);
        Vec r = j.value();
        double err = 0.0;
        for (int i = 0; i < d; ++i) {
            r[i] -= x[i];
            err = std::max(err, std::abs(r[i]));
        }
        if (err <= opts.tol) return y;
        auto jac = j.jacobian();
        solve_dense(jac, r, d);
        for (int i = 0; i < d; ++i) y[i] -= r[i];
    }
    throw std::runtime_error("inversion failed: likely non-bijective on grid (newton divergence)");
}

JetPoly jet_invert(const JetPoly& a) {
    if (a.dim_in() != a.dim_out())
        throw std::invalid_argument("jet_invert: square jets only");
    const int d = a.dim_in(), order = a.order();
    if (order < 1) throw std::invalid_argument("jet_invert: order >= 1 required");

    // inverse Jacobian
    auto jac = a.jacobian();
    std::vector<double> inv(d * d, 0.0);
    for (int c = 0; c < d; ++c) {
        std::vector<double> e(d, 0.0);
        e[c] = 1.0;
        auto lhs = jac;
        solve_dense(lhs, e, d);
        for (int r = 0; r < d; ++r) inv[r * d + c] = e[r];
    }

    JetPoly b(d, d, order, a.value());
    for (int c = 0; c < d; ++c) b.set_coeff(0, c, a.basepoint()[c]);
    const JetLayout& layout = b.layout();
    for (int f = 0; f < layout.size(); ++f) {
        const MultiIndex& alpha = layout.index(f);
        if (alpha.order() != 1) continue;
        int axis = 0;
        for (int i = 0; i < d; ++i)
            if (alpha[i] == 1) axis = i;
        for (int c = 0; c < d; ++c) b.set_coeff(f, c, inv[c * d + axis]);
    }

    // order-by-order correction: the order-q error of A o B is J_A times the
    // order-q defect of B
    JetPoly ident = JetPoly::identity(d, order, a.value());
    for (int q = 2; q <= order; ++q) {
        JetPoly c = jet_compose(a, b);
        for (int f = 0; f < layout.size(); ++f) {
            if (layout.index(f).order() != q) continue;
            for (int comp = 0; comp < d; ++comp) {
                double corr = 0.0;
                for (int j = 0; j < d; ++j)
                    corr += inv[comp * d + j] * (c.coeff(f, j) - ident.coeff(f, j));
                b.set_coeff(f, comp, b.coeff(f, comp) - corr);
            }
        }
    }
    return b;
}

DiffeoRep::DiffeoRep(DiffeoMapPtr map, SampledFunction phi)
    : map_(std::move(map)), phi_(std::move(phi)) {
    det_inf_ = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < phi_.n_nodes(); ++n)
        det_inf_ = std::min(det_inf_, det_at_node(phi_, n));
}

DiffeoRep DiffeoRep::from_map(DiffeoMapPtr map, const GridSpec& spec, int order) {
    auto grid = Grid::make(spec);
    const int d = spec.d;
    std::vector<JetPoly> jets;
    jets.reserve(grid->size());
    for (std::size_t n = 0; n < grid->size(); ++n) {
        Vec x = grid->node(n);
        jets.push_back(displacement_from_full(map->jet(x, order), x));
    }
    SampledFunction phi(grid, d, order, std::move(jets));
    return DiffeoRep(std::move(map), std::move(phi));
}

DiffeoRep DiffeoRep::from_samples(SampledFunction displacement) {
    if (displacement.dim() != displacement.dim_out())
        throw std::invalid_argument("diffeo displacement must map R^d -> R^d");
    SampledFunction copy = displacement;
    copy.mark_interpolated();
    return DiffeoRep(nullptr, std::move(copy));
}

Vec DiffeoRep::eval(const Vec& x) const {
    if (map_) return map_->eval(x);
    Vec v = interpolate_value(phi_, x);
    for (int i = 0; i < dim(); ++i) v[i] += x[i];
    return v;
}

JetPoly DiffeoRep::jet(const Vec& x, int order) const {
    if (map_) return map_->jet(x, order);
    JetPoly j = jet_truncate(interpolate_jet(phi_, x), order);
    return jet_add(JetPoly::identity(dim(), order, x), j);
}

Vec DiffeoRep::displacement_eval(const Vec& x) const {
    Vec v = eval(x);
    for (int i = 0; i < dim(); ++i) v[i] -= x[i];
    return v;
}

JetPoly DiffeoRep::displacement_jet(const Vec& x, int order) const {
    return displacement_from_full(jet(x, order), x);
}

MembershipReport is_member(const DiffeoRep& rep, double margin) {
    MembershipReport out;
    out.det_min = std::numeric_limits<double>::infinity();
    const auto& phi = rep.displacement();
    for (std::size_t n = 0; n < phi.n_nodes(); ++n) {
        double det = det_at_node(phi, n);
        if (det < out.det_min) {
            out.det_min = det;
            out.argmin = phi.grid().node(n);
        }
    }
    out.member = out.det_min >= margin && out.det_min > 0.0;
    return out;
}

double sup_jacobian_norm(const SampledFunction& phi) {
    const int d = phi.dim();
    double sup = 0.0;
    for (std::size_t n = 0; n < phi.n_nodes(); ++n) {
        auto jac = phi.jet(n).jacobian();
        for (int r = 0; r < d; ++r) {
            double row = 0.0;
            for (int c = 0; c < d; ++c) row += std::abs(jac[r * d + c]);
            sup = std::max(sup, row);
        }
    }
    return sup;
}

DiffeoRep compose(const DiffeoRep& first, const DiffeoRep& second, ComposeOptions opts) {
    if (first.dim() != second.dim()) throw std::invalid_argument("compose: dimension mismatch");
    const auto& grid = first.displacement().grid();
    const int d = first.dim();
    const int order = std::min(first.order(), second.order());

    if (first.map() && second.map())
        return DiffeoRep::from_map(composed_map(first.map(), second.map()), grid.spec(), order);

    const bool second_closed = static_cast<bool>(second.map());
    const double limit = second.grid_spec().extent + opts.range_margin;

    std::vector<JetPoly> jets;
    jets.reserve(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n) {
        Vec x = grid.node(n);
        JetPoly jf = first.jet(x, order);
        Vec mid = jf.value();
        if (!second_closed) {
            for (int i = 0; i < d; ++i)
                if (std::abs(mid[i]) > limit)
                    throw std::runtime_error(
                        "compose: range escapes the sampled grid beyond the tail margin");
        }
        JetPoly js = second.jet(mid, order);
        jets.push_back(displacement_from_full(jet_compose(js, jf), x));
    }
    SampledFunction phi(first.displacement().grid_ptr(), d, order, std::move(jets));
    phi.mark_interpolated();
    return DiffeoRep::from_samples(std::move(phi));
}

DiffeoRep invert(const DiffeoRep& rep, NewtonOptions opts) {
    auto report = is_member(rep);
    if (!report.member)
        throw std::runtime_error("invert: det d(Id+phi) is not positive on the grid");

    const auto& grid = rep.displacement().grid();
    const int d = rep.dim();
    const int order = rep.order();

    if (rep.map())
        return DiffeoRep::from_map(inverted_map(rep.map(), opts), grid.spec(), order);

    SampledMap as_map(rep.displacement());
    std::vector<JetPoly> jets;
    jets.reserve(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n) {
        Vec x = grid.node(n);
        Vec y = newton_invert(as_map, x, opts);
        jets.push_back(displacement_from_full(jet_invert(rep.jet(y, order)), x));
    }
    SampledFunction phi(rep.displacement().grid_ptr(), d, order, std::move(jets));
    phi.mark_interpolated();
    return DiffeoRep::from_samples(std::move(phi));
}

} // namespace flowlab
