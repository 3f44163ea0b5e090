#include "flowlab/trouve.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "flowlab/chebyshev.hpp"

namespace flowlab {

namespace {

// u(t, x) = phi(gamma(t)^{-1}(x)) with gamma(t) = Id + t phi
class TrouveField final : public FieldExpr {
public:
    TrouveField(DiffeoRep target, NewtonOptions newton)
        : target_(std::move(target)), newton_(newton) {}

    int dim() const override { return target_.dim(); }

    JetPoly jet(double t, const Vec& x, int order) const override {
        const int d = dim();
        if (t == 0.0) return target_.displacement_jet(x, order);
        // invert gamma(t) = Id + t phi at x by Newton on the map tree
        Vec y = invert_gamma(t, x);
        if (order == 0) return JetPoly::constant(d, 0, x, target_.displacement_eval(y));
        JetPoly phi_jet = target_.displacement_jet(y, order);
        // jet of gamma(t) at y, then its inverse at x
        JetPoly gamma_jet = jet_add(JetPoly::identity(d, order, y), jet_scale(phi_jet, t));
        JetPoly gamma_inv = jet_invert(gamma_jet);
        return jet_compose(phi_jet, gamma_inv);
    }

private:
    Vec invert_gamma(double t, const Vec& x) const {
        const int d = dim();
        Vec y = x;
        for (int iter = 0; iter < newton_.max_iter; ++iter) {
            JetPoly phi_jet = target_.displacement_jet(y, 1);
            Vec r = phi_jet.value();
            double err = 0.0;
            for (int i = 0; i < d; ++i) {
                r[i] = y[i] + t * r[i] - x[i];
                err = std::max(err, std::abs(r[i]));
            }
            if (err <= newton_.tol) return y;
            auto jac = phi_jet.jacobian();
            for (int i = 0; i < d * d; ++i) jac[i] *= t;
            for (int i = 0; i < d; ++i) jac[i * d + i] += 1.0;
            solve_dense(jac, r, d);
            for (int i = 0; i < d; ++i) y[i] -= r[i];
        }
        throw std::runtime_error("trouve generator: newton solve for gamma(t)^{-1} diverged");
    }

    DiffeoRep target_;
    NewtonOptions newton_;
};

} // namespace

FieldPtr trouve_generator(const DiffeoRep& target, const GeneratorOptions& opts) {
    double bound = sup_jacobian_norm(target.displacement());
    if (bound >= opts.segment_bound) {
        std::ostringstream os;
        os << "segment leaves the group (sup ||d phi|| = " << bound << " >= "
           << opts.segment_bound << "): use polygon_generator";
        throw std::runtime_error(os.str());
    }
    return std::make_shared<TrouveField>(target, opts.newton);
}

FieldPtr polygon_generator(const std::vector<DiffeoRep>& vertices, const GeneratorOptions& opts) {
    if (vertices.size() < 2)
        throw std::invalid_argument("polygon_generator: need at least {Id, target}");
    FieldPtr chain;
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
        DiffeoRep relative = compose(invert(vertices[k], opts.newton), vertices[k + 1]);
        double bound = sup_jacobian_norm(relative.displacement());
        if (bound >= opts.segment_bound) {
            std::ostringstream os;
            os << "polygon segment " << k << " -> " << k + 1
               << " fails the admissibility check (sup ||d phi|| = " << bound << ")";
            throw std::runtime_error(os.str());
        }
        FieldPtr seg = std::make_shared<TrouveField>(relative, opts.newton);
        chain = chain ? concat_fields(chain, seg) : seg;
    }
    return chain;
}

std::vector<DiffeoRep> refine_polygon(const DiffeoRep& target, const GeneratorOptions& opts) {
    const GridSpec spec = target.grid_spec();
    const int order = target.order();
    if (!target.map())
        throw std::invalid_argument("refine_polygon: target needs a closed-form map tree");
    DiffeoMapPtr id = identity_map(target.dim());

    // vertices as blend parameters s in [0, 1] along the chart line
    std::vector<double> params{0.0, 1.0};
    auto rep_at = [&](double s) {
        if (s == 0.0) return DiffeoRep::from_map(id, spec, order);
        if (s == 1.0) return target;
        return DiffeoRep::from_map(chart_blend(id, target.map(), s), spec, order);
    };

    for (int depth = 0; depth <= opts.max_bisection_depth; ++depth) {
        bool all_ok = true;
        for (std::size_t k = 0; k + 1 < params.size(); ++k) {
            DiffeoRep a = rep_at(params[k]);
            DiffeoRep b = rep_at(params[k + 1]);
            DiffeoRep relative = compose(invert(a, opts.newton), b);
            if (sup_jacobian_norm(relative.displacement()) >= opts.segment_bound) {
                params.insert(params.begin() + k + 1, 0.5 * (params[k] + params[k + 1]));
                all_ok = false;
                break;
            }
        }
        if (all_ok) {
            std::vector<DiffeoRep> out;
            out.reserve(params.size());
            for (double s : params) out.push_back(rep_at(s));
            return out;
        }
    }
    throw std::runtime_error("refine_polygon: bisection depth exhausted");
}

} // namespace flowlab
