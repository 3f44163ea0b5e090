#include "flowlab/seminorms.hpp"

#include <cmath>
#include <stdexcept>

#include "flowlab/kernels.hpp"

namespace flowlab {

namespace {

void gather_derivative(const SampledFunction& f, int alpha_flat, double alpha_fact, int comp,
                       std::vector<double>& out) {
    out.resize(f.n_nodes());
    for (std::size_t n = 0; n < f.n_nodes(); ++n)
        out[n] = f.jet(n).coeff(alpha_flat, comp) * alpha_fact;
}

} // namespace

double lp_derivative_norm(const SampledFunction& f, const MultiIndex& alpha, double p) {
    if (alpha.order() > f.order())
        throw std::invalid_argument("derivative order exceeds stored jet order");
    const int alpha_flat = f.jet(0).layout().flat(alpha);
    const double alpha_fact = alpha.factorial();
    std::vector<double> scratch;
    double norm = 0.0;
    for (int c = 0; c < f.dim_out(); ++c) {
        gather_derivative(f, alpha_flat, alpha_fact, c, scratch);
        double v;
        if (std::isinf(p)) {
            v = kernels::max_abs(scratch);
        } else {
            v = std::pow(kernels::weighted_abs_pow_sum(scratch, f.grid().node_weights(), p),
                         1.0 / p);
        }
        norm = std::max(norm, v);
    }
    return norm;
}

double sobolev_norm(const SampledFunction& f, int k, double p) {
    if (k > f.order()) throw std::invalid_argument("sobolev_norm: k exceeds stored jet order");
    if (!(p >= 1.0)) throw std::invalid_argument("sobolev_norm: p must be >= 1");
    double norm = 0.0;
    for (int c = 0; c < f.dim_out(); ++c) {
        double comp_norm = 0.0;
        for (const MultiIndex& alpha : enumerate_multiindices(f.dim(), k)) {
            const int flat = f.jet(0).layout().flat(alpha);
            const double fact = alpha.factorial();
            std::vector<double> scratch;
            gather_derivative(f, flat, fact, c, scratch);
            if (std::isinf(p))
                comp_norm += kernels::max_abs(scratch);
            else
                comp_norm += std::pow(
                    kernels::weighted_abs_pow_sum(scratch, f.grid().node_weights(), p), 1.0 / p);
        }
        norm = std::max(norm, comp_norm);
    }
    return norm;
}

double schwartz_seminorm(const SampledFunction& f, int decay_power, const MultiIndex& alpha) {
    if (alpha.order() > f.order())
        throw std::invalid_argument("schwartz_seminorm: |alpha| exceeds stored jet order");
    const int flat = f.jet(0).layout().flat(alpha);
    const double fact = alpha.factorial();
    const auto& radii = f.grid().node_radii();
    double sup = 0.0;
    for (std::size_t n = 0; n < f.n_nodes(); ++n) {
        double w = std::pow(1.0 + radii[n], decay_power);
        for (int c = 0; c < f.dim_out(); ++c)
            sup = std::max(sup, w * std::abs(f.jet(n).coeff(flat, c)) * fact);
    }
    return sup;
}

double ultradiff_seminorm(const SampledFunction& f, const WeightSequence& M, double sigma,
                          double p, int k_max) {
    if (k_max > f.order())
        throw std::invalid_argument("ultradiff_seminorm: k_max exceeds stored jet order");
    if (M.max_index() < k_max)
        throw std::invalid_argument("ultradiff_seminorm: weight sequence too short");
    if (!(sigma > 0.0)) throw std::invalid_argument("ultradiff_seminorm: sigma > 0 required");
    double sup = 0.0;
    for (const MultiIndex& alpha : enumerate_multiindices(f.dim(), k_max)) {
        const int q = alpha.order();
        double denom = std::pow(sigma, q) * factorial(q) * M[q];
        sup = std::max(sup, lp_derivative_norm(f, alpha, p) / denom);
    }
    return sup;
}

double gelfand_shilov_seminorm(const SampledFunction& f, const WeightSequence& L,
                               const WeightSequence& M, double sigma, int p_max, int k_max) {
    if (k_max > f.order())
        throw std::invalid_argument("gelfand_shilov_seminorm: k_max exceeds stored jet order");
    if (L.max_index() < p_max || M.max_index() < k_max)
        throw std::invalid_argument("gelfand_shilov_seminorm: weight sequence too short");
    const auto& radii = f.grid().node_radii();
    double sup = 0.0;
    for (const MultiIndex& alpha : enumerate_multiindices(f.dim(), k_max)) {
        const int q = alpha.order();
        const int flat = f.jet(0).layout().flat(alpha);
        const double fact = alpha.factorial();
        for (int p = 0; p <= p_max; ++p) {
            double denom = std::pow(sigma, p + q) * factorial(p) * factorial(q) * L[p] * M[q];
            double inner = 0.0;
            for (std::size_t n = 0; n < f.n_nodes(); ++n) {
                double w = std::pow(1.0 + radii[n], p);
                for (int c = 0; c < f.dim_out(); ++c)
                    inner = std::max(inner, w * std::abs(f.jet(n).coeff(flat, c)) * fact);
            }
            sup = std::max(sup, inner / denom);
        }
    }
    return sup;
}

EmbeddingCheck sobolev_embedding_check(const SampledFunction& f, double p) {
    EmbeddingCheck out;
    out.k = static_cast<int>(std::floor(f.dim() / p)) + 1;
    if (out.k > f.order())
        throw std::invalid_argument("sobolev_embedding_check: jet order below floor(d/p)+1");
    out.sup_norm = lp_derivative_norm(f, MultiIndex::zero(f.dim()), p_infinity);
    out.sobolev = sobolev_norm(f, out.k, p);
    out.ratio = out.sobolev > 0.0 ? out.sup_norm / out.sobolev : 0.0;
    return out;
}

double support_radius(const SampledFunction& f, double tol) {
    double radius = 0.0;
    bool boundary_hot = false;
    for (std::size_t n = 0; n < f.n_nodes(); ++n) {
        double mag = 0.0;
        for (int c = 0; c < f.dim_out(); ++c) mag = std::max(mag, std::abs(f.value(n, c)));
        if (mag >= tol) {
            radius = std::max(radius, f.grid().node_radii()[n]);
            if (f.grid().on_boundary_layer(n)) boundary_hot = true;
        }
    }
    if (boundary_hot) return std::numeric_limits<double>::infinity();
    return radius;
}

double boundary_max_abs(const SampledFunction& f) {
    double sup = 0.0;
    for (std::size_t n = 0; n < f.n_nodes(); ++n) {
        if (!f.grid().on_boundary_layer(n)) continue;
        for (int c = 0; c < f.dim_out(); ++c) sup = std::max(sup, std::abs(f.value(n, c)));
    }
    return sup;
}

} // namespace flowlab
