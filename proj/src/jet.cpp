#include "flowlab/jet.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "flowlab/fdb.hpp"

namespace flowlab {

namespace {

std::mutex layout_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const JetLayout>> layout_registry;

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

JetLayout::JetLayout(int d, int order) : d_(d), order_(order) {
    indices_ = enumerate_multiindices(d, order);
    for (int i = 0; i < static_cast<int>(indices_.size()); ++i)
        lookup_.emplace(indices_[i].entries(), i);
}

std::shared_ptr<const JetLayout> JetLayout::get(int d, int order) {
    std::lock_guard<std::mutex> lock(layout_mutex);
    auto key = std::make_pair(d, order);
    auto it = layout_registry.find(key);
    if (it != layout_registry.end()) return it->second;
    auto layout = std::shared_ptr<const JetLayout>(new JetLayout(d, order));
    layout_registry.emplace(key, layout);
    return layout;
}

int JetLayout::flat(const MultiIndex& alpha) const {
    int f = flat_or_neg(alpha);
    if (f < 0)
        throw std::out_of_range("multi-index " + alpha.to_string() + " outside jet layout");
    return f;
}

int JetLayout::flat_or_neg(const MultiIndex& alpha) const {
    auto it = lookup_.find(alpha.entries());
    return it == lookup_.end() ? -1 : it->second;
}

JetPoly::JetPoly(int dim_in, int dim_out, int order, Vec basepoint)
    : d_(dim_in), m_(dim_out), order_(order), basepoint_(std::move(basepoint)) {
    require(d_ >= 1 && m_ >= 1, "jet dimensions must be >= 1");
    require(order_ >= 0, "jet order must be >= 0");
    require(static_cast<int>(basepoint_.size()) == d_, "jet basepoint has wrong dimension");
    layout_ = JetLayout::get(d_, order_);
    coeffs_.assign(static_cast<std::size_t>(layout_->size()) * m_, 0.0);
}

JetPoly JetPoly::identity(int d, int order, Vec basepoint) {
    require(static_cast<int>(basepoint.size()) == d, "identity jet: basepoint dimension");
    JetPoly j(d, d, order, basepoint);
    for (int c = 0; c < d; ++c) j.set_coeff(0, c, j.basepoint_[c]);
    if (order >= 1)
        for (int c = 0; c < d; ++c) j.set_coeff(MultiIndex::unit(d, c), c, 1.0);
    return j;
}

JetPoly JetPoly::constant(int d, int order, Vec basepoint, Vec value) {
    JetPoly j(d, static_cast<int>(value.size()), order, std::move(basepoint));
    for (int c = 0; c < j.m_; ++c) j.set_coeff(0, c, value[c]);
    return j;
}

double JetPoly::coeff(const MultiIndex& alpha, int comp) const {
    return coeff(layout_->flat(alpha), comp);
}

void JetPoly::set_coeff(const MultiIndex& alpha, int comp, double v) {
    set_coeff(layout_->flat(alpha), comp, v);
}

Vec JetPoly::value() const {
    Vec v(m_);
    for (int c = 0; c < m_; ++c) v[c] = coeff(0, c);
    return v;
}

double JetPoly::derivative(const MultiIndex& alpha, int comp) const {
    return coeff(alpha, comp) * alpha.factorial();
}

std::vector<double> JetPoly::jacobian() const {
    require(order_ >= 1, "jacobian needs jet order >= 1");
    std::vector<double> jac(static_cast<std::size_t>(m_) * d_, 0.0);
    for (int a = 0; a < d_; ++a) {
        int flat = layout_->flat(MultiIndex::unit(d_, a));
        for (int c = 0; c < m_; ++c) jac[c * d_ + a] = coeff(flat, c);
    }
    return jac;
}

Vec JetPoly::evaluate(const Vec& x) const {
    require(static_cast<int>(x.size()) == d_, "evaluate: wrong input dimension");
    Vec dx(d_);
    for (int i = 0; i < d_; ++i) dx[i] = x[i] - basepoint_[i];
    Vec out(m_, 0.0);
    for (int f = 0; f < layout_->size(); ++f) {
        const MultiIndex& alpha = layout_->index(f);
        double mono = 1.0;
        for (int i = 0; i < d_; ++i)
            for (int e = 0; e < alpha[i]; ++e) mono *= dx[i];
        for (int c = 0; c < m_; ++c) out[c] += coeff(f, c) * mono;
    }
    return out;
}

JetPoly JetPoly::component(int comp) const {
    JetPoly j(d_, 1, order_, basepoint_);
    for (int f = 0; f < layout_->size(); ++f) j.set_coeff(f, 0, coeff(f, comp));
    return j;
}

namespace {

void check_compatible(const JetPoly& a, const JetPoly& b, const char* op) {
    if (a.dim_in() != b.dim_in() || a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": jet dimension/order mismatch");
    for (int i = 0; i < a.dim_in(); ++i)
        if (a.basepoint()[i] != b.basepoint()[i])
            throw std::invalid_argument(std::string(op) + ": jet basepoint mismatch");
}

} // namespace

JetPoly jet_add(const JetPoly& a, const JetPoly& b) {
    check_compatible(a, b, "jet_add");
    if (a.dim_out() != b.dim_out()) throw std::invalid_argument("jet_add: codomain mismatch");
    JetPoly out = a;
    for (std::size_t i = 0; i < out.raw().size(); ++i) out.raw()[i] += b.raw()[i];
    return out;
}

JetPoly jet_sub(const JetPoly& a, const JetPoly& b) {
    check_compatible(a, b, "jet_sub");
    if (a.dim_out() != b.dim_out()) throw std::invalid_argument("jet_sub: codomain mismatch");
    JetPoly out = a;
    for (std::size_t i = 0; i < out.raw().size(); ++i) out.raw()[i] -= b.raw()[i];
    return out;
}

JetPoly jet_scale(const JetPoly& a, double c) {
    JetPoly out = a;
    for (double& v : out.raw()) v *= c;
    return out;
}

JetPoly jet_mul(const JetPoly& a, const JetPoly& b) {
    check_compatible(a, b, "jet_mul");
    const bool a_scalar = a.dim_out() == 1;
    const bool b_scalar = b.dim_out() == 1;
    if (!(a_scalar || b_scalar) && a.dim_out() != b.dim_out())
        throw std::invalid_argument("jet_mul: codomain mismatch (need equal dims or a scalar factor)");
    const int m = std::max(a.dim_out(), b.dim_out());
    JetPoly out(a.dim_in(), m, a.order(), a.basepoint());
    const JetLayout& layout = a.layout();
    // normalized coefficients multiply like polynomial coefficients:
    // (fg)_gamma = sum_{beta <= gamma} f_beta g_{gamma - beta}
    for (int gf = 0; gf < layout.size(); ++gf) {
        const MultiIndex& gamma = layout.index(gf);
        for (int bf = 0; bf < layout.size(); ++bf) {
            const MultiIndex& beta = layout.index(bf);
            if (beta.order() > gamma.order()) break;
            if (!gamma.dominates(beta)) continue;
            int rf = layout.flat(gamma.minus(beta));
            for (int c = 0; c < m; ++c) {
                double av = a.coeff(bf, a_scalar ? 0 : c);
                double bv = b.coeff(rf, b_scalar ? 0 : c);
                out.set_coeff(gf, c, out.coeff(gf, c) + av * bv);
            }
        }
    }
    return out;
}

JetPoly jet_truncate(const JetPoly& a, int new_order) {
    if (new_order > a.order())
        throw std::invalid_argument("jet_truncate: requested order above stored order");
    if (new_order == a.order()) return a;
    JetPoly out(a.dim_in(), a.dim_out(), new_order, a.basepoint());
    for (int f = 0; f < out.n_coeffs(); ++f)
        for (int c = 0; c < a.dim_out(); ++c) out.set_coeff(f, c, a.coeff(f, c));
    return out;
}

JetPoly jet_compose(const JetPoly& f, const JetPoly& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("jet_compose: order mismatch");
    if (f.dim_in() != g.dim_out())
        throw std::invalid_argument("jet_compose: inner codomain must match outer domain");
    const Vec g0 = g.value();
    double scale = 1.0, diff = 0.0;
    for (int i = 0; i < f.dim_in(); ++i) {
        scale = std::max(scale, std::abs(f.basepoint()[i]));
        diff = std::max(diff, std::abs(f.basepoint()[i] - g0[i]));
    }
    if (diff > 1e-6 * scale) {
        std::ostringstream os;
        os << "jet_compose: basepoint mismatch (|f.basepoint - g(x0)| = " << diff << ")";
        throw std::invalid_argument(os.str());
    }

    const int d = g.dim_in(), m = g.dim_out(), n = f.dim_out(), K = f.order();
    JetPoly out(d, n, K, g.basepoint());
    for (int c = 0; c < n; ++c) out.set_coeff(0, c, f.coeff(0, c));

    auto table = FdbTable::get(d, m, K);
    const JetLayout& layout = out.layout();
    for (int gf = 1; gf < layout.size(); ++gf) {
        for (const FdbTable::Term& term : table->terms(gf)) {
            double inner = term.factor;
            for (const FdbTable::Pow& p : term.pows) {
                double base = g.coeff(p.delta_flat, p.comp);
                for (int e = 0; e < p.exp; ++e) inner *= base;
            }
            if (inner == 0.0) continue;
            for (int c = 0; c < n; ++c) {
                double fv = f.coeff(term.alpha_flat, c);
                if (fv == 0.0) continue;
                out.set_coeff(gf, c, out.coeff(gf, c) + inner * fv);
            }
        }
    }
    return out;
}

} // namespace flowlab
