#include "flowlab/forms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace flowlab {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

} // namespace

double UnivariateFactor::eval(double x) const {
    const double u = (x - center) / width;
    switch (kind) {
        case Kind::one: return 1.0;
        case Kind::poly: {
            double acc = 0.0, p = 1.0;
            for (double c : coef) { acc += c * p; p *= (x - center); }
            return acc;
        }
        case Kind::sin: return std::sin(freq * (x - center) + phase);
        case Kind::gauss: return std::exp(-u * u);
        case Kind::tanh: return std::tanh(rate * (x - center));
        case Kind::bump: {
            if (std::abs(u) >= 1.0) return 0.0;
            return std::exp(-1.0 / (1.0 - u * u));
        }
        case Kind::inv_quad: return 1.0 / (u * u + a2);
    }
    return 0.0;
}

Taylor1 UnivariateFactor::taylor(double x, int order) const {
    const Taylor1 t = t1_variable(x, order);
    const Taylor1 xc = t1_add(t, t1_constant(-center, order));
    switch (kind) {
        case Kind::one: return t1_constant(1.0, order);
        case Kind::poly: {
            Taylor1 acc = t1_constant(0.0, order);
            Taylor1 p = t1_constant(1.0, order);
            for (double c : coef) {
                acc = t1_add(acc, t1_scale(p, c));
                p = t1_mul(p, xc);
            }
            return acc;
        }
        case Kind::sin: {
            Taylor1 arg = t1_add(t1_scale(xc, freq), t1_constant(phase, order));
            Taylor1 s, c;
            t1_sin_cos(arg, s, c);
            return s;
        }
        case Kind::gauss: {
            Taylor1 u = t1_scale(xc, 1.0 / width);
            return t1_exp(t1_scale(t1_mul(u, u), -1.0));
        }
        case Kind::tanh: return t1_tanh(t1_scale(xc, rate));
        case Kind::bump: {
            const double uv = (x - center) / width;
            if (std::abs(uv) >= 1.0) return t1_constant(0.0, order);
            Taylor1 u = t1_scale(xc, 1.0 / width);
            Taylor1 denom = t1_sub(t1_constant(1.0, order), t1_mul(u, u));
            return t1_exp(t1_scale(t1_reciprocal(denom), -1.0));
        }
        case Kind::inv_quad: {
            Taylor1 u = t1_scale(xc, 1.0 / width);
            return t1_reciprocal(t1_add(t1_mul(u, u), t1_constant(a2, order)));
        }
    }
    return t1_constant(0.0, order);
}

std::complex<double> UnivariateFactor::eval_complex(std::complex<double> z) const {
    const std::complex<double> u = (z - center) / width;
    switch (kind) {
        case Kind::one: return 1.0;
        case Kind::poly: {
            std::complex<double> acc = 0.0, p = 1.0;
            for (double c : coef) { acc += c * p; p *= (z - center); }
            return acc;
        }
        case Kind::sin: return std::sin(freq * (z - center) + phase);
        case Kind::gauss: return std::exp(-u * u);
        case Kind::tanh: return std::tanh(rate * (z - center));
        case Kind::bump:
            throw std::domain_error("bump factor has no holomorphic continuation");
        case Kind::inv_quad: return 1.0 / (u * u + a2);
    }
    return 0.0;
}

double UnivariateFactor::holomorphic_halfwidth() const {
    switch (kind) {
        case Kind::one:
        case Kind::poly:
        case Kind::sin:
        case Kind::gauss: return inf;
        case Kind::tanh: return 0.5 * M_PI / std::abs(rate);
        case Kind::bump: return 0.0;
        case Kind::inv_quad: return std::abs(width) * std::sqrt(a2);
    }
    return 0.0;
}

double SeparableTerm::eval_axis(int axis, double x) const {
    double prod = 1.0;
    for (const auto& f : axis_factors[axis]) prod *= f.eval(x);
    return prod;
}

Taylor1 SeparableTerm::taylor_axis(int axis, double x, int order) const {
    Taylor1 acc = t1_constant(1.0, order);
    for (const auto& f : axis_factors[axis]) acc = t1_mul(acc, f.taylor(x, order));
    return acc;
}

ScalarForm::ScalarForm(int d, std::vector<SeparableTerm> terms)
    : d_(d), terms_(std::move(terms)) {
    if (d_ < 1) throw std::invalid_argument("scalar form: dimension >= 1 required");
    for (const auto& t : terms_)
        if (static_cast<int>(t.axis_factors.size()) != d_)
            throw std::invalid_argument("scalar form: axis count must equal dimension");
}

double ScalarForm::eval(const Vec& x) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        double prod = t.amplitude;
        for (int i = 0; i < d_ && prod != 0.0; ++i) prod *= t.eval_axis(i, x[i]);
        acc += prod;
    }
    return acc;
}

JetPoly ScalarForm::jet(const Vec& x, int order) const {
    JetPoly out(d_, 1, order, x);
    const JetLayout& layout = out.layout();
    for (const auto& t : terms_) {
        std::vector<Taylor1> axis;
        axis.reserve(d_);
        for (int i = 0; i < d_; ++i) axis.push_back(t.taylor_axis(i, x[i], order));
        for (int f = 0; f < layout.size(); ++f) {
            const MultiIndex& alpha = layout.index(f);
            double prod = t.amplitude;
            for (int i = 0; i < d_ && prod != 0.0; ++i) prod *= axis[i].c[alpha[i]];
            if (prod != 0.0) out.set_coeff(f, 0, out.coeff(f, 0) + prod);
        }
    }
    return out;
}

std::complex<double> ScalarForm::eval_complex(const std::vector<std::complex<double>>& z) const {
    std::complex<double> acc = 0.0;
    for (const auto& t : terms_) {
        std::complex<double> prod = t.amplitude;
        for (int i = 0; i < d_; ++i)
            for (const auto& f : t.axis_factors[i]) prod *= f.eval_complex(z[i]);
        acc += prod;
    }
    return acc;
}

double ScalarForm::holomorphic_halfwidth() const {
    double r = inf;
    for (const auto& t : terms_)
        for (const auto& axis : t.axis_factors)
            for (const auto& f : axis) r = std::min(r, f.holomorphic_halfwidth());
    return r;
}

ScalarForm ScalarForm::plus(const ScalarForm& other) const {
    if (d_ == 0) return other;
    if (other.dim() == 0) return *this;
    if (other.dim() != d_) throw std::invalid_argument("scalar form addition: dim mismatch");
    std::vector<SeparableTerm> terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return ScalarForm(d_, std::move(terms));
}

ScalarForm ScalarForm::scaled(double s) const {
    std::vector<SeparableTerm> terms = terms_;
    for (auto& t : terms) t.amplitude *= s;
    return ScalarForm(d_, std::move(terms));
}

VectorForm::VectorForm(std::vector<ScalarForm> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("vector form: needs >= 1 component");
    for (const auto& c : components_)
        if (c.dim() != components_[0].dim())
            throw std::invalid_argument("vector form: component dims differ");
}

Vec VectorForm::eval(const Vec& x) const {
    Vec out(dim_out());
    for (int i = 0; i < dim_out(); ++i) out[i] = components_[i].eval(x);
    return out;
}

JetPoly VectorForm::jet(const Vec& x, int order) const {
    JetPoly out(dim(), dim_out(), order, x);
    for (int i = 0; i < dim_out(); ++i) {
        JetPoly ji = components_[i].jet(x, order);
        for (int f = 0; f < out.n_coeffs(); ++f) out.set_coeff(f, i, ji.coeff(f, 0));
    }
    return out;
}

VectorForm VectorForm::scaled(double s) const {
    std::vector<ScalarForm> comps = components_;
    for (auto& c : comps) c = c.scaled(s);
    return VectorForm(std::move(comps));
}

VectorForm VectorForm::plus(const VectorForm& other) const {
    if (dim_out() != other.dim_out()) throw std::invalid_argument("vector form addition: dim mismatch");
    std::vector<ScalarForm> comps(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        comps[i] = components_[i].plus(other.components_[i]);
    return VectorForm(std::move(comps));
}

namespace {

std::vector<std::vector<UnivariateFactor>> empty_axes(int d) {
    return std::vector<std::vector<UnivariateFactor>>(d);
}

UnivariateFactor gauss_factor(double center, double width) {
    UnivariateFactor f;
    f.kind = UnivariateFactor::Kind::gauss;
    f.center = center;
    f.width = width;
    return f;
}

UnivariateFactor linear_factor(double center) {
    UnivariateFactor f;
    f.kind = UnivariateFactor::Kind::poly;
    f.center = center;
    f.coef = {0.0, 1.0};
    return f;
}

} // namespace

ScalarForm form_zero(int d) { return ScalarForm(d, {}); }

ScalarForm form_constant(int d, double c) {
    SeparableTerm t{c, empty_axes(d)};
    return ScalarForm(d, {t});
}

ScalarForm form_gaussian(int d, double amp, Vec center, double width) {
    SeparableTerm t{amp, empty_axes(d)};
    for (int i = 0; i < d; ++i) t.axis_factors[i].push_back(gauss_factor(center[i], width));
    return ScalarForm(d, {t});
}

ScalarForm form_sin_axis(int d, int axis, double amp, double freq, double center, double phase) {
    SeparableTerm t{amp, empty_axes(d)};
    UnivariateFactor f;
    f.kind = UnivariateFactor::Kind::sin;
    f.freq = freq;
    f.center = center;
    f.phase = phase;
    t.axis_factors[axis].push_back(f);
    return ScalarForm(d, {t});
}

ScalarForm form_tanh_axis(int d, int axis, double amp, double rate, double center) {
    SeparableTerm t{amp, empty_axes(d)};
    UnivariateFactor f;
    f.kind = UnivariateFactor::Kind::tanh;
    f.rate = rate;
    f.center = center;
    t.axis_factors[axis].push_back(f);
    return ScalarForm(d, {t});
}

ScalarForm form_bump(int d, double amp, Vec center, double width) {
    SeparableTerm t{amp, empty_axes(d)};
    for (int i = 0; i < d; ++i) {
        UnivariateFactor f;
        f.kind = UnivariateFactor::Kind::bump;
        f.center = center[i];
        f.width = width;
        t.axis_factors[i].push_back(f);
    }
    return ScalarForm(d, {t});
}

ScalarForm form_linear_axis(int d, int axis, double amp, double center) {
    SeparableTerm t{amp, empty_axes(d)};
    t.axis_factors[axis].push_back(linear_factor(center));
    return ScalarForm(d, {t});
}

ScalarForm form_xgauss_axis(int d, int axis, double amp, double width) {
    SeparableTerm t{amp, empty_axes(d)};
    for (int i = 0; i < d; ++i) t.axis_factors[i].push_back(gauss_factor(0.0, width));
    t.axis_factors[axis].push_back(linear_factor(0.0));
    return ScalarForm(d, {t});
}

ScalarForm form_inv_quad_axis(int d, int axis, double amp, double a2, double width,
                              double center) {
    SeparableTerm t{amp, empty_axes(d)};
    UnivariateFactor f;
    f.kind = UnivariateFactor::Kind::inv_quad;
    f.a2 = a2;
    f.width = width;
    f.center = center;
    t.axis_factors[axis].push_back(f);
    return ScalarForm(d, {t});
}

ScalarForm form_sin_gauss_axis(int d, int axis, double amp, double freq, double width) {
    SeparableTerm t{amp, empty_axes(d)};
    for (int i = 0; i < d; ++i) t.axis_factors[i].push_back(gauss_factor(0.0, width));
    UnivariateFactor s;
    s.kind = UnivariateFactor::Kind::sin;
    s.freq = freq;
    t.axis_factors[axis].push_back(s);
    return ScalarForm(d, {t});
}

VectorForm vector_form_zero(int d, int m) {
    std::vector<ScalarForm> comps(m, form_zero(d));
    return VectorForm(std::move(comps));
}

VectorForm form_linear_field(int d, const std::vector<double>& a_rowmajor) {
    const int m = static_cast<int>(a_rowmajor.size()) / d;
    std::vector<ScalarForm> comps;
    comps.reserve(m);
    for (int i = 0; i < m; ++i) {
        ScalarForm row = form_zero(d);
        for (int j = 0; j < d; ++j) {
            double a = a_rowmajor[i * d + j];
            if (a != 0.0) row = row.plus(form_linear_axis(d, j, a));
        }
        comps.push_back(row);
    }
    return VectorForm(std::move(comps));
}

} // namespace flowlab
