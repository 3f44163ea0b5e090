#include "flowlab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flowlab {

TimeFactor TimeFactor::constant(double c) {
    TimeFactor f;
    f.kind = Kind::constant;
    f.c0 = c;
    return f;
}

TimeFactor TimeFactor::sinusoid(double amp, double omega, double phase, double offset) {
    TimeFactor f;
    f.kind = Kind::sinusoid;
    f.amp = amp;
    f.omega = omega;
    f.phase = phase;
    f.offset = offset;
    return f;
}

TimeFactor TimeFactor::polynomial(std::vector<double> coefs) {
    TimeFactor f;
    f.kind = Kind::polynomial;
    f.coefs = std::move(coefs);
    return f;
}

double TimeFactor::eval(double t) const {
    switch (kind) {
        case Kind::constant: return c0;
        case Kind::sinusoid: return amp * std::sin(omega * t + phase) + offset;
        case Kind::polynomial: {
            double acc = 0.0;
            for (auto it = coefs.rbegin(); it != coefs.rend(); ++it) acc = acc * t + *it;
            return acc;
        }
    }
    return 0.0;
}

namespace {

class SeparableField final : public FieldExpr {
public:
    SeparableField(TimeFactor a, VectorForm v) : a_(std::move(a)), v_(std::move(v)) {
        if (v_.dim() != v_.dim_out())
            throw std::invalid_argument("vector field: codomain dimension must equal domain");
    }
    int dim() const override { return v_.dim(); }
    JetPoly jet(double t, const Vec& x, int order) const override {
        return jet_scale(v_.jet(x, order), a_.eval(t));
    }
    Vec eval(double t, const Vec& x) const override {
        Vec v = v_.eval(x);
        const double a = a_.eval(t);
        for (double& c : v) c *= a;
        return v;
    }

private:
    TimeFactor a_;
    VectorForm v_;
};

class ScaledField final : public FieldExpr {
public:
    ScaledField(double c, FieldPtr inner) : c_(c), inner_(std::move(inner)) {}
    int dim() const override { return inner_->dim(); }
    JetPoly jet(double t, const Vec& x, int order) const override {
        return jet_scale(inner_->jet(t, x, order), c_);
    }
    void collect_breakpoints(std::vector<double>& out) const override {
        inner_->collect_breakpoints(out);
    }

private:
    double c_;
    FieldPtr inner_;
};

class SumField final : public FieldExpr {
public:
    SumField(FieldPtr a, FieldPtr b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_->dim() != b_->dim()) throw std::invalid_argument("field sum: dimension mismatch");
    }
    int dim() const override { return a_->dim(); }
    JetPoly jet(double t, const Vec& x, int order) const override {
        return jet_add(a_->jet(t, x, order), b_->jet(t, x, order));
    }
    void collect_breakpoints(std::vector<double>& out) const override {
        a_->collect_breakpoints(out);
        b_->collect_breakpoints(out);
    }

private:
    FieldPtr a_, b_;
};

class ConcatField final : public FieldExpr {
public:
    ConcatField(FieldPtr u, FieldPtr v) : u_(std::move(u)), v_(std::move(v)) {
        if (u_->dim() != v_->dim())
            throw std::invalid_argument("field concatenation: dimension mismatch");
    }
    int dim() const override { return u_->dim(); }
    JetPoly jet(double t, const Vec& x, int order) const override {
        if (t <= 0.5) return jet_scale(u_->jet(2 * t, x, order), 2.0);
        return jet_scale(v_->jet(2 * t - 1, x, order), 2.0);
    }
    void collect_breakpoints(std::vector<double>& out) const override {
        out.push_back(0.5);
        std::vector<double> inner;
        u_->collect_breakpoints(inner);
        for (double s : inner) out.push_back(s / 2);
        inner.clear();
        v_->collect_breakpoints(inner);
        for (double s : inner) out.push_back((s + 1) / 2);
    }

private:
    FieldPtr u_, v_;
};

class ReverseField final : public FieldExpr {
public:
    explicit ReverseField(FieldPtr u) : u_(std::move(u)) {}
    int dim() const override { return u_->dim(); }
    JetPoly jet(double t, const Vec& x, int order) const override {
        return jet_scale(u_->jet(1 - t, x, order), -1.0);
    }
    void collect_breakpoints(std::vector<double>& out) const override {
        std::vector<double> inner;
        u_->collect_breakpoints(inner);
        for (double s : inner) out.push_back(1 - s);
    }

private:
    FieldPtr u_;
};

} // namespace

FieldPtr separable_field(TimeFactor a, VectorForm v) {
    return std::make_shared<SeparableField>(std::move(a), std::move(v));
}

FieldPtr autonomous_field(VectorForm v) {
    return separable_field(TimeFactor::constant(1.0), std::move(v));
}

FieldPtr zero_field(int d) { return autonomous_field(vector_form_zero(d, d)); }

FieldPtr scale_field(double c, FieldPtr u) {
    return std::make_shared<ScaledField>(c, std::move(u));
}

FieldPtr add_fields(FieldPtr u, FieldPtr v) {
    return std::make_shared<SumField>(std::move(u), std::move(v));
}

FieldPtr concat_fields(FieldPtr u, FieldPtr v) {
    return std::make_shared<ConcatField>(std::move(u), std::move(v));
}

FieldPtr reverse_field(FieldPtr u) { return std::make_shared<ReverseField>(std::move(u)); }

std::vector<double> field_breakpoints(const FieldExpr& u) {
    std::vector<double> bp;
    u.collect_breakpoints(bp);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             bp.end());
    std::erase_if(bp, [](double t) { return t <= 1e-12 || t >= 1 - 1e-12; });
    return bp;
}

} // namespace flowlab
