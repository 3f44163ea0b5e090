#pragma once

#include <memory>
#include <vector>

#include "flowlab/forms.hpp"
#include "flowlab/jet.hpp"

namespace flowlab {

// Scalar time factor a(t) of a separable field a(t) v(x).
class TimeFactor {
public:
    enum class Kind { constant, sinusoid, polynomial };

    static TimeFactor constant(double c);
    // amp * sin(omega t + phase) + offset
    static TimeFactor sinusoid(double amp, double omega, double phase = 0.0, double offset = 0.0);
    static TimeFactor polynomial(std::vector<double> coefs);

    double eval(double t) const;

    Kind kind = Kind::constant;
    double c0 = 1.0, amp = 0.0, omega = 0.0, phase = 0.0, offset = 0.0;
    std::vector<double> coefs;
};

// A time-dependent vector field u(t, x) on R^d, evaluable with exact spatial
// jets at any (t, x).  Time surgery (concatenation, reversal, scaling, sums)
// composes expression nodes; each node reports its interior time kinks so
// quadrature and Picard windows never straddle them.
class FieldExpr {
public:
    virtual ~FieldExpr() = default;
    virtual int dim() const = 0;
    virtual JetPoly jet(double t, const Vec& x, int order) const = 0;
    virtual Vec eval(double t, const Vec& x) const { return jet(t, x, 0).value(); }
    // interior breakpoints in (0, 1)
    virtual void collect_breakpoints(std::vector<double>& out) const { (void)out; }
};

using FieldPtr = std::shared_ptr<const FieldExpr>;

FieldPtr separable_field(TimeFactor a, VectorForm v);
FieldPtr autonomous_field(VectorForm v);
FieldPtr zero_field(int d);
FieldPtr scale_field(double c, FieldPtr u);
FieldPtr add_fields(FieldPtr u, FieldPtr v);

// w1(t) = u(2t) on [0,1/2], v(2t-1) on (1/2,1]; time quadrature refined at 1/2
FieldPtr concat_fields(FieldPtr u, FieldPtr v);
// the field whose time-1 flow inverts the flow of u: v(t,x) = -u(1-t, x)
FieldPtr reverse_field(FieldPtr u);

// sorted interior breakpoints of u in (0, 1)
std::vector<double> field_breakpoints(const FieldExpr& u);

} // namespace flowlab
