#pragma once

#include <vector>

namespace flowlab {

// Univariate truncated Taylor arithmetic on normalized coefficients
// c_k = f^(k)(x0) / k!.  All operations truncate at the common length.
struct Taylor1 {
    std::vector<double> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    double value() const { return c[0]; }
};

Taylor1 t1_constant(double v, int order);
Taylor1 t1_variable(double x0, int order);  // series of x at x0

Taylor1 t1_add(const Taylor1& a, const Taylor1& b);
Taylor1 t1_sub(const Taylor1& a, const Taylor1& b);
Taylor1 t1_scale(const Taylor1& a, double s);
Taylor1 t1_mul(const Taylor1& a, const Taylor1& b);
Taylor1 t1_reciprocal(const Taylor1& a);  // requires a.value() != 0

Taylor1 t1_exp(const Taylor1& a);
void t1_sin_cos(const Taylor1& a, Taylor1& s, Taylor1& c);
Taylor1 t1_tanh(const Taylor1& a);
Taylor1 t1_pow_int(const Taylor1& a, int e);

} // namespace flowlab
