#include "flowlab/taylor1.hpp"

#include <cmath>
#include <stdexcept>

namespace flowlab {

namespace {

int common_order(const Taylor1& a, const Taylor1& b) {
    if (a.order() != b.order()) throw std::invalid_argument("taylor1: order mismatch");
    return a.order();
}

} // namespace

Taylor1 t1_constant(double v, int order) {
    Taylor1 t{std::vector<double>(order + 1, 0.0)};
    t.c[0] = v;
    return t;
}

Taylor1 t1_variable(double x0, int order) {
    Taylor1 t{std::vector<double>(order + 1, 0.0)};
    t.c[0] = x0;
    if (order >= 1) t.c[1] = 1.0;
    return t;
}

Taylor1 t1_add(const Taylor1& a, const Taylor1& b) {
    int n = common_order(a, b);
    Taylor1 out{std::vector<double>(n + 1)};
    for (int k = 0; k <= n; ++k) out.c[k] = a.c[k] + b.c[k];
    return out;
}

Taylor1 t1_sub(const Taylor1& a, const Taylor1& b) {
    int n = common_order(a, b);
    Taylor1 out{std::vector<double>(n + 1)};
    for (int k = 0; k <= n; ++k) out.c[k] = a.c[k] - b.c[k];
    return out;
}

Taylor1 t1_scale(const Taylor1& a, double s) {
    Taylor1 out = a;
    for (double& v : out.c) v *= s;
    return out;
}

Taylor1 t1_mul(const Taylor1& a, const Taylor1& b) {
    int n = common_order(a, b);
    Taylor1 out{std::vector<double>(n + 1, 0.0)};
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

Taylor1 t1_reciprocal(const Taylor1& a) {
    if (a.c[0] == 0.0) throw std::domain_error("taylor1 reciprocal of zero value");
    int n = a.order();
    Taylor1 out{std::vector<double>(n + 1, 0.0)};
    out.c[0] = 1.0 / a.c[0];
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += a.c[j] * out.c[k - j];
        out.c[k] = -acc / a.c[0];
    }
    return out;
}

Taylor1 t1_exp(const Taylor1& a) {
    int n = a.order();
    Taylor1 out{std::vector<double>(n + 1, 0.0)};
    out.c[0] = std::exp(a.c[0]);
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * a.c[j] * out.c[k - j];
        out.c[k] = acc / k;
    }
    return out;
}

void t1_sin_cos(const Taylor1& a, Taylor1& s, Taylor1& c) {
    int n = a.order();
    s.c.assign(n + 1, 0.0);
    c.c.assign(n + 1, 0.0);
    s.c[0] = std::sin(a.c[0]);
    c.c[0] = std::cos(a.c[0]);
    for (int k = 1; k <= n; ++k) {
        double as = 0.0, ac = 0.0;
        for (int j = 1; j <= k; ++j) {
            as += j * a.c[j] * c.c[k - j];
            ac += j * a.c[j] * s.c[k - j];
        }
        s.c[k] = as / k;
        c.c[k] = -ac / k;
    }
}

Taylor1 t1_tanh(const Taylor1& a) {
    // t' = (1 - t^2) a'
    int n = a.order();
    Taylor1 t{std::vector<double>(n + 1, 0.0)};
    std::vector<double> w(n + 1, 0.0);  // w = 1 - t^2
    t.c[0] = std::tanh(a.c[0]);
    w[0] = 1.0 - t.c[0] * t.c[0];
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * a.c[j] * w[k - j];
        t.c[k] = acc / k;
        // update w_k = -sum_{i=0..k} t_i t_{k-i}
        double sq = 0.0;
        for (int i = 0; i <= k; ++i) sq += t.c[i] * t.c[k - i];
        w[k] = -sq;
    }
    return t;
}

Taylor1 t1_pow_int(const Taylor1& a, int e) {
    if (e < 0) throw std::invalid_argument("t1_pow_int: negative exponent");
    Taylor1 out = t1_constant(1.0, a.order());
    for (int i = 0; i < e; ++i) out = t1_mul(out, a);
    return out;
}

} // namespace flowlab
