#include "flowlab/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace flowlab::kernels {

namespace detail {

double sum_scalar(const double* v, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += v[i];
    return acc;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double max_abs_scalar(const double* v, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

double min_value_scalar(const double* v, std::size_t n) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) m = std::min(m, v[i]);
    return m;
}

double weighted_abs_sum_scalar(const double* v, const double* w, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * std::abs(v[i]);
    return acc;
}

double weighted_sq_sum_scalar(const double* v, const double* w, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * v[i] * v[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

#if defined(FLOWLAB_HAVE_AVX2)
double sum_avx2(const double* v, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
double max_abs_avx2(const double* v, std::size_t n);
double min_value_avx2(const double* v, std::size_t n);
double weighted_abs_sum_avx2(const double* v, const double* w, std::size_t n);
double weighted_sq_sum_avx2(const double* v, const double* w, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
#endif

struct KernelTable {
    double (*sum)(const double*, std::size_t);
    double (*dot)(const double*, const double*, std::size_t);
    double (*max_abs)(const double*, std::size_t);
    double (*min_value)(const double*, std::size_t);
    double (*weighted_abs_sum)(const double*, const double*, std::size_t);
    double (*weighted_sq_sum)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
};

constexpr KernelTable scalar_table{
    sum_scalar,      dot_scalar,        max_abs_scalar, min_value_scalar,
    weighted_abs_sum_scalar, weighted_sq_sum_scalar, axpy_scalar,
};

#if defined(FLOWLAB_HAVE_AVX2)
constexpr KernelTable avx2_table{
    sum_avx2,        dot_avx2,          max_abs_avx2,   min_value_avx2,
    weighted_abs_sum_avx2, weighted_sq_sum_avx2, axpy_avx2,
};
#endif

bool avx2_supported() {
#if defined(FLOWLAB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend auto_backend() {
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

Backend& current() {
    static Backend b = auto_backend();
    return b;
}

const KernelTable& table() {
#if defined(FLOWLAB_HAVE_AVX2)
    return current() == Backend::avx2 ? avx2_table : scalar_table;
#else
    return scalar_table;
#endif
}

} // namespace detail

Backend active_backend() { return detail::current(); }

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return detail::avx2_supported();
    }
    return false;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

void force_backend(Backend b) {
    if (!backend_available(b))
        throw std::runtime_error(std::string("kernel backend unavailable: ") + backend_name(b));
    detail::current() = b;
}

void reset_backend() { detail::current() = detail::auto_backend(); }

double sum(std::span<const double> v) { return detail::table().sum(v.data(), v.size()); }

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    return detail::table().dot(a.data(), b.data(), a.size());
}

double max_abs(std::span<const double> v) { return detail::table().max_abs(v.data(), v.size()); }

double min_value(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("min_value: empty span");
    return detail::table().min_value(v.data(), v.size());
}

double weighted_abs_pow_sum(std::span<const double> v, std::span<const double> w, double p) {
    if (v.size() != w.size()) throw std::invalid_argument("weighted_abs_pow_sum: length mismatch");
    if (p == 1.0) return detail::table().weighted_abs_sum(v.data(), w.data(), v.size());
    if (p == 2.0) return detail::table().weighted_sq_sum(v.data(), w.data(), v.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += w[i] * std::pow(std::abs(v[i]), p);
    return acc;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
    detail::table().axpy(a, x.data(), y.data(), x.size());
}

} // namespace flowlab::kernels
