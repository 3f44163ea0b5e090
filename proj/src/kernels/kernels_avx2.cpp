// AVX2 kernel variants.  This translation unit is compiled with -mavx2 -mfma
// and only ever called after a runtime cpuid check (see kernels.cpp).

#include <cstddef>
#include <cmath>
#include <limits>

#include <immintrin.h>

namespace flowlab::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_max_sd(lo, shuf));
}

inline double hmin(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_min_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_min_sd(lo, shuf));
}

const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

} // namespace

double sum_avx2(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
    double r = hsum(acc);
    for (; i < n; ++i) r += v[i];
    return r;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double r = hsum(acc);
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

double max_abs_avx2(const double* v, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(_mm256_loadu_pd(v + i), abs_mask));
    double r = hmax(acc);
    for (; i < n; ++i) r = std::max(r, std::abs(v[i]));
    return r;
}

double min_value_avx2(const double* v, std::size_t n) {
    __m256d acc = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(v + i));
    double r = hmin(acc);
    for (; i < n; ++i) r = std::min(r, v[i]);
    return r;
}

double weighted_abs_sum_avx2(const double* v, const double* w, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d av = _mm256_and_pd(_mm256_loadu_pd(v + i), abs_mask);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), av, acc);
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += w[i] * std::abs(v[i]);
    return r;
}

double weighted_sq_sum_avx2(const double* v, const double* w, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v + i);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(x, x), _mm256_loadu_pd(w + i), acc);
    }
    double r = hsum(acc);
    for (; i < n; ++i) r += w[i] * v[i] * v[i];
    return r;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

} // namespace flowlab::kernels::detail
