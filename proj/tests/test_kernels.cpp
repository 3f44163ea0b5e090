#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "flowlab/kernels.hpp"

using namespace flowlab;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -5.0,
                                  double hi = 5.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

// sizes chosen to hit the SIMD main loop, the remainder tail, and both empty
const std::size_t sizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 31, 64, 257, 1000, 1003};

} // namespace

TEST_CASE("scalar backend is always available") {
    CHECK(kernels::backend_available(kernels::Backend::scalar));
    CHECK(kernels::backend_name(kernels::Backend::scalar) == std::string("scalar"));
}

TEST_CASE("backend equivalence on random arrays") {
    if (!kernels::backend_available(kernels::Backend::avx2)) {
        MESSAGE("avx2 unavailable on this host, equivalence trivially skipped");
        return;
    }
    std::mt19937_64 rng(20240611);
    for (std::size_t n : sizes) {
        auto v = random_vector(rng, n);
        auto w = random_vector(rng, n, 0.0, 2.0);

        kernels::force_backend(kernels::Backend::scalar);
        double s_sum = kernels::sum(v);
        double s_dot = n ? kernels::dot(v, w) : 0.0;
        double s_max = kernels::max_abs(v);
        double s_min = n ? kernels::min_value(v) : 0.0;
        double s_w1 = kernels::weighted_abs_pow_sum(v, w, 1.0);
        double s_w2 = kernels::weighted_abs_pow_sum(v, w, 2.0);
        double s_w3 = kernels::weighted_abs_pow_sum(v, w, 3.5);
        std::vector<double> y_s = w;
        kernels::axpy(0.37, v, y_s);

        kernels::force_backend(kernels::Backend::avx2);
        double tol = 1e-12 * (1.0 + n);
        CHECK(kernels::sum(v) == doctest::Approx(s_sum).epsilon(tol));
        if (n) CHECK(kernels::dot(v, w) == doctest::Approx(s_dot).epsilon(tol));
        CHECK(kernels::max_abs(v) == s_max);
        if (n) CHECK(kernels::min_value(v) == s_min);
        CHECK(kernels::weighted_abs_pow_sum(v, w, 1.0) == doctest::Approx(s_w1).epsilon(tol));
        CHECK(kernels::weighted_abs_pow_sum(v, w, 2.0) == doctest::Approx(s_w2).epsilon(tol));
        CHECK(kernels::weighted_abs_pow_sum(v, w, 3.5) == doctest::Approx(s_w3).epsilon(tol));
        std::vector<double> y_v = w;
        kernels::axpy(0.37, v, y_v);
        for (std::size_t i = 0; i < n; ++i) CHECK(y_v[i] == doctest::Approx(y_s[i]).epsilon(1e-14));
    }
    kernels::reset_backend();
}

TEST_CASE("kernels match plain references") {
    std::mt19937_64 rng(7);
    auto v = random_vector(rng, 129);
    auto w = random_vector(rng, 129, 0.0, 1.0);
    double ref_sum = 0.0, ref_dot = 0.0, ref_w2 = 0.0, ref_max = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ref_sum += v[i];
        ref_dot += v[i] * w[i];
        ref_w2 += w[i] * v[i] * v[i];
        ref_max = std::max(ref_max, std::abs(v[i]));
    }
    CHECK(kernels::sum(v) == doctest::Approx(ref_sum).epsilon(1e-12));
    CHECK(kernels::dot(v, w) == doctest::Approx(ref_dot).epsilon(1e-12));
    CHECK(kernels::weighted_abs_pow_sum(v, w, 2.0) == doctest::Approx(ref_w2).epsilon(1e-12));
    CHECK(kernels::max_abs(v) == ref_max);
}

TEST_CASE("length mismatches are rejected") {
    std::vector<double> a(4, 1.0), b(5, 1.0);
    CHECK_THROWS(kernels::dot(a, b));
    CHECK_THROWS(kernels::weighted_abs_pow_sum(a, b, 2.0));
}
