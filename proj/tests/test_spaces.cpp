#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "flowlab/seminorms.hpp"
#include "oracles.hpp"

using namespace flowlab;

namespace {

GridSpec integral_grid(int d = 1, int n = 64) {
    return GridSpec{d, 8.0, n, QuadratureRule::gauss_legendre};
}

// odd uniform grid containing x = 0, for sup-style estimates
GridSpec sup_grid(int d = 1, int n = 513, double extent = 8.0) {
    return GridSpec{d, extent, n, QuadratureRule::simpson};
}

SampledFunction gaussian1d(const GridSpec& g, int order = 6, double width = 1.0) {
    return SampledFunction::sample(VectorForm({form_gaussian(1, 1.0, {0.0}, width)}), g, order);
}

} // namespace

TEST_CASE("sobolev norm oracle values") {
    auto zero = SampledFunction::zero(integral_grid(), 1, 4);
    CHECK(sobolev_norm(zero, 2, 2.0) == 0.0);

    // ||e^{-x^2}||_{L^2} = (pi/2)^{1/4}
    auto f = gaussian1d(integral_grid());
    CHECK(sobolev_norm(f, 0, 2.0) == doctest::Approx(std::pow(M_PI / 2, 0.25)).epsilon(1e-9));

    // k=1, p=inf: 1 + max|f'| = 1 + sqrt(2/e)
    auto fs = gaussian1d(sup_grid());
    CHECK(sobolev_norm(fs, 1, p_infinity) ==
          doctest::Approx(1.0 + std::sqrt(2.0 / M_E)).epsilon(2e-4));

    CHECK_THROWS(sobolev_norm(f, 7, 2.0));  // k above jet order
}

TEST_CASE("schwartz seminorm matches a 1-d optimization oracle") {
    auto f = gaussian1d(sup_grid());
    CHECK(schwartz_seminorm(f, 0, MultiIndex({0})) == doctest::Approx(1.0).epsilon(1e-6));

    double expected = oracle::max_scan_1d([](double x) { return (1 + std::abs(x)) * std::exp(-x * x); },
                                          -8.0, 8.0);
    CHECK(schwartz_seminorm(f, 1, MultiIndex({0})) == doctest::Approx(expected).epsilon(1e-4));

    auto zero = SampledFunction::zero(sup_grid(), 1, 4);
    CHECK(schwartz_seminorm(zero, 3, MultiIndex({1})) == 0.0);
}

TEST_CASE("ultradifferentiable seminorm") {
    auto ones = WeightSequence::ones(12);
    auto f = gaussian1d(sup_grid());

    // candidates at K_max = 2: {1, sqrt(2/e), |f''|_inf / 2} = {1, 0.858, 1}
    CHECK(ultradiff_seminorm(f, ones, 1.0, p_infinity, 2) == doctest::Approx(1.0).epsilon(1e-4));

    // sigma -> infinity leaves only alpha = 0
    double l2 = lp_derivative_norm(f, MultiIndex({0}), 2.0);
    CHECK(ultradiff_seminorm(f, ones, 1e9, 2.0, 6) == doctest::Approx(l2).epsilon(1e-9));

    auto zero = SampledFunction::zero(sup_grid(), 1, 4);
    CHECK(ultradiff_seminorm(zero, ones, 1.0, 2.0, 4) == 0.0);
}

TEST_CASE("gelfand-shilov seminorm") {
    auto ones = WeightSequence::ones(16);
    auto zero = SampledFunction::zero(sup_grid(), 1, 4);
    CHECK(gelfand_shilov_seminorm(zero, ones, ones, 1.0, 4, 4) == 0.0);

    // constant 1 on [-4,4]: for sigma >= 1 + X the p-terms decrease, sup sits
    // at p = 0, alpha = 0
    GridSpec g{1, 4.0, 257, QuadratureRule::simpson};
    auto one = SampledFunction::sample(VectorForm({form_constant(1, 1.0)}), g, 4);
    CHECK(gelfand_shilov_seminorm(one, ones, ones, 6.0, 8, 4) == doctest::Approx(1.0));

    // sigma-monotonicity
    auto f = gaussian1d(sup_grid(1, 257));
    double v1 = gelfand_shilov_seminorm(f, ones, ones, 1.0, 6, 4);
    double v2 = gelfand_shilov_seminorm(f, ones, ones, 2.0, 6, 4);
    CHECK(v2 <= v1 + 1e-15);
    CHECK(std::isfinite(v1));
}

TEST_CASE("sigma and K_max monotonicity across the corpus") {
    auto ones = WeightSequence::ones(12);
    std::vector<SampledFunction> corpus;
    corpus.push_back(gaussian1d(sup_grid(1, 257), 6, 1.0));
    corpus.push_back(gaussian1d(sup_grid(1, 257), 6, 1.7));
    corpus.push_back(SampledFunction::sample(VectorForm({form_sin_gauss_axis(1, 0, 0.8)}),
                                             sup_grid(1, 257), 6));
    corpus.push_back(SampledFunction::sample(VectorForm({form_bump(1, 1.0, {0.0}, 2.0)}),
                                             sup_grid(1, 257), 6));
    for (const auto& f : corpus) {
        for (double p : {2.0, p_infinity}) {
            double prev = std::numeric_limits<double>::infinity();
            for (double sigma : {0.5, 1.0, 2.0, 4.0}) {
                double v = ultradiff_seminorm(f, ones, sigma, p, 5);
                CHECK(v <= prev * (1 + 1e-12));
                prev = v;
            }
            double last = 0.0;
            for (int kmax = 0; kmax <= 5; ++kmax) {
                double v = ultradiff_seminorm(f, ones, 1.0, p, kmax);
                CHECK(v >= last - 1e-15);
                last = v;
            }
        }
        // inclusion chain at working truncation: schwartz finite => sobolev
        // finite => B-type finite
        CHECK(std::isfinite(schwartz_seminorm(f, 3, MultiIndex({1}))));
        CHECK(std::isfinite(sobolev_norm(f, 3, 2.0)));
        CHECK(std::isfinite(ultradiff_seminorm(f, ones, 1.0, p_infinity, 5)));
    }
}

TEST_CASE("sobolev embedding check") {
    auto zero = SampledFunction::zero(integral_grid(), 1, 4);
    auto z = sobolev_embedding_check(zero, 2.0);
    CHECK(z.k == 1);  // floor(1/2) + 1
    CHECK(z.ratio == 0.0);

    // 20 gaussians of varied widths in d=1, p=2: a uniform constant exists
    double max_ratio = 0.0;
    for (int i = 0; i < 20; ++i) {
        double w = 0.4 + 0.15 * i;
        auto f = gaussian1d(integral_grid(), 4, w);
        auto chk = sobolev_embedding_check(f, 2.0);
        CHECK(chk.k == 1);
        max_ratio = std::max(max_ratio, chk.ratio);
    }
    CHECK(max_ratio <= 1.0);
    CHECK(max_ratio > 0.0);
}

TEST_CASE("support radius") {
    auto zero = SampledFunction::zero(sup_grid(), 1, 2);
    CHECK(support_radius(zero) == 0.0);

    // bump supported on [-1,1]: the 1e-12 level set of the closed form sits at
    // u with exp(-1/(1-u^2)) = 1e-12, i.e. u = sqrt(1 - 1/ln(1e12))
    GridSpec g{1, 2.0, 1025, QuadratureRule::trapezoid};
    auto bump = SampledFunction::sample(VectorForm({form_bump(1, 1.0, {0.0}, 1.0)}), g, 2);
    double expected = std::sqrt(1.0 - 1.0 / std::log(1e12));
    double spacing = 2.0 * 2.0 / 1024;
    CHECK(std::abs(support_radius(bump, 1e-12) - expected) <= 2 * spacing);

    // gaussian on an X=6 grid: radius ~ sqrt(ln 1e12) = 5.2565
    GridSpec g6{1, 6.0, 1025, QuadratureRule::trapezoid};
    auto gauss = SampledFunction::sample(VectorForm({form_gaussian(1, 1.0, {0.0}, 1.0)}), g6, 2);
    CHECK(support_radius(gauss, 1e-12) ==
          doctest::Approx(std::sqrt(std::log(1e12))).epsilon(5e-3));

    // same gaussian on an X=4 grid exceeds tol at the boundary
    GridSpec g4{1, 4.0, 513, QuadratureRule::trapezoid};
    auto tight = SampledFunction::sample(VectorForm({form_gaussian(1, 1.0, {0.0}, 1.0)}), g4, 2);
    CHECK(std::isinf(support_radius(tight, 1e-12)));
}

TEST_CASE("quadrature refinement is converged on the smooth corpus") {
    for (auto rule_n : {std::pair{QuadratureRule::gauss_legendre, 64},
                        std::pair{QuadratureRule::simpson, 513}}) {
        GridSpec coarse{1, 8.0, rule_n.second, rule_n.first};
        GridSpec fine{1, 8.0, rule_n.second * 2 + (rule_n.first == QuadratureRule::simpson ? 1 : 0),
                      rule_n.first};
        auto fc = gaussian1d(coarse, 3);
        auto ff = gaussian1d(fine, 3);
        for (int k = 0; k <= 2; ++k)
            CHECK(std::abs(sobolev_norm(fc, k, 2.0) - sobolev_norm(ff, k, 2.0)) <= 1e-6);
    }
}

TEST_CASE("vector-valued norms take the component max") {
    GridSpec g = integral_grid();
    VectorForm v({form_gaussian(1, 1.0, {0.0}, 1.0), form_gaussian(1, 3.0, {0.0}, 1.0)});
    auto f = SampledFunction::sample(v, g, 3);
    auto f1 = SampledFunction::sample(VectorForm({v.component(1)}), g, 3);
    CHECK(sobolev_norm(f, 2, 2.0) == doctest::Approx(sobolev_norm(f1, 2, 2.0)));
}

TEST_CASE("off-grid interpolation of values and jets") {
    GridSpec g{1, 4.0, 129, QuadratureRule::trapezoid};
    auto f = gaussian1d(g, 3);
    for (double x : {0.123, -1.77, 3.05}) {
        double exact = std::exp(-x * x);
        CHECK(interpolate_value(f, {x})[0] == doctest::Approx(exact).epsilon(1e-6));
        JetPoly j = interpolate_jet(f, {x});
        CHECK(j.derivative(MultiIndex({1}), 0) ==
              doctest::Approx(-2 * x * exact).epsilon(1e-5));
    }
}
