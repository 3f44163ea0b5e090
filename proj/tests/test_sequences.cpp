#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "flowlab/weight_sequence.hpp"

using namespace flowlab;

TEST_CASE("log convexity") {
    CHECK(WeightSequence::ones(10).is_log_convex().holds);
    CHECK(WeightSequence::gevrey(1.0, 20).is_log_convex().holds);

    WeightSequence bad({1, 1, 4, 5});
    auto r = bad.is_log_convex();
    CHECK_FALSE(r.holds);
    CHECK(r.first_violation == 2);  // 16 > 1*5
}

TEST_CASE("moderate growth constant") {
    CHECK(WeightSequence::ones(20).moderate_growth_constant() == doctest::Approx(1.0));
    // (k+j)! <= 2^{k+j} k! j!
    CHECK(WeightSequence::gevrey(1.0, 20).moderate_growth_constant() <= 2.0 + 1e-12);
    double c2 = WeightSequence::gevrey(2.0, 20).moderate_growth_constant();
    CHECK(std::isfinite(c2));
    CHECK(c2 <= 4.0 + 1e-12);
}

TEST_CASE("derivation closed fit") {
    auto ones = WeightSequence::ones(20).is_derivation_closed();
    CHECK(ones.holds);
    CHECK(ones.constant == doctest::Approx(1.0));

    auto fact = WeightSequence::gevrey(1.0, 20).is_derivation_closed();
    CHECK(fact.holds);
    CHECK(fact.constant <= 2.0 + 1e-12);   // max_k (k+1)^{1/k} = 2 at k = 1
    CHECK(fact.constant >= 2.0 - 1e-12);

    // decreasing-tail custom sequence still yields a finite range report
    WeightSequence custom({1, 2, 3, 3.5, 3.6, 3.61});
    CHECK(custom.is_derivation_closed().holds);
}

TEST_CASE("quasianalyticity diagnostics") {
    auto ones = WeightSequence::ones(40).quasianalyticity_diagnostic(40);
    CHECK(ones.trend == WeightSequence::Trend::diverging);
    CHECK(ones.partial_sum > 0.0);
    // terms ~ e/k: fitted exponent close to 1 from below
    CHECK(ones.tail_exponent == doctest::Approx(1.0).epsilon(0.15));

    auto fact = WeightSequence::gevrey(1.0, 40).quasianalyticity_diagnostic(40);
    CHECK(fact.trend == WeightSequence::Trend::converging);
    CHECK(fact.tail_exponent == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("strict regularity heuristic") {
    CHECK_FALSE(WeightSequence::ones(20).strict_regularity_check());
    CHECK(WeightSequence::gevrey(1.0, 20).strict_regularity_check());
    CHECK(WeightSequence::gevrey(0.5, 20).strict_regularity_check());
}

TEST_CASE("constant-1 weights: regular, not strictly regular, quasianalytic trend") {
    auto ones = WeightSequence::ones(24);
    CHECK(ones.is_regular());
    CHECK_FALSE(ones.strict_regularity_check());
    CHECK(ones.quasianalyticity_diagnostic(24).trend == WeightSequence::Trend::diverging);
}

TEST_CASE("gevrey weights: regular, strictly regular, non-quasianalytic trend") {
    auto g = WeightSequence::gevrey(1.0, 24);
    CHECK(g.is_regular());
    CHECK(g.strict_regularity_check());
    CHECK(g.quasianalyticity_diagnostic(24).trend == WeightSequence::Trend::converging);
}

TEST_CASE("moderate growth constant is computed from ratios (regression)") {
    // doubling all entries while keeping M_0 = 1 renormalized changes the
    // report deterministically through the ratios M_{k+j}/(M_k M_j)
    WeightSequence base({1, 1, 2, 6, 24, 120});
    std::vector<double> doubled = base.values();
    for (std::size_t k = 1; k < doubled.size(); ++k) doubled[k] *= 2.0;
    WeightSequence scaled(doubled);

    auto reference = [](const WeightSequence& m) {
        double c = 0.0;
        for (int k = 0; k <= m.max_index(); ++k)
            for (int j = (k == 0 ? 1 : 0); k + j <= m.max_index(); ++j)
                c = std::max(c, std::pow(m[k + j] / (m[k] * m[j]), 1.0 / (k + j)));
        return c;
    };
    CHECK(base.moderate_growth_constant() == doctest::Approx(reference(base)).epsilon(1e-12));
    CHECK(scaled.moderate_growth_constant() == doctest::Approx(reference(scaled)).epsilon(1e-12));
    // lambda > 1 shrinks every k,j >= 1 ratio by 1/lambda and fixes the k=0 ones
    CHECK(scaled.moderate_growth_constant() < base.moderate_growth_constant());
}

TEST_CASE("validation") {
    CHECK_THROWS(WeightSequence({1.0, 2.0}));          // too short
    CHECK_THROWS(WeightSequence({1.0, -1.0, 2.0}));    // nonpositive
    CHECK_THROWS(WeightSequence::ones(10)[11]);        // out of range
    CHECK_THROWS(WeightSequence::ones(10).quasianalyticity_diagnostic(11));
}
