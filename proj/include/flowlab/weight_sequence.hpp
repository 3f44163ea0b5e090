#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flowlab {

// A positive weight sequence M = (M_0, ..., M_N) with cached diagnostics.
// All asymptotic conditions are range-checked heuristics over the stored
// entries; reports always carry the inspected range.
class WeightSequence {
public:
    explicit WeightSequence(std::vector<double> values, std::string generator = "custom");

    // M_k = 1 for all k.
    static WeightSequence ones(int n_max);
    // Gevrey weights M_k = (k!)^s.
    static WeightSequence gevrey(double s, int n_max);

    int max_index() const { return static_cast<int>(values_.size()) - 1; }
    double operator[](int k) const;
    const std::vector<double>& values() const { return values_; }
    const std::string& generator() const { return generator_; }

    struct LogConvexity {
        bool holds = true;
        int first_violation = -1;  // index k with M_k^2 > M_{k-1} M_{k+1}
    };
    LogConvexity is_log_convex() const;

    // Smallest C with M_{k+j} <= C^{k+j} M_k M_j over the stored range,
    // computed as max over pairs of (M_{k+j} / (M_k M_j))^{1/(k+j)}.
    double moderate_growth_constant() const;

    struct DerivationClosed {
        bool holds = true;     // finite fit on the stored range
        double constant = 1.0; // minimal C with M_{k+1} <= C^k M_k, fitted over k >= 1
    };
    DerivationClosed is_derivation_closed() const;

    enum class Trend { diverging, converging, inconclusive };
    struct QuasianalyticityDiagnostic {
        double partial_sum = 0.0;  // sum_{k=1}^n 1/(k! M_k)^{1/k}
        Trend trend = Trend::inconclusive;
        double tail_exponent = 0.0;  // fitted p with term_k ~ k^{-p}
        int range = 0;
    };
    QuasianalyticityDiagnostic quasianalyticity_diagnostic(int n) const;

    // Conditions (1)-(3): M_0 = 1, nondecreasing, log-convex (moderate growth
    // is always finite on a finite range and reported separately).
    bool is_regular() const;

    // Condition (4) heuristic: M_k^{1/k} and M_{k+1}/M_k strictly increasing
    // beyond the threshold index on the stored range.
    bool strict_regularity_check(int threshold_index = 2) const;

private:
    std::vector<double> values_;
    std::string generator_;
};

const char* trend_name(WeightSequence::Trend t);

} // namespace flowlab
