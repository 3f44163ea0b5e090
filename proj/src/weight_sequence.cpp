#include "flowlab/weight_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flowlab {

WeightSequence::WeightSequence(std::vector<double> values, std::string generator)
    : values_(std::move(values)), generator_(std::move(generator)) {
    if (values_.size() < 3) throw std::invalid_argument("weight sequence needs >= 3 entries");
    for (double v : values_)
        if (!(v > 0.0)) throw std::invalid_argument("weight sequence entries must be positive");
}

WeightSequence WeightSequence::ones(int n_max) {
    return WeightSequence(std::vector<double>(n_max + 1, 1.0), "constant-1");
}

WeightSequence WeightSequence::gevrey(double s, int n_max) {
    std::vector<double> v(n_max + 1);
    double log_fact = 0.0;
    for (int k = 0; k <= n_max; ++k) {
        if (k > 0) log_fact += std::log(static_cast<double>(k));
        v[k] = std::exp(s * log_fact);
    }
    return WeightSequence(std::move(v), "gevrey(" + std::to_string(s) + ")");
}

double WeightSequence::operator[](int k) const {
    if (k < 0 || k > max_index())
        throw std::out_of_range("weight sequence index " + std::to_string(k) +
                                " outside stored range [0," + std::to_string(max_index()) + "]");
    return values_[k];
}

WeightSequence::LogConvexity WeightSequence::is_log_convex() const {
    for (int k = 1; k + 1 <= max_index(); ++k) {
        if (values_[k] * values_[k] > values_[k - 1] * values_[k + 1] * (1.0 + 1e-12))
            return {false, k};
    }
    return {true, -1};
}

double WeightSequence::moderate_growth_constant() const {
    double c = 0.0;
    for (int k = 0; k <= max_index(); ++k) {
        for (int j = 0; k + j <= max_index(); ++j) {
            if (k + j == 0) continue;
            double ratio = values_[k + j] / (values_[k] * values_[j]);
            c = std::max(c, std::pow(ratio, 1.0 / (k + j)));
        }
    }
    return c;
}

WeightSequence::DerivationClosed WeightSequence::is_derivation_closed() const {
    // fit over k >= 1; at k = 0 the bound reads M_1 <= M_0 and carries no
    // growth information
    double c = 1.0;
    for (int k = 1; k + 1 <= max_index(); ++k)
        c = std::max(c, std::pow(values_[k + 1] / values_[k], 1.0 / k));
    return {std::isfinite(c), c};
}

WeightSequence::QuasianalyticityDiagnostic WeightSequence::quasianalyticity_diagnostic(int n) const {
    if (n < 2 || n > max_index())
        throw std::invalid_argument("quasianalyticity_diagnostic: range outside stored entries");
    QuasianalyticityDiagnostic diag;
    diag.range = n;
    std::vector<double> terms(n + 1, 0.0);
    double log_fact = 0.0;
    for (int k = 1; k <= n; ++k) {
        log_fact += std::log(static_cast<double>(k));
        terms[k] = std::exp(-(log_fact + std::log(values_[k])) / k);
        diag.partial_sum += terms[k];
    }
    // fitted decay exponent of term_k ~ k^{-p} from the tail
    int lo = std::max(2, n - 6);
    std::vector<double> slopes;
    for (int k = lo; k < n; ++k) {
        double num = std::log(terms[k + 1]) - std::log(terms[k]);
        double den = std::log(static_cast<double>(k + 1)) - std::log(static_cast<double>(k));
        slopes.push_back(-num / den);
    }
    std::sort(slopes.begin(), slopes.end());
    double p = slopes[slopes.size() / 2];
    diag.tail_exponent = p;
    double spread = slopes.back() - slopes.front();
    if (spread > 0.5)
        diag.trend = Trend::inconclusive;
    else if (p <= 1.05)
        diag.trend = Trend::diverging;
    else if (p >= 1.15)
        diag.trend = Trend::converging;
    else
        diag.trend = Trend::inconclusive;
    return diag;
}

bool WeightSequence::is_regular() const {
    if (std::abs(values_[0] - 1.0) > 1e-12) return false;
    for (int k = 0; k + 1 <= max_index(); ++k)
        if (values_[k + 1] < values_[k] * (1.0 - 1e-12)) return false;
    return is_log_convex().holds;
}

bool WeightSequence::strict_regularity_check(int threshold_index) const {
    int lo = std::max(1, threshold_index);
    if (lo + 2 > max_index()) return false;
    for (int k = lo; k + 1 <= max_index(); ++k) {
        double root_k = std::pow(values_[k], 1.0 / k);
        double root_k1 = std::pow(values_[k + 1], 1.0 / (k + 1));
        if (root_k1 <= root_k * (1.0 + 1e-12)) return false;
    }
    for (int k = lo; k + 2 <= max_index(); ++k) {
        double q_k = values_[k + 1] / values_[k];
        double q_k1 = values_[k + 2] / values_[k + 1];
        if (q_k1 <= q_k * (1.0 + 1e-12)) return false;
    }
    return true;
}

const char* trend_name(WeightSequence::Trend t) {
    switch (t) {
        case WeightSequence::Trend::diverging: return "diverging";
        case WeightSequence::Trend::converging: return "converging";
        case WeightSequence::Trend::inconclusive: return "inconclusive";
    }
    return "unknown";
}

} // namespace flowlab
