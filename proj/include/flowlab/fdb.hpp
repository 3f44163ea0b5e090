#pragma once

#include <memory>
#include <span>
#include <vector>

#include "flowlab/multiindex.hpp"
#include "flowlab/weight_sequence.hpp"

namespace flowlab {

// One block (delta_i, k_i) of a Faa di Bruno partition: delta_i in N^d \ {0}
// is the derivative multi-index of the inner map, k_i in N^m \ {0} counts how
// often each component of the inner map contributes.
struct FdbBlock {
    MultiIndex delta;
    MultiIndex k;
};

// A term of the Faa di Bruno sum for a target gamma: distinct nonzero deltas
// with gamma = sum |k_i| * delta_i.
struct FdbPartition {
    std::vector<FdbBlock> blocks;
    MultiIndex alpha() const;  // sum of the k_i, in N^m
};

// All partitions for gamma != 0 and inner codomain dimension m, in a fixed
// deterministic order.  Throws on gamma == 0.
std::vector<FdbPartition> enumerate_fdb_partitions(const MultiIndex& gamma, int m);

// Count the same set recursively without materializing it (test oracle lives
// in the test suite; this is the production-side counter used for sizing).
std::uint64_t count_fdb_partitions(const MultiIndex& gamma, int m);

// Precompiled partition tables for fast composition.  For each nonzero gamma
// (flat index in JetLayout(d, order)) the terms carry the multinomial factor
// alpha!/(k_1!...k_l!) and flat coefficient addresses.
class FdbTable {
public:
    struct Pow {
        int delta_flat;  // in JetLayout(d, order)
        int comp;        // component of the inner map
        int exp;         // k_{i, comp}
    };
    struct Term {
        double factor;
        int alpha_flat;  // in JetLayout(m, order)
        int alpha_order;
        std::vector<Pow> pows;
        std::vector<std::pair<int, int>> block_orders;  // (|delta_i|, |k_i|)
    };

    static std::shared_ptr<const FdbTable> get(int d, int m, int order);

    std::span<const Term> terms(int gamma_flat) const {
        return {terms_[gamma_flat].data(), terms_[gamma_flat].size()};
    }

private:
    FdbTable(int d, int m, int order);
    std::vector<std::vector<Term>> terms_;
};

// Majorant sum of the Faa di Bruno index set (the left-hand side of the
// composition estimate): sum over partitions of
//   alpha!/(k_1!...k_l!) * A^|alpha| * M_|alpha| * prod_i M_|delta_i|^|k_i|.
// Throws on overflow, reporting |gamma|.
double fdb_majorant_sum(const WeightSequence& M, double A, const MultiIndex& gamma, int m);

// Fit constants (B, C) with majorant_sum(gamma) <= B * C^|gamma| * M_|gamma|
// for all 1 <= |gamma| <= max_order in dimension d.
struct MajorantFit {
    double B;
    double C;
};
MajorantFit fit_majorant_constants(const WeightSequence& M, double A, int d, int m, int max_order);

// Exhaustive check of the log-convexity consequence
//   M_1^k * M_n >= M_k * M_1^{k_1} * ... * M_n^{k_n}
// over all partitions sum i*k_i = n with k = sum k_i.
struct ChildressResult {
    bool holds = true;
    std::vector<int> violating_counts;  // k_1..k_n of the first violation
    double lhs = 0.0, rhs = 0.0;
};
ChildressResult childress_check(const WeightSequence& M, int n);

} // namespace flowlab
