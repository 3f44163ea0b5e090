#include "flowlab/fdb.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "flowlab/jet.hpp"

namespace flowlab {

MultiIndex FdbPartition::alpha() const {
    MultiIndex a = blocks.front().k;
    for (std::size_t i = 1; i < blocks.size(); ++i) a = a.plus(blocks[i].k);
    return a;
}

namespace {

// compositions of total into m nonnegative parts, deterministic order
void enumerate_compositions(int total, int m, std::vector<int>& cur, int pos,
                            std::vector<MultiIndex>& out) {
    if (pos == m - 1) {
        cur[pos] = total;
        out.emplace_back(cur);
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur[pos] = v;
        enumerate_compositions(total - v, m, cur, pos + 1, out);
    }
}

std::vector<MultiIndex> compositions(int total, int m) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(m, 0);
    enumerate_compositions(total, m, cur, 0, out);
    return out;
}

struct DeltaUse {
    MultiIndex delta;
    int multiplicity;  // |k_i|
};

// Enumerate multisets of distinct nonzero deltas with multiplicities whose
// weighted sum is gamma, then expand each multiplicity into all k in N^m.
void enumerate_delta_uses(const std::vector<MultiIndex>& candidates, std::size_t idx,
                          const MultiIndex& remaining, std::vector<DeltaUse>& stack,
                          const std::function<void(const std::vector<DeltaUse>&)>& emit) {
    if (remaining.is_zero()) {
        if (!stack.empty()) emit(stack);
        return;
    }
    if (idx == candidates.size()) return;
    // option 1: skip this delta
    enumerate_delta_uses(candidates, idx + 1, remaining, stack, emit);
    // option 2: use it with multiplicity c >= 1
    const MultiIndex& delta = candidates[idx];
    MultiIndex rest = remaining;
    for (int c = 1; rest.dominates(delta); ++c) {
        rest = rest.minus(delta);
        stack.push_back({delta, c});
        enumerate_delta_uses(candidates, idx + 1, rest, stack, emit);
        stack.pop_back();
    }
}

std::vector<MultiIndex> delta_candidates(const MultiIndex& gamma) {
    std::vector<MultiIndex> candidates;
    for (const MultiIndex& delta : enumerate_multiindices(gamma.dim(), gamma.order()))
        if (!delta.is_zero() && gamma.dominates(delta)) candidates.push_back(delta);
    return candidates;
}

void expand_k_choices(const std::vector<DeltaUse>& uses, int m, std::size_t pos,
                      std::vector<FdbBlock>& blocks, std::vector<FdbPartition>& out) {
    if (pos == uses.size()) {
        out.push_back(FdbPartition{blocks});
        return;
    }
    for (const MultiIndex& k : compositions(uses[pos].multiplicity, m)) {
        blocks.push_back({uses[pos].delta, k});
        expand_k_choices(uses, m, pos + 1, blocks, out);
        blocks.pop_back();
    }
}

std::uint64_t compositions_count(int total, int m) {
    // C(total + m - 1, m - 1)
    std::uint64_t r = 1;
    for (int i = 1; i <= m - 1; ++i) r = r * (total + i) / i;
    return r;
}

} // namespace

std::vector<FdbPartition> enumerate_fdb_partitions(const MultiIndex& gamma, int m) {
    if (gamma.is_zero()) throw std::invalid_argument("faa di bruno needs nonzero target");
    if (m < 1) throw std::invalid_argument("faa di bruno: inner codomain dimension >= 1");
    std::vector<FdbPartition> out;
    std::vector<DeltaUse> stack;
    auto candidates = delta_candidates(gamma);
    enumerate_delta_uses(candidates, 0, gamma, stack,
                         [&](const std::vector<DeltaUse>& uses) {
                             std::vector<FdbBlock> blocks;
                             blocks.reserve(uses.size());
                             expand_k_choices(uses, m, 0, blocks, out);
                         });
    return out;
}

std::uint64_t count_fdb_partitions(const MultiIndex& gamma, int m) {
    if (gamma.is_zero()) throw std::invalid_argument("faa di bruno needs nonzero target");
    std::uint64_t count = 0;
    std::vector<DeltaUse> stack;
    auto candidates = delta_candidates(gamma);
    enumerate_delta_uses(candidates, 0, gamma, stack,
                         [&](const std::vector<DeltaUse>& uses) {
                             std::uint64_t prod = 1;
                             for (const DeltaUse& u : uses)
                                 prod *= compositions_count(u.multiplicity, m);
                             count += prod;
                         });
    return count;
}

namespace {

std::mutex table_mutex;
std::map<std::tuple<int, int, int>, std::shared_ptr<const FdbTable>> table_registry;

} // namespace

FdbTable::FdbTable(int d, int m, int order) {
    auto layout = JetLayout::get(d, order);
    auto alpha_layout = JetLayout::get(m, order);
    terms_.resize(layout->size());
    for (int gf = 1; gf < layout->size(); ++gf) {
        const MultiIndex& gamma = layout->index(gf);
        auto partitions = enumerate_fdb_partitions(gamma, m);
        auto& dst = terms_[gf];
        dst.reserve(partitions.size());
        for (const FdbPartition& part : partitions) {
            Term term;
            MultiIndex alpha = part.alpha();
            term.alpha_flat = alpha_layout->flat(alpha);
            term.alpha_order = alpha.order();
            double denom = 1.0;
            for (const FdbBlock& block : part.blocks) {
                denom *= block.k.factorial();
                for (int j = 0; j < m; ++j)
                    if (block.k[j] > 0)
                        term.pows.push_back({layout->flat(block.delta), j, block.k[j]});
                term.block_orders.emplace_back(block.delta.order(), block.k.order());
            }
            term.factor = alpha.factorial() / denom;
            dst.push_back(std::move(term));
        }
    }
}

std::shared_ptr<const FdbTable> FdbTable::get(int d, int m, int order) {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto key = std::make_tuple(d, m, order);
    auto it = table_registry.find(key);
    if (it != table_registry.end()) return it->second;
    auto table = std::shared_ptr<const FdbTable>(new FdbTable(d, m, order));
    table_registry.emplace(key, table);
    return table;
}

double fdb_majorant_sum(const WeightSequence& M, double A, const MultiIndex& gamma, int m) {
    if (gamma.is_zero()) throw std::invalid_argument("fdb_majorant_sum: nonzero gamma required");
    if (M.max_index() < gamma.order())
        throw std::invalid_argument("fdb_majorant_sum: weight sequence too short");
    auto table = FdbTable::get(gamma.dim(), m, gamma.order());
    auto layout = JetLayout::get(gamma.dim(), gamma.order());
    double sum = 0.0;
    for (const FdbTable::Term& term : table->terms(layout->flat(gamma))) {
        double t = term.factor * std::pow(A, term.alpha_order) * M[term.alpha_order];
        for (auto [delta_order, k_order] : term.block_orders)
            t *= std::pow(M[delta_order], k_order);
        sum += t;
    }
    if (!std::isfinite(sum)) {
        std::ostringstream os;
        os << "fdb_majorant_sum overflow at |gamma| = " << gamma.order();
        throw std::overflow_error(os.str());
    }
    return sum;
}

MajorantFit fit_majorant_constants(const WeightSequence& M, double A, int d, int m,
                                   int max_order) {
    auto layout = JetLayout::get(d, max_order);
    std::vector<double> sums(layout->size(), 0.0);
    double c = 0.0;
    for (int gf = 1; gf < layout->size(); ++gf) {
        const MultiIndex& gamma = layout->index(gf);
        sums[gf] = fdb_majorant_sum(M, A, gamma, m);
        c = std::max(c, std::pow(sums[gf] / M[gamma.order()], 1.0 / gamma.order()));
    }
    double b = 0.0;
    for (int gf = 1; gf < layout->size(); ++gf) {
        const MultiIndex& gamma = layout->index(gf);
        b = std::max(b, sums[gf] / (std::pow(c, gamma.order()) * M[gamma.order()]));
    }
    return {b, c};
}

namespace {

// partitions of n as multiplicity vectors (k_1..k_n), sum i*k_i = n
void enumerate_integer_partitions(int n, int part, std::vector<int>& counts,
                                  const std::function<void(const std::vector<int>&)>& emit) {
    if (n == 0) {
        emit(counts);
        return;
    }
    if (part > n) return;
    enumerate_integer_partitions(n, part + 1, counts, emit);
    int max_count = n / part;
    for (int c = 1; c <= max_count; ++c) {
        counts[part - 1] = c;
        enumerate_integer_partitions(n - part * c, part + 1, counts, emit);
    }
    counts[part - 1] = 0;
}

} // namespace

ChildressResult childress_check(const WeightSequence& M, int n) {
    if (n < 1) throw std::invalid_argument("childress_check: n >= 1 required");
    if (M.max_index() < n) throw std::invalid_argument("childress_check: weight sequence too short");
    ChildressResult result;
    std::vector<int> counts(n, 0);
    enumerate_integer_partitions(n, 1, counts, [&](const std::vector<int>& k) {
        if (!result.holds) return;
        int total = 0;
        double rhs = 1.0;
        for (int i = 1; i <= n; ++i) {
            total += k[i - 1];
            for (int c = 0; c < k[i - 1]; ++c) rhs *= M[i];
        }
        rhs *= M[total];
        double lhs = std::pow(M[1], total) * M[n];
        if (lhs < rhs * (1.0 - 1e-12)) {
            result.holds = false;
            result.violating_counts = k;
            result.lhs = lhs;
            result.rhs = rhs;
        }
    });
    return result;
}

} // namespace flowlab
