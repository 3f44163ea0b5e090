#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flowlab::oracle {

RationalPoly RationalPoly::constant(int d, const Rational& c) {
    RationalPoly p(d);
    if (c != 0) p.terms_.emplace(std::vector<int>(d, 0), c);
    return p;
}

RationalPoly RationalPoly::variable(int d, int axis) {
    RationalPoly p(d);
    std::vector<int> mono(d, 0);
    mono.at(axis) = 1;
    p.terms_.emplace(std::move(mono), Rational(1));
    return p;
}

void RationalPoly::add_term(const std::vector<int>& mono, const Rational& c) {
    if (static_cast<int>(mono.size()) != d_) throw std::invalid_argument("monomial dim mismatch");
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RationalPoly RationalPoly::add(const RationalPoly& other) const {
    RationalPoly out = *this;
    for (const auto& [mono, c] : other.terms_) out.add_term(mono, c);
    return out;
}

RationalPoly RationalPoly::mul(const RationalPoly& other) const {
    RationalPoly out(d_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            std::vector<int> mono(d_);
            for (int i = 0; i < d_; ++i) mono[i] = ma[i] + mb[i];
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

RationalPoly RationalPoly::pow(int e) const {
    RationalPoly out = constant(d_, 1);
    for (int i = 0; i < e; ++i) out = out.mul(*this);
    return out;
}

RationalPoly RationalPoly::compose(const RationalPoly& f, const std::vector<RationalPoly>& g) {
    if (g.empty()) throw std::invalid_argument("compose: empty substitution");
    const int d = g.front().dim();
    RationalPoly out(d);
    for (const auto& [mono, c] : f.terms()) {
        if (static_cast<int>(mono.size()) != static_cast<int>(g.size()))
            throw std::invalid_argument("compose: arity mismatch");
        RationalPoly term = RationalPoly::constant(d, c);
        for (std::size_t j = 0; j < g.size(); ++j)
            if (mono[j] > 0) term = term.mul(g[j].pow(mono[j]));
        out = out.add(term);
    }
    return out;
}

void fill_jet_from_poly(JetPoly& jet, int comp, const RationalPoly& poly) {
    for (const auto& [mono, c] : poly.terms()) {
        MultiIndex alpha(mono);
        int flat = jet.layout().flat_or_neg(alpha);
        if (flat >= 0) jet.set_coeff(flat, comp, static_cast<double>(c));
    }
}

namespace {

long double central_difference(const std::function<double(const std::vector<double>&)>& f,
                               std::vector<double>& x, const MultiIndex& alpha, long double h) {
    int axis = -1;
    for (int i = 0; i < alpha.dim(); ++i)
        if (alpha[i] > 0) { axis = i; break; }
    if (axis < 0) return f(x);
    MultiIndex rest = alpha.minus(MultiIndex::unit(alpha.dim(), axis));
    const double x0 = x[axis];
    x[axis] = static_cast<double>(x0 + h);
    long double fp = central_difference(f, x, rest, h);
    x[axis] = static_cast<double>(x0 - h);
    long double fm = central_difference(f, x, rest, h);
    x[axis] = x0;
    return (fp - fm) / (2.0L * h);
}

} // namespace

double finite_difference_derivative(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x, const MultiIndex& alpha,
                                    double h) {
    // two Richardson levels on the nested central stencil: O(h^6) truncation
    std::vector<double> xs = x;
    long double d1 = central_difference(f, xs, alpha, h);
    long double d2 = central_difference(f, xs, alpha, h / 2);
    long double d4 = central_difference(f, xs, alpha, h / 4);
    long double r1 = (4.0L * d2 - d1) / 3.0L;
    long double r2 = (4.0L * d4 - d2) / 3.0L;
    return static_cast<double>((16.0L * r2 - r1) / 15.0L);
}

namespace {

struct CountContext {
    std::vector<MultiIndex> candidates;
    int m = 1;
    std::map<std::pair<std::size_t, std::vector<int>>, std::uint64_t> memo;
};

// per-candidate choice of a full k-vector in N^m (0 = unused), enumerated by
// component recursion, no composition-count formula involved
void enumerate_k_vectors(const MultiIndex& delta, const MultiIndex& remaining, int m, int comp,
                         std::vector<int>& k, int used,
                         const std::function<void(const MultiIndex&)>& emit) {
    if (comp == m) {
        emit(remaining);  // remaining already reduced by the caller loop
        (void)k;
        (void)used;
        return;
    }
    // choose k[comp] = 0, 1, ... while |k|*delta still fits in remaining
    MultiIndex rest = remaining;
    for (int v = 0;; ++v) {
        k[comp] = v;
        enumerate_k_vectors(delta, rest, m, comp + 1, k, used + v, emit);
        if (!rest.dominates(delta)) break;
        rest = rest.minus(delta);
    }
    k[comp] = 0;
}

std::uint64_t count_rec(CountContext& ctx, std::size_t idx, const MultiIndex& remaining) {
    if (remaining.is_zero()) return 1;
    if (idx == ctx.candidates.size()) return 0;
    auto key = std::make_pair(idx, remaining.entries());
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
    std::uint64_t total = 0;
    std::vector<int> k(ctx.m, 0);
    enumerate_k_vectors(ctx.candidates[idx], remaining, ctx.m, 0, k, 0,
                        [&](const MultiIndex& rest) { total += count_rec(ctx, idx + 1, rest); });
    ctx.memo[key] = total;
    return total;
}

} // namespace

std::uint64_t fdb_partition_count_oracle(const MultiIndex& gamma, int m) {
    CountContext ctx;
    ctx.m = m;
    for (const MultiIndex& delta : enumerate_multiindices(gamma.dim(), gamma.order()))
        if (!delta.is_zero() && gamma.dominates(delta)) ctx.candidates.push_back(delta);
    return count_rec(ctx, 0, gamma);
}

double max_scan_1d(const std::function<double(double)>& f, double a, double b, int samples) {
    double best = -std::numeric_limits<double>::infinity();
    double xbest = a;
    for (int i = 0; i <= samples; ++i) {
        double x = a + (b - a) * i / samples;
        double v = f(x);
        if (v > best) { best = v; xbest = x; }
    }
    // local ternary-search refinement around the best sample
    double lo = std::max(a, xbest - (b - a) / samples);
    double hi = std::min(b, xbest + (b - a) / samples);
    for (int it = 0; it < 200; ++it) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (f(m1) < f(m2)) lo = m1; else hi = m2;
    }
    return std::max(best, f((lo + hi) / 2));
}

} // namespace flowlab::oracle
