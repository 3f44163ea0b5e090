#include "flowlab/multiindex.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flowlab {

double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("multi-index needs dimension >= 1");
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
        order_ += e;
    }
}

MultiIndex MultiIndex::zero(int d) { return MultiIndex(std::vector<int>(d, 0)); }

MultiIndex MultiIndex::unit(int d, int axis) {
    std::vector<int> e(d, 0);
    e.at(axis) = 1;
    return MultiIndex(std::move(e));
}

double MultiIndex::factorial() const {
    double r = 1.0;
    for (int e : entries_) r *= flowlab::factorial(e);
    return r;
}

bool MultiIndex::dominates(const MultiIndex& beta) const {
    if (dim() != beta.dim()) return false;
    for (int i = 0; i < dim(); ++i)
        if (beta.entries_[i] > entries_[i]) return false;
    return true;
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("multi-index dim mismatch");
    std::vector<int> e(entries_);
    for (int i = 0; i < dim(); ++i) e[i] += other.entries_[i];
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::minus(const MultiIndex& other) const {
    if (!dominates(other)) throw std::invalid_argument("multi-index subtraction would go negative");
    std::vector<int> e(entries_);
    for (int i = 0; i < dim(); ++i) e[i] -= other.entries_[i];
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::scaled(int c) const {
    if (c < 0) throw std::invalid_argument("multi-index scale must be nonnegative");
    std::vector<int> e(entries_);
    for (int& v : e) v *= c;
    return MultiIndex(std::move(e));
}

bool MultiIndex::graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    // within a grade, lexicographically larger leading entries come first
    return a.entries_ > b.entries_;
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void enumerate_grade(int d, int grade, std::vector<int>& cur, int pos,
                     std::vector<MultiIndex>& out) {
    if (pos == d - 1) {
        cur[pos] = grade;
        out.emplace_back(cur);
        return;
    }
    for (int v = grade; v >= 0; --v) {
        cur[pos] = v;
        enumerate_grade(d, grade - v, cur, pos + 1, out);
    }
}

} // namespace

std::vector<MultiIndex> enumerate_multiindices(int d, int max_order) {
    if (d < 1) throw std::invalid_argument("enumerate_multiindices: d >= 1 required");
    if (max_order < 0) throw std::invalid_argument("enumerate_multiindices: order >= 0 required");
    std::vector<MultiIndex> out;
    out.reserve(multiindex_count(d, max_order));
    std::vector<int> cur(d, 0);
    for (int g = 0; g <= max_order; ++g) enumerate_grade(d, g, cur, 0, out);
    return out;
}

std::uint64_t multiindex_count(int d, int max_order) {
    // C(max_order + d, d)
    std::uint64_t r = 1;
    for (int i = 1; i <= d; ++i) r = r * (max_order + i) / i;
    return r;
}

} // namespace flowlab
