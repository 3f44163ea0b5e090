#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flowlab {

// Multi-index alpha in N^d.  Immutable after construction.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);

    static MultiIndex zero(int d);
    static MultiIndex unit(int d, int axis);

    int dim() const { return static_cast<int>(entries_.size()); }
    int order() const { return order_; }          // |alpha|
    int operator[](int i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    bool is_zero() const { return order_ == 0; }
    double factorial() const;                     // alpha! = prod alpha_i!

    // componentwise comparison beta <= alpha
    bool dominates(const MultiIndex& beta) const;

    MultiIndex plus(const MultiIndex& other) const;
    MultiIndex minus(const MultiIndex& other) const;  // requires dominates(other)
    MultiIndex scaled(int c) const;

    bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }

    // graded lexicographic: lower order first; within an order, larger leading
    // entries first, e.g. for d=2: (0,0), (1,0), (0,1), (2,0), (1,1), (0,2).
    static bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

    std::string to_string() const;

private:
    std::vector<int> entries_;
    int order_ = 0;
};

// All alpha with |alpha| <= max_order in graded-lex order, duplicate-free.
std::vector<MultiIndex> enumerate_multiindices(int d, int max_order);

// C(max_order + d, d), the size of the enumeration above.
std::uint64_t multiindex_count(int d, int max_order);

double factorial(int n);

} // namespace flowlab
