#pragma once

// Test-only oracles, independent of the library implementation paths they
// check: exact rational polynomial algebra for the composition oracle,
// Richardson-extrapolated finite differences, and a memoized partition
// counter with a different recursion shape than the production enumerator.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flowlab/jet.hpp"
#include "flowlab/multiindex.hpp"

namespace flowlab::oracle {

using Rational = boost::multiprecision::cpp_rational;

// Exact multivariate polynomial over Q, monomial exponents -> coefficient.
class RationalPoly {
public:
    explicit RationalPoly(int d) : d_(d) {}
    static RationalPoly constant(int d, const Rational& c);
    static RationalPoly variable(int d, int axis);

    int dim() const { return d_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<int>& mono, const Rational& c);

    RationalPoly add(const RationalPoly& other) const;
    RationalPoly mul(const RationalPoly& other) const;
    RationalPoly pow(int e) const;

    // f in m variables composed with g_1..g_m in d variables, exact.
    static RationalPoly compose(const RationalPoly& f, const std::vector<RationalPoly>& g);

private:
    int d_;
    std::map<std::vector<int>, Rational> terms_;
};

// Normalized Taylor coefficients of the polynomial (centered coordinates at
// 0) as a JetPoly component; coefficients beyond the polynomial are zero.
void fill_jet_from_poly(JetPoly& jet, int comp, const RationalPoly& poly);

// Unnormalized d^alpha f(x) by nested central differences with one Richardson
// step, evaluated in long double.
double finite_difference_derivative(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x, const MultiIndex& alpha,
                                    double h);

// Count of Faa di Bruno partitions by direct recursion over per-delta
// k-vectors with memoization on the remaining target.
std::uint64_t fdb_partition_count_oracle(const MultiIndex& gamma, int m);

// Golden-section maximum of a smooth univariate function on [a, b].
double max_scan_1d(const std::function<double(double)>& f, double a, double b, int samples = 2048);

} // namespace flowlab::oracle
