#pragma once

#include <span>
#include <vector>

namespace flowlab {

// Chebyshev-Lobatto collocation on [a, b]: nodes, barycentric interpolation,
// and the spectral antiderivative (exact for the degree-n interpolant).  The
// Picard fixed point is represented on these nodes.
class ChebyshevWindow {
public:
    ChebyshevWindow(double a, double b, int n);  // n + 1 nodes, ascending

    double a() const { return a_; }
    double b() const { return b_; }
    int n() const { return n_; }
    const std::vector<double>& nodes() const { return nodes_; }

    // F(nodes[i]) = int_a^{nodes[i]} interpolant(v), for values v at the nodes
    void integrate_values(std::span<const double> v, std::span<double> out) const;

    // barycentric evaluation of the interpolant at t in [a, b]
    double interpolate(std::span<const double> v, double t) const;

private:
    double a_, b_;
    int n_;
    std::vector<double> nodes_, bary_;
    std::vector<double> antider_;  // (n+1)^2 row-major on [-1,1], scaled on use
};

// dense LU helpers for small systems (row-major)
double det_dense(std::vector<double> a, int n);
// solve a x = b in place; b becomes the solution
void solve_dense(std::vector<double> a, std::vector<double>& b, int n);

} // namespace flowlab
