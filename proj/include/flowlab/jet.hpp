#pragma once

#include <map>
#include <memory>
#include <span>
#include <vector>

#include "flowlab/multiindex.hpp"

namespace flowlab {

using Vec = std::vector<double>;

// Enumeration of all multi-indices with |alpha| <= order in graded-lex order,
// plus the reverse lookup.  Shared and memoized per (d, order).
class JetLayout {
public:
    static std::shared_ptr<const JetLayout> get(int d, int order);

    int dim() const { return d_; }
    int order() const { return order_; }
    int size() const { return static_cast<int>(indices_.size()); }

    const MultiIndex& index(int flat) const { return indices_[flat]; }
    const std::vector<MultiIndex>& indices() const { return indices_; }

    int flat(const MultiIndex& alpha) const;         // throws if out of range
    int flat_or_neg(const MultiIndex& alpha) const;  // -1 if out of range

private:
    JetLayout(int d, int order);
    int d_, order_;
    std::vector<MultiIndex> indices_;
    std::map<std::vector<int>, int> lookup_;
};

// Truncated Taylor expansion of a map R^d -> R^m at a basepoint, stored in
// normalized form: coeff(alpha) = d^alpha f(x0) / alpha!.
class JetPoly {
public:
    JetPoly(int dim_in, int dim_out, int order, Vec basepoint);

    static JetPoly identity(int d, int order, Vec basepoint);
    static JetPoly constant(int d, int order, Vec basepoint, Vec value);

    int dim_in() const { return d_; }
    int dim_out() const { return m_; }
    int order() const { return order_; }
    const Vec& basepoint() const { return basepoint_; }
    const JetLayout& layout() const { return *layout_; }
    int n_coeffs() const { return layout_->size(); }

    double coeff(int flat, int comp) const { return coeffs_[flat * m_ + comp]; }
    double coeff(const MultiIndex& alpha, int comp) const;
    void set_coeff(int flat, int comp, double v) { coeffs_[flat * m_ + comp] = v; }
    void set_coeff(const MultiIndex& alpha, int comp, double v);

    std::span<const double> coeff_row(int flat) const {
        return {coeffs_.data() + static_cast<std::size_t>(flat) * m_, static_cast<std::size_t>(m_)};
    }
    const Vec& raw() const { return coeffs_; }
    Vec& raw() { return coeffs_; }

    Vec value() const;  // order-0 coefficients
    // Unnormalized partial derivative d^alpha f_comp(x0) = coeff * alpha!.
    double derivative(const MultiIndex& alpha, int comp) const;
    // Jacobian of f at the basepoint, row-major m x d.
    std::vector<double> jacobian() const;

    // Evaluate the truncated polynomial at x (offset from basepoint).
    Vec evaluate(const Vec& x) const;

    JetPoly component(int comp) const;  // d -> 1 slice

private:
    int d_, m_, order_;
    Vec basepoint_;
    std::shared_ptr<const JetLayout> layout_;
    Vec coeffs_;  // layout-major, dim_out minor
};

// Truncated arithmetic.  Dimensions, orders, and basepoints must match.
JetPoly jet_add(const JetPoly& a, const JetPoly& b);
JetPoly jet_sub(const JetPoly& a, const JetPoly& b);
JetPoly jet_scale(const JetPoly& a, double c);
// Truncated product; requires matching dim_out (componentwise) or one factor
// scalar (m == 1), which multiplies every component of the other.
JetPoly jet_mul(const JetPoly& a, const JetPoly& b);

// Drop coefficients above new_order (new_order <= a.order()).
JetPoly jet_truncate(const JetPoly& a, int new_order);

// Faa di Bruno composition: jet of f o g where g: R^d -> R^m, f: R^m -> R^n.
// Requires f.basepoint == g.value() (within a small tolerance) and equal
// truncation orders.
JetPoly jet_compose(const JetPoly& f, const JetPoly& g);

} // namespace flowlab
