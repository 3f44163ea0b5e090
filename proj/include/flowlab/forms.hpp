#pragma once

#include <complex>
#include <string>
#include <vector>

#include "flowlab/jet.hpp"
#include "flowlab/taylor1.hpp"

namespace flowlab {

// One univariate factor.  The catalog of closed forms is built from these;
// every factor knows its exact Taylor expansion at any real point and (where
// it makes sense) its complex continuation.
struct UnivariateFactor {
    enum class Kind { one, poly, sin, gauss, tanh, bump, inv_quad };
    Kind kind = Kind::one;

    std::vector<double> coef;  // poly: sum_i coef[i] * (x - center)^i
    double center = 0.0;
    double width = 1.0;  // gauss/bump/inv_quad scaling
    double freq = 1.0;   // sin
    double phase = 0.0;  // sin
    double rate = 1.0;   // tanh
    double a2 = 1.0;     // inv_quad: 1/(u^2 + a2), u = (x-center)/width

    double eval(double x) const;
    Taylor1 taylor(double x, int order) const;
    std::complex<double> eval_complex(std::complex<double> z) const;

    // Half-width of the horizontal strip about R on which the factor is
    // holomorphic: infinity for entire kinds, pi/(2 rate) for tanh,
    // width*sqrt(a2) for inv_quad, 0 for bump.
    double holomorphic_halfwidth() const;
};

// amplitude * prod_axes prod_factors factor(x_axis)
struct SeparableTerm {
    double amplitude = 1.0;
    std::vector<std::vector<UnivariateFactor>> axis_factors;  // one list per axis

    double eval_axis(int axis, double x) const;
    Taylor1 taylor_axis(int axis, double x, int order) const;
};

// Scalar closed form R^d -> R as a sum of separable terms.
class ScalarForm {
public:
    ScalarForm() = default;
    ScalarForm(int d, std::vector<SeparableTerm> terms);

    int dim() const { return d_; }
    const std::vector<SeparableTerm>& terms() const { return terms_; }

    double eval(const Vec& x) const;
    JetPoly jet(const Vec& x, int order) const;  // d -> 1 at basepoint x
    std::complex<double> eval_complex(const std::vector<std::complex<double>>& z) const;
    double holomorphic_halfwidth() const;

    ScalarForm plus(const ScalarForm& other) const;
    ScalarForm scaled(double s) const;

private:
    int d_ = 0;
    std::vector<SeparableTerm> terms_;
};

// Closed form R^d -> R^m, componentwise scalar forms.
class VectorForm {
public:
    VectorForm() = default;
    explicit VectorForm(std::vector<ScalarForm> components);

    int dim() const { return components_.empty() ? 0 : components_[0].dim(); }
    int dim_out() const { return static_cast<int>(components_.size()); }
    const ScalarForm& component(int i) const { return components_[i]; }
    const std::vector<ScalarForm>& components() const { return components_; }

    Vec eval(const Vec& x) const;
    JetPoly jet(const Vec& x, int order) const;  // d -> m at basepoint x
    VectorForm scaled(double s) const;
    VectorForm plus(const VectorForm& other) const;

private:
    std::vector<ScalarForm> components_;
};

// Catalog constructors.
ScalarForm form_zero(int d);
ScalarForm form_constant(int d, double c);
// amp * prod_i exp(-((x_i - center_i)/width)^2)
ScalarForm form_gaussian(int d, double amp, Vec center, double width);
// amp * sin(freq * (x_axis - center) + phase)
ScalarForm form_sin_axis(int d, int axis, double amp, double freq = 1.0, double center = 0.0,
                         double phase = 0.0);
// amp * tanh(rate * (x_axis - center))
ScalarForm form_tanh_axis(int d, int axis, double amp, double rate = 1.0, double center = 0.0);
// amp * prod_i bump((x_i - center_i)/width), supported on the box of radius width
ScalarForm form_bump(int d, double amp, Vec center, double width);
// amp * (x_axis - center)
ScalarForm form_linear_axis(int d, int axis, double amp, double center = 0.0);
// amp * x_axis * prod_i exp(-(x_i/width)^2)
ScalarForm form_xgauss_axis(int d, int axis, double amp, double width = 1.0);
// amp / (((x_axis - center)/width)^2 + a2)
ScalarForm form_inv_quad_axis(int d, int axis, double amp, double a2, double width = 1.0,
                              double center = 0.0);
// amp * sin(freq x_axis) * prod_i exp(-(x_i/width)^2)
ScalarForm form_sin_gauss_axis(int d, int axis, double amp, double freq = 1.0, double width = 1.0);

VectorForm vector_form_zero(int d, int m);
// linear field x -> A x (A row-major m x d)
VectorForm form_linear_field(int d, const std::vector<double>& a_rowmajor);

} // namespace flowlab
