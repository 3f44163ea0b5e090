#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "flowlab/forms.hpp"
#include "flowlab/grid.hpp"
#include "flowlab/jet.hpp"

namespace flowlab {

// A map R^d -> R^m realized as jets of uniform order at every grid node, with
// the closed form kept alongside when one exists (used for exact off-grid
// evaluation).
class SampledFunction {
public:
    SampledFunction(std::shared_ptr<const Grid> grid, int dim_out, int order,
                    std::vector<JetPoly> jets, std::optional<VectorForm> closed_form = {});

    static SampledFunction sample(const VectorForm& form, const GridSpec& spec, int order);
    static SampledFunction zero(const GridSpec& spec, int dim_out, int order);

    const Grid& grid() const { return *grid_; }
    std::shared_ptr<const Grid> grid_ptr() const { return grid_; }
    int dim() const { return grid_->dim(); }
    int dim_out() const { return dim_out_; }
    int order() const { return order_; }
    std::size_t n_nodes() const { return jets_.size(); }

    const JetPoly& jet(std::size_t node) const { return jets_[node]; }
    JetPoly& jet(std::size_t node) { return jets_[node]; }
    double value(std::size_t node, int comp) const { return jets_[node].coeff(0, comp); }
    // unnormalized d^alpha f_comp at the node
    double derivative(std::size_t node, int alpha_flat, int comp, double alpha_factorial) const {
        return jets_[node].coeff(alpha_flat, comp) * alpha_factorial;
    }

    const std::optional<VectorForm>& closed_form() const { return closed_form_; }
    bool from_interpolation() const { return from_interpolation_; }
    void mark_interpolated() { from_interpolation_ = true; }

private:
    std::shared_ptr<const Grid> grid_;
    int dim_out_, order_;
    std::vector<JetPoly> jets_;
    std::optional<VectorForm> closed_form_;
    bool from_interpolation_ = false;
};

// Local polynomial interpolation of off-grid values and jet coefficients
// (4-point Lagrange per axis).  Used where no closed form is available.
Vec interpolate_value(const SampledFunction& f, const Vec& x);
JetPoly interpolate_jet(const SampledFunction& f, const Vec& x);

} // namespace flowlab
