#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "flowlab/field.hpp"
#include "flowlab/sampled.hpp"

namespace flowlab {

struct NewtonOptions {
    double tol = 1e-12;
    int max_iter = 60;
};

// A map R^d -> R^d of the form Id + (decaying displacement), evaluable with
// jets at arbitrary points.  Composition and inversion build expression
// trees so Trouve generators stay exactly evaluable.
class DiffeoMap {
public:
    virtual ~DiffeoMap() = default;
    virtual int dim() const = 0;
    virtual Vec eval(const Vec& x) const = 0;
    virtual JetPoly jet(const Vec& x, int order) const = 0;
};

using DiffeoMapPtr = std::shared_ptr<const DiffeoMap>;

DiffeoMapPtr identity_map(int d);
DiffeoMapPtr identity_plus(VectorForm displacement);
// x -> outer(inner(x))
DiffeoMapPtr composed_map(DiffeoMapPtr inner, DiffeoMapPtr outer);
DiffeoMapPtr inverted_map(DiffeoMapPtr inner, NewtonOptions opts = {});
// chart-line blend (1 - s) a(x) + s b(x)
DiffeoMapPtr chart_blend(DiffeoMapPtr a, DiffeoMapPtr b, double s);
// Id + interpolated displacement samples (no closed form available)
DiffeoMapPtr sampled_map(SampledFunction displacement);

// Newton solve of map(y) = x, seeded with 2x - map(x).
Vec newton_invert(const DiffeoMap& map, const Vec& x, const NewtonOptions& opts = {});

// Jet of the inverse at the point A maps its basepoint to, by the order-by-
// order solve of Jet(A) o Jet(A^{-1}) = Jet(Id).
JetPoly jet_invert(const JetPoly& a);

// An element Id + phi of the diffeomorphism group: closed-form map tree when
// available plus displacement jets on a grid and the cached det lower bound.
class DiffeoRep {
public:
    static DiffeoRep from_map(DiffeoMapPtr map, const GridSpec& grid, int order);
    static DiffeoRep from_samples(SampledFunction displacement);

    int dim() const { return phi_.dim(); }
    int order() const { return phi_.order(); }
    const SampledFunction& displacement() const { return phi_; }
    const DiffeoMapPtr& map() const { return map_; }
    double det_inf() const { return det_inf_; }
    const GridSpec& grid_spec() const { return phi_.grid().spec(); }

    // full map evaluation (exact via the map tree, else Id + interpolation)
    Vec eval(const Vec& x) const;
    JetPoly jet(const Vec& x, int order) const;

    // displacement phi = Phi - Id
    Vec displacement_eval(const Vec& x) const;
    JetPoly displacement_jet(const Vec& x, int order) const;

private:
    DiffeoRep(DiffeoMapPtr map, SampledFunction phi);
    DiffeoMapPtr map_;      // may be null (sample-backed rep)
    SampledFunction phi_;
    double det_inf_;
};

struct MembershipReport {
    bool member = false;
    double det_min = 0.0;
    Vec argmin;
};
// det d(Id + phi) >= margin at every grid node
MembershipReport is_member(const DiffeoRep& rep, double margin = 0.0);

// max over nodes of the infinity-operator norm of d phi; < 1 certifies that
// the straight segment Id + t phi stays in the group for all t in [0, 1]
double sup_jacobian_norm(const SampledFunction& phi);

struct ComposeOptions {
    double range_margin = 0.5;  // allowed excursion beyond the grid extent
};
// x -> second(first(x)); requires second's grid (plus margin) to cover the
// range of first when second has no closed form
DiffeoRep compose(const DiffeoRep& first, const DiffeoRep& second, ComposeOptions opts = {});

DiffeoRep invert(const DiffeoRep& rep, NewtonOptions opts = {});

} // namespace flowlab
