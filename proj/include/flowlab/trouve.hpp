#pragma once

#include "flowlab/diffeo.hpp"
#include "flowlab/field.hpp"

namespace flowlab {

struct GeneratorOptions {
    // conservative segment admissibility: sup ||d phi||_inf must stay below
    // this bound so Id + t phi has positive Jacobian for every t in [0,1]
    double segment_bound = 1.0;
    NewtonOptions newton{};
    int max_bisection_depth = 8;
};

// The generator u(t, x) = phi(gamma(t)^{-1}(x)) of the straight segment
// gamma(t) = Id + t phi; its time-1 flow reproduces Id + phi.  Throws
// "use polygon_generator" when the conservative segment check fails.
FieldPtr trouve_generator(const DiffeoRep& target, const GeneratorOptions& opts = {});

// Concatenated per-segment generators of a polygon of diffeomorphisms
// starting at the identity: vertices[0] = Id, vertices.back() = target.
// Segment k uses the relative map vertices[k+1] o vertices[k]^{-1}.
FieldPtr polygon_generator(const std::vector<DiffeoRep>& vertices,
                           const GeneratorOptions& opts = {});

// Insert chart midpoints until every relative segment passes the
// admissibility check; gives {Id, ..., target}.  Throws past max depth.
std::vector<DiffeoRep> refine_polygon(const DiffeoRep& target, const GeneratorOptions& opts = {});

} // namespace flowlab
