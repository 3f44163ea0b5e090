#pragma once

#include <limits>

#include "flowlab/sampled.hpp"
#include "flowlab/weight_sequence.hpp"

namespace flowlab {

inline constexpr double p_infinity = std::numeric_limits<double>::infinity();

// L^p norm of d^alpha f over the grid (sup over nodes for p = infinity);
// vector-valued maps take the max over components.
double lp_derivative_norm(const SampledFunction& f, const MultiIndex& alpha, double p);

// sum_{|alpha| <= k} ||d^alpha f||_{L^p}
double sobolev_norm(const SampledFunction& f, int k, double p);

// sup over nodes of (1 + |x|)^decay_power |d^alpha f(x)|
double schwartz_seminorm(const SampledFunction& f, int decay_power, const MultiIndex& alpha);

// max_{|alpha| <= k_max} ||d^alpha f||_{L^p} / (sigma^|alpha| |alpha|! M_|alpha|)
double ultradiff_seminorm(const SampledFunction& f, const WeightSequence& M, double sigma,
                          double p, int k_max);

// sup over p <= p_max, |alpha| <= k_max, nodes of
// (1+|x|)^p |d^alpha f(x)| / (sigma^{p+|alpha|} p! |alpha|! L_p M_|alpha|)
double gelfand_shilov_seminorm(const SampledFunction& f, const WeightSequence& L,
                               const WeightSequence& M, double sigma, int p_max, int k_max);

struct EmbeddingCheck {
    int k = 0;            // floor(d/p) + 1
    double sup_norm = 0.0;
    double sobolev = 0.0;
    double ratio = 0.0;   // sup_norm / sobolev, 0 for the zero function
};
EmbeddingCheck sobolev_embedding_check(const SampledFunction& f, double p);

// Smallest R with |f| < tol outside |x| <= R on the grid; infinity when the
// boundary layer still exceeds tol; 0 for the zero function.
double support_radius(const SampledFunction& f, double tol = 1e-12);

// Max |f| over the outermost node layer; crude truncation-tail indicator
// carried on norm reports.
double boundary_max_abs(const SampledFunction& f);

} // namespace flowlab
