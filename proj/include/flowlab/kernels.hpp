#pragma once

#include <cstddef>
#include <span>

// Reduction kernels used by the quadrature and norm evaluators.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant.  The backend is picked once at runtime from CPU capabilities and
// can be forced (for equivalence tests) with force_backend().  Results of the
// SIMD variants may differ from the scalar ones by reassociation roundoff
// only.

namespace flowlab::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_available(Backend b);
const char* backend_name(Backend b);

// Force a specific backend; throws std::runtime_error if unavailable.
void force_backend(Backend b);
// Return to automatic selection.
void reset_backend();

double sum(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
double max_abs(std::span<const double> v);
double min_value(std::span<const double> v);

// sum_i w_i * |v_i|^p.  Fast paths for p = 1 and p = 2; other p go through
// std::pow element-wise in every backend.
double weighted_abs_pow_sum(std::span<const double> v, std::span<const double> w, double p);

// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);

} // namespace flowlab::kernels
