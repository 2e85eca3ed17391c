#pragma once

#include "schubert/poly.hpp"

// Hot loops with a serial reference and an OpenMP version. The dispatching
// entry points pick the parallel path only for large inputs; tests compare
// both paths and the benchmark target times them.
namespace schubert::kernels {

Poly mul_serial(const Poly& a, const Poly& b);
Poly mul_parallel(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);

// Sum of a list of polynomials.
Poly sum_serial(const std::vector<Poly>& ps);
Poly sum_parallel(const std::vector<Poly>& ps);

int max_threads();
// Work size (term pairs) above which mul() goes parallel.
constexpr std::size_t kParallelThreshold = 1u << 15;

}  // namespace schubert::kernels
