#include "schubert/kernels.hpp"

#include <omp.h>

namespace schubert::kernels {

int max_threads() { return omp_get_max_threads(); }

Poly mul_serial(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.size() == 1) return b.mul_monomial(a.leading().m, a.leading().c);
  if (b.size() == 1) return a.mul_monomial(b.leading().m, b.leading().c);
  PolyBuilder acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) acc.add(s.m * t.m, s.c * t.c);
  return acc.build();
}

Poly mul_parallel(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& at = a.terms();
  const auto& bt = b.terms();
  int nt = omp_get_max_threads();
  std::vector<PolyBuilder> parts(nt);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t i = 0; i < at.size(); ++i) {
    PolyBuilder& acc = parts[omp_get_thread_num()];
    for (const auto& t : bt) acc.add(at[i].m * t.m, at[i].c * t.c);
  }
  PolyBuilder total;
  for (auto& p : parts) total.merge(std::move(p));
  return total.build();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.size() * b.size() >= kParallelThreshold && omp_get_max_threads() > 1 && !omp_in_parallel())
    return mul_parallel(a, b);
  return mul_serial(a, b);
}

Poly sum_serial(const std::vector<Poly>& ps) {
  PolyBuilder acc;
  for (const auto& p : ps) acc.add(p);
  return acc.build();
}

Poly sum_parallel(const std::vector<Poly>& ps) {
  int nt = omp_get_max_threads();
  std::vector<PolyBuilder> parts(nt);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < ps.size(); ++i) parts[omp_get_thread_num()].add(ps[i]);
  PolyBuilder total;
  for (auto& p : parts) total.merge(std::move(p));
  return total.build();
}

}  // namespace schubert::kernels
