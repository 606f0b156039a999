#include "decay/truncation.hpp"

#include <cmath>

namespace decay {

SparseHermitian truncate_band(const SparseHermitian& a, int m) {
  if (m < 0) throw precondition_error("truncate_band", "negative bandwidth");
  std::vector<SparseHermitian::Triplet> kept;
  a.for_each_stored([&](int i, int j, cplx v) {
    if (j - i <= m) kept.push_back({i, j, v});
  });
  auto hint = a.bandwidth_hint();
  if (hint) hint = std::min(*hint, m);
  return SparseHermitian::from_triplets(a.n(), std::move(kept),
                                        hint.value_or(std::min(m, a.n() - 1)));
}

SparseHermitian truncate_graph(const SparseHermitian& a,
                               const GraphDistance& d, int m) {
  if (d.n() != a.n())
    throw precondition_error("truncate_graph", "distance table size mismatch");
  if (d.radius() < m)
    throw precondition_error("truncate_graph",
                             "distance radius smaller than cutoff");
  std::vector<SparseHermitian::Triplet> kept;
  a.for_each_stored([&](int i, int j, cplx v) {
    if (!d.has_source(i) && !d.has_source(j))
      throw precondition_error("truncate_graph",
                               "no distance row covers a stored entry");
    if (d(i, j) <= m) kept.push_back({i, j, v});
  });
  return SparseHermitian::from_triplets(a.n(), std::move(kept),
                                        a.bandwidth_hint());
}

double frobenius_truncation_ratio_bound(double c, double alpha, int nb,
                                        int m) {
  if (c <= 0 || alpha <= 0 || nb <= 0)
    throw precondition_error("frobenius_truncation_ratio_bound",
                             "constants must be positive");
  const double r = std::exp(-2.0 * alpha);
  const double k0 = 2.0 * c * c * nb * r / (1.0 - r);
  return k0 * std::exp(-2.0 * alpha * m);
}

}  // namespace decay
