#include "decay/norms.hpp"

#include <cmath>

namespace decay {

Norms norms(const SparseHermitian& a) {
  const int n = a.n();
  std::vector<double> col_sum(n, 0.0), row_sum(n, 0.0);
  double fro2 = 0.0;
  a.for_each_stored([&](int i, int j, cplx v) {
    const double m = std::abs(v);
    row_sum[i] += m;
    col_sum[j] += m;
    fro2 += m * m;
    if (i != j) {
      row_sum[j] += m;
      col_sum[i] += m;
      fro2 += m * m;
    }
  });
  Norms out;
  for (int i = 0; i < n; ++i) {
    out.one = std::max(out.one, col_sum[i]);
    out.inf = std::max(out.inf, row_sum[i]);
  }
  out.frobenius = std::sqrt(fro2);
  out.two_bound = std::sqrt(out.one * out.inf);
  return out;
}

double one_norm_diff(const SparseHermitian& a, const SparseHermitian& b) {
  if (a.n() != b.n())
    throw precondition_error("one_norm_diff", "size mismatch");
  const int n = a.n();
  // accumulate |a_ij - b_ij| over the union pattern, column-wise
  std::vector<double> col_sum(n, 0.0);
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<int, cplx>> ra, rb;
    a.for_each_in_row(i, [&](int j, cplx v) { ra.emplace_back(j, v); });
    b.for_each_in_row(i, [&](int j, cplx v) { rb.emplace_back(j, v); });
    std::size_t p = 0, q = 0;
    while (p < ra.size() || q < rb.size()) {
      if (q == rb.size() || (p < ra.size() && ra[p].first < rb[q].first)) {
        col_sum[ra[p].first] += std::abs(ra[p].second);
        ++p;
      } else if (p == ra.size() || rb[q].first < ra[p].first) {
        col_sum[rb[q].first] += std::abs(rb[q].second);
        ++q;
      } else {
        col_sum[ra[p].first] += std::abs(ra[p].second - rb[q].second);
        ++p;
        ++q;
      }
    }
  }
  double m = 0.0;
  for (double s : col_sum) m = std::max(m, s);
  return m;
}

}  // namespace decay
