#pragma once

#include "decay/graph.hpp"
#include "decay/sparse_hermitian.hpp"

namespace decay {

// Keeps entries with |i-j| <= m. This is the orthogonal projection onto
// m-banded matrices in the Frobenius inner product.
SparseHermitian truncate_band(const SparseHermitian& a, int m);

// Keeps entries with graph distance d(i,j) <= m. Requires distance rows
// covering every row of a, computed to radius >= m.
SparseHermitian truncate_graph(const SparseHermitian& a,
                               const GraphDistance& d, int m);

// Truncation-error constant for the relative Frobenius bound
//   ||A - A^(m)||_F^2 / ||A||_F^2 <= k0 * exp(-2 alpha m)
// valid for density matrix sequences with |A_ij| <= c e^{-alpha |i-j|} and
// n = nb * ne. Summing the squared envelope diagonal by diagonal gives
//   ||A - A^(m)||_F^2 <= 2 c^2 n e^{-2 alpha (m+1)} / (1 - e^{-2 alpha}),
// and dividing by ||A||_F^2 = ne yields k0 below.
double frobenius_truncation_ratio_bound(double c, double alpha, int nb, int m);

}  // namespace decay
