#pragma once

#include "decay/sparse_hermitian.hpp"

namespace decay {

struct Norms {
  double one = 0.0;        // max absolute column sum
  double inf = 0.0;        // max absolute row sum
  double frobenius = 0.0;
  double two_bound = 0.0;  // sqrt(one * inf), an upper bound on the 2-norm
};

Norms norms(const SparseHermitian& a);

// 1-norm of the difference of two equally sized Hermitian matrices.
double one_norm_diff(const SparseHermitian& a, const SparseHermitian& b);

}  // namespace decay
