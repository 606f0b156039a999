#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <optional>
#include <vector>

#include "decay/types.hpp"

namespace decay {

/// Hermitian matrix stored as compressed sparse rows over the upper triangle,
/// with a transpose index so full rows can be walked without duplicating
/// values. Immutable after construction.
///
/// Invariants enforced at build time:
///   - entry(i,j) == conj(entry(j,i)) whenever both triangles are supplied
///   - diagonal entries are real
///   - no stored position violates a declared bandwidth hint with a
///     nonzero value
class SparseHermitian {
public:
  struct Triplet {
    int row;
    int col;
    cplx value;
  };

  SparseHermitian() = default;

  static SparseHermitian from_triplets(int n, std::vector<Triplet> entries,
                                       std::optional<int> bandwidth_hint = {});

  // Builds from a dense matrix, validating hermiticity within `herm_tol`
  // (relative to the largest entry) and averaging the two triangles.
  // Entries with magnitude <= drop_tol are not stored.
  static SparseHermitian from_dense(const Eigen::MatrixXcd& a,
                                    double drop_tol = 0.0,
                                    double herm_tol = 1e-10);
  static SparseHermitian from_dense(const Eigen::MatrixXd& a,
                                    double drop_tol = 0.0,
                                    double herm_tol = 1e-10);

  int n() const { return n_; }
  // number of stored (upper-triangle) positions
  int nnz_stored() const { return static_cast<int>(vals_.size()); }
  // number of positions in the symmetric closure of the pattern
  long nnz_symmetric() const;

  std::optional<int> bandwidth_hint() const { return bandwidth_hint_; }
  // largest |i-j| over stored positions (0 for diagonal/empty matrices)
  int bandwidth() const;
  // bandwidth_hint when set, otherwise the computed bandwidth
  int effective_bandwidth() const;

  bool is_real() const { return is_real_; }

  // stored value at (i,j) in either triangle; zero when not stored
  cplx entry(int i, int j) const;
  bool stored(int i, int j) const;

  // Walks the full row i of the symmetric closure in ascending column order.
  // f(j, v) receives the value of entry (i,j).
  template <typename F>
  void for_each_in_row(int i, F&& f) const {
    for (int k = mirror_ptr_[i]; k < mirror_ptr_[i + 1]; ++k)
      f(mirror_row_[k], std::conj(vals_[mirror_val_[k]]));
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) f(cols_[k], vals_[k]);
  }

  // Walks stored upper-triangle entries (i <= j).
  template <typename F>
  void for_each_stored(F&& f) const {
    for (int i = 0; i < n_; ++i)
      for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
        f(i, cols_[k], vals_[k]);
  }

  // neighbors of i in the adjacency graph (distance-1 nodes, self excluded)
  int degree(int i) const;
  int max_degree() const;

  // y = H x
  Eigen::VectorXcd multiply(const Eigen::VectorXcd& x) const;

  Eigen::MatrixXcd to_dense() const;
  // Throws when the matrix has complex entries.
  Eigen::MatrixXd to_dense_real() const;
  Eigen::SparseMatrix<cplx> to_eigen_sparse() const;

private:
  void build_mirror();

  int n_ = 0;
  std::vector<int> row_ptr_{0};  // upper-triangle CSR
  std::vector<int> cols_;
  std::vector<cplx> vals_;
  std::vector<int> mirror_ptr_{0};  // strict upper triangle, by column
  std::vector<int> mirror_row_;
  std::vector<int> mirror_val_;
  std::optional<int> bandwidth_hint_;
  bool is_real_ = true;
};

}  // namespace decay
