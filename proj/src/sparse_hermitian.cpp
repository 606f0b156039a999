#include "decay/sparse_hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace decay {

namespace {

constexpr double kDiagImagTol = 1e-12;
constexpr double kMergeTol = 1e-12;

}  // namespace

SparseHermitian SparseHermitian::from_triplets(
    int n, std::vector<Triplet> entries, std::optional<int> bandwidth_hint) {
  if (n <= 0)
    throw precondition_error("SparseHermitian", "dimension must be positive");
  if (bandwidth_hint && *bandwidth_hint < 0)
    throw precondition_error("SparseHermitian", "negative bandwidth hint");

  double scale = 0.0;
  for (auto& t : entries) scale = std::max(scale, std::abs(t.value));

  // fold everything into the upper triangle
  for (auto& t : entries) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
      throw precondition_error("SparseHermitian", "index out of range");
    if (t.row > t.col) {
      std::swap(t.row, t.col);
      t.value = std::conj(t.value);
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseHermitian h;
  h.n_ = n;
  h.bandwidth_hint_ = bandwidth_hint;
  h.row_ptr_.assign(n + 1, 0);
  h.cols_.reserve(entries.size());
  h.vals_.reserve(entries.size());

  const double merge_tol = kMergeTol * std::max(1.0, scale);
  std::size_t k = 0;
  while (k < entries.size()) {
    const int i = entries[k].row, j = entries[k].col;
    cplx v = entries[k].value;
    // duplicates arise when a file stores both triangles; they must agree
    std::size_t kk = k + 1;
    while (kk < entries.size() && entries[kk].row == i && entries[kk].col == j) {
      if (std::abs(entries[kk].value - v) > merge_tol)
        throw precondition_error("SparseHermitian",
                                 "conflicting values for mirrored entry");
      ++kk;
    }
    k = kk;

    if (i == j) {
      if (std::abs(v.imag()) > kDiagImagTol * std::max(1.0, scale))
        throw precondition_error("SparseHermitian", "diagonal entry not real");
      v = cplx(v.real(), 0.0);
    }
    if (bandwidth_hint && j - i > *bandwidth_hint && std::abs(v) > 0.0)
      throw precondition_error("SparseHermitian",
                               "nonzero entry outside declared bandwidth");
    h.cols_.push_back(j);
    h.vals_.push_back(v);
    ++h.row_ptr_[i + 1];
    if (v.imag() != 0.0) h.is_real_ = false;
  }
  for (int i = 0; i < n; ++i) h.row_ptr_[i + 1] += h.row_ptr_[i];
  h.build_mirror();
  return h;
}

SparseHermitian SparseHermitian::from_dense(const Eigen::MatrixXcd& a,
                                            double drop_tol, double herm_tol) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n)
    throw precondition_error("SparseHermitian", "matrix not square");
  double scale = a.cwiseAbs().maxCoeff();
  std::vector<Triplet> ts;
  ts.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) >
          herm_tol * std::max(1.0, scale))
        throw precondition_error("SparseHermitian", "matrix not Hermitian");
      cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      if (i == j) v = cplx(v.real(), 0.0);
      if (std::abs(v) > drop_tol || (i == j && drop_tol == 0.0))
        ts.push_back({i, j, v});
    }
  return from_triplets(n, std::move(ts));
}

SparseHermitian SparseHermitian::from_dense(const Eigen::MatrixXd& a,
                                            double drop_tol, double herm_tol) {
  return from_dense(a.cast<cplx>(), drop_tol, herm_tol);
}

void SparseHermitian::build_mirror() {
  mirror_ptr_.assign(n_ + 1, 0);
  int strict = 0;
  for (int i = 0; i < n_; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      if (cols_[k] > i) {
        ++mirror_ptr_[cols_[k] + 1];
        ++strict;
      }
  for (int i = 0; i < n_; ++i) mirror_ptr_[i + 1] += mirror_ptr_[i];
  mirror_row_.resize(strict);
  mirror_val_.resize(strict);
  std::vector<int> next(mirror_ptr_.begin(), mirror_ptr_.end() - 1);
  for (int i = 0; i < n_; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      if (cols_[k] > i) {
        int& p = next[cols_[k]];
        mirror_row_[p] = i;
        mirror_val_[p] = k;
        ++p;
      }
}

long SparseHermitian::nnz_symmetric() const {
  long diag = 0;
  for (int i = 0; i < n_; ++i)
    if (stored(i, i)) ++diag;
  return 2 * (static_cast<long>(vals_.size()) - diag) + diag;
}

int SparseHermitian::bandwidth() const {
  int bw = 0;
  for (int i = 0; i < n_; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      bw = std::max(bw, cols_[k] - i);
  return bw;
}

int SparseHermitian::effective_bandwidth() const {
  return bandwidth_hint_ ? *bandwidth_hint_ : bandwidth();
}

cplx SparseHermitian::entry(int i, int j) const {
  bool conj = false;
  if (i > j) {
    std::swap(i, j);
    conj = true;
  }
  auto first = cols_.begin() + row_ptr_[i];
  auto last = cols_.begin() + row_ptr_[i + 1];
  auto it = std::lower_bound(first, last, j);
  if (it == last || *it != j) return cplx(0.0, 0.0);
  cplx v = vals_[it - cols_.begin()];
  return conj ? std::conj(v) : v;
}

bool SparseHermitian::stored(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto first = cols_.begin() + row_ptr_[i];
  auto last = cols_.begin() + row_ptr_[i + 1];
  return std::binary_search(first, last, j);
}

int SparseHermitian::degree(int i) const {
  int d = 0;
  for_each_in_row(i, [&](int j, cplx) {
    if (j != i) ++d;
  });
  return d;
}

int SparseHermitian::max_degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d = std::max(d, degree(i));
  return d;
}

Eigen::VectorXcd SparseHermitian::multiply(const Eigen::VectorXcd& x) const {
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      const int j = cols_[k];
      const cplx v = vals_[k];
      y[i] += v * x[j];
      if (j != i) y[j] += std::conj(v) * x[i];
    }
  return y;
}

Eigen::MatrixXcd SparseHermitian::to_dense() const {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_, n_);
  for_each_stored([&](int i, int j, cplx v) {
    a(i, j) = v;
    if (i != j) a(j, i) = std::conj(v);
  });
  return a;
}

Eigen::MatrixXd SparseHermitian::to_dense_real() const {
  if (!is_real_)
    throw precondition_error("SparseHermitian", "matrix has complex entries");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for_each_stored([&](int i, int j, cplx v) {
    a(i, j) = v.real();
    if (i != j) a(j, i) = v.real();
  });
  return a;
}

Eigen::SparseMatrix<cplx> SparseHermitian::to_eigen_sparse() const {
  std::vector<Eigen::Triplet<cplx>> ts;
  ts.reserve(static_cast<std::size_t>(nnz_symmetric()));
  for_each_stored([&](int i, int j, cplx v) {
    ts.emplace_back(i, j, v);
    if (i != j) ts.emplace_back(j, i, std::conj(v));
  });
  Eigen::SparseMatrix<cplx> s(n_, n_);
  s.setFromTriplets(ts.begin(), ts.end());
  return s;
}

}  // namespace decay
