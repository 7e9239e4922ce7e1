#include "swk/exact_matrix.hpp"

#include <sstream>

#include "swk/errors.hpp"

namespace swk {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const ExactVector& d) {
  ExactMatrix m(int(d.size()), int(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
  return m;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

ExactVector ExactMatrix::diag() const {
  ExactVector d;
  for (int i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
  return d;
}

ExactScalar ExactMatrix::trace() const {
  ExactScalar t;
  for (const auto& x : diag()) t += x;
  return t;
}

namespace {

void require_shape(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix shape mismatch");
}

}  // namespace

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_shape(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ExactMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const ExactScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
  if (a.cols_ != int(v.size())) throw DimensionError("matrix-vector shape mismatch");
  ExactVector out(a.rows_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(ExactMatrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    ExactScalar inv = a(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      ExactScalar f = a(i, c);
      for (int j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(ExactMatrix a) { return int(rref(a).size()); }

std::vector<ExactVector> nullspace(ExactMatrix a) {
  std::vector<int> piv = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<ExactVector> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    ExactVector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(int(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

LeftInverse::LeftInverse(const ExactMatrix& a) : a_(a), cols_(a.cols()) {
  // Greedy independent-row selection via elimination on the transpose.
  ExactMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  rows_ = rref(t);
  rank_ = int(rows_.size());
  if (rank_ != cols_) return;
  ExactMatrix block(cols_, 2 * cols_);
  for (int i = 0; i < cols_; ++i) {
    for (int j = 0; j < cols_; ++j) block(i, j) = a(rows_[i], j);
    block(i, cols_ + i) = 1;
  }
  rref(block);
  inv_ = ExactMatrix(cols_, cols_);
  for (int i = 0; i < cols_; ++i)
    for (int j = 0; j < cols_; ++j) inv_(i, j) = block(i, cols_ + j);
}

ExactVector LeftInverse::solve(const ExactVector& b) const {
  if (!full_column_rank()) throw ArgumentError("system matrix is rank deficient");
  if (int(b.size()) != a_.rows()) throw DimensionError("right-hand side has the wrong length");
  ExactVector sel(cols_);
  for (int i = 0; i < cols_; ++i) sel[i] = b[rows_[i]];
  ExactVector x = inv_ * sel;
  if (a_ * x != b) throw ArgumentError("right-hand side is outside the image");
  return x;
}

}  // namespace swk
