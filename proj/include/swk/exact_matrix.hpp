#pragma once

#include <string>
#include <vector>

#include "swk/exact.hpp"

namespace swk {

using ExactVector = std::vector<ExactScalar>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static ExactMatrix identity(int n);
  static ExactMatrix diagonal(const ExactVector& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ExactScalar& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const ExactScalar& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  ExactMatrix adjoint() const;
  bool is_zero() const;
  bool is_diagonal() const;
  ExactVector diag() const;
  ExactScalar trace() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ExactScalar& c);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactScalar& c, ExactMatrix a) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactVector operator*(const ExactMatrix& a, const ExactVector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<ExactScalar> data_;
};

int rank(ExactMatrix a);
// Basis of {x : a x = 0}.
std::vector<ExactVector> nullspace(ExactMatrix a);

// Exact solver for overdetermined consistent systems a x = b with a of full column rank.
class LeftInverse {
 public:
  explicit LeftInverse(const ExactMatrix& a);
  int rank() const { return rank_; }
  bool full_column_rank() const { return rank_ == cols_; }
  // Throws ArgumentError if a x != b exactly.
  ExactVector solve(const ExactVector& b) const;

 private:
  ExactMatrix a_;
  int cols_ = 0, rank_ = 0;
  std::vector<int> rows_;  // independent rows
  ExactMatrix inv_;        // inverse of the selected square block
};

}  // namespace swk
