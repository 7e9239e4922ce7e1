#pragma once

#include <Eigen/Core>
#include <array>
#include <memory>
#include <utility>
#include <vector>

#include "swk/torus_grid.hpp"

namespace swk {

// One T^2 factor restricted to grid functions invariant under the dihedral
// group of the square about the origin (x <-> y, x -> -x, y -> -y).
class SymmetricFactor {
 public:
  enum Op { kVal = 0, kDx, kDy, kDxx, kDxy, kDyy, kOpCount };

  explicit SymmetricFactor(int samples);

  int samples() const { return n_; }
  int modes() const { return int(point_reps_.size()); }
  // Dihedral orbit representatives 0 <= j <= i <= N/2 and their orbit sizes.
  const std::vector<std::pair<int, int>>& point_reps() const { return point_reps_; }
  const Eigen::VectorXd& point_weights() const { return point_w_; }
  int rep_of(int i, int j) const;
  // Evaluation points: representatives of the quarter-turn rotation orbits.
  const std::vector<std::pair<int, int>>& eval_points() const { return eval_points_; }
  const Eigen::VectorXd& eval_weights() const { return eval_w_; }

  const Eigen::MatrixXd& to_values() const { return t_; }
  const Eigen::MatrixXd& to_modes() const { return tinv_; }
  const Eigen::VectorXd& eigenvalues() const { return eig_; }
  // Maps mode coefficients to op(u) at the evaluation points.
  const Eigen::MatrixXd& eval_matrix(Op op) const { return e_[op]; }

 private:
  int n_;
  std::vector<std::pair<int, int>> point_reps_, mode_reps_, eval_points_;
  std::vector<int> rep_index_;
  Eigen::VectorXd point_w_, eval_w_, eig_;
  Eigen::MatrixXd t_, tinv_;
  std::array<Eigen::MatrixXd, kOpCount> e_;
};

// Product of n identical symmetric factors. Unknowns are values at the
// product of dihedral representatives; inner products carry orbit weights
// so they equal full-grid sums.
class SymmetricProductGrid : public Discretization {
 public:
  SymmetricProductGrid(int n, int samples);
  static std::shared_ptr<const SymmetricProductGrid> make(int n, int samples);

  int n() const override { return n_; }
  int samples() const { return factor_.samples(); }
  const SymmetricFactor& factor() const { return factor_; }
  std::size_t size() const override { return size_; }
  std::size_t full_size() const override { return full_size_; }
  std::string describe() const override;
  // Representative index (per factor) of each unknown.
  std::vector<int> factor_indices(std::size_t flat) const;

  template <class F>
  Array sample(F&& f) const {
    Array out(static_cast<Eigen::Index>(size_));
    std::vector<double> x(std::size_t(2 * n_));
    const double N = samples();
    for (std::size_t p = 0; p < size_; ++p) {
      auto idx = factor_indices(p);
      for (int j = 0; j < n_; ++j) {
        x[2 * j] = factor_.point_reps()[idx[j]].first / N;
        x[2 * j + 1] = factor_.point_reps()[idx[j]].second / N;
      }
      out[Eigen::Index(p)] = f(x);
    }
    return out;
  }

  Array laplacian(const Array& u) const override;
  Array shifted_inverse(const Array& r, double sigma) const override;
  double dot(const Array& a, const Array& b) const override { return (weights_ * a * b).sum(); }
  double mean(const Array& a) const override { return (weights_ * a).sum() / double(full_size_); }
  Array sample_fn(const std::function<double(const std::vector<double>&)>& f) const override { return sample(f); }
  Array prepare(const Array& values) const override { return to_modes(values); }
  std::size_t eval_blocks() const override { return factor_.eval_points().size(); }
  // Block b fixes the first factor at its b-th evaluation point.
  Array evaluate_block(const Array& modes, const std::vector<int>& axes, std::size_t block) const override;
  Array eval_block_weights(std::size_t block) const override;
  const Array& weights() const { return weights_; }

  // op(u) at the product of quarter-turn evaluation points; axes as in TorusGrid.
  Array evaluate(const Array& u, const std::vector<int>& axes) const;
  Array eval_weights() const;
  std::size_t eval_size() const;

  Array to_modes(const Array& u) const;
  Array from_modes(const Array& m) const;

 private:
  int n_;
  SymmetricFactor factor_;
  std::size_t size_ = 0, full_size_ = 0;
  Array weights_, mode_eig_;
};

// Applies `a` along tensor slot `slot` of a row-major array with equal extents `ext`.
Array mode_product(const Array& x, const Eigen::MatrixXd& a, int slot, const std::vector<int>& ext);

}  // namespace swk
