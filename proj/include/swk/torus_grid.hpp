#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "swk/discretization.hpp"

namespace swk {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2 * kPi;
inline constexpr std::size_t kDefaultGridBudget = std::size_t(1) << 24;

// Axis 2j is x_{j+1}, axis 2j+1 is y_{j+1}; unit period, row-major samples (last axis fastest).
class TorusGrid : public Discretization {
 public:
  // Even sample counts >= 8 per axis; total bounded by `budget`.
  explicit TorusGrid(std::vector<int> dims, std::size_t budget = kDefaultGridBudget);
  ~TorusGrid();
  TorusGrid(const TorusGrid&) = delete;
  TorusGrid& operator=(const TorusGrid&) = delete;

  static std::shared_ptr<const TorusGrid> make(std::vector<int> dims, std::size_t budget = kDefaultGridBudget);
  static std::shared_ptr<const TorusGrid> cube(int n, int samples, std::size_t budget = kDefaultGridBudget);

  int n() const override { return int(dims_.size()) / 2; }
  int axes() const { return int(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const override { return size_; }
  std::vector<int> multi_index(std::size_t flat) const;
  double coord(std::size_t flat, int axis) const;
  // Function of all coordinates sampled on the grid.
  template <class F>
  Array sample(F&& f) const {
    Array out(static_cast<Eigen::Index>(size_));
    std::vector<double> x(dims_.size());
    for (std::size_t p = 0; p < size_; ++p) {
      auto idx = multi_index(p);
      for (std::size_t a = 0; a < x.size(); ++a) x[a] = double(idx[a]) / dims_[a];
      out[Eigen::Index(p)] = f(x);
    }
    return out;
  }

  Array laplacian(const Array& u) const override;
  // Mixed spectral derivative along the listed axes (repeats allowed).
  Array derivative(const Array& u, const std::vector<int>& axes) const;
  // (Delta + sigma)^{-1} r; sigma = 0 inverts on zero-mean data and returns zero mean.
  Array shifted_inverse(const Array& r, double sigma) const override;

  double dot(const Array& a, const Array& b) const override { return (a * b).sum(); }
  double mean(const Array& a) const override { return a.sum() / double(size_); }
  std::size_t full_size() const override { return size_; }
  std::string describe() const override;
  Array sample_fn(const std::function<double(const std::vector<double>&)>& f) const override { return sample(f); }
  Array prepare(const Array& values) const override { return values; }
  std::size_t eval_blocks() const override { return 1; }
  Array evaluate_block(const Array& prepared, const std::vector<int>& axes, std::size_t) const override {
    return evaluate(prepared, axes);
  }
  Array eval_block_weights(std::size_t) const override { return eval_weights(); }

  // Evaluation-point interface shared with the symmetric discretization.
  Array evaluate(const Array& u, const std::vector<int>& axes) const {
    return axes.empty() ? u : derivative(u, axes);
  }
  Array eval_weights() const { return Array::Ones(Eigen::Index(size_)); }

  std::vector<std::complex<double>> forward(const Array& u) const;
  Array backward(std::vector<std::complex<double>> spec) const;
  std::size_t spectrum_size() const { return spec_size_; }
  // Signed wavenumber of every spectral slot along each axis.
  int wavenumber(std::size_t slot, int axis) const;

 private:
  std::vector<int> dims_;
  std::size_t size_ = 0, spec_size_ = 0;
  void* plan_fwd_ = nullptr;
  void* plan_bwd_ = nullptr;
};

}  // namespace swk
