#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace swk {

using Array = Eigen::ArrayXd;

// Common interface of the periodic discretizations. Unknowns are real samples;
// evaluation points cover the full grid up to isometries that preserve pointwise norms.
class Discretization {
 public:
  virtual ~Discretization() = default;
  virtual int n() const = 0;
  virtual std::size_t size() const = 0;
  virtual std::size_t full_size() const = 0;
  virtual std::string describe() const = 0;
  virtual Array laplacian(const Array& u) const = 0;
  virtual Array shifted_inverse(const Array& r, double sigma) const = 0;
  virtual double dot(const Array& a, const Array& b) const = 0;
  virtual double mean(const Array& a) const = 0;
  virtual Array sample_fn(const std::function<double(const std::vector<double>&)>& f) const = 0;

  virtual Array prepare(const Array& values) const = 0;
  virtual std::size_t eval_blocks() const = 0;
  virtual Array evaluate_block(const Array& prepared, const std::vector<int>& axes, std::size_t block) const = 0;
  virtual Array eval_block_weights(std::size_t block) const = 0;
};

}  // namespace swk
