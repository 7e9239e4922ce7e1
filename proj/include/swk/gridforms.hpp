#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "swk/discretization.hpp"
#include "swk/exalg.hpp"

namespace swk {

using cplx = std::complex<double>;

// coeff * d^axes(field). Field -1 is the literal constant 1, whose derivatives vanish identically.
struct LinTerm {
  int field = -1;
  std::vector<int> axes;
  cplx coeff;
};

// Differential form whose coefficients are linear combinations of derivatives of scalar fields.
class LinForm {
 public:
  explicit LinForm(int rdim = 2) : rdim_(rdim) {}
  int rdim() const { return rdim_; }
  const std::map<Mask, std::vector<LinTerm>>& comps() const { return comps_; }

  // field * c, with c a constant form.
  static LinForm times(int field, const std::vector<int>& axes, const MultiVector& c, cplx s = 1);
  static LinForm constant(const MultiVector& c, cplx s = 1) { return times(-1, {}, c, s); }
  // d dbar of a field: sum_jk H_jk dz_j ^ dzbar_k with H_jk = d^2 field / dz_j dzbar_k.
  static LinForm ddbar(int rdim, int field, cplx s = 1);

  void add(Mask m, const LinTerm& t);
  LinForm& operator+=(const LinForm& o);
  LinForm& operator*=(cplx s);
  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a += (LinForm(b) *= -1.0); }
  friend LinForm operator*(cplx s, LinForm a) { return a *= s; }

  LinForm d() const;
  // Flat codifferential -sum_a i(e_a) d/dx_a.
  LinForm dstar() const;
  LinForm star() const;
  LinForm wedge(const MultiVector& c) const;
  // Merges equal terms and drops exact zeros.
  LinForm simplified() const;
  std::size_t term_count() const;

 private:
  int rdim_;
  std::map<Mask, std::vector<LinTerm>> comps_;
};

std::map<Mask, cplx> to_numeric(const MultiVector& c);

using NumForm = std::map<Mask, Eigen::ArrayXcd>;

// Values of grid fields and their derivatives on one evaluation block, with caching.
class BlockEval {
 public:
  using Pointwise = std::function<Array(BlockEval&)>;
  BlockEval(const Discretization& g, const std::vector<Array>& prepared, std::size_t block,
            const std::vector<Pointwise>* pointwise = nullptr);
  std::size_t points() const { return points_; }
  // Field ids >= prepared.size() refer to pointwise fields (no derivatives).
  const Array& get(int field, std::vector<int> axes);
  NumForm eval(const LinForm& f);

 private:
  const Discretization& g_;
  const std::vector<Array>& prepared_;
  std::size_t block_;
  const std::vector<Pointwise>* pointwise_;
  std::size_t points_;
  std::map<std::pair<int, std::vector<int>>, Array> cache_;
};

// Pointwise sum |c_I|^2.
Array norm2(const NumForm& f, Eigen::Index points);
NumForm add(const NumForm& a, const NumForm& b, cplx s = 1);

// Exact linear map on forms applied to numeric coefficient arrays.
class FormMap {
 public:
  FormMap(int rdim, std::function<MultiVector(const MultiVector&)> f) : rdim_(rdim), f_(std::move(f)) {}
  NumForm operator()(const NumForm& x);

 private:
  int rdim_;
  std::function<MultiVector(const MultiVector&)> f_;
  std::map<Mask, std::map<Mask, cplx>> images_;
};

// Running sup and weighted mean-square of pointwise norms.
struct NormAccumulator {
  double sup = 0;
  double sum_w2 = 0;
  double weight = 0;
  void add(const Array& n2, const Array& w);
  double l2() const;
};

}  // namespace swk
