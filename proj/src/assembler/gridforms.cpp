#include "swk/gridforms.hpp"

#include <algorithm>
#include <cmath>

#include "swk/errors.hpp"

namespace swk {

std::map<Mask, cplx> to_numeric(const MultiVector& c) {
  std::map<Mask, cplx> out;
  for (const auto& [m, v] : c.terms()) out[m] = v.to_complex();
  return out;
}

LinForm LinForm::times(int field, const std::vector<int>& axes, const MultiVector& c, cplx s) {
  LinForm f(c.rdim());
  for (const auto& [m, v] : to_numeric(c)) f.add(m, {field, axes, s * v});
  return f;
}

LinForm LinForm::ddbar(int rdim, int field, cplx s) {
  const int n = rdim / 2;
  LinForm out(rdim);
  const cplx I(0, 1);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      MultiVector b = swk::wedge(MultiVector::dz(n, j + 1), MultiVector::dzbar(n, k + 1));
      const int xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
      out += times(field, {xj, xk}, b, 0.25 * s);
      out += times(field, {yj, yk}, b, 0.25 * s);
      out += times(field, {xj, yk}, b, 0.25 * I * s);
      out += times(field, {yj, xk}, b, -0.25 * I * s);
    }
  return out.simplified();
}

void LinForm::add(Mask m, const LinTerm& t) {
  LinTerm c = t;
  std::sort(c.axes.begin(), c.axes.end());
  comps_[m].push_back(std::move(c));
}

LinForm& LinForm::operator+=(const LinForm& o) {
  if (o.rdim_ != rdim_) throw DimensionError("adding forms of different dimensions");
  for (const auto& [m, ts] : o.comps_)
    for (const auto& t : ts) comps_[m].push_back(t);
  return *this;
}

LinForm& LinForm::operator*=(cplx s) {
  for (auto& [m, ts] : comps_)
    for (auto& t : ts) t.coeff *= s;
  return *this;
}

LinForm LinForm::d() const {
  LinForm out(rdim_);
  for (const auto& [m, ts] : comps_)
    for (int a = 0; a < rdim_; ++a) {
      Mask bit = Mask(1) << a;
      if (m & bit) continue;
      double sign = merge_sign(bit, m);
      for (const auto& t : ts) {
        if (t.field < 0) continue;
        LinTerm nt = t;
        nt.axes.push_back(a);
        nt.coeff *= sign;
        out.add(m | bit, nt);
      }
    }
  return out.simplified();
}

LinForm LinForm::dstar() const {
  LinForm out(rdim_);
  for (const auto& [m, ts] : comps_)
    for (int a = 0; a < rdim_; ++a) {
      Mask bit = Mask(1) << a;
      if (!(m & bit)) continue;
      double sign = (popcount(m & (bit - 1)) % 2) ? 1.0 : -1.0;
      for (const auto& t : ts) {
        if (t.field < 0) continue;
        LinTerm nt = t;
        nt.axes.push_back(a);
        nt.coeff *= sign;
        out.add(m & ~bit, nt);
      }
    }
  return out.simplified();
}

LinForm LinForm::star() const {
  LinForm out(rdim_);
  for (const auto& [m, ts] : comps_) {
    MultiVector s = hodge_star(MultiVector::monomial(rdim_ / 2, m));
    for (const auto& [sm, sv] : to_numeric(s))
      for (const auto& t : ts) {
        LinTerm nt = t;
        nt.coeff *= sv;
        out.add(sm, nt);
      }
  }
  return out.simplified();
}

LinForm LinForm::wedge(const MultiVector& c) const {
  if (c.rdim() != rdim_) throw DimensionError("wedge with a form of different dimension");
  LinForm out(rdim_);
  for (const auto& [m, ts] : comps_) {
    MultiVector w = swk::wedge(MultiVector::monomial(rdim_ / 2, m), c);
    for (const auto& [wm, wv] : to_numeric(w))
      for (const auto& t : ts) {
        LinTerm nt = t;
        nt.coeff *= wv;
        out.add(wm, nt);
      }
  }
  return out.simplified();
}

LinForm LinForm::simplified() const {
  LinForm out(rdim_);
  for (const auto& [m, ts] : comps_) {
    std::map<std::pair<int, std::vector<int>>, cplx> acc;
    for (const auto& t : ts) acc[{t.field, t.axes}] += t.coeff;
    for (const auto& [k, c] : acc)
      if (c != cplx(0)) out.comps_[m].push_back({k.first, k.second, c});
  }
  return out;
}

std::size_t LinForm::term_count() const {
  std::size_t n = 0;
  for (const auto& [m, ts] : comps_) n += ts.size();
  return n;
}

BlockEval::BlockEval(const Discretization& g, const std::vector<Array>& prepared, std::size_t block,
                     const std::vector<Pointwise>* pointwise)
    : g_(g), prepared_(prepared), block_(block), pointwise_(pointwise) {
  points_ = std::size_t(g.eval_block_weights(block).size());
}

const Array& BlockEval::get(int field, std::vector<int> axes) {
  std::sort(axes.begin(), axes.end());
  auto key = std::make_pair(field, axes);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Array v;
  if (field < 0) {
    if (!axes.empty()) throw ArgumentError("derivative of the literal constant");
    v = Array::Ones(Eigen::Index(points_));
  } else if (std::size_t(field) < prepared_.size()) {
    v = g_.evaluate_block(prepared_[std::size_t(field)], axes, block_);
  } else {
    std::size_t k = std::size_t(field) - prepared_.size();
    if (!pointwise_ || k >= pointwise_->size()) throw ArgumentError("unknown field id");
    if (!axes.empty()) throw ArgumentError("pointwise fields carry no derivatives");
    v = (*pointwise_)[k](*this);
  }
  return cache_.emplace(key, std::move(v)).first->second;
}

NumForm BlockEval::eval(const LinForm& f) {
  NumForm out;
  for (const auto& [m, ts] : f.comps()) {
    Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(Eigen::Index(points_));
    for (const auto& t : ts) acc += t.coeff * get(t.field, t.axes).cast<cplx>();
    out[m] = std::move(acc);
  }
  return out;
}

Array norm2(const NumForm& f, Eigen::Index points) {
  Array out = Array::Zero(points);
  for (const auto& [m, v] : f) out += v.abs2();
  return out;
}

NumForm add(const NumForm& a, const NumForm& b, cplx s) {
  NumForm out = a;
  for (const auto& [m, v] : b) {
    auto it = out.find(m);
    if (it == out.end()) out[m] = s * v;
    else it->second += s * v;
  }
  return out;
}

NumForm FormMap::operator()(const NumForm& x) {
  NumForm out;
  for (const auto& [m, v] : x) {
    auto it = images_.find(m);
    if (it == images_.end()) it = images_.emplace(m, to_numeric(f_(MultiVector::monomial(rdim_ / 2, m)))).first;
    for (const auto& [im, c] : it->second) {
      auto o = out.find(im);
      if (o == out.end()) out[im] = c * v;
      else o->second += c * v;
    }
  }
  return out;
}

void NormAccumulator::add(const Array& n2, const Array& w) {
  if (n2.size() == 0) return;
  sup = std::max(sup, std::sqrt(n2.maxCoeff()));
  sum_w2 += (w * n2).sum();
  weight += w.sum();
}

double NormAccumulator::l2() const { return weight > 0 ? std::sqrt(sum_w2 / weight) : 0.0; }

}  // namespace swk
