#include <string>
#include "swk/symgrid.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "swk/errors.hpp"

namespace swk {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

std::pair<int, int> dihedral_rep(int i, int j, int n) {
  int a = std::min(wrap(i, n), n - wrap(i, n));
  int b = std::min(wrap(j, n), n - wrap(j, n));
  if (a < b) std::swap(a, b);
  return {a, b};
}

std::set<std::pair<int, int>> dihedral_orbit(int i, int j, int n) {
  std::set<std::pair<int, int>> out;
  for (int s : {1, -1})
    for (int t : {1, -1}) {
      out.insert({wrap(s * i, n), wrap(t * j, n)});
      out.insert({wrap(s * j, n), wrap(t * i, n)});
    }
  return out;
}

int signed_k(int k, int n) { return k <= n / 2 ? k : k - n; }

}  // namespace

SymmetricFactor::SymmetricFactor(int samples) : n_(samples) {
  if (n_ < 8 || n_ % 2) throw DimensionError("symmetric factor needs an even sample count >= 8");
  const int h = n_ / 2;
  rep_index_.assign(std::size_t(n_ * n_), -1);
  for (int i = 0; i <= h; ++i)
    for (int j = 0; j <= i; ++j) point_reps_.push_back({i, j});
  mode_reps_ = point_reps_;
  const int m = int(point_reps_.size());
  point_w_.resize(m);
  for (int r = 0; r < m; ++r) {
    auto orbit = dihedral_orbit(point_reps_[r].first, point_reps_[r].second, n_);
    point_w_[r] = double(orbit.size());
    for (auto [a, b] : orbit) rep_index_[std::size_t(a * n_ + b)] = r;
  }

  // Quarter-turn orbit representatives: the lexicographically smallest member.
  std::vector<char> seen(std::size_t(n_ * n_), 0);
  std::vector<double> ew;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (seen[std::size_t(i * n_ + j)]) continue;
      int a = i, b = j, size = 0;
      for (int r = 0; r < 4; ++r) {
        if (!seen[std::size_t(a * n_ + b)]) {
          seen[std::size_t(a * n_ + b)] = 1;
          ++size;
        }
        int na = wrap(-b, n_), nb = a;
        a = na;
        b = nb;
      }
      eval_points_.push_back({i, j});
      ew.push_back(size);
    }
  eval_w_ = Eigen::Map<Eigen::VectorXd>(ew.data(), Eigen::Index(ew.size()));

  const int p = int(eval_points_.size());
  t_.resize(m, m);
  eig_.resize(m);
  for (auto& e : e_) e.resize(p, m);
  for (int c = 0; c < m; ++c) {
    auto orbit = dihedral_orbit(mode_reps_[c].first, mode_reps_[c].second, n_);
    eig_[c] = kTwoPi * kTwoPi *
              (double(signed_k(mode_reps_[c].first, n_)) * signed_k(mode_reps_[c].first, n_) +
               double(signed_k(mode_reps_[c].second, n_)) * signed_k(mode_reps_[c].second, n_));
    auto eval_at = [&](int i, int j, Op op) {
      std::complex<double> acc = 0;
      for (auto [ka, kb] : orbit) {
        double k = signed_k(ka, n_), l = signed_k(kb, n_);
        bool nyq_k = 2 * ka == n_, nyq_l = 2 * kb == n_;
        std::complex<double> ik(0, kTwoPi * k), il(0, kTwoPi * l), mult = 1;
        switch (op) {
          case kVal: break;
          case kDx: mult = nyq_k ? 0.0 : ik; break;
          case kDy: mult = nyq_l ? 0.0 : il; break;
          case kDxx: mult = ik * ik; break;
          case kDyy: mult = il * il; break;
          case kDxy: mult = (nyq_k || nyq_l) ? 0.0 : ik * il; break;
          default: break;
        }
        acc += mult * std::polar(1.0, kTwoPi * (k * i + l * j) / n_);
      }
      return acc.real();
    };
    for (int r = 0; r < m; ++r) t_(r, c) = eval_at(point_reps_[r].first, point_reps_[r].second, kVal);
    for (int q = 0; q < p; ++q)
      for (int op = 0; op < kOpCount; ++op)
        e_[op](q, c) = eval_at(eval_points_[q].first, eval_points_[q].second, Op(op));
  }
  tinv_ = t_.inverse();
}

int SymmetricFactor::rep_of(int i, int j) const {
  auto r = dihedral_rep(i, j, n_);
  return rep_index_[std::size_t(r.first * n_ + r.second)];
}

Array mode_product(const Array& x, const Eigen::MatrixXd& a, int slot, const std::vector<int>& ext) {
  using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  std::size_t pre = 1, post = 1;
  for (int s = 0; s < slot; ++s) pre *= std::size_t(ext[s]);
  for (std::size_t s = std::size_t(slot) + 1; s < ext.size(); ++s) post *= std::size_t(ext[s]);
  const auto in_ext = Eigen::Index(ext[slot]);
  if (a.cols() != in_ext) throw DimensionError("mode product extent mismatch");
  const Eigen::Index rows = a.rows();
  if (std::size_t(x.size()) != pre * std::size_t(in_ext) * post) throw DimensionError("mode product size mismatch");
  Array out(Eigen::Index(pre * std::size_t(rows) * post));
  for (std::size_t b = 0; b < pre; ++b) {
    Eigen::Map<const RowMat> in(x.data() + b * std::size_t(in_ext) * post, in_ext, Eigen::Index(post));
    Eigen::Map<RowMat> res(out.data() + b * std::size_t(rows) * post, rows, Eigen::Index(post));
    res.noalias() = a * in;
  }
  return out;
}

SymmetricProductGrid::SymmetricProductGrid(int n, int samples) : n_(n), factor_(samples) {
  if (n < 1 || n > 4) throw DimensionError("symmetric product grids need 1 to 4 factors");
  const auto m = std::size_t(factor_.modes());
  size_ = 1;
  full_size_ = 1;
  for (int j = 0; j < n; ++j) {
    size_ *= m;
    full_size_ *= std::size_t(samples) * std::size_t(samples);
  }
  weights_.resize(Eigen::Index(size_));
  mode_eig_.resize(Eigen::Index(size_));
  for (std::size_t p = 0; p < size_; ++p) {
    auto idx = factor_indices(p);
    double w = 1, e = 0;
    for (int i : idx) {
      w *= factor_.point_weights()[i];
      e += factor_.eigenvalues()[i];
    }
    weights_[Eigen::Index(p)] = w;
    mode_eig_[Eigen::Index(p)] = e;
  }
}

std::shared_ptr<const SymmetricProductGrid> SymmetricProductGrid::make(int n, int samples) {
  return std::make_shared<const SymmetricProductGrid>(n, samples);
}

std::vector<int> SymmetricProductGrid::factor_indices(std::size_t flat) const {
  std::vector<int> idx(static_cast<std::size_t>(n_));
  const auto m = std::size_t(factor_.modes());
  for (int j = n_ - 1; j >= 0; --j) {
    idx[std::size_t(j)] = int(flat % m);
    flat /= m;
  }
  return idx;
}

Array SymmetricProductGrid::to_modes(const Array& u) const {
  if (std::size_t(u.size()) != size_) throw DimensionError("field size does not match the symmetric grid");
  std::vector<int> ext(std::size_t(n_), factor_.modes());
  Array x = u;
  for (int j = 0; j < n_; ++j) x = mode_product(x, factor_.to_modes(), j, ext);
  return x;
}

Array SymmetricProductGrid::from_modes(const Array& m) const {
  std::vector<int> ext(std::size_t(n_), factor_.modes());
  Array x = m;
  for (int j = 0; j < n_; ++j) x = mode_product(x, factor_.to_values(), j, ext);
  return x;
}

Array SymmetricProductGrid::laplacian(const Array& u) const { return from_modes(to_modes(u) * mode_eig_); }

Array SymmetricProductGrid::shifted_inverse(const Array& r, double sigma) const {
  Array d = mode_eig_ + sigma;
  Array inv = (d == 0).select(Array::Zero(d.size()), d.inverse());
  return from_modes(to_modes(r) * inv);
}

namespace {

SymmetricFactor::Op op_for(int cx, int cy) {
  if (cx == 0 && cy == 0) return SymmetricFactor::kVal;
  if (cx == 1 && cy == 0) return SymmetricFactor::kDx;
  if (cx == 0 && cy == 1) return SymmetricFactor::kDy;
  if (cx == 2 && cy == 0) return SymmetricFactor::kDxx;
  if (cx == 1 && cy == 1) return SymmetricFactor::kDxy;
  if (cx == 0 && cy == 2) return SymmetricFactor::kDyy;
  throw DimensionError("symmetric grids support derivatives up to order two per factor");
}

std::vector<std::array<int, 2>> axis_counts(int n, const std::vector<int>& axes) {
  std::vector<std::array<int, 2>> count(std::size_t(n), {0, 0});
  for (int a : axes) {
    if (a < 0 || a >= 2 * n) throw DimensionError("derivative axis out of range");
    ++count[std::size_t(a / 2)][std::size_t(a % 2)];
  }
  return count;
}

}  // namespace

Array SymmetricProductGrid::evaluate(const Array& u, const std::vector<int>& axes) const {
  auto count = axis_counts(n_, axes);
  Array x = to_modes(u);
  std::vector<int> ext(std::size_t(n_), factor_.modes());
  for (int j = 0; j < n_; ++j) {
    auto [cx, cy] = count[std::size_t(j)];
    x = mode_product(x, factor_.eval_matrix(op_for(cx, cy)), j, ext);
    ext[std::size_t(j)] = int(factor_.eval_points().size());
  }
  return x;
}

Array SymmetricProductGrid::evaluate_block(const Array& modes, const std::vector<int>& axes,
                                           std::size_t block) const {
  if (block >= eval_blocks()) throw DimensionError("evaluation block out of range");
  auto count = axis_counts(n_, axes);
  std::vector<int> ext(std::size_t(n_), factor_.modes());
  const Eigen::MatrixXd& e0 = factor_.eval_matrix(op_for(count[0][0], count[0][1]));
  Eigen::MatrixXd row = e0.row(Eigen::Index(block));
  Array x = mode_product(modes, row, 0, ext);
  ext[0] = 1;
  for (int j = 1; j < n_; ++j) {
    auto [cx, cy] = count[std::size_t(j)];
    x = mode_product(x, factor_.eval_matrix(op_for(cx, cy)), j, ext);
    ext[std::size_t(j)] = int(factor_.eval_points().size());
  }
  return x;
}

Array SymmetricProductGrid::eval_block_weights(std::size_t block) const {
  const auto& fw = factor_.eval_weights();
  Array w = Array::Constant(1, fw[Eigen::Index(block)]);
  for (int j = 1; j < n_; ++j) {
    Array next(w.size() * fw.size());
    for (Eigen::Index a = 0; a < w.size(); ++a)
      for (Eigen::Index b = 0; b < fw.size(); ++b) next[a * fw.size() + b] = w[a] * fw[b];
    w = next;
  }
  return w;
}

std::string SymmetricProductGrid::describe() const {
  return "dihedral-symmetric " + std::to_string(samples()) + "^" + std::to_string(2 * n_);
}

std::size_t SymmetricProductGrid::eval_size() const {
  std::size_t s = 1;
  for (int j = 0; j < n_; ++j) s *= factor_.eval_points().size();
  return s;
}

Array SymmetricProductGrid::eval_weights() const {
  Array w = Array::Ones(1);
  std::vector<int> ext;
  for (int j = 0; j < n_; ++j) {
    const auto& fw = factor_.eval_weights();
    Array next(w.size() * fw.size());
    for (Eigen::Index a = 0; a < w.size(); ++a)
      for (Eigen::Index b = 0; b < fw.size(); ++b) next[a * fw.size() + b] = w[a] * fw[b];
    w = next;
  }
  return w;
}

}  // namespace swk
