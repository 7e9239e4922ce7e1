#include "swk/torus_grid.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

#include "swk/errors.hpp"

namespace swk {

namespace {

std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t bytes) : p(fftw_malloc(bytes)) {
    if (!p) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(p); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* p;
};

}  // namespace

TorusGrid::TorusGrid(std::vector<int> dims, std::size_t budget) : dims_(std::move(dims)) {
  if (dims_.empty() || dims_.size() % 2 || dims_.size() > 8) throw DimensionError("torus grids need 2, 4, 6 or 8 axes");
  size_ = 1;
  for (int d : dims_) {
    if (d < 8 || d % 2) throw DimensionError("each axis needs an even sample count >= 8");
    size_ *= std::size_t(d);
    if (size_ > budget) throw DimensionError("grid exceeds the configured point budget");
  }
  spec_size_ = size_ / dims_.back() * (dims_.back() / 2 + 1);
  std::lock_guard<std::mutex> lock(planner_mutex());
  FftwBuffer in(sizeof(double) * size_), out(sizeof(fftw_complex) * spec_size_);
  plan_fwd_ = fftw_plan_dft_r2c(int(dims_.size()), dims_.data(), static_cast<double*>(in.p),
                                static_cast<fftw_complex*>(out.p), FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_c2r(int(dims_.size()), dims_.data(), static_cast<fftw_complex*>(out.p),
                                static_cast<double*>(in.p), FFTW_ESTIMATE);
  if (!plan_fwd_ || !plan_bwd_) throw DimensionError("FFT planning failed");
}

std::string TorusGrid::describe() const {
  std::string s = "full ";
  for (std::size_t i = 0; i < dims_.size(); ++i) s += (i ? "x" : "") + std::to_string(dims_[i]);
  return s;
}

TorusGrid::~TorusGrid() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

std::shared_ptr<const TorusGrid> TorusGrid::make(std::vector<int> dims, std::size_t budget) {
  return std::make_shared<const TorusGrid>(std::move(dims), budget);
}

std::shared_ptr<const TorusGrid> TorusGrid::cube(int n, int samples, std::size_t budget) {
  return make(std::vector<int>(std::size_t(2 * n), samples), budget);
}

std::vector<int> TorusGrid::multi_index(std::size_t flat) const {
  std::vector<int> idx(dims_.size());
  for (int a = int(dims_.size()) - 1; a >= 0; --a) {
    idx[a] = int(flat % dims_[a]);
    flat /= dims_[a];
  }
  return idx;
}

double TorusGrid::coord(std::size_t flat, int axis) const {
  return double(multi_index(flat).at(axis)) / dims_[axis];
}

int TorusGrid::wavenumber(std::size_t slot, int axis) const {
  const int last = int(dims_.size()) - 1;
  const int half = dims_[last] / 2 + 1;
  int idx_last = int(slot % half);
  if (axis == last) return idx_last;
  slot /= half;
  for (int a = last - 1; a >= 0; --a) {
    int i = int(slot % dims_[a]);
    slot /= dims_[a];
    if (a == axis) return i <= dims_[a] / 2 ? i : i - dims_[a];
  }
  return 0;
}

std::vector<std::complex<double>> TorusGrid::forward(const Array& u) const {
  if (std::size_t(u.size()) != size_) throw DimensionError("field size does not match the grid");
  FftwBuffer in(sizeof(double) * size_), out(sizeof(fftw_complex) * spec_size_);
  std::memcpy(in.p, u.data(), sizeof(double) * size_);
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_fwd_), static_cast<double*>(in.p),
                       static_cast<fftw_complex*>(out.p));
  std::vector<std::complex<double>> spec(spec_size_);
  std::memcpy(spec.data(), out.p, sizeof(fftw_complex) * spec_size_);
  const double scale = 1.0 / double(size_);
  for (auto& z : spec) z *= scale;
  return spec;
}

Array TorusGrid::backward(std::vector<std::complex<double>> spec) const {
  if (spec.size() != spec_size_) throw DimensionError("spectrum size does not match the grid");
  FftwBuffer in(sizeof(fftw_complex) * spec_size_), out(sizeof(double) * size_);
  std::memcpy(in.p, spec.data(), sizeof(fftw_complex) * spec_size_);
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_bwd_), static_cast<fftw_complex*>(in.p),
                       static_cast<double*>(out.p));
  Array u(static_cast<Eigen::Index>(size_));
  std::memcpy(u.data(), out.p, sizeof(double) * size_);
  return u;
}

namespace {

// Applies a per-slot multiplier computed from the per-axis wavenumbers.
template <class F>
void for_each_slot(const TorusGrid& g, std::vector<std::complex<double>>& spec, F&& f) {
  const auto& dims = g.dims();
  const int axes = int(dims.size());
  std::vector<int> k(axes, 0), idx(axes, 0);
  std::vector<int> ext(dims);
  ext.back() = dims.back() / 2 + 1;
  for (std::size_t s = 0; s < spec.size(); ++s) {
    for (int a = 0; a < axes; ++a) {
      int i = idx[a];
      k[a] = (a == axes - 1 || i <= dims[a] / 2) ? i : i - dims[a];
    }
    spec[s] *= f(k);
    for (int a = axes - 1; a >= 0; --a) {
      if (++idx[a] < ext[a]) break;
      idx[a] = 0;
    }
  }
}

}  // namespace

Array TorusGrid::laplacian(const Array& u) const {
  auto spec = forward(u);
  for_each_slot(*this, spec, [](const std::vector<int>& k) {
    double s = 0;
    for (int v : k) s += double(v) * v;
    return std::complex<double>(kTwoPi * kTwoPi * s, 0);
  });
  return backward(std::move(spec));
}

Array TorusGrid::derivative(const Array& u, const std::vector<int>& axes_list) const {
  std::vector<int> count(dims_.size(), 0);
  for (int a : axes_list) {
    if (a < 0 || a >= int(dims_.size())) throw DimensionError("derivative axis out of range");
    ++count[a];
  }
  auto spec = forward(u);
  for_each_slot(*this, spec, [&](const std::vector<int>& k) {
    std::complex<double> m(1, 0);
    for (std::size_t a = 0; a < k.size(); ++a) {
      if (!count[a]) continue;
      // Odd derivatives of the Nyquist mode are set to zero.
      if (2 * std::abs(k[a]) == dims_[a] && count[a] % 2) return std::complex<double>(0, 0);
      for (int c = 0; c < count[a]; ++c) m *= std::complex<double>(0, kTwoPi * k[a]);
    }
    return m;
  });
  return backward(std::move(spec));
}

Array TorusGrid::shifted_inverse(const Array& r, double sigma) const {
  auto spec = forward(r);
  for_each_slot(*this, spec, [sigma](const std::vector<int>& k) {
    double s = 0;
    for (int v : k) s += double(v) * v;
    double d = kTwoPi * kTwoPi * s + sigma;
    return std::complex<double>(d == 0 ? 0 : 1 / d, 0);
  });
  return backward(std::move(spec));
}

}  // namespace swk
