#include "swk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "swk/errors.hpp"

namespace swk {

namespace {

constexpr int kSeriesCut = 8;

void require_degree(int d) {
  if (d < 0) throw ArgumentError("bundle degrees must be nonnegative");
}

}  // namespace

double theta_tail_bound(int degree) {
  // |term n| <= e^{-pi d n^2 + 2 pi d |n|} for y in [0, 1).
  double tail = 0;
  for (int m = kSeriesCut + 1; m < kSeriesCut + 40; ++m)
    tail += 2 * std::exp(-kPi * degree * (double(m) * m - 2.0 * m));
  return tail;
}

double theta_density_at(int d, double x, double y) {
  require_degree(d);
  if (d == 0) return 1;
  std::complex<double> s = 0;
  const std::complex<double> z(x, y);
  for (int n = -kSeriesCut; n <= kSeriesCut; ++n)
    s += std::exp(-kPi * d * double(n) * n + std::complex<double>(0, kTwoPi * d * n) * z);
  return std::norm(s) * std::exp(-kTwoPi * d * y * y);
}

FactorBundle trivial_factor(int samples) {
  FactorBundle f;
  f.grid = TorusGrid::cube(1, samples);
  f.density = Array::Ones(Eigen::Index(f.grid->size()));
  return f;
}

FactorBundle theta_density(int d, int samples) {
  if (d < 1) throw ArgumentError("theta densities need degree >= 1");
  if (samples < 32) throw DimensionError("theta densities need at least 32 samples per axis");
  if (theta_tail_bound(d) >= 1e-14) throw ValidationError("theta series truncation not converged");
  FactorBundle f;
  f.degree = d;
  f.grid = TorusGrid::cube(1, samples);
  const auto& g = *f.grid;
  f.density = g.sample([d](const std::vector<double>& x) { return theta_density_at(d, x[0], x[1]); });
  f.curvature_coeff = -kTwoPi * d;
  // Unit-area factor: (i/2pi) c i = -c/(2pi).
  f.degree_integral = -f.curvature_coeff / kTwoPi;

  const Array& w = f.density;
  const double wmax = w.maxCoeff();
  Array wx = g.derivative(w, {0}), wy = g.derivative(w, {1});
  Array lap = g.laplacian(w);
  // Delta log W with Delta = -(dxx + dyy).
  Array lap_log = lap / w + (wx * wx + wy * wy) / (w * w);
  double cert = 0;
  for (Eigen::Index p = 0; p < w.size(); ++p)
    if (w[p] > 1e-3 * wmax) cert = std::max(cert, std::abs(-0.5 * lap_log[p] - f.curvature_coeff));
  f.holomorphy_certificate = cert;

  const int N = samples;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double v = w[i * N + j];
      if (v >= 1e-3 * wmax) continue;
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (!di && !dj) continue;
          double nb = w[((i + di + N) % N) * N + (j + dj + N) % N];
          if (nb < v || (nb == v && (di < 0 || (di == 0 && dj < 0)))) {
            is_min = false;
            break;
          }
        }
      if (is_min) f.zeros.push_back({double(i) / N, double(j) / N});
    }
  return f;
}

LineBundleData product_bundle(const std::vector<FactorBundle>& factors) {
  if (factors.empty() || factors.size() > 4) throw DimensionError("products need 1 to 4 factors");
  const int N = factors[0].grid->dims()[0];
  for (const auto& f : factors)
    if (f.grid->dims() != factors[0].grid->dims()) throw DimensionError("factor grids are not compatible");
  LineBundleData out;
  auto g = TorusGrid::cube(int(factors.size()), N);
  Array dens = Array::Ones(Eigen::Index(g->size()));
  const std::size_t per = std::size_t(N) * N;
  for (std::size_t p = 0; p < g->size(); ++p) {
    std::size_t rest = p;
    double v = 1;
    for (int j = int(factors.size()) - 1; j >= 0; --j) {
      v *= factors[std::size_t(j)].density[Eigen::Index(rest % per)];
      rest /= per;
    }
    dens[Eigen::Index(p)] = v;
  }
  out.density = ScalarField(g, dens);
  for (const auto& f : factors) {
    out.factor_degrees.push_back(f.degree);
    out.ref_curvature_coeffs.push_back(f.curvature_coeff);
    out.holomorphy_certificate = std::max(out.holomorphy_certificate, f.holomorphy_certificate);
  }
  return out;
}

Array product_density(const TorusGrid& g, const std::vector<int>& degrees) {
  if (int(degrees.size()) != g.n()) throw DimensionError("one degree per factor required");
  return g.sample([&](const std::vector<double>& x) {
    double v = 1;
    for (std::size_t j = 0; j < degrees.size(); ++j) v *= theta_density_at(degrees[j], x[2 * j], x[2 * j + 1]);
    return v;
  });
}

bool dihedral_invariant(int degree, int samples, double tol) {
  if (degree == 0) return true;
  SymmetricFactor f(samples);
  double wmax = 0;
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j)
      wmax = std::max(wmax, theta_density_at(degree, double(i) / samples, double(j) / samples));
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j) {
      auto [a, b] = f.point_reps()[std::size_t(f.rep_of(i, j))];
      double v = theta_density_at(degree, double(i) / samples, double(j) / samples);
      double r = theta_density_at(degree, double(a) / samples, double(b) / samples);
      if (std::abs(v - r) > tol * wmax) return false;
    }
  return true;
}

Array product_density(const SymmetricProductGrid& g, const std::vector<int>& degrees) {
  if (int(degrees.size()) != g.n()) throw DimensionError("one degree per factor required");
  for (int d : degrees)
    if (!dihedral_invariant(d, g.samples()))
      throw ValidationError("factor density is not invariant under the square's symmetries");
  return g.sample([&](const std::vector<double>& x) {
    double v = 1;
    for (std::size_t j = 0; j < degrees.size(); ++j) v *= theta_density_at(degrees[j], x[2 * j], x[2 * j + 1]);
    return v;
  });
}

double constant_curvature_slope(const std::vector<double>& coeffs, double tol) {
  if (coeffs.empty()) throw ArgumentError("no curvature coefficients");
  for (double c : coeffs)
    if (std::abs(c - coeffs[0]) > tol * std::max(1.0, std::abs(coeffs[0])))
      throw ConditionError("curvature is not proportional to the Kaehler form (c1 not a multiple of [omega])");
  double mean = 0;
  for (double c : coeffs) mean += c;
  mean /= double(coeffs.size());
  // F_{j jbar} = -c/2 = pi a0.
  return -mean / kTwoPi;
}

FormField constant_curvature_form(std::shared_ptr<const TorusGrid> g, const std::vector<double>& coeffs) {
  const int n = g->n();
  if (int(coeffs.size()) != n) throw DimensionError("one curvature coefficient per factor required");
  FormField F{g, {}};
  const auto s = Eigen::Index(g->size());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      F.coeffs.emplace(std::make_pair(j, k),
                       Eigen::ArrayXcd::Constant(s, j == k ? std::complex<double>(-coeffs[std::size_t(j)] / 2, 0) : 0.0));
  return F;
}

BackgroundPotential background_potential(const FormField& F, double tol) {
  const auto& g = *F.grid;
  const int n = g.n();
  Array trace = Array::Zero(Eigen::Index(g.size()));
  for (int j = 0; j < n; ++j) {
    const auto& c = F.at(j, j);
    if (c.imag().abs().maxCoeff() > tol) throw ValidationError("curvature diagonal is not real");
    trace += c.real();
  }
  // trace = -Delta f0 + n pi a0.
  BackgroundPotential out;
  out.a0 = g.mean(trace) / (n * kPi);
  Array rhs = n * kPi * out.a0 - trace;
  rhs -= g.mean(rhs);
  out.f0 = ScalarField(F.grid, g.shifted_inverse(rhs, 0));
  auto h = ddbar_scalar(out.f0);
  double res = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      Eigen::ArrayXcd model = 4.0 * h.at(j, k);
      if (j == k) model += kPi * out.a0;
      res = std::max(res, (F.at(j, k) - model).abs().maxCoeff());
    }
  out.residual = res;
  if (res > tol) throw ConditionError("curvature is not of the form 4 ddbar f0 - 2 pi i a0 omega (c1 not a multiple of [omega])");
  return out;
}

}  // namespace swk
