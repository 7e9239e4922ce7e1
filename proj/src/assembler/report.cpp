#include <algorithm>
#include <cmath>
#include <limits>

#include "common.hpp"
#include "swk/clifford.hpp"
#include "swk/errors.hpp"
#include "swk/gridforms.hpp"

namespace swk {

namespace {

enum FieldId { kU = 0, kV, kLambda, kLambdaT, kF0, kF1, kW0, kW1, kOne, kGridFields };
constexpr int kPhi2 = kGridFields;
constexpr int kPsi2 = kGridFields + 1;
const cplx I(0, 1);

MultiVector q_unit(int dim, Chirality c, int index) {
  Spinor s = Spinor::basis(dim, c, index);
  return q_of_phi(s).form * norm2(s).inverse();
}

MultiVector degree_part(const MultiVector& x, int k) {
  MultiVector out = MultiVector::with_real_dim(x.rdim());
  for (const auto& [m, c] : x.terms())
    if (popcount(m) == k) out.add_term(m, c);
  return out;
}

LinForm kahler_constant(int n, double coeff) {
  LinForm f(2 * n);
  for (int j = 1; j <= n; ++j)
    f += LinForm::constant(wedge(MultiVector::dx(n, j), MultiVector::dy(n, j)), I * coeff);
  return f;
}

LinForm laplacian_times(int n, int field, const MultiVector& c, double s) {
  LinForm f(2 * n);
  for (int a = 0; a < 2 * n; ++a) f += LinForm::times(field, {a, a}, c, -s);
  return f;
}

struct Part {
  std::string name;
  NumForm value;
};

struct Equation {
  std::string name, formula;
  int degree = 2;
  LinForm form;
  NormAccumulator total{};
  std::map<std::string, NormAccumulator> parts;
};

class PartMaps {
 public:
  explicit PartMaps(int n)
      : n_(n),
        w_(MultiVector::omega(n)),
        w2_(wedge(w_, w_)),
        p11_(2 * n, [](const MultiVector& x) { return pq_component(x, 1, 1); }),
        trace_(2 * n, [this](const MultiVector& x) { return (inner(x, w_) / inner(w_, w_)) * w_; }),
        trace2_(2 * n, [this](const MultiVector& x) { return (inner(x, w2_) / inner(w2_, w2_)) * w2_; }),
        asd_(2 * n, [](const MultiVector& x) { return ExactScalar::frac(1, 2) * (x - hodge_star(x)); }) {}

  std::vector<Part> split(const NumForm& x, int degree) {
    std::vector<Part> out;
    if (degree == 2) {
      NumForm p11 = p11_(x);
      NumForm tr = trace_(x);
      out.push_back({"(1,1)", p11});
      out.push_back({"(2,0)+(0,2)", add(x, p11, -1.0)});
      out.push_back({"omega-trace", tr});
      out.push_back({"primitive (1,1)", add(p11, tr, -1.0)});
    } else {
      NumForm tr = trace2_(x);
      out.push_back({"omega^2", tr});
      out.push_back({"remainder", add(x, tr, -1.0)});
      if (n_ == 4) out.push_back({"anti-self-dual", asd_(x)});
    }
    return out;
  }

 private:
  int n_;
  MultiVector w_, w2_;
  FormMap p11_, trace_, trace2_, asd_;
};

}  // namespace

ResidualReport residual_report(const SolutionTuple& s) {
  detail::Stopwatch sw;
  if (!s.grid) throw ArgumentError("tuple without a grid");
  const Discretization& g = *s.grid;
  const int n = g.n();
  const int rdim = 2 * n;
  if ((s.dim == 6 && n != 3) || (s.dim == 8 && n != 4)) throw DimensionError("tuple grid does not match its dimension");

  std::vector<Array> prepared(kGridFields);
  const Array* raw[kGridFields] = {&s.re_f, &s.im_f, &s.lambda, &s.lambda_tilde, &s.f0, &s.f1, &s.W0, &s.W1, nullptr};
  for (int k = 0; k < kGridFields; ++k) {
    Array v = raw[k] ? *raw[k] : Array::Ones(Eigen::Index(g.size()));
    if (std::size_t(v.size()) != g.size()) throw DimensionError("tuple field has the wrong size");
    prepared[std::size_t(k)] = g.prepare(v);
  }
  std::vector<BlockEval::Pointwise> pointwise;
  if (s.dim == 6) {
    pointwise.push_back([](BlockEval& b) {
      return Array((2 * b.get(kLambda, {}) - 4 * b.get(kU, {})).exp() * b.get(kW0, {}));
    });
  } else {
    pointwise.push_back([](BlockEval& b) {
      return Array((2 * b.get(kLambda, {}) - 6 * (b.get(kU, {}) + b.get(kV, {}))).exp() * b.get(kW0, {}));
    });
  }
  pointwise.push_back([](BlockEval& b) {
    return Array((-4 * b.get(kV, {}) - 2 * b.get(kLambdaT, {})).exp() * b.get(kW1, {}));
  });

  const MultiVector w = MultiVector::omega(n);
  const MultiVector w2 = wedge(w, w);
  LinForm b1(rdim);
  for (int a = 0; a < rdim; ++a) b1 += LinForm::times(kU, {a}, MultiVector::covector(rdim, a));
  for (int k = 0; k < n; ++k) {
    b1 += LinForm::times(kV, {2 * k}, MultiVector::dy(n, k + 1));
    b1 += LinForm::times(kV, {2 * k + 1}, MultiVector::dx(n, k + 1), -1.0);
  }
  LinForm beta = b1.wedge(w);
  if (s.theta_t != 0 && !s.theta.is_zero()) {
    if (s.theta.rdim() != rdim) throw DimensionError("family form has the wrong dimension");
    beta += LinForm::times(kOne, {}, s.theta, s.theta_t);
  }
  const LinForm dsb = beta.dstar();
  const LinForm db = beta.d();
  const LinForm dsb_closed = 2.0 * I * LinForm::ddbar(rdim, kU) + laplacian_times(n, kU, w, 1);

  auto cst = [&](const std::string& k) { return s.constants.at(k).value; };
  const double r0 = cst("r0"), r1 = cst("r1");
  std::vector<Equation> eqs;
  LinForm db_check, db_closed;
  if (s.dim == 6) {
    const MultiVector qp = q_unit(6, Chirality::plus, 0);
    const MultiVector qm = q_unit(6, Chirality::minus, 3);
    LinForm FA = kahler_constant(n, cst("F_A coefficient")) + 4.0 * LinForm::ddbar(rdim, kF0);
    LinForm FB = kahler_constant(n, cst("F_B coefficient")) + 4.0 * LinForm::ddbar(rdim, kF1);
    Equation plus{"phi curvature", "F_A - 4 ddbar(lambda) + 2i d*beta + 2 pi i r0 omega - q(phi)", 2, LinForm(rdim), {}, {}};
    plus.form = FA - 4.0 * LinForm::ddbar(rdim, kLambda) + 2.0 * I * dsb + LinForm::constant(w, 2 * kPi * I * r0) -
                LinForm::times(kPhi2, {}, qp);
    Equation minus{"psi curvature", "-i *(F_B - 4 ddbar(lambda~)) + 2 d beta - pi r1 omega^2 - q(psi)", 4, LinForm(rdim), {}, {}};
    minus.form = (-I * (FB - 4.0 * LinForm::ddbar(rdim, kLambdaT))).star() + 2.0 * db -
                 LinForm::constant(w2, kPi * r1) - LinForm::times(kPsi2, {}, qm);
    eqs.push_back(std::move(plus));
    eqs.push_back(std::move(minus));
    db_check = db;
    db_closed = (2.0 * I * LinForm::ddbar(rdim, kV)).wedge(w);
  } else {
    const MultiVector q = q_unit(8, Chirality::plus, 0);
    const double a = cst("a");
    LinForm FA = kahler_constant(n, cst("F_A coefficient")) + 4.0 * LinForm::ddbar(rdim, kF0);
    LinForm sd = 0.5 * (db + db.star());
    Equation two{"2-form curvature", "F_A - 4 ddbar(lambda) + 2i d*beta + 4i r0 omega - q(phi)_2", 2, LinForm(rdim), {}, {}};
    two.form = FA - 4.0 * LinForm::ddbar(rdim, kLambda) + 2.0 * I * dsb + LinForm::constant(w, 4.0 * I * r0) -
               LinForm::times(kPhi2, {}, degree_part(q, 2));
    Equation four{"4-form curvature", "2 (d beta)^+ + (a - r1) omega^2 - q(phi)_4", 4, LinForm(rdim), {}, {}};
    four.form = 2.0 * sd + LinForm::constant(w2, a - r1) - LinForm::times(kPhi2, {}, degree_part(q, 4));
    eqs.push_back(std::move(two));
    eqs.push_back(std::move(four));
    db_check = sd;
    db_closed = laplacian_times(n, kV, w2, -0.25);
  }

  PartMaps maps(n);
  NormAccumulator total;
  double dstar_diff = 0, dbeta_diff = 0;
  double phi_min = std::numeric_limits<double>::infinity(), phi_max = -phi_min;
  double psi_min = phi_min, psi_max = -phi_min;
  for (std::size_t b = 0; b < g.eval_blocks(); ++b) {
    BlockEval be(g, prepared, b, &pointwise);
    const Array wts = g.eval_block_weights(b);
    const auto pts = Eigen::Index(be.points());
    Array tot = Array::Zero(pts);
    for (auto& eq : eqs) {
      NumForm r = be.eval(eq.form);
      Array n2 = norm2(r, pts);
      tot += n2;
      eq.total.add(n2, wts);
      for (auto& part : maps.split(r, eq.degree)) eq.parts[part.name].add(norm2(part.value, pts), wts);
    }
    total.add(tot, wts);
    dstar_diff = std::max(dstar_diff, std::sqrt(norm2(add(be.eval(dsb), be.eval(dsb_closed), -1.0), pts).maxCoeff()));
    dbeta_diff = std::max(dbeta_diff, std::sqrt(norm2(add(be.eval(db_check), be.eval(db_closed), -1.0), pts).maxCoeff()));
    const Array& p2 = be.get(kPhi2, {});
    phi_min = std::min(phi_min, p2.minCoeff());
    phi_max = std::max(phi_max, p2.maxCoeff());
    if (s.dim == 6) {
      const Array& q2 = be.get(kPsi2, {});
      psi_min = std::min(psi_min, q2.minCoeff());
      psi_max = std::max(psi_max, q2.maxCoeff());
    }
  }

  ResidualReport rep;
  rep.case_tag = s.case_tag;
  rep.grid = g.describe();
  rep.unknowns = g.size();
  rep.grid_points = g.full_size();
  for (auto& eq : eqs) {
    EquationReport er;
    er.name = eq.name;
    er.formula = eq.formula;
    er.total = {eq.total.sup, eq.total.l2()};
    for (auto& [k, acc] : eq.parts) er.parts[k] = {acc.sup, acc.l2()};
    rep.equations.push_back(std::move(er));
  }
  rep.total = {total.sup, total.l2()};
  rep.dstar_paths_diff = dstar_diff;
  rep.dbeta_paths_diff = dbeta_diff;
  rep.feasible = s.feasible;
  rep.infeasibility = s.infeasibility;
  rep.tolerance = s.config.tolerance;
  rep.scalars["|phi|^2 min"] = phi_min;
  rep.scalars["|phi|^2 max"] = phi_max;
  if (s.dim == 6) {
    rep.scalars["|psi|^2 min"] = psi_min;
    rep.scalars["|psi|^2 max"] = psi_max;
  }
  rep.scalars["holomorphy certificate"] = s.holomorphy_certificate;
  rep.scalars["kw residual phi"] = s.kw0.residual_sup;
  if (s.dim == 6) rep.scalars["kw residual psi"] = s.kw1.residual_sup;
  rep.pass = rep.feasible && rep.total.sup <= rep.tolerance && dstar_diff <= 1e-9 && dbeta_diff <= 1e-9;
  rep.runtimes["residual"] = sw.seconds();
  return rep;
}

}  // namespace swk
