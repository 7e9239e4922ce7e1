#include <bit>
#include <map>
#include <mutex>

#include "swk/clifford.hpp"
#include "swk/errors.hpp"

namespace swk {

namespace {

MultiVector cliff1_formula(const MultiVector& alpha, const MultiVector& xi) {
  MultiVector a01 = pq_component(alpha, 0, 1);
  MultiVector a10 = pq_component(alpha, 1, 0);
  return ExactScalar::sqrt2() * (wedge(a01, xi) - contract(conj(a10), xi));
}

// Generators of the (0,*)-form module over C^n, index = dzbar bitmask.
std::vector<ExactMatrix> kahler_generators(int n) {
  const int r = 1 << n;
  std::vector<ExactMatrix> gens;
  for (int i = 0; i < 2 * n; ++i) {
    ExactMatrix g(r, r);
    MultiVector e = MultiVector::monomial(n, Mask(1) << i);
    for (int col = 0; col < r; ++col) {
      Spinor s = Spinor::basis(2 * n, Chirality::full, col);
      // Full basis is ordered by degree; locate the column's module index.
      const SpinorSpace& sp = s.space();
      MultiVector img = cliff1_formula(e, spinor_to_form(s));
      Spinor out = form_to_spinor(img, Chirality::full);
      for (int row = 0; row < r; ++row) g(sp.index[row], sp.index[col]) = out.coeffs[row];
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

ExactMatrix two_by_two(ExactScalar a, ExactScalar b, ExactScalar c, ExactScalar d) {
  ExactMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

std::vector<ExactMatrix> five_dim_generators() {
  const ExactScalar I = ExactScalar::i();
  std::vector<ExactMatrix> sigma_gens = kahler_generators(1);
  // Full-module (n = 1) generators use bitmask indices 0 = 1, 1 = dzbar, matching q.
  const ExactMatrix eps = two_by_two(1, 0, 0, -1);
  const ExactMatrix pauli[3] = {two_by_two(0, -I, -I, 0), two_by_two(0, -1, 1, 0), two_by_two(-I, 0, 0, I)};
  std::vector<ExactMatrix> gens;
  auto kron = [](const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(4, 4);
    for (int q = 0; q < 2; ++q)
      for (int qq = 0; qq < 2; ++qq)
        for (int e = 0; e < 2; ++e)
          for (int ee = 0; ee < 2; ++ee) m(2 * q + e, 2 * qq + ee) = a(q, qq) * b(e, ee);
    return m;
  };
  for (const auto& g : sigma_gens) gens.push_back(kron(g, ExactMatrix::identity(2)));
  for (const auto& p : pauli) gens.push_back(kron(eps, p));
  return gens;
}

struct ModuleTables {
  std::vector<ExactMatrix> gens;
  std::vector<ExactMatrix> monomials;  // c(e_I) for every mask I
};

ModuleTables build_tables(int dim) {
  ModuleTables t;
  t.gens = dim == 5 ? five_dim_generators() : kahler_generators(dim / 2);
  const int r = full_module_rank(dim);
  t.monomials.resize(std::size_t(1) << dim);
  t.monomials[0] = ExactMatrix::identity(r);
  for (Mask m = 1; m < (Mask(1) << dim); ++m) {
    int top = 31 - std::countl_zero(m);
    t.monomials[m] = t.monomials[m & ~(Mask(1) << top)] * t.gens[top];
  }
  return t;
}

const ModuleTables& tables(int dim) {
  full_module_rank(dim);
  static const ModuleTables t5 = build_tables(5);
  static const ModuleTables t6 = build_tables(6);
  static const ModuleTables t8 = build_tables(8);
  return dim == 5 ? t5 : dim == 6 ? t6 : t8;
}

Chirality flip(Chirality c) {
  switch (c) {
    case Chirality::plus: return Chirality::minus;
    case Chirality::minus: return Chirality::plus;
    default: return c;
  }
}

}  // namespace

const ExactMatrix& generator(int dim, int i) { return tables(dim).gens.at(i); }

ExactMatrix clifford_matrix(const MultiVector& F, int dim) {
  if (F.rdim() != form_rdim(dim)) throw DimensionError("form and spinor module dimensions differ");
  const ModuleTables& t = tables(dim);
  const int r = full_module_rank(dim);
  ExactMatrix out(r, r);
  for (const auto& [m, c] : F.terms()) {
    const ExactMatrix& mm = t.monomials[m];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (!mm(i, j).is_zero()) out(i, j) += c * mm(i, j);
  }
  return out;
}

Spinor CliffordOp::operator()(const Spinor& s) const {
  if (s.dim != dim || s.chirality != from) throw DimensionError("operator applied to a spinor of another module");
  return Spinor{dim, to, matrix * s.coeffs};
}

CliffordOp clifford_op(const MultiVector& F, int dim, Chirality from) {
  Chirality to = from;
  if (dim != 5 && from != Chirality::full) {
    bool even = false, odd = false;
    for (const auto& [m, c] : F.terms()) (std::popcount(m) % 2 ? odd : even) = true;
    if (even && odd) throw ArgumentError("form of mixed parity does not preserve chirality");
    if (odd) to = flip(from);
  }
  const ExactMatrix full = clifford_matrix(F, dim);
  const SpinorSpace& src = SpinorSpace::get(dim, from);
  const SpinorSpace& dst = SpinorSpace::get(dim, to);
  ExactMatrix m(dst.rank(), src.rank());
  for (int a = 0; a < dst.rank(); ++a)
    for (int b = 0; b < src.rank(); ++b) {
      const ExactScalar& v = full(dst.index[a], src.index[b]);
      m(a, b) = dst.sign[a] * src.sign[b] < 0 ? -v : v;
    }
  return CliffordOp{dim, from, to, std::move(m)};
}

Spinor clifford_1form(const MultiVector& alpha, const Spinor& s) {
  if (!alpha.is_homogeneous(1)) throw ArgumentError("clifford_1form expects a 1-form");
  if (alpha.rdim() != form_rdim(s.dim)) throw DimensionError("form and spinor module dimensions differ");
  if (s.dim == 5) return clifford_op(alpha, 5, Chirality::none)(s);
  MultiVector img = cliff1_formula(alpha, spinor_to_form(s));
  return form_to_spinor(img, flip(s.chirality));
}

Spinor clifford_form(const MultiVector& F, const Spinor& s) { return clifford_op(F, s.dim, s.chirality)(s); }

CliffordOp energy_endo(const Spinor& phi) {
  const SpinorSpace& sp = phi.space();
  const int r = sp.rank();
  const ExactScalar shift = norm2(phi) / ExactScalar(r);
  ExactMatrix e(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      e(i, j) = phi.coeffs[i] * ExactScalar(sp.weight[j]) * phi.coeffs[j].conj();
      if (i == j) e(i, j) -= shift;
    }
  return CliffordOp{phi.dim, phi.chirality, phi.chirality, std::move(e)};
}

std::vector<MultiVector> quadratic_form_basis(int dim, Chirality c) {
  std::vector<MultiVector> basis;
  const ExactScalar I = ExactScalar::i();
  auto add_degree = [&](int k, const ExactScalar& scale) {
    for (Mask m = 0; m < (Mask(1) << dim); ++m)
      if (std::popcount(m) == k) {
        MultiVector b = MultiVector::with_real_dim(dim);
        b.add_term(m, scale);
        basis.push_back(b);
      }
  };
  if (dim == 6 && c == Chirality::plus) {
    add_degree(2, I);
  } else if (dim == 6 && c == Chirality::minus) {
    add_degree(4, 1);
  } else if (dim == 8 && c == Chirality::plus) {
    add_degree(2, I);
    for (Mask m = 0; m < 256; ++m)
      if (std::popcount(m) == 4 && (m & 1)) {
        MultiVector e = MultiVector::with_real_dim(8);
        e.add_term(m, 1);
        basis.push_back(e + hodge_star(e));
      }
  } else if (dim == 5 && c == Chirality::none) {
    add_degree(2, I);
    add_degree(4, 1);
  } else {
    throw ArgumentError("no quadratic-form space for dim " + std::to_string(dim) + " chirality " + to_string(c));
  }
  return basis;
}

namespace {

struct QSolver {
  std::vector<MultiVector> basis;
  std::vector<ExactMatrix> images;
  LeftInverse inverse;
};

ExactMatrix stack_real_imag(const std::vector<ExactMatrix>& images, int r) {
  ExactMatrix a(2 * r * r, int(images.size()));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (int p = 0; p < r; ++p)
      for (int q = 0; q < r; ++q) {
        a(2 * (p * r + q), int(j)) = images[j](p, q).real();
        a(2 * (p * r + q) + 1, int(j)) = images[j](p, q).imag();
      }
  return a;
}

QSolver build_solver(int dim, Chirality c) {
  std::vector<MultiVector> basis = quadratic_form_basis(dim, c);
  std::vector<ExactMatrix> images;
  for (const auto& b : basis) images.push_back(clifford_op(b, dim, c).matrix);
  const int r = SpinorSpace::get(dim, c).rank();
  LeftInverse li(stack_real_imag(images, r));
  return QSolver{std::move(basis), std::move(images), std::move(li)};
}

const QSolver& solver(int dim, Chirality c) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, QSolver> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(dim, int(c));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_solver(dim, c)).first;
  return it->second;
}

}  // namespace

int isomorphism_rank(int dim, Chirality c) { return solver(dim, c).inverse.rank(); }

QuadraticForm q_of_phi(const Spinor& phi) {
  const QSolver& s = solver(phi.dim, phi.chirality);
  if (!s.inverse.full_column_rank()) throw IdentityFailure("Clifford map on the quadratic-form space is not injective");
  const ExactMatrix e = energy_endo(phi).matrix;
  const int r = e.rows();
  ExactVector rhs(2 * r * r);
  for (int p = 0; p < r; ++p)
    for (int q = 0; q < r; ++q) {
      rhs[2 * (p * r + q)] = e(p, q).real();
      rhs[2 * (p * r + q) + 1] = e(p, q).imag();
    }
  ExactVector x;
  try {
    x = s.inverse.solve(rhs);
  } catch (const ArgumentError&) {
    throw IdentityFailure("energy endomorphism is outside the Clifford image of the quadratic-form space");
  }
  QuadraticForm out{phi.dim, phi.chirality, {}, x, MultiVector::with_real_dim(form_rdim(phi.dim))};
  for (std::size_t j = 0; j < x.size(); ++j) {
    out.basis_labels.push_back(s.basis[j].str());
    out.form += x[j] * s.basis[j];
  }
  if (clifford_op(out.form, phi.dim, phi.chirality).matrix != e)
    throw IdentityFailure("c(q(phi)) differs from the energy endomorphism");
  return out;
}

}  // namespace swk
