#pragma once

#include <string>
#include <vector>

#include "swk/exact_matrix.hpp"
#include "swk/exalg.hpp"
#include "swk/identity_report.hpp"

namespace swk {

// plus/minus: even/odd (0,q)-forms in dims 6 and 8; full: both; none: the rank-4 5d module.
enum class Chirality { plus, minus, full, none };

std::string to_string(Chirality c);

// Basis of a spinor module. For dims 6/8, module index = bitmask of k with dzbar_{k+1} present;
// for dim 5, index = 2q + e over {1, dzbar} x {e1, e2}.
struct SpinorSpace {
  int dim;
  Chirality chirality;
  std::vector<int> index;
  std::vector<int> sign;
  std::vector<long> weight;  // |basis element|^2
  std::vector<std::string> label;

  int rank() const { return int(index.size()); }
  // Basis positions of one summand: (0,q)-degree for 6/8, q for 5d.
  std::vector<int> summand(int q) const;
  static const SpinorSpace& get(int dim, Chirality c);
};

int full_module_rank(int dim);
// Real dimension of the forms acting on the module.
int form_rdim(int dim);

struct Spinor {
  int dim = 6;
  Chirality chirality = Chirality::plus;
  ExactVector coeffs;

  const SpinorSpace& space() const { return SpinorSpace::get(dim, chirality); }
  static Spinor zero(int dim, Chirality c);
  static Spinor basis(int dim, Chirality c, int a);
  friend bool operator==(const Spinor& a, const Spinor& b) {
    return a.dim == b.dim && a.chirality == b.chirality && a.coeffs == b.coeffs;
  }
  Spinor& operator+=(const Spinor& o);
  Spinor& operator*=(const ExactScalar& c);
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator*(const ExactScalar& c, Spinor a) { return a *= c; }
  bool is_zero() const;
  std::string str() const;
};

// Hermitian pairing <a, b> with the module weights.
ExactScalar hermitian(const Spinor& a, const Spinor& b);
ExactScalar norm2(const Spinor& s);

// dims 6/8: a spinor is a (0,q)-form; conversion both ways (throws if not of type (0,q)).
MultiVector spinor_to_form(const Spinor& s);
Spinor form_to_spinor(const MultiVector& f, Chirality c);
// dim 5: sigma_form is a form on C (n = 1) of type (0,q), e in {0, 1}.
Spinor tensor_spinor(const MultiVector& sigma_form, int e);
Spinor embed(const Spinor& s, Chirality target);

struct CliffordOp {
  int dim;
  Chirality from, to;
  ExactMatrix matrix;
  Spinor operator()(const Spinor& s) const;
};

// Full-module matrix of c(e_i) for the real basis covector e_i.
const ExactMatrix& generator(int dim, int i);
// Full-module matrix of c(F), monomials acting as ordered products.
ExactMatrix clifford_matrix(const MultiVector& F, int dim);
// c(F) restricted to a chirality; target chirality follows the parity of F.
CliffordOp clifford_op(const MultiVector& F, int dim, Chirality from);

Spinor clifford_1form(const MultiVector& alpha, const Spinor& s);
Spinor clifford_form(const MultiVector& F, const Spinor& s);

// E(psi) = <psi, phi> phi - |phi|^2 / r psi.
CliffordOp energy_endo(const Spinor& phi);

struct QuadraticForm {
  int dim;
  Chirality chirality;
  std::vector<std::string> basis_labels;
  ExactVector coeffs;  // real
  MultiVector form;
};

// Designated form space whose Clifford image is i su(S).
std::vector<MultiVector> quadratic_form_basis(int dim, Chirality c);
int isomorphism_rank(int dim, Chirality c);
QuadraticForm q_of_phi(const Spinor& phi);

enum class DiracCase { phi6, psi6, phi8, xi8, case5d_1, case5d_2, case5d_3, case5d_4 };
std::string to_string(DiracCase c);
DiracCase parse_dirac_case(const std::string& s);
const std::vector<DiracCase>& all_dirac_cases();

// Throws IdentityFailure on the first failing identity; the report lists each identity checked.
IdentityReport verify_dirac_cancellation(DiracCase c);

// Pointwise Clifford identities, action matrices, volume normalization and Clifford relations.
IdentityReport verify_clifford_suite(int dim);
// True iff c(conj(eta)^omega) xi = 3 sqrt2 *(conj(eta)^xi) holds on C^4 for all eta, xi.
bool eight_dim_stated_xi_identity_holds();

}  // namespace swk
