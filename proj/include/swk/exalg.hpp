#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swk/exact.hpp"

namespace swk {

// Bit 2k is dx_{k+1}, bit 2k+1 is dy_{k+1}. Odd real dimensions (the 5d fiber)
// append the extra covectors after the complex ones.
using Mask = std::uint32_t;

int popcount(Mask m);
// Sign of the permutation sorting the concatenation (a, b) of disjoint masks.
int merge_sign(Mask a, Mask b);

class MultiVector {
 public:
  // Complex dimension n, real dimension 2n.
  explicit MultiVector(int n = 1);
  static MultiVector with_real_dim(int rdim);

  static MultiVector scalar(int n, const ExactScalar& c);
  static MultiVector monomial(int n, Mask m, const ExactScalar& c = 1);
  // Real basis covector e_i (0-based), any real dimension.
  static MultiVector covector(int rdim, int i);
  // 1-based k.
  static MultiVector dx(int n, int k);
  static MultiVector dy(int n, int k);
  static MultiVector dz(int n, int k);
  static MultiVector dzbar(int n, int k);
  static MultiVector omega(int n);
  static MultiVector dvol(int n);

  int n() const { return rdim_ / 2; }
  int rdim() const { return rdim_; }
  Mask full_mask() const { return (Mask(1) << rdim_) - 1; }

  const std::map<Mask, ExactScalar>& terms() const { return terms_; }
  ExactScalar coeff(Mask m) const;
  void add_term(Mask m, const ExactScalar& c);

  bool is_zero() const { return terms_.empty(); }
  // Common degree of all terms; nullopt for mixed or zero forms.
  std::optional<int> degree() const;
  bool is_homogeneous(int k) const;

  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  MultiVector& operator*=(const ExactScalar& c);

  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator-(MultiVector a) { return a *= ExactScalar(-1); }
  friend MultiVector operator*(const ExactScalar& c, MultiVector a) { return a *= c; }
  friend MultiVector operator*(MultiVector a, const ExactScalar& c) { return a *= c; }
  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.rdim_ == b.rdim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiVector& a, const MultiVector& b) { return !(a == b); }

  // e.g. "(1/2)dx1^dy1 + (-i)dy2".
  std::string str() const;

 private:
  int rdim_;
  std::map<Mask, ExactScalar> terms_;
};

void require_same_dim(const MultiVector& a, const MultiVector& b);

MultiVector wedge(const MultiVector& a, const MultiVector& b);
// Interior product with the real basis vector dual to e_i.
MultiVector interior(int i, const MultiVector& xi);
// Hermitian contraction: sum_i conj(alpha_i) * interior(i, xi). alpha must have degree 1.
MultiVector contract(const MultiVector& alpha, const MultiVector& xi);
MultiVector hodge_star(const MultiVector& xi);
MultiVector conj(const MultiVector& xi);
// Hermitian pairing sum_I a_I conj(b_I) in the orthonormal real basis.
ExactScalar inner(const MultiVector& a, const MultiVector& b);
MultiVector power(const MultiVector& a, int k);

// Coefficients in the complex basis: bit 2k is dz_{k+1}, bit 2k+1 is dzbar_{k+1}.
std::map<Mask, ExactScalar> to_complex_basis(const MultiVector& xi);
MultiVector from_complex_basis(int n, const std::map<Mask, ExactScalar>& c);
std::pair<int, int> pq_type(Mask complex_mask);

struct PQSplit {
  std::map<std::pair<int, int>, MultiVector> components;
  MultiVector component(int p, int q, int n) const;
  MultiVector reassemble(int n) const;
};

PQSplit pq_split(const MultiVector& xi);
MultiVector pq_component(const MultiVector& xi, int p, int q);

struct SdAsdSplit {
  MultiVector plus, minus;
};
// Middle-degree eigen-splitting of the star: eigenvalues +-i for odd n, +-1 for even n.
SdAsdSplit sd_asd_split(const MultiVector& xi);

struct Lefschetz3Split {
  MultiVector beta30, beta03;
  MultiVector eta01, eta10;
  MultiVector gamma12, gamma21;
  MultiVector reassemble() const;
};

// beta = beta30 + beta03 + (eta01 + eta10)^omega + gamma12 + gamma21 on C^3.
Lefschetz3Split lefschetz_split_3form(const MultiVector& beta, bool require_real);

}  // namespace swk
