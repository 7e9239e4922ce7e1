#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/random_exact.hpp"
#include "swk/clifford.hpp"

using namespace swk;
using MV = MultiVector;

namespace {

const ExactScalar I = ExactScalar::i();

Spinor random_spinor(std::mt19937_64& rng, int dim, Chirality c) {
  Spinor s = Spinor::zero(dim, c);
  for (auto& x : s.coeffs) x = testing::random_gaussian(rng, 4);
  return s;
}

void require_suite(const IdentityReport& rep) {
  for (const auto& c : rep.checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("clifford suites pass in every dimension") {
  require_suite(verify_clifford_suite(6));
  require_suite(verify_clifford_suite(8));
  require_suite(verify_clifford_suite(5));
  CHECK_FALSE(eight_dim_stated_xi_identity_holds());
}

TEST_CASE("dirac cancellation reports list every sample") {
  for (DiracCase c : all_dirac_cases()) {
    IdentityReport r = verify_dirac_cancellation(c);
    CHECK(r.checks.size() >= 5);
    CHECK(r.all_pass());
    CHECK(parse_dirac_case(to_string(c)) == c);
  }
  CHECK_THROWS_AS(parse_dirac_case("7d"), ArgumentError);
}

TEST_CASE("clifford_1form formula and generators agree; squares to -|alpha|^2") {
  std::mt19937_64 rng(1);
  for (int dim : {6, 8}) {
    const int n = dim / 2;
    for (int t = 0; t < 20; ++t) {
      MV alpha(n);
      for (int i = 0; i < dim; ++i) alpha.add_term(Mask(1) << i, testing::random_gaussian(rng, 3));
      for (Chirality c : {Chirality::plus, Chirality::minus}) {
        Spinor s = random_spinor(rng, dim, c);
        CHECK(clifford_1form(alpha, s) == clifford_form(alpha, s));
        MV real = alpha + conj(alpha);
        Spinor twice = clifford_1form(real, clifford_1form(real, s));
        CHECK(twice == -inner(real, real) * s);
        CHECK(clifford_1form(alpha, s).chirality != c);
      }
    }
  }
  CHECK_THROWS_AS(clifford_1form(MV::omega(3), Spinor::basis(6, Chirality::plus, 0)), ArgumentError);
}

TEST_CASE("energy endomorphism") {
  Spinor phi = Spinor::basis(6, Chirality::plus, 0);
  CHECK(energy_endo(phi).matrix == ExactMatrix::diagonal({ExactScalar::frac(3, 4), ExactScalar::frac(-1, 4),
                                                          ExactScalar::frac(-1, 4), ExactScalar::frac(-1, 4)}));
  CHECK(energy_endo(Spinor::zero(6, Chirality::plus)).matrix.is_zero());
  Spinor p8 = ExactScalar(2) * Spinor::basis(8, Chirality::plus, 0);
  ExactVector d(8, ExactScalar::frac(-1, 2));
  d[0] = ExactScalar::frac(7, 2);
  CHECK(energy_endo(p8).matrix == ExactMatrix::diagonal(d));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    Spinor s = random_spinor(rng, 8, Chirality::plus);
    ExactMatrix e = energy_endo(s).matrix;
    CHECK(e.trace().is_zero());
    ExactScalar u = testing::random_gaussian(rng);
    CHECK(energy_endo(u * s).matrix == u.norm2() * e);
  }
}

TEST_CASE("quadratic form examples") {
  Spinor phi = ExactScalar(3) * Spinor::basis(6, Chirality::plus, 0);
  QuadraticForm q = q_of_phi(phi);
  CHECK(q.form == (I * ExactScalar::frac(1, 4) * norm2(phi)) * MV::omega(3));

  Spinor psi = ExactScalar(2) * Spinor::basis(6, Chirality::minus, 3);
  MV w = MV::omega(3);
  CHECK(q_of_phi(psi).form == (ExactScalar::frac(-1, 8) * norm2(psi)) * wedge(w, w));

  Spinor p8 = Spinor::basis(8, Chirality::plus, 0);
  MV w4 = MV::omega(4);
  CHECK(q_of_phi(p8).form ==
        (norm2(p8) / ExactScalar(32)) * (ExactScalar(4) * I * w4 - wedge(w4, w4)));

  Spinor p5 = Spinor::basis(5, Chirality::none, 0);
  MV w5 = MV::with_real_dim(5), dx12 = MV::with_real_dim(5);
  w5.add_term(0b00011, 1);
  dx12.add_term(0b01100, 1);
  CHECK(q_of_phi(p5).form == (norm2(p5) / ExactScalar(4)) * (I * w5 + I * dx12 - wedge(w5, dx12)));
}

TEST_CASE("isomorphism ranks") {
  CHECK(isomorphism_rank(6, Chirality::plus) == 15);
  CHECK(isomorphism_rank(6, Chirality::minus) == 15);
  CHECK(isomorphism_rank(8, Chirality::plus) == 63);
  CHECK(isomorphism_rank(5, Chirality::none) == 15);
  CHECK_THROWS_AS(isomorphism_rank(8, Chirality::minus), ArgumentError);
}

TEST_CASE("q_of_phi reproduces E_phi on random spinors") {
  std::mt19937_64 rng(4);
  const std::pair<int, Chirality> mods[] = {
      {6, Chirality::plus}, {6, Chirality::minus}, {8, Chirality::plus}, {5, Chirality::none}};
  for (auto [dim, c] : mods)
    for (int t = 0; t < 200; ++t) {
      Spinor s = random_spinor(rng, dim, c);
      QuadraticForm q = q_of_phi(s);
      REQUIRE(clifford_op(q.form, dim, c).matrix == energy_endo(s).matrix);
      for (const auto& x : q.coeffs) REQUIRE(x.is_real());
    }
}
