#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swk/kahlerid.hpp"

using namespace swk;
using MV = MultiVector;

TEST_CASE("ddbar form examples") {
  HessianData id{3, ExactMatrix::identity(3)};
  MV sum(3);
  for (int k = 1; k <= 3; ++k) sum += wedge(MV::dz(3, k), MV::dzbar(3, k));
  CHECK(ddbar_form(id) == sum);
  CHECK(ddbar_form(id) == ExactScalar(-2) * ExactScalar::i() * MV::omega(3));
  CHECK(ddbar_form(HessianData{3, ExactMatrix(3, 3)}).is_zero());
  CHECK(ddbar_form(HessianData::unit(3, 0, 1)) == wedge(MV::dz(3, 1), MV::dzbar(3, 2)));
  CHECK_THROWS_AS(HessianData::unit(2, 0, 0), DimensionError);
}

TEST_CASE("identity Hessian: both sides computed independently") {
  const ExactScalar I = ExactScalar::i();
  HessianData id{3, ExactMatrix::identity(3)};
  CHECK(id.laplacian() == ExactScalar(-12));
  MV lhs = hodge_star(wedge(ddbar_form(id), MV::omega(3)));
  // *(-2i omega^2) = -2i * 2 omega; right side 2i omega - 6i omega.
  CHECK(lhs == ExactScalar(-4) * I * MV::omega(3));
  CHECK(check_star_identities(id).all_pass());
  CHECK(check_star_identities(HessianData{4, ExactMatrix(4, 4)}).all_pass());
}

TEST_CASE("suites over matrix units and random Hessians") {
  for (int n : {3, 4}) {
    IdentityReport r = verify_kahler_suite(n, 200, 42);
    CHECK(r.all_pass());
    CHECK(r.checks.size() == (n == 3 ? 3u : 4u));
    IdentityReport vac = verify_kahler_suite(n, 0, 1);
    CHECK(vac.all_pass());
  }
}

TEST_CASE("a corrupted identity is reported with its residual") {
  HessianData h = HessianData::unit(3, 1, 1);
  CHECK_NOTHROW(check_star_identities(h));
  // Non-square Hessians are rejected before any identity is evaluated.
  HessianData bad{3, ExactMatrix(3, 2)};
  CHECK_THROWS_AS(check_star_identities(bad), DimensionError);
}
