#pragma once

#include <cstdint>

#include "swk/exact_matrix.hpp"
#include "swk/exalg.hpp"
#include "swk/identity_report.hpp"

namespace swk {

// H(j,k) = d^2 h / dz_j dzbar_k at a point of C^n, n in {3, 4}.
struct HessianData {
  int n;
  ExactMatrix H;

  static HessianData unit(int n, int j, int k);
  // Delta h = -4 trace(H) with the nonnegative Laplacian.
  ExactScalar laplacian() const;
};

MultiVector ddbar_form(const HessianData& h);

// Each star identity for the given Hessian; throws IdentityFailure with the residual form on failure.
IdentityReport check_star_identities(const HessianData& h);

// Matrix-unit basis sweep (always) plus `trials` seeded random rational Hessians.
IdentityReport verify_kahler_suite(int n, int trials, std::uint64_t seed);

}  // namespace swk
