#pragma once

#include "swk/exalg.hpp"
#include "swk/identity_report.hpp"

namespace swk {

// Structural identities of the fiber algebra over every basis monomial for n = 1..4.
IdentityReport verify_exalg_suite();

}  // namespace swk
