#pragma once

#include <cstdint>

#include "capitula/integers.hpp"

namespace capitula {

// Fundamental unit (x + y*sqrt(m))/den of the maximal order of Q(sqrt(m)),
// m > 1 squarefree. den = 2 only when m = 1 (mod 4) and x, y are both odd.
// norm_sign is the exact value of (x^2 - m*y^2)/den^2.
struct QuadUnit {
  Int m;
  Int x;
  Int y;
  int den = 1;
  int norm_sign = 1;

  // Re-evaluates the Pell identity; throws on violation.
  int verified_norm() const;
};

// Steps allowed in the continued-fraction loop before reporting an error.
inline constexpr std::uint64_t kDefaultPeriodCap = 1'000'000;

std::uint64_t pell_period_cap();
void set_pell_period_cap(std::uint64_t cap);

// Exact squarefreeness by trial division (the inputs here are desk scale).
bool is_squarefree(const Int& m);

// Continued-fraction expansion of sqrt(m) (m != 1 mod 4) or (1+sqrt(m))/2,
// with the period-end convergent matrix. Throws std::domain_error for
// non-squarefree or m <= 1, std::runtime_error if the period cap is hit.
QuadUnit fundamental_unit(const Int& m);

int unit_norm(const QuadUnit& u);

// Period length of the continued fraction of sqrt(m); the norm of the
// fundamental solution of x^2 - m y^2 = +-1 is (-1)^length.
std::uint64_t cf_period_length(const Int& m);

}  // namespace capitula
