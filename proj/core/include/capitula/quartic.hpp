#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "capitula/pell.hpp"

namespace capitula {

using Rat = mpq_class;

// Element of the real biquadratic field Q(sqrt(a), sqrt(b)) in the naive
// basis {1, sqrt(a), sqrt(b), sqrt(ab)}; a, b distinct squarefree > 1 with
// ab not a square. Algebraic integers have coordinates in (1/4)Z here.
struct Quartic {
  Int a;
  Int b;
  std::array<Rat, 4> c{};

  static Quartic one(const Int& a, const Int& b);
  // Embeds (x + y*sqrt(m))/den where m is one of a, b, a*b.
  static Quartic embed(const Int& a, const Int& b, const QuadUnit& u);

  friend Quartic operator*(const Quartic& u, const Quartic& v);
  friend bool operator==(const Quartic& u, const Quartic& v);
};

std::uint64_t quartic_precision_bits();
void set_quartic_precision_bits(std::uint64_t bits);

// Exact decision of squareness in Q(sqrt(a), sqrt(b)).
//
// The candidate root is recovered from floating approximations of the four
// real embeddings, but the outcome is always certified: rational interval
// arithmetic bounds every rounding step, and a recovered candidate is checked
// by exact squaring. A std::runtime_error reporting "undecided" is thrown if
// three precision doublings cannot separate the intervals (not observed).
bool is_square_in_field(const Quartic& u, Quartic* root = nullptr);

}  // namespace capitula
