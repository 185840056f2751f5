// Test-only reference implementations, kept independent of the library's
// computation paths so they can serve as oracles.
#pragma once

#include <optional>
#include <stdexcept>

#include "capitula/integers.hpp"

namespace capitula::oracle {

inline bool trial_division_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Quadratic-residue test by exhaustive search.
inline bool is_qr(long a, long p) {
  long r = ((a % p) + p) % p;
  for (long t = 0; t < p; ++t)
    if ((t * t) % p == r) return true;
  return false;
}

// p = e^2 + 4f^2 by exhaustive search over odd e.
inline std::optional<std::pair<long, long>> two_squares_search(long p) {
  for (long e = 1; e * e <= p; e += 2) {
    long rest = p - e * e;
    if (rest <= 0 || rest % 4 != 0) continue;
    long f2 = rest / 4;
    long f = 0;
    while (f * f < f2) ++f;
    if (f * f == f2 && f > 0) return std::make_pair(e, f);
  }
  return std::nullopt;
}

struct UnitTriple {
  Int x, y;
  int den;
  int norm;
};

inline std::optional<UnitTriple> unit_from(const Int& m, const Int& x, const Int& y) {
  Int v = x * x - m * y * y;
  if (v == 1 || v == -1) return UnitTriple{x, y, 1, v == 1 ? 1 : -1};
  if (m % 4 == 1 && (v == 4 || v == -4) && mpz_odd_p(x.get_mpz_t()) &&
      mpz_odd_p(y.get_mpz_t()))
    return UnitTriple{x, y, 2, v == 4 ? 1 : -1};
  return std::nullopt;
}

// Directly scan y upward; at fixed y the half-integral unit is the smaller,
// and y grows strictly with the unit, so the first hit is fundamental.
inline UnitTriple unit_by_search(const Int& m, const Int& y_limit) {
  for (Int y = 1; y <= y_limit; ++y) {
    if (m % 4 == 1) {
      Int x = isqrt(m * y * y - 4);
      for (int d = 0; d <= 2; ++d)
        if (auto u = unit_from(m, x + d, y); u && u->den == 2) return *u;
    }
    Int x = isqrt(m * y * y - 1);
    for (int d = 0; d <= 2; ++d)
      if (auto u = unit_from(m, x + d, y); u && u->den == 1) return *u;
  }
  throw std::runtime_error("unit_by_search: limit reached");
}

// Fundamental unit by scanning the convergents of sqrt(m) for the first
// solution of x^2 - m y^2 = +-1, or +-4 with x, y odd when m = 1 (mod 4).
// Every such solution is a convergent once m > 16 (Legendre's criterion),
// so the first hit is the smallest unit. Small m use the direct search.
inline UnitTriple reference_unit(const Int& m) {
  if (m <= 16) return unit_by_search(m, 100);

  Int s = isqrt(m);
  if (s * s == m) throw std::domain_error("reference_unit: square radicand");
  if (auto u = unit_from(m, s, 1)) return *u;  // convergent a0/1

  Int P = s, Q = m - s * s;
  Int p_prev = 1, q_prev = 0;
  Int p_cur = s, q_cur = 1;
  while (true) {
    Int a = (P + s) / Q;
    Int p_next = a * p_cur + p_prev;
    Int q_next = a * q_cur + q_prev;
    if (auto u = unit_from(m, p_next, q_next)) return *u;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    P = a * Q - P;
    Q = (m - P * P) / Q;
  }
}

}  // namespace capitula::oracle
