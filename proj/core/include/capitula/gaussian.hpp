#pragma once

#include <optional>

#include "capitula/integers.hpp"

namespace capitula {

struct GaussInt {
  Int re;
  Int im;

  GaussInt() : re(0), im(0) {}
  GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(long r, long i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt conj() const { return {re, -im}; }

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re == b.re && a.im == b.im;
  }

  // Multiplication by i^k.
  GaussInt times_i_pow(int k) const;
};

Int g_norm(const GaussInt& z);

// p = e^2 + 4f^2 with e odd, e > 0, f > 0; unique under this normalization.
struct TwoSquares {
  Int p;
  Int e;
  Int f;
  GaussInt pi1() const { return {e, 2 * f}; }   // e + 2if
  GaussInt pi2() const { return {e, -2 * f}; }  // e - 2if
};

// Decomposition of a prime p = 1 (mod 4), via t with t^2 = -1 (mod p)
// and a Gaussian gcd. Domain error if p is not a prime = 1 (mod 4).
TwoSquares two_squares(const Int& p);

// Greatest common divisor, normalized to the first quadrant (re > 0, im >= 0).
// gcd(0, 0) is a domain error.
GaussInt gauss_gcd(GaussInt a, GaussInt b);

// Exact divisibility w | z in Z[i]; w = 0 is a domain error.
bool divides(const GaussInt& w, const GaussInt& z);

// Exact quotient z / w; empty when w does not divide z.
std::optional<GaussInt> exact_div(const GaussInt& z, const GaussInt& w);

// True iff z = c^2 for some c in Z[i] (c returned via out parameter if asked).
bool is_gaussian_square(const GaussInt& z, GaussInt* root = nullptr);

}  // namespace capitula
