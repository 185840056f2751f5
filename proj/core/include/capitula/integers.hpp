#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace capitula {

using Int = mpz_class;

// Floor of the square root. Domain error for negative input.
Int isqrt(const Int& n);

// True iff n >= 0 and isqrt(n)^2 == n. Note that 0 counts as a square.
bool is_perfect_square(const Int& n);

// Jacobi symbol (a/n) for odd positive n; the Legendre symbol when n is prime.
int jacobi(const Int& a, const Int& n);

// Deterministic Miller-Rabin below 2^64 (fixed witness set), 40 random-base
// rounds above. Use is_probable_only() to learn whether a positive answer
// carries the probabilistic caveat.
bool is_prime(const Int& n);
bool is_probable_only(const Int& n);

enum class pair_error_code {
  not_prime,
  bad_residue,   // prime but != 1 (mod 4)
  equal_primes,
};

class pair_error : public std::runtime_error {
 public:
  pair_error(pair_error_code code, std::string what)
      : std::runtime_error(std::move(what)), code_(code) {}
  pair_error_code code() const { return code_; }

 private:
  pair_error_code code_;
};

// A validated pair of distinct primes p1, p2 = 1 (mod 4), with d = 2*p1*p2.
struct PrimePair {
  Int p1;
  Int p2;
  Int d;
  bool probable = false;  // true if either primality proof was probabilistic
};

// Throws pair_error with a distinct code per violation.
PrimePair validate_pair(const Int& p1, const Int& p2);

}  // namespace capitula
