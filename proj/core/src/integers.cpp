#include "capitula/integers.hpp"

#include <array>
#include <cstdint>

namespace capitula {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int jacobi(const Int& a, const Int& n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("jacobi: modulus must be odd and positive");
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

// Strong probable-prime test to base a, n odd > 2.
bool strong_probable_prime(const Int& n, const Int& a) {
  Int n1 = n - 1;
  unsigned long s = mpz_scan1(n1.get_mpz_t(), 0);
  Int d = n1 >> s;
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Sufficient for deterministic correctness below 2^64 (Sorenson-Webster set).
constexpr std::array<unsigned, 12> kSmallWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};
constexpr int kRandomRounds = 40;

const Int kTwo64 = Int(1) << 64;

bool miller_rabin(const Int& n) {
  if (n < 2) return false;
  if (n == 2 || n == 3) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;

  if (n < kTwo64) {
    for (unsigned w : kSmallWitnesses) {
      Int a(w);
      if (a >= n) break;  // n small enough that earlier bases decided it
      if (!strong_probable_prime(n, a)) return false;
    }
    return true;
  }

  // Fixed seed keeps results reproducible run to run.
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eedu);
  for (int i = 0; i < kRandomRounds; ++i) {
    Int a = rng.get_z_range(n - 3) + 2;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) { return miller_rabin(n); }

bool is_probable_only(const Int& n) { return n >= kTwo64; }

PrimePair validate_pair(const Int& p1, const Int& p2) {
  for (const Int* p : {&p1, &p2}) {
    if (!is_prime(*p))
      throw pair_error(pair_error_code::not_prime, p->get_str() + " is not prime");
    if (*p % 4 != 1)
      throw pair_error(pair_error_code::bad_residue,
                       p->get_str() + " is not 1 (mod 4)");
  }
  if (p1 == p2)
    throw pair_error(pair_error_code::equal_primes, "primes must be distinct");
  PrimePair pair;
  pair.p1 = p1;
  pair.p2 = p2;
  pair.d = 2 * p1 * p2;
  pair.probable = is_probable_only(p1) || is_probable_only(p2);
  return pair;
}

}  // namespace capitula
