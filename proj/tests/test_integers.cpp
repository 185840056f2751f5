#include <doctest.h>

#include "capitula/integers.hpp"
#include "oracles.hpp"

using namespace capitula;

TEST_SUITE("integers") {

TEST_CASE("isqrt basics") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(2)) == 1);
  CHECK(isqrt(Int(12544)) == 112);
  CHECK(isqrt(Int("152415787532388367501905199875019052100")) ==
        Int("12345678901234567890"));
  CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt bracketing invariant") {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(7);
  for (int i = 0; i < 2000; ++i) {
    Int n = rng.get_z_bits(1 + i % 80);
    Int r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("perfect squares") {
  CHECK(is_perfect_square(Int(12544)));
  CHECK_FALSE(is_perfect_square(Int(12546)));
  CHECK_FALSE(is_perfect_square(Int(-4)));
  CHECK(is_perfect_square(Int(0)));
  CHECK(is_perfect_square(Int(46656)));  // 216^2
}

TEST_CASE("jacobi symbol values") {
  CHECK(jacobi(2, 17) == 1);
  CHECK(jacobi(2, 5) == -1);
  CHECK(jacobi(5, 29) == 1);  // 11^2 = 121 = 5 + 4*29
  CHECK(jacobi(0, 9) == 0);
  CHECK_THROWS_AS(jacobi(3, 10), std::domain_error);
  CHECK_THROWS_AS(jacobi(3, -5), std::domain_error);
}

TEST_CASE("jacobi is multiplicative in the numerator") {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(11);
  for (int i = 0; i < 500; ++i) {
    Int n = 2 * rng.get_z_range(5000) + 1;
    Int a = rng.get_z_range(10000) - 5000;
    Int b = rng.get_z_range(10000) - 5000;
    CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
  }
}

TEST_CASE("jacobi matches quadratic residues for primes below 1000") {
  for (long p = 3; p < 1000; p += 2) {
    if (!oracle::trial_division_prime(p)) continue;
    for (long a = 1; a < p; ++a) {
      int j = jacobi(a, p);
      CHECK(j == (oracle::is_qr(a, p) ? 1 : -1));
    }
  }
}

TEST_CASE("primality") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(17)));
  CHECK(is_prime(Int(809)));
  CHECK_FALSE(is_prime(Int(0)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(1394)));
  CHECK_FALSE(is_prime(Int(561)));    // Carmichael
  CHECK_FALSE(is_prime(Int(341)));    // 2-pseudoprime
  CHECK(is_prime((Int(1) << 61) - 1));
  CHECK_FALSE(is_probable_only(Int(809)));
  CHECK(is_probable_only((Int(1) << 89) - 1));
  CHECK(is_prime((Int(1) << 89) - 1));
}

TEST_CASE("primality agrees with trial division below 10000") {
  for (long n = 0; n < 10000; ++n)
    CHECK(is_prime(Int(n)) == oracle::trial_division_prime(n));
}

TEST_CASE("validate_pair accepts the running example") {
  PrimePair pr = validate_pair(17, 41);
  CHECK(pr.d == 1394);
  CHECK_FALSE(pr.probable);
}

TEST_CASE("validate_pair rejections carry distinct codes") {
  auto code_of = [](const Int& a, const Int& b) {
    try {
      validate_pair(a, b);
    } catch (const pair_error& e) {
      return e.code();
    }
    throw std::runtime_error("expected rejection");
  };
  CHECK(code_of(7, 13) == pair_error_code::bad_residue);
  CHECK(code_of(13, 13) == pair_error_code::equal_primes);
  CHECK(code_of(15, 13) == pair_error_code::not_prime);
  CHECK(code_of(13, 2) == pair_error_code::bad_residue);
}

}  // TEST_SUITE
