#include <doctest.h>

#include "capitula/pell.hpp"
#include "oracles.hpp"

using namespace capitula;

TEST_SUITE("pell") {

TEST_CASE("classical units") {
  auto u2 = fundamental_unit(2);
  CHECK(u2.x == 1);
  CHECK(u2.y == 1);
  CHECK(u2.den == 1);
  CHECK(u2.norm_sign == -1);

  auto u5 = fundamental_unit(5);
  CHECK(u5.x == 1);
  CHECK(u5.y == 1);
  CHECK(u5.den == 2);
  CHECK(u5.norm_sign == -1);

  auto u58 = fundamental_unit(58);
  CHECK(u58.x == 99);
  CHECK(u58.y == 13);
  CHECK(u58.norm_sign == -1);
}

TEST_CASE("worked-example units") {
  auto u1394 = fundamental_unit(1394);
  CHECK(u1394.x == 12545);
  CHECK(u1394.y == 336);
  CHECK(u1394.norm_sign == 1);

  auto u890 = fundamental_unit(890);
  CHECK(u890.x == 179);
  CHECK(u890.y == 6);
  CHECK(u890.norm_sign == 1);

  auto u3034 = fundamental_unit(3034);
  CHECK(u3034.x == Int("4055973299"));
  CHECK(u3034.y == Int("73635510"));
  CHECK(u3034.norm_sign == 1);
}

TEST_CASE("half-integral units") {
  auto u13 = fundamental_unit(13);
  CHECK(u13.x == 3);
  CHECK(u13.den == 2);
  auto u61 = fundamental_unit(61);
  CHECK(u61.x == 39);
  CHECK(u61.y == 5);
  CHECK(u61.den == 2);
  CHECK(u61.norm_sign == -1);
  auto u445 = fundamental_unit(445);
  CHECK(u445.x == 21);
  CHECK(u445.y == 1);
  CHECK(u445.den == 2);
  CHECK(u445.norm_sign == -1);
  auto u1469 = fundamental_unit(1469);
  CHECK(u1469.x == 115);
  CHECK(u1469.y == 3);
  CHECK(u1469.den == 2);
  CHECK(u1469.norm_sign == 1);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(fundamental_unit(1), std::domain_error);
  CHECK_THROWS_AS(fundamental_unit(0), std::domain_error);
  CHECK_THROWS_AS(fundamental_unit(12), std::domain_error);
  CHECK_THROWS_AS(fundamental_unit(18), std::domain_error);
  CHECK(is_squarefree(Int(2146)));
  CHECK_FALSE(is_squarefree(Int(50)));
}

TEST_CASE("period cap reports instead of hanging") {
  set_pell_period_cap(1);
  CHECK_THROWS_AS(fundamental_unit(Int(46658)), std::runtime_error);  // period 2
  CHECK_THROWS_AS(fundamental_unit(Int(2146)), std::runtime_error);
  set_pell_period_cap(kDefaultPeriodCap);
  CHECK(fundamental_unit(Int(46658)).x == 46657);
}

TEST_CASE("norm sign equals continued-fraction parity") {
  for (long m = 2; m < 400; ++m) {
    if (!is_squarefree(Int(m))) continue;
    auto u = fundamental_unit(m);
    CHECK(unit_norm(u) == u.norm_sign);
    // For these radicands the integral Pell solution has the parity of the
    // sqrt(m) period even when the fundamental unit is half-integral.
    if (m % 4 != 1)
      CHECK(u.norm_sign == (cf_period_length(m) % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("fundamental units match the independent oracle up to 600") {
  for (long m = 2; m < 600; ++m) {
    if (!is_squarefree(Int(m))) continue;
    auto u = fundamental_unit(m);
    auto ref = oracle::reference_unit(m);
    CHECK(u.x == ref.x);
    CHECK(u.y == ref.y);
    CHECK(u.den == ref.den);
    CHECK(u.norm_sign == ref.norm);
  }
}

TEST_CASE("no smaller solution below the fundamental one (direct search)") {
  for (long m : {10L, 34L, 58L, 130L, 290L, 442L, 890L, 962L}) {
    auto u = fundamental_unit(m);
    for (Int y = 1; y < u.y; ++y) {
      Int x1 = isqrt(m * y * y + 1);
      Int x2 = isqrt(m * y * y - 1);
      CHECK(x1 * x1 - m * y * y != 1);
      CHECK(x2 * x2 - m * y * y != -1);
    }
  }
}

TEST_CASE("even radicands never produce half-integral units") {
  for (long p1 : {5L, 13L, 17L, 29L})
    for (long p2 : {37L, 41L, 53L}) {
      auto u = fundamental_unit(2 * p1 * p2);
      CHECK(u.den == 1);
    }
}

}  // TEST_SUITE
