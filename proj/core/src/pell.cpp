#include "capitula/pell.hpp"

#include <atomic>

namespace capitula {

namespace {
std::atomic<std::uint64_t> g_period_cap{kDefaultPeriodCap};
}

std::uint64_t pell_period_cap() { return g_period_cap.load(); }
void set_pell_period_cap(std::uint64_t cap) { g_period_cap.store(cap); }

bool is_squarefree(const Int& m) {
  if (m <= 0) return false;
  Int n = m;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

int QuadUnit::verified_norm() const {
  Int num = x * x - m * y * y;
  Int d2 = Int(den) * den;
  if (num % d2 != 0) throw std::logic_error("QuadUnit: denominator invariant");
  Int n = num / d2;
  if (n != norm_sign || (n != 1 && n != -1))
    throw std::logic_error("QuadUnit: Pell identity violated");
  return norm_sign;
}

int unit_norm(const QuadUnit& u) { return u.verified_norm(); }

namespace {

struct CfState {
  Int p;  // xi = (p + sqrt(m)) / q
  Int q;
  bool operator==(const CfState&) const = default;
};

// One step: a = floor(xi), then xi' = 1/(xi - a). Valid while q > 0.
Int cf_step(const Int& m, const Int& s, CfState& st) {
  Int a = (st.p + s) / st.q;
  st.p = a * st.q - st.p;
  st.q = (m - st.p * st.p) / st.q;
  return a;
}

}  // namespace

QuadUnit fundamental_unit(const Int& m) {
  if (m <= 1) throw std::domain_error("fundamental_unit: need m > 1");
  if (!is_squarefree(m)) throw std::domain_error("fundamental_unit: m must be squarefree");

  const Int s = isqrt(m);
  const bool half = (m % 4 == 1);

  // Seed with sqrt(m) or (1 + sqrt(m))/2; the tail is purely periodic from
  // index 1 onwards, so the unit comes from the matrix over one period of
  // the state reached after the first step.
  CfState st{half ? Int(1) : Int(0), half ? Int(2) : Int(1)};
  cf_step(m, s, st);
  const CfState head = st;

  // M = M_{a_1} * ... * M_{a_l} over one period, M_a = [[a, 1], [1, 0]].
  // xi_head is a fixed point of M, and the unit is m10 * xi_head + m11.
  Int m00(1), m01(0), m10(0), m11(1);
  const std::uint64_t cap = pell_period_cap();
  std::uint64_t period = 0;
  do {
    if (++period > cap)
      throw std::runtime_error("fundamental_unit: period cap exceeded");
    Int a = cf_step(m, s, st);
    Int n00 = m00 * a + m01;
    Int n10 = m10 * a + m11;
    m01 = m00;
    m11 = m10;
    m00 = n00;
    m10 = n10;
  } while (!(st == head));

  Int X = m10 * head.p + m11 * head.q;
  Int Y = m10;
  Int den = head.q;

  Int g = gcd(gcd(X, Y), den);
  X /= g;
  Y /= g;
  den /= g;
  if (den != 1 && den != 2)
    throw std::logic_error("fundamental_unit: unexpected denominator");
  if (den == 2 && (m % 4 != 1 || mpz_even_p(X.get_mpz_t()) || mpz_even_p(Y.get_mpz_t())))
    throw std::logic_error("fundamental_unit: half-integral unit outside m = 1 (mod 4)");

  QuadUnit u;
  u.m = m;
  u.x = X;
  u.y = Y;
  u.den = static_cast<int>(den.get_si());
  u.norm_sign = (period % 2 == 0) ? 1 : -1;
  u.verified_norm();
  return u;
}

std::uint64_t cf_period_length(const Int& m) {
  if (m <= 1 || is_perfect_square(m))
    throw std::domain_error("cf_period_length: need nonsquare m > 1");
  const Int s = isqrt(m);
  CfState st{Int(0), Int(1)};
  cf_step(m, s, st);
  const CfState head = st;
  std::uint64_t len = 0;
  const std::uint64_t cap = pell_period_cap();
  do {
    if (++len > cap) throw std::runtime_error("cf_period_length: period cap exceeded");
    cf_step(m, s, st);
  } while (!(st == head));
  return len;
}

}  // namespace capitula
