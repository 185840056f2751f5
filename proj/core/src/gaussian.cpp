#include "capitula/gaussian.hpp"

namespace capitula {

GaussInt GaussInt::times_i_pow(int k) const {
  switch (((k % 4) + 4) % 4) {
    case 0: return *this;
    case 1: return {-im, re};
    case 2: return {-re, -im};
    default: return {im, -re};
  }
}

Int g_norm(const GaussInt& z) { return z.re * z.re + z.im * z.im; }

namespace {

// Nearest integer to a/b, exact.
Int round_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r >= abs(b)) q += 1;
  return q;
}

GaussInt first_quadrant(GaussInt z) {
  for (int k = 0; k < 4; ++k) {
    if (z.re > 0 && z.im >= 0) return z;
    z = z.times_i_pow(1);
  }
  return z;  // unreachable for z != 0
}

}  // namespace

std::optional<GaussInt> exact_div(const GaussInt& z, const GaussInt& w) {
  if (w.is_zero()) throw std::domain_error("exact_div: division by zero");
  Int n = g_norm(w);
  GaussInt t = z * w.conj();
  if (t.re % n != 0 || t.im % n != 0) return std::nullopt;
  return GaussInt{t.re / n, t.im / n};
}

bool divides(const GaussInt& w, const GaussInt& z) {
  if (w.is_zero()) throw std::domain_error("divides: zero divisor");
  return exact_div(z, w).has_value();
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gauss_gcd: gcd(0, 0) undefined");
  while (!b.is_zero()) {
    // Rounded division keeps N(r) <= N(b)/2.
    Int n = g_norm(b);
    GaussInt t = a * b.conj();
    GaussInt q{round_div(t.re, n), round_div(t.im, n)};
    GaussInt r = a - q * b;
    a = b;
    b = r;
  }
  return first_quadrant(a);
}

TwoSquares two_squares(const Int& p) {
  if (p % 4 != 1 || !is_prime(p))
    throw std::domain_error("two_squares: need a prime p = 1 (mod 4)");

  // t = u^((p-1)/4) for a non-residue u satisfies t^2 = -1 (mod p).
  Int u = 2;
  while (jacobi(u, p) != -1) ++u;
  Int t;
  Int exp = (p - 1) / 4;
  mpz_powm(t.get_mpz_t(), u.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());

  GaussInt pi = gauss_gcd(GaussInt{p, 0}, GaussInt{t, 1});
  Int a = abs(pi.re), b = abs(pi.im);
  if (mpz_even_p(a.get_mpz_t())) std::swap(a, b);

  TwoSquares ts;
  ts.p = p;
  ts.e = a;
  ts.f = b / 2;
  if (ts.e * ts.e + 4 * ts.f * ts.f != p)
    throw std::logic_error("two_squares: decomposition failed");
  return ts;
}

bool is_gaussian_square(const GaussInt& z, GaussInt* root) {
  if (z.is_zero()) {
    if (root) *root = GaussInt{0, 0};
    return true;
  }
  // c = u + iv with c^2 = z needs u^2 = (|z| + re)/2, v^2 = (|z| - re)/2.
  Int n = g_norm(z);
  Int m = isqrt(n);
  if (m * m != n) return false;
  Int two_u2 = m + z.re;
  Int two_v2 = m - z.re;
  if (mpz_odd_p(two_u2.get_mpz_t()) || mpz_odd_p(two_v2.get_mpz_t()))
    return false;
  Int u2 = two_u2 / 2, v2 = two_v2 / 2;
  if (!is_perfect_square(u2) || !is_perfect_square(v2)) return false;
  Int u = isqrt(u2), v = isqrt(v2);
  // Fix the relative sign from im = 2uv.
  for (const auto& c : {GaussInt{u, v}, GaussInt{u, -v}}) {
    if (c * c == z) {
      if (root) *root = c;
      return true;
    }
  }
  return false;
}

}  // namespace capitula
