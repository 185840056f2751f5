#include "capitula/quartic.hpp"

#include <algorithm>
#include <atomic>

namespace capitula {

namespace {
std::atomic<std::uint64_t> g_precision{0};  // 0 = derive from operand size
}

std::uint64_t quartic_precision_bits() { return g_precision.load(); }
void set_quartic_precision_bits(std::uint64_t bits) { g_precision.store(bits); }

Quartic Quartic::one(const Int& a, const Int& b) {
  Quartic q;
  q.a = a;
  q.b = b;
  q.c[0] = 1;
  return q;
}

Quartic Quartic::embed(const Int& a, const Int& b, const QuadUnit& u) {
  Quartic q;
  q.a = a;
  q.b = b;
  Rat x(u.x), y(u.y);
  x /= u.den;
  y /= u.den;
  q.c[0] = x;
  if (u.m == a)
    q.c[1] = y;
  else if (u.m == b)
    q.c[2] = y;
  else if (u.m == a * b)
    q.c[3] = y;
  else
    throw std::domain_error("Quartic::embed: radicand not in the field");
  return q;
}

bool operator==(const Quartic& u, const Quartic& v) {
  return u.a == v.a && u.b == v.b && u.c == v.c;
}

Quartic operator*(const Quartic& u, const Quartic& v) {
  if (u.a != v.a || u.b != v.b)
    throw std::domain_error("Quartic: mixed fields");
  const Int& a = u.a;
  const Int& b = u.b;
  const auto& x = u.c;
  const auto& y = v.c;
  Quartic r;
  r.a = a;
  r.b = b;
  // (1, sa, sb, sab) multiplication table with sa^2 = a, sb^2 = b,
  // sa*sb = sab, sa*sab = a*sb, sb*sab = b*sa, sab^2 = a*b.
  r.c[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] + a * b * x[3] * y[3];
  r.c[1] = x[0] * y[1] + x[1] * y[0] + b * (x[2] * y[3] + x[3] * y[2]);
  r.c[2] = x[0] * y[2] + x[2] * y[0] + a * (x[1] * y[3] + x[3] * y[1]);
  r.c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  return r;
}

namespace {

// Closed rational interval; endpoints exact.
struct Ival {
  Rat lo, hi;

  Ival() = default;
  Ival(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit Ival(const Rat& exact) : lo(exact), hi(exact) {}

  Ival operator+(const Ival& o) const { return {lo + o.lo, hi + o.hi}; }
  Ival operator*(const Ival& o) const {
    Rat p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
  }
  Ival scaled(const Rat& s) const {
    return s >= 0 ? Ival{s * lo, s * hi} : Ival{s * hi, s * lo};
  }
};

// sqrt of a nonnegative rational, enclosed to ~prec bits.
Ival sqrt_ival(const Rat& q, unsigned long prec) {
  if (q == 0) return Ival{Rat(0)};
  Int n = q.get_num() * q.get_den();
  Int scaled = n << (2 * prec);
  Int t = isqrt(scaled);
  Rat denom(q.get_den());
  denom <<= prec;
  Rat lo(t), hi(t + 1);
  lo /= denom;
  hi /= denom;
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Ival sqrt_ival(const Ival& v, unsigned long prec) {
  Ival lo = sqrt_ival(v.lo, prec);
  Ival hi = sqrt_ival(v.hi, prec);
  return {lo.lo, hi.hi};
}

// Quarter-integers lying inside [lo, hi]; at most two when hi - lo < 1/2.
// Returns count, writes the first hit.
int quarter_integers_in(const Ival& v, Rat* hit) {
  Rat lo4 = 4 * v.lo, hi4 = 4 * v.hi;
  Int first, last;
  mpz_cdiv_q(first.get_mpz_t(), lo4.get_num_mpz_t(), lo4.get_den_mpz_t());
  mpz_fdiv_q(last.get_mpz_t(), hi4.get_num_mpz_t(), hi4.get_den_mpz_t());
  if (first > last) return 0;
  *hit = Rat(first) / 4;
  hit->canonicalize();
  Int count = last - first + 1;
  return count > 2 ? 3 : static_cast<int>(count.get_si());
}

size_t coord_bits(const Quartic& u) {
  size_t bits = 0;
  for (const auto& c : u.c) {
    bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(c.get_den_mpz_t(), 2));
  }
  return bits;
}

// One attempt at fixed precision. Outcome: 1 = square (root filled),
// 0 = certified not a square, -1 = insufficient precision.
int try_square(const Quartic& u, unsigned long prec, Quartic* root) {
  const Rat quarter(1, 4);
  Ival sa = sqrt_ival(Rat(u.a), prec);
  Ival sb = sqrt_ival(Rat(u.b), prec);
  Ival sab = sqrt_ival(Rat(u.a * u.b), prec);

  // Four real embeddings indexed by the signs of sqrt(a), sqrt(b).
  const int e1[4] = {+1, +1, -1, -1};
  const int e2[4] = {+1, -1, +1, -1};
  Ival t[4];
  for (int j = 0; j < 4; ++j) {
    Ival img = Ival(u.c[0]) + sa.scaled(u.c[1] * e1[j]) +
               sb.scaled(u.c[2] * e2[j]) + sab.scaled(u.c[3] * e1[j] * e2[j]);
    if (img.hi < 0) return 0;  // some conjugate negative: no real square root
    if (img.lo < 0) return -1;
    t[j] = sqrt_ival(img, prec);
  }

  Ival inv_sa{Rat(1) / sa.hi, Rat(1) / sa.lo};
  Ival inv_sb{Rat(1) / sb.hi, Rat(1) / sb.lo};
  Ival inv_sab{Rat(1) / sab.hi, Rat(1) / sab.lo};

  // v = sum s_j eps_j t_j / 4; the global sign is fixed by s_0 = +1.
  for (int mask = 0; mask < 8; ++mask) {
    int s[4] = {+1, (mask & 1) ? -1 : +1, (mask & 2) ? -1 : +1,
                (mask & 4) ? -1 : +1};
    Ival acc[4];
    for (int j = 0; j < 4; ++j) {
      Ival tj = t[j].scaled(Rat(s[j]));
      acc[0] = acc[0] + tj;
      acc[1] = acc[1] + tj.scaled(Rat(e1[j]));
      acc[2] = acc[2] + tj.scaled(Rat(e2[j]));
      acc[3] = acc[3] + tj.scaled(Rat(e1[j] * e2[j]));
    }
    Ival coord[4] = {acc[0].scaled(quarter), (acc[1] * inv_sa).scaled(quarter),
                     (acc[2] * inv_sb).scaled(quarter),
                     (acc[3] * inv_sab).scaled(quarter)};
    Quartic cand;
    cand.a = u.a;
    cand.b = u.b;
    bool feasible = true;
    for (int k = 0; k < 4 && feasible; ++k) {
      Rat hit;
      int cnt = quarter_integers_in(coord[k], &hit);
      if (cnt > 1) return -1;  // interval too wide to pin the coordinate
      if (cnt == 0)
        feasible = false;  // certified: this sign pattern has no root
      else
        cand.c[k] = hit;
    }
    if (feasible && cand * cand == u) {
      if (root) *root = cand;
      return 1;
    }
  }
  // Integral square roots have quarter-integer coordinates, and every sign
  // pattern either pinned its unique candidate or excluded it.
  return 0;
}

}  // namespace

bool is_square_in_field(const Quartic& u, Quartic* root) {
  // The quarter-integer recovery in try_square needs an algebraic integer;
  // clearing denominators by L^2 changes neither squareness nor the field.
  Int lcm = 1;
  for (const auto& c : u.c)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  Quartic scaled = u;
  if (lcm != 1) {
    Rat l2(lcm * lcm);
    for (auto& c : scaled.c) c *= l2;
  }

  unsigned long prec = static_cast<unsigned long>(std::max<std::uint64_t>(
      quartic_precision_bits(), 2 * coord_bits(scaled) + 64));
  for (int attempt = 0; attempt <= 3; ++attempt, prec *= 2) {
    int r = try_square(scaled, prec, root);
    if (r < 0) continue;
    if (r == 1 && root && lcm != 1) {
      Rat inv(Int(1), lcm);
      inv.canonicalize();
      for (auto& c : root->c) c *= inv;
    }
    return r == 1;
  }
  throw std::runtime_error("is_square_in_field: undecided after retries");
}

}  // namespace capitula
