#include "capitula/towers.hpp"

namespace capitula {

FieldContext make_context(const PrimePair& pair) {
  FieldContext ctx;
  ctx.pair = pair;
  ctx.sq1 = two_squares(pair.p1);
  ctx.sq2 = two_squares(pair.p2);
  ctx.eps_p1 = fundamental_unit(pair.p1);
  ctx.eps_p2 = fundamental_unit(pair.p2);
  ctx.eps_2 = fundamental_unit(2);
  ctx.eps_2p1 = fundamental_unit(2 * pair.p1);
  ctx.eps_2p2 = fundamental_unit(2 * pair.p2);
  ctx.eps_p1p2 = fundamental_unit(pair.p1 * pair.p2);
  ctx.eps_d = fundamental_unit(pair.d);
  ctx.q_k = q_k_index(ctx);
  return ctx;
}

std::optional<int> pm_square_test(const Int& x, const Int& m) {
  if (x <= 1) throw std::domain_error("pm_square_test: need x > 1");
  bool plus = is_perfect_square(m * (x + 1));
  bool minus = is_perfect_square(m * (x - 1));
  if (plus && minus)
    throw std::logic_error("pm_square_test: both signs succeeded");
  if (plus) return +1;
  if (minus) return -1;
  return std::nullopt;
}

int q_k_index(const FieldContext& ctx) {
  int q = 1;
  if (ctx.eps_d.norm_sign == 1 && pm_square_test(ctx.eps_d.x, 1)) q = 2;
  // Any divisor of d that is 5 (mod 8) forces index 1.
  if ((ctx.pair.p1 % 8 == 5 || ctx.pair.p2 % 8 == 5) && q != 1)
    throw std::logic_error("q_k_index: mod-8 shortcut contradicts the square test");
  return q;
}

int q_k_index(const PrimePair& pair) {
  FieldContext ctx;
  ctx.pair = pair;
  ctx.eps_d = fundamental_unit(pair.d);
  return q_k_index(ctx);
}

UnitSplit split_unit(const QuadUnit& u, const TwoSquares* sq1, const TwoSquares* sq2) {
  if (u.norm_sign != -1)
    throw std::domain_error("split_unit: unit must have norm -1");
  GaussInt z{u.x, Int(u.den)};
  UnitSplit split;

  auto strip = [&z](const GaussInt& pi) {
    auto q = exact_div(z, pi);
    if (!q) throw std::logic_error("split_unit: expected divisor missing");
    z = *q;
  };

  for (int which = 0; which < 2; ++which) {
    const TwoSquares* sq = which == 0 ? sq1 : sq2;
    if (!sq) continue;
    if (u.m % sq->p != 0)
      throw std::domain_error("split_unit: prime does not ramify in the radicand");
    int base = which == 0 ? 1 : 3;
    if (divides(sq->pi1(), z)) {
      (which == 0 ? split.side_p1 : split.side_p2) = base;
      strip(sq->pi1());
    } else if (divides(sq->pi2(), z)) {
      (which == 0 ? split.side_p1 : split.side_p2) = base + 1;
      strip(sq->pi2());
    } else {
      throw std::logic_error("split_unit: neither conjugate divides x + den*i");
    }
  }
  if (u.m % 2 == 0) strip(GaussInt{1, 1});

  // What remains is i^k * c^2; the parity of k is well defined.
  if (is_gaussian_square(z))
    split.i_parity = 0;
  else if (is_gaussian_square(z.times_i_pow(-1)))
    split.i_parity = 1;
  else
    throw std::logic_error("split_unit: residual is not i^k * square");
  return split;
}

Pairing sqrt_form(const QuadUnit& u, const TwoSquares& sq1, const TwoSquares& sq2) {
  UnitSplit s = split_unit(u, &sq1, &sq2);
  return (*s.side_p1 == 1) == (*s.side_p2 == 3) ? Pairing::P13_24
                                                : Pairing::P14_23;
}

bool triple_product_square(const FieldContext& ctx) {
  if (ctx.eps_p1p2.norm_sign != -1 || ctx.eps_d.norm_sign != -1)
    throw std::domain_error("triple_product_square: needs N(eps2) = N(eps3) = -1");
  return sqrt_form(ctx.eps_p1p2, ctx.sq1, ctx.sq2) ==
         sqrt_form(ctx.eps_d, ctx.sq1, ctx.sq2);
}

bool triple_product_square_K1(const FieldContext& ctx) {
  if (ctx.eps_2p2.norm_sign != -1 || ctx.eps_d.norm_sign != -1)
    throw std::domain_error("triple_product_square_K1: needs N(eps2) = N(eps3) = -1");
  UnitSplit s1 = split_unit(ctx.eps_p1, &ctx.sq1, nullptr);
  UnitSplit s2 = split_unit(ctx.eps_2p2, nullptr, &ctx.sq2);
  UnitSplit s3 = split_unit(ctx.eps_d, &ctx.sq1, &ctx.sq2);
  // Square class of the Gaussian cofactor X with sqrt(X eps1 eps2 eps3) in
  // K1 = Q(i, sqrt p1, sqrt 2p2): the power of [i] left after absorbing
  // [p1] and [2 p2] must vanish. A p2-side mismatch contributes [p2] =
  // [i][2 p2], and each integral unit contributes one factor [2] = [i].
  int i_exponent = s1.i_parity + s2.i_parity + s3.i_parity;
  i_exponent += (ctx.eps_p1.den == 1) ? 1 : 0;  // [2] from eps1's identity
  i_exponent += 2;                              // [2]'s from eps2, eps3
  if (*s2.side_p2 != *s3.side_p2) i_exponent += 1;
  return i_exponent % 2 == 0;
}

bool triple_square_by_oracle(const QuadUnit& e1, const QuadUnit& e2,
                             const QuadUnit& e3, const Int& a, const Int& b) {
  Quartic u = Quartic::embed(a, b, e1) * Quartic::embed(a, b, e2) *
              Quartic::embed(a, b, e3);
  return is_square_in_field(u);
}

namespace {

std::string eps(int i) { return "eps" + std::to_string(i); }
std::string sqrt_of(const std::string& s) { return "sqrt(" + s + ")"; }

}  // namespace

TowerCase classify_K1(const FieldContext& ctx) {
  TowerCase tc;
  tc.tower = Tower::K1;
  tc.n_eps2 = ctx.eps_2p2.norm_sign;
  tc.n_eps3 = ctx.eps_d.norm_sign;
  const Int& x = ctx.eps_d.x;
  tc.pm_sign = pm_square_test(x, 1);
  bool two_p1_sq = pm_square_test(x, 2 * ctx.pair.p1).has_value();

  if (tc.n_eps2 == -1 && tc.n_eps3 == -1) {
    tc.branch = 1;
    tc.triple_square = triple_product_square_K1(ctx);
    tc.norm_unit_index = 2;
    if (tc.triple_square) {
      tc.subcase = 1;
      tc.hasse_q = 1;
      tc.fsu_plus = {eps(1), eps(2), sqrt_of("eps1*eps2*eps3")};
      tc.fsu = tc.fsu_plus;
    } else {
      tc.subcase = 2;
      tc.hasse_q = 2;
      tc.fsu_plus = {eps(1), eps(2), eps(3)};
      tc.fsu = {eps(1), eps(2), sqrt_of("i*eps1*eps2*eps3")};
    }
  } else if (tc.n_eps2 == 1 && tc.n_eps3 == -1) {
    tc.branch = 2;
    tc.hasse_q = 2;
    tc.norm_unit_index = 2;
    tc.fsu_plus = {eps(1), eps(2), eps(3)};
    tc.fsu = {eps(1), sqrt_of("i*eps2"), eps(3)};
  } else if (tc.n_eps2 == -1 && tc.n_eps3 == 1) {
    tc.branch = 3;
    tc.norm_unit_index = tc.pm_sign ? 4 : 2;
    if (two_p1_sq) {
      tc.subcase = 1;
      tc.hasse_q = 1;
      tc.fsu_plus = {eps(1), eps(2), sqrt_of("eps3")};
      tc.fsu = tc.fsu_plus;
    } else {
      tc.subcase = 2;
      tc.hasse_q = 2;
      tc.fsu_plus = {eps(1), eps(2), eps(3)};
      tc.fsu = {eps(1), eps(2), sqrt_of("i*eps3")};
    }
  } else {
    tc.branch = 4;
    tc.hasse_q = 2;
    tc.norm_unit_index = tc.pm_sign ? 2 : 1;
    if (two_p1_sq) {
      tc.subcase = 1;
      tc.fsu_plus = {eps(1), eps(2), sqrt_of("eps3")};
      tc.fsu = {eps(1), sqrt_of("i*eps2"), sqrt_of("eps3")};
    } else {
      tc.subcase = 2;
      tc.fsu_plus = {eps(1), eps(2), sqrt_of("eps2*eps3")};
      tc.fsu = {eps(1), sqrt_of("eps2*eps3"), sqrt_of("i*eps3")};
      tc.fsu_alternatives = {"{eps1, sqrt(eps2*eps3), sqrt(i*eps2)}",
                             "{eps1, sqrt(i*eps2), sqrt(i*eps3)}"};
    }
  }
  return tc;
}

TowerCase classify_K2(const FieldContext& ctx) {
  FieldContext swapped = ctx;
  std::swap(swapped.pair.p1, swapped.pair.p2);
  std::swap(swapped.sq1, swapped.sq2);
  std::swap(swapped.eps_p1, swapped.eps_p2);
  std::swap(swapped.eps_2p1, swapped.eps_2p2);
  TowerCase tc = classify_K1(swapped);
  tc.tower = Tower::K2;
  return tc;
}

// Trust point: products twisted by 2 + sqrt(2) are never squares in this
// tower, so norm signs and the square conditions below decide every case.
TowerCase classify_K3(const FieldContext& ctx) {
  TowerCase tc;
  tc.tower = Tower::K3;
  tc.hasse_q = 1;
  tc.n_eps2 = ctx.eps_p1p2.norm_sign;
  tc.n_eps3 = ctx.eps_d.norm_sign;
  tc.pm_sign = pm_square_test(ctx.eps_d.x, 1);

  if (tc.n_eps2 == -1 && tc.n_eps3 == -1) {
    tc.branch = 1;
    tc.triple_square = triple_product_square(ctx);
    if (tc.triple_square) {
      tc.subcase = 1;
      tc.q_k3 = 2;
      tc.norm_unit_index = 1;
      tc.fsu_plus = {eps(1), eps(2), sqrt_of("eps1*eps2*eps3")};
    } else {
      tc.subcase = 2;
      tc.q_k3 = 1;
      tc.norm_unit_index = 2;
      tc.fsu_plus = {eps(1), eps(2), eps(3)};
    }
  } else if (tc.n_eps2 == 1 && tc.n_eps3 == -1) {
    tc.branch = 2;
    tc.q_k3 = 1;
    tc.norm_unit_index = 2;
    tc.fsu_plus = {eps(1), eps(2), eps(3)};
  } else if (tc.n_eps2 == -1 && tc.n_eps3 == 1) {
    tc.branch = 3;
    tc.norm_unit_index = 2;
    if (tc.pm_sign) {
      tc.subcase = 1;
      tc.q_k3 = 2;
      tc.fsu_plus = {eps(1), eps(2), sqrt_of("eps3")};
    } else {
      tc.subcase = 2;
      tc.q_k3 = 1;
      tc.fsu_plus = {eps(1), eps(2), eps(3)};
    }
  } else {
    tc.branch = 4;
    tc.q_k3 = 2;
    tc.norm_unit_index = tc.pm_sign ? 2 : 1;
    if (tc.pm_sign) {
      tc.subcase = 1;
      tc.fsu_plus = {eps(1), eps(2), sqrt_of("eps3")};
    } else {
      tc.subcase = 2;
      tc.fsu_plus = {eps(1), eps(2), sqrt_of("eps2*eps3")};
    }
  }
  tc.fsu = tc.fsu_plus;  // Q_K3 = 1: the same system generates E_K3 with i
  return tc;
}

}  // namespace capitula
