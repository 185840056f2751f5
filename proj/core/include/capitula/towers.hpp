#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capitula/gaussian.hpp"
#include "capitula/pell.hpp"
#include "capitula/quartic.hpp"

namespace capitula {

// Everything downstream needs about one pair: the Gaussian prime data and
// the fundamental units of all six real quadratic subfields involved.
struct FieldContext {
  PrimePair pair;
  TwoSquares sq1;  // p1 = e^2 + 4f^2
  TwoSquares sq2;  // p2 = g^2 + 4h^2
  QuadUnit eps_p1, eps_p2;
  QuadUnit eps_2;
  QuadUnit eps_2p1, eps_2p2;
  QuadUnit eps_p1p2;
  QuadUnit eps_d;
  int q_k;  // Hasse unit index of Q(sqrt(d), i)
};

FieldContext make_context(const PrimePair& pair);

// Sign s with m*(x+s) a perfect square, if one exists. For the m used here
// at most one sign can succeed (two successes raise a logic error).
std::optional<int> pm_square_test(const Int& x, const Int& m);

// Hasse unit index of k = Q(sqrt(2 p1 p2), i): 2 iff N(eps_d) = 1 and
// x +- 1 is a square; cross-checked against the mod-8 shortcut.
int q_k_index(const PrimePair& pair);
int q_k_index(const FieldContext& ctx);

enum class Pairing { P13_24, P14_23 };

// Which conjugate pairing of the Gaussian primes appears under sqrt(eps):
// P13_24 when pi1 and pi3 divide the same element of {x + i, x - i}.
// Requires a unit of norm -1 over a radicand divisible by both primes.
Pairing sqrt_form(const QuadUnit& u, const TwoSquares& sq1, const TwoSquares& sq2);

// Factorization data of (x + den*i) for a norm -1 unit: which conjugate of
// each ramified Gaussian prime divides it, and the i-parity of the unit left
// after the ramified part is removed.
struct UnitSplit {
  std::optional<int> side_p1;  // 1 if pi1 | (x + den*i), 2 if pi2 does
  std::optional<int> side_p2;  // 3 or 4
  int i_parity = 0;            // k mod 2 in x + den*i = i^k * ram * c^2
};

UnitSplit split_unit(const QuadUnit& u, const TwoSquares* sq1, const TwoSquares* sq2);

enum class Tower { K1, K2, K3 };

// The resolved case of one tower: theorem branch, unit indices, and the
// fundamental systems of units as the governing statement writes them.
struct TowerCase {
  Tower tower;
  int branch = 0;   // 1..4, by norm-sign pattern
  int subcase = 0;  // 0 = none, 1 = (i), 2 = (ii)
  int n_eps2 = 0;
  int n_eps3 = 0;
  int hasse_q = 0;           // Q_K of the CM tower (always 1 for K3)
  int q_k3 = 0;              // q(K3+/Q), K3 only
  int norm_unit_index = 0;   // [E_k : N(E_K)], in {1, 2, 4}
  std::optional<int> pm_sign;  // sign with x +- 1 square, if any
  bool triple_square = false;  // eps1*eps2*eps3 square in K+ (branch 1)
  std::vector<std::string> fsu_plus;
  std::vector<std::string> fsu;
  std::vector<std::string> fsu_alternatives;
};

TowerCase classify_K1(const FieldContext& ctx);
// K2 is K1 with the roles of p1 and p2 exchanged.
TowerCase classify_K2(const FieldContext& ctx);
TowerCase classify_K3(const FieldContext& ctx);

// eps1*eps2*eps3 square in Q(sqrt 2, sqrt(p1 p2))? Pairing match of eps_p1p2
// and eps_d, valid when both have norm -1 (domain error otherwise).
bool triple_product_square(const FieldContext& ctx);

// Same question for the K1 tower units over Q(sqrt p1, sqrt(2 p2)), decided
// by the square class of the Gaussian cofactors. Exposed for oracle tests.
bool triple_product_square_K1(const FieldContext& ctx);

// Test-oracle route: the certified numeric square test on the exact product.
bool triple_square_by_oracle(const QuadUnit& e1, const QuadUnit& e2,
                             const QuadUnit& e3, const Int& a, const Int& b);

}  // namespace capitula
