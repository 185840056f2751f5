#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "capitula/towers.hpp"

namespace capitula {

// F2 word in the ramified-prime classes [H0], ..., [H4]; bit j is H_j.
struct ClassWord {
  std::uint8_t bits = 0;

  ClassWord() = default;
  ClassWord(std::initializer_list<int> js) {
    for (int j : js) bits = static_cast<std::uint8_t>(bits ^ (1u << j));
  }

  bool zero() const { return bits == 0; }
  bool has(int j) const { return (bits >> j) & 1u; }

  friend ClassWord operator^(ClassWord a, ClassWord b) {
    ClassWord r;
    r.bits = a.bits ^ b.bits;
    return r;
  }
  friend bool operator==(ClassWord a, ClassWord b) { return a.bits == b.bits; }
  friend auto operator<=>(ClassWord a, ClassWord b) { return a.bits <=> b.bits; }

  // "H0*H3" style rendering; "1" for the empty word.
  std::string str() const;
};

// Rank of the span of `words` over F2.
int f2_rank(const std::vector<ClassWord>& words);

// Reduced row echelon basis, sorted by leading bit.
std::vector<ClassWord> f2_basis(std::vector<ClassWord> words);

// Is w in the span of `words`?
bool f2_in_span(ClassWord w, const std::vector<ClassWord>& words);

// Generators with the relation set identifying which words are principal.
struct Subgroup {
  std::vector<ClassWord> generators;
  std::vector<ClassWord> relations;

  // 2^(rank of generators modulo the relation span).
  int size() const;
  // Does w lie in the subgroup generated by `generators`, mod relations?
  bool contains(ClassWord w) const;
};

struct AmbiguousCounts {
  int rank = 0;        // rank of the 2-class group: 3 or 4
  int am_size = 0;     // |Am(k/Q(i))| = 2^rank
  int ams_size = 0;    // |Am_s(k/Q(i))|
  int norm_index = 0;  // [E_F cap N(k*) : N(E_k)] = am_size / ams_size
};

// 4 iff p1 = p2 = 1 (mod 8), else 3.
int rank_2class(const PrimePair& pair);

AmbiguousCounts ambiguous_counts(const FieldContext& ctx);

// Principality of an ideal H of k with H^2 = (a + ib), per the quadratic
// membership of sqrt(a^2 + b^2) and, when a^2 + b^2 = d, the fundamental-unit
// square conditions (all sign choices, over all unit multiples of a + ib).
// The a^2 + b^2 = square case is out of this procedure's scope (domain error);
// principal_prime_square covers those ideals.
bool principal_gaussian_square(const Int& a, const Int& b, const FieldContext& ctx);

// Principality of the ideal with square (p), p an odd prime dividing d.
bool principal_prime_square(const Int& p, const FieldContext& ctx);

// The two relations H0*Hi*Hj = 1 fixed by the sqrt form of eps_d;
// domain error unless N(eps_d) = -1.
std::vector<ClassWord> pairing_relations(const FieldContext& ctx);

// Am_s(k/Q(i)) with its generators as the classification writes them and the
// full relation set; size 8 or 16 matching ambiguous_counts.
Subgroup ams_presentation(const FieldContext& ctx);

}  // namespace capitula
