#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hopfcat/lie.hpp"

namespace hopfcat {

using Word = std::vector<std::uint32_t>;      // product of generators, left to right
using Monomial = std::vector<std::uint32_t>;  // exponent vector over the Lie basis
using PbwCombo = std::map<Monomial, Rational>;

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += static_cast<int>(e);
  return d;
}

/* Rewrites arbitrary words into the PBW normal form (nondecreasing letters)
   using yx = xy - [x,y] on adjacent inversions. Terminates because each step
   lowers (length, inversion count) lexicographically. Memoized per engine. */
class PbwEngine {
 public:
  PbwEngine(const LieAlgebra& lie, int max_degree)
      : lie_(&lie), max_degree_(max_degree) {}

  const PbwCombo& straighten(const Word& word);
  PbwCombo multiply(const Monomial& a, const Monomial& b);
  PbwCombo antipode(const Monomial& a);  // (-1)^deg times the reversed product

  Word word_of(const Monomial& m) const;
  Monomial monomial_of(const Word& sorted_word) const;

 private:
  const LieAlgebra* lie_;
  int max_degree_;
  std::map<Word, PbwCombo> memo_;
};

/* One-shot convenience used by tests and the straighten operation. */
PbwCombo pbw_straighten(const LieAlgebra& lie, const Word& word, int max_degree);

/* All monomials of degree <= max_degree over dim letters, in the canonical
   enumeration order: degree-major, then exponent-vector lex. */
std::vector<Monomial> enumerate_monomials(std::uint32_t dim, int max_degree);

}  // namespace hopfcat
