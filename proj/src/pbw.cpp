#include "hopfcat/pbw.hpp"

#include <algorithm>

namespace hopfcat {

const PbwCombo& PbwEngine::straighten(const Word& word) {
  if (static_cast<int>(word.size()) > max_degree_)
    throw TruncationError("word of length " + std::to_string(word.size()) +
                          " exceeds the degree bound " + std::to_string(max_degree_));
  auto it = memo_.find(word);
  if (it != memo_.end()) return it->second;

  PbwCombo result;
  std::size_t inv = word.size();
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) {
      inv = i;
      break;
    }
  if (inv == word.size()) {
    result[monomial_of(word)] = 1;
  } else {
    Word swapped = word;
    std::swap(swapped[inv], swapped[inv + 1]);
    /* yx = xy + [y,x] */
    const LinComb& br = lie_->bracket(word[inv], word[inv + 1]);
    for (const auto& [mono, c] : straighten(swapped)) {
      auto [slot, inserted] = result.try_emplace(mono, c);
      if (!inserted) slot->second += c;
    }
    for (const auto& [k, c] : br) {
      Word shorter;
      shorter.reserve(word.size() - 1);
      shorter.insert(shorter.end(), word.begin(), word.begin() + inv);
      shorter.push_back(k);
      shorter.insert(shorter.end(), word.begin() + inv + 2, word.end());
      for (const auto& [mono, c2] : straighten(shorter)) {
        auto [slot, inserted] = result.try_emplace(mono, c * c2);
        if (!inserted) slot->second += c * c2;
      }
    }
    for (auto it2 = result.begin(); it2 != result.end();)
      it2 = is_zero(it2->second) ? result.erase(it2) : std::next(it2);
  }
  return memo_.emplace(word, std::move(result)).first->second;
}

PbwCombo PbwEngine::multiply(const Monomial& a, const Monomial& b) {
  Word w = word_of(a);
  Word wb = word_of(b);
  w.insert(w.end(), wb.begin(), wb.end());
  return straighten(w);
}

PbwCombo PbwEngine::antipode(const Monomial& a) {
  Word w = word_of(a);
  std::reverse(w.begin(), w.end());
  PbwCombo out;
  Rational sign = (w.size() % 2 == 0) ? Rational(1) : Rational(-1);
  for (const auto& [mono, c] : straighten(w)) out[mono] = sign * c;
  return out;
}

Word PbwEngine::word_of(const Monomial& m) const {
  Word w;
  for (std::uint32_t i = 0; i < m.size(); ++i)
    for (std::uint32_t k = 0; k < m[i]; ++k) w.push_back(i);
  return w;
}

Monomial PbwEngine::monomial_of(const Word& sorted_word) const {
  Monomial m(lie_->dim(), 0);
  for (auto letter : sorted_word) ++m[letter];
  return m;
}

PbwCombo pbw_straighten(const LieAlgebra& lie, const Word& word, int max_degree) {
  for (auto letter : word)
    if (letter >= lie.dim()) throw ValidationError("word letter out of range");
  PbwEngine engine(lie, max_degree);
  return engine.straighten(word);
}

std::vector<Monomial> enumerate_monomials(std::uint32_t dim, int max_degree) {
  std::vector<Monomial> by_degree;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<Monomial> level;
    Monomial c(dim, 0);
    auto gen = [&](auto&& self, std::uint32_t pos, int remaining) -> void {
      if (pos == dim) {
        if (remaining == 0) level.push_back(c);
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        c[pos] = static_cast<std::uint32_t>(e);
        self(self, pos + 1, remaining - e);
      }
      c[pos] = 0;
    };
    if (dim == 0) {
      if (k == 0) level.push_back({});
    } else {
      gen(gen, 0, k);
    }
    /* Within a degree: descending exponent lex, so the degree-1 block lists
       the letters in Lie basis order. */
    std::sort(level.begin(), level.end(), std::greater<>());
    by_degree.insert(by_degree.end(), level.begin(), level.end());
  }
  return by_degree;
}

}  // namespace hopfcat
