#include "hopfcat/rational.hpp"

#include <cctype>

namespace hopfcat {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  std::size_t i = 0;
  std::string body = text[0] == '+' ? text.substr(1) : text;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
    return j;
  };
  if (body.empty()) throw ValidationError("bad rational literal '" + text + "'");
  if (body[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ValidationError("bad rational literal '" + text + "'");
  if (num_end == body.size()) {
    Rational q(body, 10);
    q.canonicalize();
    return q;
  }
  if (body[num_end] != '/') throw ValidationError("bad rational literal '" + text + "'");
  std::size_t den_end = digits(num_end + 1);
  if (den_end != body.size() || den_end == num_end + 1)
    throw ValidationError("bad rational literal '" + text + "'");
  Rational q(body, 10);
  if (q.get_den() == 0) throw ValidationError("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace hopfcat
