#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "hopfcat/lincomb.hpp"

namespace hopfcat {

class HopfPresentation;

/* Vector in the degree-d filtration piece of a presentation, stored as a
   sparse combination of enumerated basis elements. Immutable owner pointer;
   mixing owners throws OwnershipError at the operation site. */
class Element {
 public:
  Element() = default;
  explicit Element(const HopfPresentation* owner) : owner_(owner) {}
  static Element basis(const HopfPresentation* owner, std::uint32_t index);
  static Element from_lincomb(const HopfPresentation* owner, const LinComb& v);

  const HopfPresentation* owner() const { return owner_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max basis degree in the support; 0 for the zero element
  const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
  Rational coeff(std::uint32_t i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  LinComb lincomb() const { return LinComb(terms_.begin(), terms_.end()); }

  Element& add_scaled(const Element& other, const Rational& c);
  Element& add_scaled(std::uint32_t index, const Rational& c);
  Element scaled(const Rational& c) const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  bool operator==(const Element& o) const {
    return owner_ == o.owner_ && terms_ == o.terms_;
  }

  /* Canonical printing: terms in the canonical term order. */
  std::string str() const;

 private:
  const HopfPresentation* owner_ = nullptr;
  std::map<std::uint32_t, Rational> terms_;
};

/* Element of the tensor square (legs may live in different presentations,
   e.g. A (x) B inside the Hopf kernel condition). */
class Tensor2 {
 public:
  Tensor2() = default;
  Tensor2(const HopfPresentation* left, const HopfPresentation* right)
      : left_(left), right_(right) {}
  static Tensor2 pure(const Element& a, const Element& b);

  const HopfPresentation* left() const { return left_; }
  const HopfPresentation* right() const { return right_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<std::uint32_t, std::uint32_t>, Rational>& terms() const {
    return terms_;
  }

  Tensor2& add_scaled(std::uint32_t i, std::uint32_t j, const Rational& c);
  Tensor2& add_scaled(const Tensor2& o, const Rational& c);
  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  bool operator==(const Tensor2& o) const {
    return left_ == o.left_ && right_ == o.right_ && terms_ == o.terms_;
  }

  Tensor2 twisted() const;  // swap legs; owners swap with them
  std::string str() const;

 private:
  const HopfPresentation* left_ = nullptr;
  const HopfPresentation* right_ = nullptr;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Rational> terms_;
};

/* Triple tensors appear only in the coassociativity sweep. */
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(const HopfPresentation* owner) : owner_(owner) {}

  Tensor3& add_scaled(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Rational& c);
  bool operator==(const Tensor3& o) const {
    return owner_ == o.owner_ && terms_ == o.terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

 private:
  const HopfPresentation* owner_ = nullptr;
  std::map<std::array<std::uint32_t, 3>, Rational> terms_;
};

}  // namespace hopfcat
