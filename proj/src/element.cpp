#include "hopfcat/element.hpp"

#include <algorithm>

#include "hopfcat/presentation.hpp"

namespace hopfcat {

namespace {

void check_same_owner(const HopfPresentation* a, const HopfPresentation* b,
                      const char* op) {
  if (a != b)
    throw OwnershipError(std::string(op) + ": elements belong to different presentations");
}

std::string coeff_prefix(const Rational& c, bool first) {
  std::string mag = to_string(abs(c));
  std::string sign = sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  return sign + (mag == "1" ? "" : mag + "*");
}

}  // namespace

Element Element::basis(const HopfPresentation* owner, std::uint32_t index) {
  Element e(owner);
  e.terms_[index] = 1;
  return e;
}

Element Element::from_lincomb(const HopfPresentation* owner, const LinComb& v) {
  Element e(owner);
  for (const auto& [i, c] : v)
    if (!hopfcat::is_zero(c)) e.terms_[i] = c;
  return e;
}

int Element::degree() const {
  int d = 0;
  for (const auto& [i, c] : terms_) d = std::max(d, owner_->degree_of(i));
  return d;
}

Element& Element::add_scaled(const Element& other, const Rational& c) {
  if (other.owner_ != nullptr && owner_ == nullptr) owner_ = other.owner_;
  if (!other.is_zero()) check_same_owner(owner_, other.owner_, "add");
  for (const auto& [i, v] : other.terms_) add_scaled(i, c * v);
  return *this;
}

Element& Element::add_scaled(std::uint32_t index, const Rational& c) {
  if (hopfcat::is_zero(c)) return *this;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (hopfcat::is_zero(it->second)) terms_.erase(it);
  }
  return *this;
}

Element Element::scaled(const Rational& c) const {
  Element out(owner_);
  if (hopfcat::is_zero(c)) return out;
  for (const auto& [i, v] : terms_) out.terms_[i] = c * v;
  return out;
}

Element Element::operator+(const Element& o) const {
  Element out = *this;
  out.add_scaled(o, Rational(1));
  return out;
}

Element Element::operator-(const Element& o) const {
  Element out = *this;
  out.add_scaled(o, Rational(-1));
  return out;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::uint32_t, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    return term_order_less(owner_->basis_key(a.first), owner_->basis_key(b.first));
  });
  std::string out;
  bool first = true;
  for (const auto& [i, c] : items) {
    std::string label = owner_->basis_label(i);
    if (label == "1" ) {
      std::string mag = to_string(abs(c));
      out += (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ")) + mag;
    } else {
      out += coeff_prefix(c, first) + label;
    }
    first = false;
  }
  return out;
}

Tensor2 Tensor2::pure(const Element& a, const Element& b) {
  Tensor2 t(a.owner(), b.owner());
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) t.add_scaled(i, j, ci * cj);
  return t;
}

Tensor2& Tensor2::add_scaled(std::uint32_t i, std::uint32_t j, const Rational& c) {
  if (hopfcat::is_zero(c)) return *this;
  auto [it, inserted] = terms_.try_emplace(std::make_pair(i, j), c);
  if (!inserted) {
    it->second += c;
    if (hopfcat::is_zero(it->second)) terms_.erase(it);
  }
  return *this;
}

Tensor2& Tensor2::add_scaled(const Tensor2& o, const Rational& c) {
  if (o.terms_.empty()) return *this;
  if (left_ == nullptr && right_ == nullptr) {
    left_ = o.left_;
    right_ = o.right_;
  }
  check_same_owner(left_, o.left_, "tensor add");
  check_same_owner(right_, o.right_, "tensor add");
  for (const auto& [ij, v] : o.terms_) add_scaled(ij.first, ij.second, c * v);
  return *this;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  Tensor2 out = *this;
  out.add_scaled(o, Rational(1));
  return out;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
  Tensor2 out = *this;
  out.add_scaled(o, Rational(-1));
  return out;
}

Tensor2 Tensor2::twisted() const {
  Tensor2 out(right_, left_);
  for (const auto& [ij, v] : terms_) out.terms_[{ij.second, ij.first}] = v;
  return out;
}

std::string Tensor2::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Rational>> items(
      terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    const auto& ka1 = left_->basis_key(a.first.first);
    const auto& kb1 = left_->basis_key(b.first.first);
    if (!(ka1 == kb1)) return term_order_less(ka1, kb1);
    return term_order_less(right_->basis_key(a.first.second),
                           right_->basis_key(b.first.second));
  });
  std::string out;
  bool first = true;
  for (const auto& [ij, c] : items) {
    out += coeff_prefix(c, first) + left_->basis_label(ij.first) + " ⊗ " +
           right_->basis_label(ij.second);
    first = false;
  }
  return out;
}

Tensor3& Tensor3::add_scaled(std::uint32_t i, std::uint32_t j, std::uint32_t k,
                             const Rational& c) {
  if (hopfcat::is_zero(c)) return *this;
  std::array<std::uint32_t, 3> key{i, j, k};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (hopfcat::is_zero(it->second)) terms_.erase(it);
  }
  return *this;
}

std::string Tensor3::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ijk, c] : terms_) {
    out += coeff_prefix(c, first) + owner_->basis_label(ijk[0]) + " ⊗ " +
           owner_->basis_label(ijk[1]) + " ⊗ " + owner_->basis_label(ijk[2]);
    first = false;
  }
  return out;
}

}  // namespace hopfcat
