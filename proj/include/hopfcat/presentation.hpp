#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfcat/action.hpp"
#include "hopfcat/element.hpp"
#include "hopfcat/group.hpp"
#include "hopfcat/lie.hpp"
#include "hopfcat/pbw.hpp"

namespace hopfcat {

enum class HopfKind { GroupAlgebra, Enveloping, Smash, StructureConstants };

std::string kind_name(HopfKind k);

/* Position of a basis vector: PBW exponent vector plus group element id.
   GroupAlgebra leaves exps empty; StructureConstants stores the raw index in
   `group` and leaves exps empty. */
struct BasisKey {
  Monomial exps;
  std::uint32_t group = 0;
  bool operator==(const BasisKey& o) const { return group == o.group && exps == o.exps; }
};

struct BasisKeyLess {
  bool operator()(const BasisKey& a, const BasisKey& b) const {
    if (a.group != b.group) return a.group < b.group;
    return a.exps < b.exps;
  }
};

/* Canonical term order: degree, then group element id, then descending
   exponent lex; this matches the basis enumeration order. */
bool term_order_less(const BasisKey& a, const BasisKey& b);

/* Explicit structure-constant tables; the escape hatch for corrupted inputs
   and the representation of computed sub/quotient objects. Basis labels must
   be listed in nondecreasing degree order. */
struct ScData {
  std::vector<std::string> labels;
  std::vector<int> degrees;
  LinComb unit;  // supported in degree 0
  std::map<std::pair<std::uint32_t, std::uint32_t>, LinComb> mult;
  std::vector<std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Rational>>> delta;
  std::vector<Rational> counit;
  std::vector<LinComb> antipode;
  std::optional<std::vector<std::uint32_t>> grouplikes;
};

/* Cocommutative Hopf algebra presented at a fixed truncation degree d >= 2.
   The full basis of F_d is enumerated up front (degree-major canonical
   order) and all structure maps are tabulated eagerly, so a constructed
   presentation is immutable and safe to share across workers. */
class HopfPresentation {
 public:
  using Ptr = std::shared_ptr<const HopfPresentation>;

  static Ptr group_algebra(FiniteGroup group, int degree, std::string name);
  static Ptr enveloping(LieAlgebra lie, int degree, std::string name);
  static Ptr smash(HopfAction action, int degree, std::string name);
  static Ptr structure_constants(ScData data, int degree, std::string name);

  HopfKind kind() const { return kind_; }
  int degree_bound() const { return degree_; }
  const std::string& name() const { return name_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
  std::uint32_t dim_upto(int k) const;  // number of basis elements of degree <= k
  int degree_of(std::uint32_t i) const { return degrees_[i]; }
  const BasisKey& basis_key(std::uint32_t i) const { return basis_[i]; }
  std::optional<std::uint32_t> find_basis(const BasisKey& key) const;
  std::string basis_label(std::uint32_t i) const;

  const FiniteGroup& group() const { return group_; }  // trivial unless group part exists
  const LieAlgebra& lie() const { return lie_; }       // zero-dim unless Lie part exists
  const HopfAction& action() const;                    // Smash only
  const std::optional<std::vector<std::uint32_t>>& declared_grouplikes() const {
    return declared_grouplikes_;
  }

  /* Structure maps on basis positions. mult_basis requires
     degree_of(i) + degree_of(j) <= degree_bound(). */
  const Element& mult_basis(std::uint32_t i, std::uint32_t j) const;
  const Tensor2& delta_basis(std::uint32_t i) const { return delta_[i]; }
  const Rational& counit_basis(std::uint32_t i) const { return counit_[i]; }
  const Element& antipode_basis(std::uint32_t i) const { return antipode_[i]; }

  Element zero() const { return Element(this); }
  const Element& one() const { return unit_; }
  Element basis_element(std::uint32_t i) const { return Element::basis(this, i); }

  Element multiply(const Element& a, const Element& b) const;
  Tensor2 comultiply(const Element& a) const;
  Rational counit(const Element& a) const;
  Element antipode(const Element& a) const;

  /* PBW normal form of a generator word, as an element (Enveloping/Smash). */
  Element straighten_word(const Word& word) const;

  /* Generator surface used by morphism constructors. */
  struct Generator {
    enum class Type { Lie, Group, Opaque };
    Type type;
    std::string label;
    std::uint32_t index;  // Lie basis index / group element id / basis position
    std::uint32_t basis;  // basis position of the generator as an element
  };
  const std::vector<Generator>& generators() const { return generators_; }

 private:
  HopfPresentation() = default;
  void enumerate_smash_basis(std::uint32_t lie_dim);
  void build_generator_list();
  void check_degree(int degree) const;

  HopfKind kind_ = HopfKind::GroupAlgebra;
  int degree_ = 0;
  std::string name_;
  FiniteGroup group_ = FiniteGroup::trivial();
  LieAlgebra lie_ = LieAlgebra::make({}, {});
  std::optional<HopfAction> action_;
  std::vector<std::string> sc_labels_;

  std::vector<BasisKey> basis_;
  std::vector<int> degrees_;
  std::vector<std::uint32_t> dims_upto_;
  std::map<BasisKey, std::uint32_t, BasisKeyLess> index_;

  std::unordered_map<std::uint64_t, Element> mult_;  // (i << 32) | j
  std::vector<Tensor2> delta_;
  std::vector<Rational> counit_;
  std::vector<Element> antipode_;
  Element unit_;
  std::optional<std::vector<std::uint32_t>> declared_grouplikes_;
  std::vector<Generator> generators_;
};

inline bool same_presentation(const HopfPresentation* a, const HopfPresentation* b) {
  return a == b;
}

/* Dump the tabulated structure maps; lets tests corrupt a copy. */
ScData to_structure_constants(const HopfPresentation& p);

}  // namespace hopfcat
