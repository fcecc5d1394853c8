#pragma once

#include "hopfcat/morphism.hpp"

namespace hopfcat {

/* The grouplikes of a presentation: Delta(v) = v (x) v with eps(v) = 1.
   Completeness is certified degree-theoretically: the comultiplication is
   filtration-compatible, so grouplikes live in filtration degree 0, and when
   every degree-0 basis vector is grouplike the coefficient argument
   (orthogonal idempotents summing to 1 under eps) pins the set down exactly. */
struct GrouplikeSet {
  std::vector<Element> elements;  // in basis enumeration order
  std::vector<std::string> labels;
  bool forms_group = false;
  FiniteGroup group = FiniteGroup::trivial();  // meaningful when forms_group
  Verdict certification;
};
GrouplikeSet grouplikes(const HopfPresentation::Ptr& h, ExecMode mode = default_exec_mode());

/* The primitive space: Delta(v) = v (x) 1 + 1 (x) v, computed as an exact
   nullspace and returned with the rref-canonical basis. The bracket
   [p, q] = pq - qp closes on the space; the certification records it. */
struct PrimitiveSpace {
  std::vector<Element> basis;  // rref-canonical coordinates
  std::vector<std::string> labels;
  LieAlgebra lie = LieAlgebra::make({}, {});
  Verdict certification;
};
PrimitiveSpace primitives(const HopfPresentation::Ptr& h, ExecMode mode = default_exec_mode());

/* Canonical decomposition of a cocommutative presentation: the comparison
   map h : U(P(H)) smash K[G(H)] -> H given by multiplication, certified
   bijective at the truncation degree, with the canonical inclusion of the
   primitive part, the grouplike section, and the retraction onto it. */
struct Decomposition {
  HopfPresentation::Ptr prim_part;    // U(P(H))
  HopfPresentation::Ptr group_part;   // K[G(H)]
  HopfPresentation::Ptr smash_model;  // U(P(H)) smash K[G(H)]
  HopfMorphism h;                     // smash_model -> H
  HopfMorphism i;                     // prim_part -> H, h after the first leg
  HopfMorphism s;                     // group_part -> H, h after the second leg
  HopfMorphism p;                     // H -> group_part, counit (x) id through h^{-1}
  GrouplikeSet grouplike;
  PrimitiveSpace primitive;
  Verdict verdict;
};
Decomposition decompose(const HopfPresentation::Ptr& h, ExecMode mode = default_exec_mode());

/* Maps induced on the primitive and grouplike parts by f, against fixed
   decompositions of its endpoints. Failures (an image that is not primitive,
   a grouplike sent off the grouplike set) land in the verdict. */
struct InducedPair {
  HopfMorphism prim_map;  // U(P(source)) -> U(P(target))
  HopfMorphism grp_map;   // K[G(source)] -> K[G(target)]
  Verdict verdict;
};
InducedPair induced_pair(const HopfMorphism& f, const Decomposition& src,
                         const Decomposition& dst, ExecMode mode = default_exec_mode());

/* Certificate that the only filtered Hopf map U(L) -> K[G] is trivial: the
   target has no primitives, so every Lie generator must die. */
Verdict zero_morphism_certificate(const HopfPresentation::Ptr& env,
                                  const HopfPresentation::Ptr& grp,
                                  ExecMode mode = default_exec_mode());

}  // namespace hopfcat
