#pragma once

#include <vector>

#include "hopfcat/functors.hpp"

namespace hopfcat {

/* Hopf kernel HKer(f) of f : A -> B: all a with (id (x) f)(Delta a) = a (x) 1,
   computed level by level as an exact nullspace. The basis is filtration
   adapted (the vectors of level k extend a basis of HKer ∩ F_{k-1}), and the
   kernel is packaged as a presentation of its own together with the inclusion
   into A; validating the inclusion certifies the sub-Hopf structure. */
struct HopfKernel {
  HopfPresentation::Ptr kernel;
  HopfMorphism inclusion;            // kernel -> source(f)
  std::vector<Element> basis;        // the adapted basis, as elements of A
  std::vector<int> dim_upto;         // dim(HKer ∩ F_k) for k = 0..d
  Verdict verdict;
};
HopfKernel hkernel(const HopfMorphism& f, ExecMode mode = default_exec_mode());

/* Hopf cokernel HCoker(f) = B / J with J the two-sided ideal generated by
   the augmentation part of the image, J = B (im f)+ B. Quotient classes are
   represented by the basis columns missed by the ideal's echelon pivots; the
   descent of the structure maps through J is verified explicitly. */
struct HopfCokernel {
  HopfPresentation::Ptr quotient;
  HopfMorphism projection;                    // target(f) -> quotient
  std::vector<Element> ideal_basis;           // echelon basis of J, in B
  std::vector<std::uint32_t> representatives; // B basis columns of the classes
  std::vector<int> ideal_dim_upto;            // dim J_k for k = 0..d
  Verdict verdict;
};
HopfCokernel hcokernel(const HopfMorphism& f, ExecMode mode = default_exec_mode());

/* Image factorization f = monic . projection through A / A HKer(f)+ A,
   including the level-by-level identity dim ker(f|F_k) = dim J_k tying the
   linear kernel of f to the ideal generated by its Hopf kernel. */
struct Factorization {
  HopfKernel kernel;      // HKer(f), a sub-object of the source
  HopfCokernel cokernel;  // source / ideal of the kernel, with its projection
  HopfMorphism monic;     // cokernel.quotient -> target(f)
  Verdict verdict;
};
Factorization factorize(const HopfMorphism& f, ExecMode mode = default_exec_mode());

/* Short-exact-sequence audit for A -i-> H -p-> B with an optional section s
   of p: both maps are validated, p.i must be trivial, i injective and p
   surjective on every level, and im(i) = HKer(p) as subspaces of each F_k. */
Verdict check_ses(const HopfMorphism& i, const HopfMorphism& p,
                  const HopfMorphism* s = nullptr,
                  ExecMode mode = default_exec_mode());

/* A split short exact sequence A -i-> H -p-> B with a section s : B -> H. */
struct SplitSES {
  HopfMorphism i, p, s;
};

/* Morphism of split sequences: left, middle, right connect the objects of
   the top row to the bottom row and must commute with i, p, and s. */
struct SplitDiagramMorphism {
  SplitSES top, bottom;
  HopfMorphism left, middle, right;
};

enum class SplitLemma {
  FiveLemma,     // left and right bijective  =>  middle bijective
  Surjectivity,  // middle surjective  <=>  left and right surjective
};

Verdict check_split_diagram(const SplitDiagramMorphism& d, SplitLemma lemma,
                            ExecMode mode = default_exec_mode());

/* Torsion-class membership. Group-type: the grouplikes span the whole
   object. Primitive-type: the unit is the only grouplike and the comparison
   map U(P(H)) -> H is bijective on every level. */
enum class HopfClass { GroupType, PrimitiveType };

Verdict class_membership(const HopfPresentation::Ptr& h, HopfClass cls,
                         ExecMode mode = default_exec_mode());

}  // namespace hopfcat
