#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfcat/parallel.hpp"
#include "hopfcat/presentation.hpp"
#include "hopfcat/sparse_matrix.hpp"
#include "hopfcat/verdict.hpp"

namespace hopfcat {

/* Strict runs the full validation sweep inside the constructor and throws on
   the first failure; Defer returns the tabulated map and leaves failures to
   validate(), so deliberately broken maps can be carried to a verdict. */
enum class ValidatePolicy { Strict, Defer };

/* Filtration-preserving Hopf algebra map between presentations truncated at
   the same degree, tabulated on the full source basis. */
class HopfMorphism {
 public:
  /* Images keyed by generator label. Lie letters all need images; group
     images may cover just a generating set and are closed under products
     (inconsistent closures are recorded and reported by validate()).
     Structure-constant sources need an image per basis label. */
  static HopfMorphism from_generators(HopfPresentation::Ptr source,
                                      HopfPresentation::Ptr target,
                                      const std::map<std::string, Element>& images,
                                      ValidatePolicy policy = ValidatePolicy::Strict,
                                      std::string name = "");

  /* Raw linear tabulation, one image per source basis element; used for maps
     produced by computations (kernel inclusions, projections, inverses). */
  static HopfMorphism from_basis_images(HopfPresentation::Ptr source,
                                        HopfPresentation::Ptr target,
                                        std::vector<Element> images, std::string name = "");

  static HopfMorphism identity(HopfPresentation::Ptr h);

  const HopfPresentation::Ptr& source() const { return source_; }
  const HopfPresentation::Ptr& target() const { return target_; }
  const std::string& name() const { return name_; }
  const Element& image_basis(std::uint32_t i) const { return images_[i]; }
  Element apply(const Element& a) const;

  /* Hopf-map conditions: filtration, unit, multiplicativity, coalgebra
     compatibility, counit, antipode, and recorded closure inconsistencies. */
  Verdict validate(ExecMode mode = default_exec_mode()) const;

  /* Matrix of the restriction F_k(source) -> F_k(target): rows are target
     basis positions, columns source basis positions (degree <= k each). */
  SparseMatrix matrix_upto(int k) const;

  bool operator==(const HopfMorphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && images_ == o.images_;
  }

 private:
  HopfMorphism() = default;
  HopfPresentation::Ptr source_;
  HopfPresentation::Ptr target_;
  std::string name_;
  std::vector<Element> images_;
  std::vector<std::string> closure_notes_;
};

/* g after f. */
HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f);

/* unit_B after counit_A: the zero map of the category. */
HopfMorphism trivial_morphism(HopfPresentation::Ptr source, HopfPresentation::Ptr target);

/* Rank profile of the filtration restrictions k = 0..d. */
struct MorphismAnalysis {
  std::vector<std::uint32_t> rank;        // indexed by degree k
  std::vector<std::uint32_t> source_dim;  // dim F_k(source)
  std::vector<std::uint32_t> target_dim;  // dim F_k(target)
  bool injective = false;   // at the truncation degree
  bool surjective = false;  // at the truncation degree
  bool bijective = false;
};
MorphismAnalysis analyze(const HopfMorphism& f, ExecMode mode = default_exec_mode());

}  // namespace hopfcat
