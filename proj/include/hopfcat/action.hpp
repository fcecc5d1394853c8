#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hopfcat/group.hpp"
#include "hopfcat/lie.hpp"
#include "hopfcat/verdict.hpp"

namespace hopfcat {

/* Action of a finite group on a Lie algebra by automorphisms: the input data
   of a smash product U(L) x| K[G]. rho maps each group element to the matrix
   whose column j is the image of basis vector j. */
class HopfAction {
 public:
  /* Matrices are required for every non-identity element; the identity acts
     as the identity matrix. Throws ValidationError with a witness. */
  static HopfAction make(FiniteGroup group, LieAlgebra lie,
                         std::map<std::uint32_t, std::vector<LinComb>> rho);

  const FiniteGroup& group() const { return group_; }
  const LieAlgebra& lie() const { return lie_; }
  const LinComb& apply(std::uint32_t g, std::uint32_t basis) const {
    return rho_[g][basis];
  }
  LinComb apply(std::uint32_t g, const LinComb& v) const;

  /* rho(e) = id, rho(g)rho(h) = rho(gh), bracket preservation; witnesses name
     (g, x_i, x_j) triples. */
  Verdict validate() const;

 private:
  HopfAction() = default;
  FiniteGroup group_ = FiniteGroup::trivial();
  LieAlgebra lie_ = LieAlgebra::make({}, {});
  std::vector<std::vector<LinComb>> rho_;  // [group element][basis column]
};

/* Free-function form of HopfAction::validate. */
Verdict validate_action(const HopfAction& action);

}  // namespace hopfcat
