#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfcat/action.hpp"
#include "hopfcat/morphism.hpp"

namespace hopfcat {

/* Parse or build failure in a model file; the message carries file:line. */
struct ModelError : HopfError {
  using HopfError::HopfError;
};

/* A morphism of split sequences. Rows are either one hopf name each (the
   canonical decomposition supplies the row, and the left/right maps are the
   ones induced by `middle` on the primitive and grouplike parts) or three
   morphism names i p s each, with explicit left/middle/right. `left` and
   `right` are empty exactly in the canonical form. */
struct DiagramSpec {
  std::vector<std::string> top;
  std::vector<std::string> bottom;
  std::string left, middle, right;
  int line = 0;
};

/* Everything a model file declares, built eagerly in declaration order so a
   section can only reference sections above it. */
struct Model {
  int degree = 0;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, LieAlgebra> lies;
  std::map<std::string, HopfAction> actions;
  std::map<std::string, HopfPresentation::Ptr> hopfs;
  std::vector<std::string> hopf_order;
  std::map<std::string, HopfMorphism> morphisms;
  std::map<std::string, DiagramSpec> diagrams;

  const HopfPresentation::Ptr& hopf(const std::string& name) const;
  const HopfMorphism& morphism(const std::string& name) const;
  const DiagramSpec& diagram(const std::string& name) const;
};

/* Load a model file. Hopf sections instantiate at `default_degree` unless the
   file sets a global `degree =` line. */
Model load_model(const std::string& path, int default_degree);
Model parse_model(const std::string& text, const std::string& display_name, int default_degree);

/* Element expressions: sums of rational-scaled generator words, e.g.
   "x*y^2 - 1/2*y" or "g" or "0". Labels resolve through the presentation's
   generators plus, for group-carrying kinds, every group element label. */
Element eval_element(const HopfPresentation::Ptr& h, const std::string& expr);

}  // namespace hopfcat
