#pragma once

#include "hopfcat/parallel.hpp"
#include "hopfcat/presentation.hpp"
#include "hopfcat/verdict.hpp"

namespace hopfcat {

/* Componentwise product (a (x) b)(c (x) d) = ac (x) bd; both legs in H. */
Tensor2 tensor2_multiply(const HopfPresentation& H, const Tensor2& s, const Tensor2& t);

/* Full axiom sweep at the presentation's truncation degree: associativity,
   unit, coassociativity, counit, both algebra-map conditions, the antipode
   identity, and cocommutativity. Every failing check carries a witness. */
Verdict check_hopf_axioms(const HopfPresentation& H, ExecMode mode = default_exec_mode());

}  // namespace hopfcat
