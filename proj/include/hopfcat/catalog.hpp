#pragma once

#include <string>
#include <vector>

#include "hopfcat/action.hpp"
#include "hopfcat/group.hpp"
#include "hopfcat/lie.hpp"

namespace hopfcat::catalog {

FiniteGroup cyclic(std::uint32_t n);  // labels e, g, g2, ...
FiniteGroup symmetric3();             // e, r, r2, s, rs, r2s
FiniteGroup dihedral4();              // e, r, r2, r3, s, rs, r2s, r3s
FiniteGroup quaternion8();            // 1, -1, i, -i, j, -j, k, -k

LieAlgebra abelian(std::uint32_t n);  // labels x1..xn, zero bracket
LieAlgebra aff2();                    // [x, y] = y
LieAlgebra heis3();                   // [x, y] = z
LieAlgebra sl2();                     // [H,E]=2E, [H,F]=-2F, [E,F]=H

HopfAction h2_action();               // C2 on <x>, g.x = -x
HopfAction aff2_flip_action();        // C2 on aff2, x -> x, y -> -y
HopfAction heis3_rotation_action();   // C3 on heis3, x -> y -> -x-y, z fixed
HopfAction sl2_swap_action();         // C2 on sl2, E <-> F, H -> -H

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};
struct NamedLie {
  std::string name;
  LieAlgebra lie;
};
struct NamedAction {
  std::string name;
  HopfAction action;
};

std::vector<NamedGroup> all_groups();        // C1..C8, S3, D4, Q8
std::vector<NamedLie> all_lie_algebras();    // ab1..ab3, aff2, heis3, sl2
std::vector<NamedAction> all_smash_actions();  // H2, Haff, Hheis, Hsl2

}  // namespace hopfcat::catalog
