#include <doctest.h>

#include "hopfcat/catalog.hpp"
#include "hopfcat/presentation.hpp"

using namespace hopfcat;

namespace {

/* Expected PBW basis vector, built from exponent keys only — no multiplication
   involved, so these stay independent of the straightening engine. */
Element pbw(const HopfPresentation::Ptr& h, std::vector<std::pair<Monomial, Rational>> combo) {
  Element out = h->zero();
  for (auto& [exps, c] : combo) {
    auto idx = h->find_basis(BasisKey{exps, 0});
    REQUIRE(idx.has_value());
    out.add_scaled(*idx, c);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("constructors");

TEST_CASE("group tables are validated with witnesses") {
  auto c2 = FiniteGroup::from_table({"e", "g"}, {{0, 1}, {1, 0}});
  CHECK(c2.mul(1, 1) == 0);
  CHECK(c2.inverse(1) == 1);

  // row of g repeats g: not a Latin square
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "g"}, {{0, 1}, {1, 1}}), ValidationError);

  // Latin square without identity: the subtraction table i - j mod 3
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b", "c"},
                                          {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}),
                  ValidationError);

  // identity does not have to sit at index 0: relabeled Z3 is accepted
  auto z3 = FiniteGroup::from_table({"a", "b", "c"}, {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(z3.identity() == 2);

  // Latin square with identity but not associative (order-5 loop)
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a", "b", "c", "d"},
                                          {{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}}),
                  ValidationError);
}

TEST_CASE("catalog groups have the advertised shapes") {
  auto groups = catalog::all_groups();
  REQUIRE(groups.size() == 11);
  std::vector<std::uint32_t> sizes;
  for (const auto& g : groups) sizes.push_back(g.group.size());
  CHECK(sizes == std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6, 7, 8, 6, 8, 8});

  auto c4 = catalog::cyclic(4);
  CHECK(c4.label(1) == "g");
  CHECK(c4.inverse(1) == 3);  // g^-1 = g^3

  auto q8 = catalog::quaternion8();
  CHECK(q8.label(1) == "ne");
  // i * j = k and j * i = -k
  auto idx = [&](const std::string& s) { return *q8.index_of(s); };
  CHECK(q8.mul(idx("i"), idx("j")) == idx("k"));
  CHECK(q8.mul(idx("j"), idx("i")) == idx("nk"));

  auto s3 = catalog::symmetric3();
  CHECK(s3.size() == 6);
  CHECK(s3.mul(*s3.index_of("s"), *s3.index_of("r")) != s3.mul(*s3.index_of("r"), *s3.index_of("s")));
}

TEST_CASE("lie constructors enforce antisymmetry and Jacobi") {
  auto aff = catalog::aff2();
  CHECK(aff.dim() == 2);
  CHECK(aff.bracket(0, 1) == LinComb{{1, rat(1)}});   // [x, y] = y
  CHECK(aff.bracket(1, 0) == LinComb{{1, rat(-1)}});  // filled in by antisymmetry

  // both orientations given but not antisymmetric
  CHECK_THROWS_AS(LieAlgebra::make({"x", "y"}, {{{0, 1}, {{1, rat(1)}}}, {{1, 0}, {{1, rat(1)}}}}),
                  ValidationError);

  // [x,y] = z, [y,z] = y violates Jacobi: [[y,z],x] = [y,x] = -z survives
  CHECK_THROWS_AS(LieAlgebra::make({"x", "y", "z"},
                                   {{{0, 1}, {{2, rat(1)}}}, {{1, 2}, {{1, rat(1)}}}}),
                  ValidationError);

  // sl2 brackets round-trip through the bilinear form
  auto sl2 = catalog::sl2();
  LinComb e{{0, rat(1)}}, f{{1, rat(1)}}, h{{2, rat(1)}};
  CHECK(sl2.bracket(e, f) == h);
  CHECK(sl2.bracket(h, e) == LinComb{{0, rat(2)}});
  CHECK(sl2.bracket(h, f) == LinComb{{1, rat(-2)}});
}

TEST_CASE("actions are validated as automorphism representations") {
  for (const auto& named : catalog::all_smash_actions()) {
    CAPTURE(named.name);
    CHECK(named.action.validate().pass);
  }

  // swapping x and y is not an automorphism of aff2: [y,x] = -y but the
  // bracket of the images must be the image of the bracket, which is x
  CHECK_THROWS_AS(HopfAction::make(catalog::cyclic(2), catalog::aff2(),
                                   {{1, {{{1, rat(1)}}, {{0, rat(1)}}}}}),
                  ValidationError);

  // rho(g) = 2 id on a one-dimensional algebra: rho(g)^2 != rho(e)
  CHECK_THROWS_AS(HopfAction::make(catalog::cyclic(2), catalog::abelian(1),
                                   {{1, {{{0, rat(2)}}}}}),
                  ValidationError);
}

TEST_CASE("pbw straightening matches hand-computed normal forms") {
  auto uaff = HopfPresentation::enveloping(catalog::aff2(), 4, "Uaff2");
  // y x = x y - y  (letters x = 0, y = 1)
  CHECK(uaff->straighten_word({1, 0}) == pbw(uaff, {{{1, 1}, rat(1)}, {{0, 1}, rat(-1)}}));

  auto usl2 = HopfPresentation::enveloping(catalog::sl2(), 4, "Usl2");
  // F E = E F - H  (letters E = 0, F = 1, H = 2)
  CHECK(usl2->straighten_word({1, 0}) ==
        pbw(usl2, {{{1, 1, 0}, rat(1)}, {{0, 0, 1}, rat(-1)}}));
  // H E = E H + 2 E
  CHECK(usl2->straighten_word({2, 0}) ==
        pbw(usl2, {{{1, 0, 1}, rat(1)}, {{1, 0, 0}, rat(2)}}));
  // F E H = (E F - H) H = E F H - H^2
  CHECK(usl2->straighten_word({1, 0, 2}) ==
        pbw(usl2, {{{1, 1, 1}, rat(1)}, {{0, 0, 2}, rat(-1)}}));

  // straightening cannot escape the truncation
  auto low = HopfPresentation::enveloping(catalog::sl2(), 2, "Usl2@2");
  CHECK_THROWS_AS(low->straighten_word({0, 0, 0}), TruncationError);
}

TEST_CASE("enveloping dimensions follow the binomial count") {
  for (const auto& named : catalog::all_lie_algebras()) {
    CAPTURE(named.name);
    auto u = HopfPresentation::enveloping(named.lie, 4, "U");
    const std::uint32_t n = named.lie.dim();
    for (int k = 0; k <= 4; ++k)
      CHECK(Rational(u->dim_upto(k)) == binomial(n + static_cast<std::uint32_t>(k),
                                                 static_cast<std::uint32_t>(k)));
  }
}

TEST_CASE("group algebras sit in filtration level zero") {
  for (const auto& named : catalog::all_groups()) {
    CAPTURE(named.name);
    auto kg = HopfPresentation::group_algebra(named.group, 4, "K[G]");
    CHECK(kg->dim() == named.group.size());
    CHECK(kg->dim_upto(0) == named.group.size());
    CHECK(kg->degree_of(0) == 0);
  }
}

TEST_CASE("smash dimensions are the product of the factors") {
  for (const auto& named : catalog::all_smash_actions()) {
    CAPTURE(named.name);
    auto h = HopfPresentation::smash(named.action, 3, "H");
    const std::uint32_t n = named.action.lie().dim();
    const std::uint32_t order = named.action.group().size();
    CHECK(Rational(h->dim()) == binomial(n + 3, 3) * Rational(order));
    CHECK(h->dim_upto(0) == order);
  }
}

TEST_SUITE_END();
