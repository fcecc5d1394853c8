#include <doctest.h>

#include "hopfcat/catalog.hpp"
#include "hopfcat/morphism.hpp"

using namespace hopfcat;

namespace {

struct H2Row {
  HopfPresentation::Ptr H = HopfPresentation::smash(catalog::h2_action(), 4, "H2");
  HopfPresentation::Ptr K = HopfPresentation::group_algebra(catalog::cyclic(2), 4, "KC2");
  HopfPresentation::Ptr U = HopfPresentation::enveloping(catalog::abelian(1), 4, "Ux");
  HopfMorphism i, p, s;

  H2Row()
      : i(HopfMorphism::from_generators(
            U, H, {{"x1", eval(H, "x")}}, ValidatePolicy::Strict, "i")),
        p(HopfMorphism::from_generators(
            H, K, {{"x", K->zero()}, {"g", eval(K, "g")}}, ValidatePolicy::Strict, "p")),
        s(HopfMorphism::from_generators(
            K, H, {{"g", eval(H, "g")}}, ValidatePolicy::Strict, "s")) {}

  /* Single generator label as an element; enough for these fixtures. */
  static Element eval(const HopfPresentation::Ptr& h, const std::string& label) {
    for (const auto& gen : h->generators())
      if (gen.label == label) return h->basis_element(gen.basis);
    FAIL("unknown label ", label);
    return h->zero();
  }
};

}  // namespace

TEST_SUITE_BEGIN("morphisms");

TEST_CASE("strict construction rejects a non-homomorphism") {
  auto kc2 = HopfPresentation::group_algebra(catalog::cyclic(2), 4, "KC2");
  auto kc3 = HopfPresentation::group_algebra(catalog::cyclic(3), 4, "KC3");

  // g has order 2 at the source and its image has order 3: g.g = e must
  // map to the unit, but the image of g squares to g2.
  Element img = kc3->basis_element(1);
  CHECK_THROWS_AS(HopfMorphism::from_generators(kc2, kc3, {{"g", img}},
                                                ValidatePolicy::Strict, "f"),
                  ValidationError);

  HopfMorphism deferred = HopfMorphism::from_generators(kc2, kc3, {{"g", img}},
                                                        ValidatePolicy::Defer, "f");
  Verdict v = deferred.validate();
  CHECK_FALSE(v.pass);
  const CheckResult* mult = v.find("multiplicative");
  REQUIRE(mult != nullptr);
  CHECK_FALSE(mult->pass);
  CHECK_FALSE(mult->witness.empty());
}

TEST_CASE("composition matches matrix multiplication") {
  H2Row row;
  HopfMorphism ps = compose(row.p, row.s);
  CHECK(ps == HopfMorphism::identity(row.K));

  for (int k = 0; k <= 4; ++k) {
    auto lhs = ps.matrix_upto(k);
    auto rhs = multiply(row.p.matrix_upto(k), row.s.matrix_upto(k));
    CHECK(lhs == rhs);
  }

  // p . i collapses the primitive generator: everything lands on the unit
  HopfMorphism pi = compose(row.p, row.i);
  CHECK(pi == trivial_morphism(row.U, row.K));
}

TEST_CASE("apply is linear and respects products") {
  H2Row row;
  Element x = H2Row::eval(row.H, "x");
  Element g = H2Row::eval(row.H, "g");
  Element mix = x.scaled(rat(3)) + row.H->multiply(x, g).scaled(rat(-1, 2));
  // p kills x and fixes g, so only scalars of group images survive
  CHECK(row.p.apply(mix) == row.K->zero());
  Element one_plus_g = row.H->one() + g;
  CHECK(row.p.apply(one_plus_g) == row.K->one() + row.p.apply(g));
}

TEST_CASE("analyze reports level-by-level ranks") {
  H2Row row;

  MorphismAnalysis ai = analyze(row.i);
  CHECK(ai.injective);
  CHECK_FALSE(ai.surjective);
  CHECK(ai.rank == std::vector<std::uint32_t>{1, 2, 3, 4, 5});
  CHECK(ai.source_dim == std::vector<std::uint32_t>{1, 2, 3, 4, 5});
  CHECK(ai.target_dim == std::vector<std::uint32_t>{2, 4, 6, 8, 10});

  MorphismAnalysis ap = analyze(row.p);
  CHECK(ap.surjective);
  CHECK_FALSE(ap.injective);
  CHECK(ap.rank == std::vector<std::uint32_t>{2, 2, 2, 2, 2});

  MorphismAnalysis aid = analyze(HopfMorphism::identity(row.H));
  CHECK(aid.bijective);

  // serial and parallel analyses are identical
  MorphismAnalysis as = analyze(row.p, ExecMode::Serial);
  CHECK(as.rank == ap.rank);
  CHECK(as.bijective == ap.bijective);
}

TEST_CASE("from_basis_images reproduces the identity") {
  auto u = HopfPresentation::enveloping(catalog::aff2(), 3, "Uaff2");
  std::vector<Element> images;
  for (std::uint32_t c = 0; c < u->dim(); ++c) images.push_back(u->basis_element(c));
  HopfMorphism id = HopfMorphism::from_basis_images(u, u, images, "id?");
  CHECK(id == HopfMorphism::identity(u));
  CHECK(id.validate().pass);
}

TEST_CASE("equality distinguishes different maps") {
  H2Row row;
  HopfMorphism s2 = row.s;  // copy
  CHECK(s2 == row.s);
  CHECK_FALSE(trivial_morphism(row.K, row.H) == row.s);
}

TEST_SUITE_END();
