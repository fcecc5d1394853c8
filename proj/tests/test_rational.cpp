#include <doctest.h>

#include "hopfcat/rational.hpp"

using namespace hopfcat;

TEST_SUITE_BEGIN("exactlin");

TEST_CASE("rational canonical form") {
  CHECK(to_string(rat(2, 4)) == "1/2");
  CHECK(to_string(rat(1, -2)) == "-1/2");
  CHECK(to_string(rat(-4, -6)) == "2/3");
  CHECK(to_string(rat(0, 7)) == "0");
  CHECK(to_string(rat(5)) == "5");
  CHECK(rat(1, 3) + rat(1, 6) == rat(1, 2));
  CHECK(rat(2, 3) * rat(3, 2) == 1);
  CHECK_THROWS_AS(rat(1, 0), ValidationError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("+3") == 3);
  CHECK(parse_rational("7/2") == rat(7, 2));
  CHECK(parse_rational("-7/2") == rat(-7, 2));
  CHECK(parse_rational("2/4") == rat(1, 2));
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
  CHECK_THROWS_AS(parse_rational("/2"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(20, 10) == 184756);
}

TEST_SUITE_END();
