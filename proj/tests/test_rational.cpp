#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdepth/rational.hpp"

using namespace flagdepth;

TEST_CASE("rational parsing accepts p/q, integer, and decimal literals") {
  CHECK(rat_parse("3/4") == Rat(3, 4));
  CHECK(rat_parse("-3/4") == Rat(-3, 4));
  CHECK(rat_parse("6/8") == Rat(3, 4));
  CHECK(rat_parse("12") == Rat(12));
  CHECK(rat_parse("-12") == Rat(-12));
  CHECK(rat_parse("0.25") == Rat(1, 4));
  CHECK(rat_parse("-1.5") == Rat(-3, 2));
  CHECK(rat_parse(" 2.50 ") == Rat(5, 2));
  CHECK(rat_parse("1e3") == Rat(1000));
  CHECK(rat_parse("1.5e-3") == Rat(3, 2000));
  CHECK(rat_parse("707106781187/1000000000000") == Rat(Int("707106781187"), Int("1000000000000")));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(rat_parse(""), ParseError);
  CHECK_THROWS_AS(rat_parse("abc"), ParseError);
  CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
  CHECK_THROWS_AS(rat_parse("1//2"), ParseError);
  CHECK_THROWS_AS(rat_parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(rat_parse("--3"), ParseError);
}

TEST_CASE("printing round-trips bit-identically") {
  for (const char* s : {"3/4", "-3/4", "0", "12", "707106781187/1000000000000", "-9/22"}) {
    Rat q = rat_parse(s);
    CHECK(rat_parse(rat_str(q)) == q);
  }
  CHECK(rat_str(Rat(6, 8)) == "3/4");
  CHECK(rat_str(Rat(5)) == "5");
}

TEST_CASE("rat_round produces the nearest rational at the requested grid") {
  CHECK(rat_round(0.5, 10) == Rat(1, 2));
  CHECK(rat_round(1.0 / 3.0, 1000) == Rat(333, 1000));
  Rat r = rat_round(0.7071067811865476);
  CHECK(r == rat_parse("707106781187/1000000000000"));
}
