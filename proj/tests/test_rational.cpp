#include <doctest.h>

#include "hforge/rational.hpp"

using namespace hforge;

TEST_CASE("rational parsing accepts canonical and non-canonical forms") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("+3") == Rational(3));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("0/7") == Rational(0));
  CHECK(parse_rational("123456789012345678901234567890/2") ==
        Rational(Integer("123456789012345678901234567890"), 2));
}

TEST_CASE("rational parsing rejects malformed text") {
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1/-2", "1.5", "1 /2", "--1", "2/+3", "0x1"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  try {
    parse_rational("1/0");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("rational_string is canonical") {
  CHECK(rational_string(Rational(3)) == "3");
  CHECK(rational_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_string(Rational(6, 4)) == "3/2");
  CHECK(rational_string(Rational(0)) == "0");
  CHECK(rational_string(parse_rational("-10/5")) == "-2");
}

TEST_CASE("decimal_string renders exactly with half-away rounding") {
  CHECK(decimal_string(Rational(1, 2), 3) == "0.500");
  CHECK(decimal_string(Rational(-1, 2), 0) == "-1");
  CHECK(decimal_string(Rational(1, 3), 4) == "0.3333");
  CHECK(decimal_string(Rational(2, 3), 4) == "0.6667");
  CHECK(decimal_string(Rational(5, 4), 1) == "1.3");
  CHECK(decimal_string(Rational(-5, 4), 1) == "-1.3");
  CHECK(decimal_string(Rational(7), 2) == "7.00");
  CHECK(decimal_string(Rational(1, 1000), 2) == "0.00");
}

TEST_CASE("binomial matches Pascal identities") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(12, 3) == 220);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  for (long n = 1; n <= 20; ++n)
    for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("ipow and kth_root_floor agree") {
  CHECK(ipow(Integer(6), 26) == Integer("170581728179578208256"));
  CHECK(ipow(Integer(2), 0) == 1);
  bool exact = false;
  CHECK(kth_root_floor(Integer(27), 3, &exact) == 3);
  CHECK(exact);
  CHECK(kth_root_floor(Integer(28), 3, &exact) == 3);
  CHECK(!exact);
  CHECK(kth_root_floor(Integer(0), 5, &exact) == 0);
  CHECK(exact);
  Integer big = ipow(Integer(1234567), 7);
  CHECK(kth_root_floor(big, 7, &exact) == 1234567);
  CHECK(exact);
  CHECK(kth_root_floor(big - 1, 7, &exact) == 1234566);
  CHECK(!exact);
}
