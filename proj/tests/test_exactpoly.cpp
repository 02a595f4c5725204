#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaffine/errors.hpp"
#include "qaffine/exactpoly.hpp"

using namespace qaffine;

TEST_CASE("construction drops trailing zeros") {
  CHECK(QPoly{1, 2, 0, 0}.degree() == 1);
  CHECK(QPoly{0, 0}.is_zero());
  CHECK(QPoly().degree() == -1);
  CHECK(QPoly(0L).is_zero());
  CHECK(QPoly::monomial(3, 4).coeff(4) == 3);
  CHECK(QPoly::monomial(3, 4).coeff(9) == 0);
}

TEST_CASE("ring operations") {
  const QPoly a{1, -1};  // 1 - u
  const QPoly b{0, 2, 1};
  CHECK(a * b == QPoly{0, 2, -1, -1});
  CHECK(a + b == QPoly{1, 1, 1});
  CHECK(a - a == QPoly());
  CHECK(-a == QPoly{-1, 1});
  CHECK(pow(a, 3) == QPoly{1, -3, 3, -1});
  CHECK(QPoly::one_minus_u_pow(3) == pow(a, 3));
  QPoly c = b;
  c.add_mul(a, a);
  CHECK(c == b + a * a);
  QPoly d;
  d.add_scaled_shift(a, 5, 2);
  CHECK(d == QPoly{0, 0, 5, -5});
}

TEST_CASE("large coefficients stay exact") {
  QPoly big(mpz_class("123456789012345678901234567890"));
  QPoly sq = big * big;
  CHECK(sq.constant_term() == mpz_class("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("evaluation") {
  const QPoly p{0, -24, 276};
  CHECK(eval_at(p, 1L) == 252);
  CHECK(eval_at(p, 0L) == 0);
  CHECK(eval_at(p, -1L) == 300);
  CHECK(eval_at(p, mpq_class(1, 2)) == mpq_class(57));
  CHECK(eval_at(p, mpq_class(1, 3)) == mpq_class(68, 3));
  CHECK(to_string(mpq_class(-3, 4)) == "-3/4");
}

TEST_CASE("exact division by powers of 1-u") {
  const QPoly x{2, 7, -1};
  const QPoly m = x * QPoly::one_minus_u_pow(4);
  CHECK(exact_div_pow_one_minus_u(m, 4) == x);
  CHECK(one_minus_u_valuation(m) == 4);
  CHECK_THROWS_AS(exact_div_pow_one_minus_u(m, 5), NotDivisible);
  CHECK(one_minus_u_valuation(QPoly()) == 0);
}

TEST_CASE("json round trip with decimal strings") {
  const QPoly p{0, -24, 276};
  const auto j = to_json(p);
  CHECK(j.dump() == R"({"coeffs":["0","-24","276"],"var":"u"})");
  CHECK(qpoly_from_json(j) == p);
  CHECK(p.to_string() == "276*u^2 - 24*u");
}
