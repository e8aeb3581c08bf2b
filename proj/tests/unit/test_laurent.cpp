#include "doctest.h"

#include "skein/laurent.hpp"

using skein::Laurent;

TEST_CASE("laurent arithmetic") {
  Laurent a = Laurent::monomial(1, 2) + Laurent::monomial(-3, -1);
  CHECK(a.coeff(2) == 1);
  CHECK(a.coeff(-1) == -3);
  CHECK(a.eval(1) == -2);
  CHECK(a.eval(-1) == 4);
  CHECK(a.derivative_at_one() == 2 * 1 + (-1) * (-3));

  Laurent b = a * a;
  CHECK(b.coeff(4) == 1);
  CHECK(b.coeff(1) == -6);
  CHECK(b.coeff(-2) == 9);

  CHECK((a - a).is_zero());
}

TEST_CASE("laurent modulus") {
  Laurent p = Laurent::monomial(1, 5, 3); // t^5 = t^2 mod t^3-1
  CHECK(p.coeff(2) == 1);
  Laurent q = Laurent::monomial(1, 2).reduced_mod(3);
  CHECK(p == q);
  CHECK(p.shifted(1).coeff(0) == 1);
}

TEST_CASE("laurent cyclic normal form") {
  Laurent p = Laurent::monomial(2, 7) + Laurent::monomial(1, 5);
  Laurent n = p.cyclic_normal_form();
  CHECK(n.min_exp() == 0);
  CHECK(n.coeff(0) == 1);
  CHECK(n.coeff(2) == 2);

  Laurent c = (Laurent::monomial(1, 0, 4) + Laurent::monomial(1, 1, 4));
  Laurent c2 = (Laurent::monomial(1, 2, 4) + Laurent::monomial(1, 3, 4));
  CHECK(c.cyclic_normal_form() == c2.cyclic_normal_form());
}

TEST_CASE("laurent text round trip") {
  Laurent p = Laurent::monomial(-1, 5) + Laurent::monomial(-1, -3) + Laurent::monomial(1, -7);
  std::string s = p.str("a");
  CHECK(s == "-a^5 - a^-3 + a^-7");
  CHECK(Laurent::parse(s, "a") == p);
  CHECK(Laurent::parse("0") == Laurent());
  CHECK(Laurent(0).str() == "0");
}
