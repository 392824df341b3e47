#include <random>

#include "doctest.h"
#include "modpovm/cyclotomic.hpp"
#include "modpovm/errors.hpp"

using namespace modpovm;

namespace {

CycloNum random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-4, 4), q(1, 3);
  std::vector<Rational> cs;
  for (int i = 0; i < euler_phi(n); ++i) {
    Rational r(d(rng), q(rng));
    r.canonicalize();
    cs.push_back(r);
  }
  return CycloNum::from_coeffs(n, cs);
}

bool near(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(CycloNum::root(1, 0).is_one());
  CHECK(CycloNum::root(4, 1) * CycloNum::root(4, 1) == CycloNum(-1));
  CHECK(CycloNum::root(6, 1) - CycloNum(1) == CycloNum::root(3, 1));
  CHECK(CycloNum::root(2, 1) * CycloNum::root(3, 1) == CycloNum::root(6, 5));
  CHECK(CycloNum::root(7, 7).is_one());
  CHECK(CycloNum::root(5, -1) == CycloNum::root(5, 4));
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(21) == 12);
  CHECK(euler_phi(84) == 24);
}

TEST_CASE("field operations") {
  CycloNum x = CycloNum(1) + CycloNum::root(3, 1);
  CHECK((x * x.inverse()).is_one());
  CycloNum t = CycloNum::root(5, 1) + CycloNum::root(5, 4);
  CHECK((t * t + t - CycloNum(1)).is_zero());
  CHECK_THROWS_AS(CycloNum().inverse(), ArithmeticError);
  CHECK_THROWS_AS(CycloNum(1) / CycloNum(0), ArithmeticError);
}

TEST_CASE("conjugation") {
  CHECK(CycloNum::root(3, 1).conj() == CycloNum::root(3, 2));
  CHECK(CycloNum(Rational(2, 7)).conj() == CycloNum(Rational(2, 7)));
  CycloNum w = CycloNum::root(6, 1) - CycloNum(1);
  CHECK(w.conj() == CycloNum::root(6, -1) - CycloNum(1));
  CHECK((w * w.conj()).is_one());
}

TEST_CASE("field norm") {
  CHECK((CycloNum(1) + CycloNum::root(4, 1)).field_norm() == 2);
  CHECK(CycloNum(Rational(3, 2), 5).field_norm() == Rational(81, 16));
  CHECK(CycloNum(0).field_norm() == 0);
  CHECK(CycloNum::root(7, 3).field_norm() == 1);
  // Norm over a larger field is a power of the norm over the smaller one.
  CycloNum z = CycloNum(2) + CycloNum::root(3, 1);
  Rational n3 = z.field_norm();
  CHECK(z.field_norm(12) == n3 * n3);
}

TEST_CASE("embedding") {
  CHECK(near(CycloNum::root(4, 1).embed(), {0.0, 1.0}, 1e-12));
  CHECK(near((CycloNum::root(6, 1) - CycloNum(1)).embed(), {-0.5, 0.8660254037844386}, 1e-12));
}

TEST_CASE("conductor reduction") {
  auto a = CycloNum::root(6, 2).reduced();
  CHECK(a.conductor() == 3);
  CHECK(a == CycloNum::root(3, 1));
  auto five = CycloNum(Rational(5), 12).reduced();
  CHECK(five.conductor() == 1);
  CHECK(five == CycloNum(5));
  auto sqrt2 = (CycloNum::root(8, 1) + CycloNum::root(8, -1)).reduced();
  CHECK(sqrt2.conductor() == 8);
  CHECK(sqrt2 * sqrt2 == CycloNum(2));
  auto i = CycloNum::root(12, 3).reduced();
  CHECK(i.conductor() == 4);
  auto s5 = (CycloNum::root(5, 1) - CycloNum::root(5, 2) - CycloNum::root(5, 3) + CycloNum::root(5, 4));
  CHECK((s5 * s5) == CycloNum(5));
  CHECK(s5.lifted(60).reduced().conductor() == 5);
}

TEST_CASE("text round trip") {
  CycloNum x = CycloNum::from_coeffs(5, {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 9)});
  CHECK(x.to_string() == "5:[1/2,-3,0,7/9]");
  CHECK(CycloNum::parse(x.to_string()) == x);
  CHECK(CycloNum::parse("1:[ -4/6 ]") == CycloNum(Rational(-2, 3)));
  CHECK_THROWS_AS(CycloNum::parse("5:[1,2]"), InputError);
  CHECK_THROWS_AS(CycloNum::parse("oops"), InputError);
  CHECK_THROWS_AS(CycloNum::parse("3:[1,x]"), InputError);
}

TEST_CASE("random properties") {
  std::mt19937 rng(12345);
  for (int n : {3, 4, 5, 7, 8, 12, 15, 21}) {
    for (int trial = 0; trial < 8; ++trial) {
      CycloNum x = random_element(rng, n), y = random_element(rng, n);
      CAPTURE(x.to_string());
      CAPTURE(y.to_string());
      CHECK((x * y).field_norm() == x.field_norm() * y.field_norm());
      CHECK(near((x + y).embed(), x.embed() + y.embed(), 1e-10));
      CHECK(near((x * y).embed(), x.embed() * y.embed(), 1e-10));
      CHECK(near(x.conj().embed(), std::conj(x.embed()), 1e-10));
      CHECK(x.conj().conj() == x);
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
      CHECK(near(x.reduced().embed(), x.embed(), 1e-12));
      CHECK(x * (y + x) == x * y + x * x);
    }
  }
}

TEST_CASE("expression parsing") {
  const CycloNum w3 = CycloNum::root(3, 1), w6 = CycloNum::root(6, 1);
  CHECK(parse_cyclo_expr("0").is_zero());
  CHECK(parse_cyclo_expr("-1") == CycloNum(-1));
  CHECK(parse_cyclo_expr("w6-1") == w3);
  CHECK(parse_cyclo_expr("ω₆−1") == w3);
  CHECK(parse_cyclo_expr("-ω₃-1") == CycloNum::root(3, 2));
  CHECK(parse_cyclo_expr("ω₃²") == CycloNum::root(3, 2));
  CHECK(parse_cyclo_expr("-i") == CycloNum::root(4, 3));
  CHECK(parse_cyclo_expr("1/2*w12^5") == CycloNum(Rational(1, 2)) * CycloNum::root(12, 5));
  CHECK(parse_cyclo_expr("3:[0,1]") == w3);
  CHECK(parse_cyclo_expr("w6^-1") == w6.conj());
  CHECK_THROWS_AS(parse_cyclo_expr("x"), InputError);
  CHECK_THROWS_AS(parse_cyclo_expr("1+"), InputError);
  auto v = parse_cyclo_list("(0,1,-ω₆,ω₆-1)");
  REQUIRE(v.size() == 4);
  CHECK(v[2] == -w6);
  auto u = parse_cyclo_list("[3:[0,1], 1]");
  REQUIRE(u.size() == 2);
  CHECK(u[0] == w3);
}
