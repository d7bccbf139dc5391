#include "hvlie/algebra.hpp"

#include <doctest.h>

#include <vector>

using namespace hvlie;

namespace {

AlgebraElement L(std::int64_t m) { return AlgebraElement::basis(BasisSymbol::L(m)); }
AlgebraElement I(std::int64_t m) { return AlgebraElement::basis(BasisSymbol::I(m)); }

}  // namespace

TEST_CASE("structure constants on pinned pairs") {
  // [L(m), L(n)] = (n-m) L(m+n) + delta (m^3-m)/12 CL
  CHECK(bracket(L(2), L(-2)) ==
        AlgebraElement::term(BasisSymbol::L(0), -4) +
            AlgebraElement::term(BasisSymbol::CL(), make_rational(1, 2)));
  CHECK(bracket(L(3), L(-3)) ==
        AlgebraElement::term(BasisSymbol::L(0), -6) + AlgebraElement::term(BasisSymbol::CL(), 2));
  CHECK(bracket(L(0), L(5)) == AlgebraElement::term(BasisSymbol::L(5), 5));
  CHECK(bracket(L(1), L(-1)) == AlgebraElement::term(BasisSymbol::L(0), -2));

  // [L(m), I(n)] = n I(m+n) + delta (m^2-m) CLI
  CHECK(bracket(L(1), I(-1)) == AlgebraElement::term(BasisSymbol::I(0), -1));
  CHECK(bracket(L(2), I(-2)) ==
        AlgebraElement::term(BasisSymbol::I(0), -2) + AlgebraElement::term(BasisSymbol::CLI(), 2));
  CHECK(bracket(L(-2), I(2)) ==
        AlgebraElement::term(BasisSymbol::I(0), 2) + AlgebraElement::term(BasisSymbol::CLI(), 6));

  // [I(m), I(n)] = n delta CI
  CHECK(bracket(I(3), I(-3)) == AlgebraElement::term(BasisSymbol::CI(), -3));
  CHECK(bracket(I(2), I(3)).is_zero());

  // centrals commute with everything
  for (const auto& c : {BasisSymbol::CL(), BasisSymbol::CI(), BasisSymbol::CLI()}) {
    CHECK(bracket(AlgebraElement::basis(c), L(7)).is_zero());
    CHECK(bracket(I(-4), AlgebraElement::basis(c)).is_zero());
    CHECK(bracket(AlgebraElement::basis(c), AlgebraElement::basis(BasisSymbol::CI())).is_zero());
  }
}

TEST_CASE("antisymmetry and Jacobi on composite elements") {
  AlgebraElement x = L(3) + I(-2) * make_rational(2, 3);
  AlgebraElement y = L(-3) * Rational(5) - I(2);
  AlgebraElement z = L(0) + AlgebraElement::basis(BasisSymbol::CL());

  CHECK((bracket(x, y) + bracket(y, x)).is_zero());
  CHECK(bracket(x, x).is_zero());
  CHECK(jacobi_residual(x, y, z).is_zero());
  CHECK(jacobi_residual(L(-6), L(0), L(6)).is_zero());
  CHECK(jacobi_residual(L(2), I(-5), I(3)).is_zero());
}

TEST_CASE("bracket respects the grading") {
  for (std::int64_t m = -5; m <= 5; ++m) {
    for (std::int64_t n = -5; n <= 5; ++n) {
      AlgebraElement b = bracket(L(m), I(n));
      if (!b.is_zero()) CHECK(grade(b) == m + n);
    }
  }
}

TEST_CASE("grade rejects zero and mixed elements") {
  CHECK(grade(L(3) + I(3) * Rational(2)) == 3);
  CHECK(grade(AlgebraElement::basis(BasisSymbol::CLI())) == 0);
  CHECK_THROWS_AS(grade(AlgebraElement::zero()), std::domain_error);
  CHECK_THROWS_AS(grade(L(1) + L(2)), std::domain_error);
}

TEST_CASE("canonicalization drops cancelled terms") {
  AlgebraElement x = L(4);
  x += I(1);
  x -= I(1);
  CHECK(x == L(4));
  CHECK(x.terms().size() == 1);
  CHECK(x.coeff(BasisSymbol::I(1)) == 0);
  x *= Rational(0);
  CHECK(x.is_zero());
}

TEST_CASE("text form round-trips and is pinned") {
  AlgebraElement x = AlgebraElement::term(BasisSymbol::L(0), -4) +
                     AlgebraElement::term(BasisSymbol::CL(), make_rational(1, 2));
  CHECK(to_text(x) == "-4*L(0) + 1/2*CL");
  CHECK(parse_algebra_element(to_text(x)) == x);
  CHECK(to_text(AlgebraElement::zero()) == "0");
  CHECK(parse_algebra_element("0").is_zero());

  AlgebraElement y = L(-7) * make_rational(-3, 5) + I(2) + AlgebraElement::basis(BasisSymbol::CI());
  CHECK(parse_algebra_element(to_text(y)) == y);
  CHECK_THROWS_AS(parse_algebra_element("1*Q(0)"), std::invalid_argument);
}

TEST_CASE("json form round-trips") {
  AlgebraElement y =
      L(-7) * make_rational(-3, 5) + I(2) + AlgebraElement::basis(BasisSymbol::CLI());
  CHECK(algebra_element_from_json(to_json_string(y)) == y);
  CHECK(algebra_element_from_json(to_json_string(AlgebraElement::zero())).is_zero());
}

TEST_CASE("the cocycle defect is visible exactly where designed") {
  // healthy bracket: antisymmetric by construction
  CHECK((bracket(L(8), L(-8)) + bracket(L(-8), L(8))).is_zero());

  // defective bracket: flipped central term on the direct order only
  AlgebraElement resid = selftest::bracket_defect(L(8), L(-8)) + selftest::bracket_defect(L(-8), L(8));
  CHECK(resid == AlgebraElement::term(BasisSymbol::CL(), -84));

  AlgebraElement jac = selftest::jacobi_residual_defect(L(-6), L(0), L(6));
  CHECK(jac == AlgebraElement::term(BasisSymbol::CL(), -210));

  // away from the mutated region the defect agrees with the real bracket
  CHECK(selftest::bracket_defect(L(-2), L(1)) == bracket(L(-2), L(1)));
  CHECK(selftest::bracket_defect(L(2), I(-2)) == bracket(L(2), I(-2)));
}
