#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "picard2/numeric.hpp"
#include "picard2/quadext.hpp"

using namespace picard2;

TEST_CASE("integer helpers") {
    CHECK(*exact_sqrt(Int(144)) == 12);
    CHECK(!exact_sqrt(Int(145)));
    CHECK(!exact_sqrt(Int(-4)));
    CHECK(isqrt_floor(Int(192)) == 13);
    auto [s, f] = squarefree_split(192);  // 192 = 8^2 * 3
    CHECK(s == 8);
    CHECK(f == 3);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("rational parsing and rendering") {
    CHECK(*parse_rat("35/6") == Rat(35, 6));
    CHECK(*parse_rat("-7") == Rat(-7));
    CHECK(!parse_rat("1/0"));
    CHECK(!parse_rat("x"));
    CHECK(rat_str(Rat(204, 35)) == "204/35");
    CHECK(rat_str(Rat(6)) == "6");
    CHECK(rat_str(Rat(-3, 4)) == "-3/4");
}

TEST_CASE("QuadExt canonicalization") {
    // sqrt(8) = 2 sqrt(2)
    QuadExt q(Rat(0), Rat(1), Int(8));
    CHECK(q.radical_part() == Rat(2));
    CHECK(q.radicand() == 2);
    // sqrt(9) folds to rational
    QuadExt r(Rat(1), Rat(1), Int(9));
    CHECK(r.is_rational());
    CHECK(r.as_rational() == Rat(4));
    // zero radical part drops the radicand
    QuadExt z(Rat(5), Rat(0), Int(7));
    CHECK(z.radicand() == 0);
}

TEST_CASE("QuadExt arithmetic and exact sign") {
    QuadExt root2 = sqrt_of(2);
    QuadExt x = QuadExt(Rat(3)) + QuadExt(Rat(2)) * root2;  // 3 + 2 sqrt 2
    CHECK(x.sign() == 1);
    CHECK((x * x) == QuadExt(Rat(17), Rat(12), Int(2)));
    CHECK(x.field_norm() == Rat(1));
    CHECK((x * x.conjugate()) == QuadExt(Rat(1)));
    // 1 / (3 + 2 sqrt 2) = 3 - 2 sqrt 2
    CHECK((QuadExt(1) / x) == x.conjugate());
    // sign decided exactly near ties: 7 - 5 sqrt 2 < 0 but 8 - 5 sqrt 2 > 0
    CHECK(QuadExt(Rat(7), Rat(-5), Int(2)).sign() == -1);
    CHECK(QuadExt(Rat(8), Rat(-5), Int(2)).sign() == 1);
    CHECK(QuadExt(Rat(0)).sign() == 0);
}

TEST_CASE("QuadExt comparisons") {
    QuadExt root3 = sqrt_of(3);
    CHECK(root3 > QuadExt(Rat(17, 10)));
    CHECK(root3 < QuadExt(Rat(174, 100)));
    CHECK(root3.abs() == root3);
    CHECK((-root3).abs() == root3);
}

TEST_CASE("QuadExt radicand mixing is rejected") {
    QuadExt a = sqrt_of(2), b = sqrt_of(3);
    CHECK_THROWS_AS(a + b, RadicandMismatch);
    CHECK_THROWS_AS(a * b, RadicandMismatch);
    // rational values are compatible with anything
    CHECK((a + QuadExt(Rat(1))).radicand() == 2);
    CHECK_THROWS_AS(a / QuadExt(Rat(0)), DivisionByZero);
}

TEST_CASE("QuadExt rendering") {
    CHECK(QuadExt(Rat(3), Rat(2), Int(2)).str() == "3 + 2*sqrt(2)");
    CHECK(QuadExt(Rat(-2), Rat(1), Int(3)).str() == "-2 + sqrt(3)");
    CHECK(QuadExt(Rat(35, 6)).str() == "35/6");
    CHECK(QuadExt(Rat(3), Rat(2), Int(2)).approx() == doctest::Approx(5.8284271));
}
