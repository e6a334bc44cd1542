#include "zz/errors.hpp"
#include "zz/pair.hpp"

#include <doctest.h>

#include <string>

using namespace zz;

namespace {
const Poly w = Poly::variable();
const Poly one = Poly::constant(Rational(1));
} // namespace

TEST_CASE("case classification follows the vanishing table") {
    CHECK(classify_case(PairRepr::make(w - one, w)) == CaseTag::I);
    CHECK(classify_case(PairRepr::make(w, w - one)) == CaseTag::II);
    CHECK(classify_case(PairRepr::make(w, w)) == CaseTag::III);
    CHECK(std::string(case_name(CaseTag::III)) == "III");
}

TEST_CASE("degree validation") {
    CHECK_THROWS_AS(PairRepr::make(one, w), domain_error);
    CHECK_THROWS_AS(PairRepr::make(w, Poly::constant(Rational(0))), domain_error);
}

TEST_CASE("situation refines case I by the center") {
    const PairRepr r = PairRepr::make(w - one, w - Poly::constant(Rational(2)));
    CHECK(classify_situation(r, Rational(0)) == Situation::Ia);
    CHECK(classify_situation(r, Rational(2)) == Situation::Ib);
    CHECK(classify_situation(PairRepr::make(w, w - one), Rational(5)) == Situation::II);
    CHECK(classify_situation(PairRepr::make(w, w), Rational(5)) == Situation::III);
    CHECK(std::string(situation_name(Situation::Ib)) == "Ib");
}

TEST_CASE("boundary type is (0,-1,-(deg P + 1),-(deg Q + 1))") {
    CHECK(type_of(PairRepr::make(w - one, w)) == ZigzagType{0, -1, -2, -2});
    CHECK(type_of(PairRepr::make(w * w - one, (w * w) * w)) == ZigzagType{0, -1, -3, -4});
}

TEST_CASE("representative equality is coefficientwise") {
    const PairRepr a = PairRepr::make(w - one, w);
    CHECK(a == PairRepr::make(w - one, w));
    CHECK_FALSE(a == PairRepr::make(Rational(2) * (w - one), w));
}
