#include "zz/errors.hpp"
#include "zz/zigzag.hpp"

#include <doctest.h>

using namespace zz;

TEST_CASE("standard-type validation") {
    CHECK(validate_standard_type({0, -1}));
    CHECK(validate_standard_type({0, -1, -2, -3}));
    CHECK(validate_standard_type({0, -1, -6}));
    CHECK_FALSE(validate_standard_type({0, -1, -1}));
    CHECK_FALSE(validate_standard_type({0, -2}));
    CHECK_FALSE(validate_standard_type({-1, 0}));
    CHECK_FALSE(validate_standard_type({}));
    CHECK_FALSE(validate_standard_type({0}));
}

TEST_CASE("trace of (0,-1,-2,-3) matches the five-step figure") {
    MoveTrace t = reversion_trace({0, -1, -2, -3});
    CHECK(t.input == ZigzagType{0, -1, -2, -3});
    CHECK(t.input_display == ZigzagType{-3, -2, -1, 0});
    REQUIRE(t.steps.size() == 5);
    CHECK(t.steps[0].label == "theta_0");
    CHECK(t.steps[0].resulting == ZigzagType{-3, -1, 0, -1});
    CHECK(t.steps[1].label == "phi_1");
    CHECK(t.steps[1].resulting == ZigzagType{-3, -1, 0, -1});
    CHECK(t.steps[2].label == "theta_1");
    CHECK(t.steps[2].resulting == ZigzagType{-2, 0, -1, -2});
    CHECK(t.steps[3].label == "phi_2");
    CHECK(t.steps[3].resulting == ZigzagType{-1, 0, -2, -2});
    CHECK(t.steps[4].label == "theta_2");
    CHECK(t.steps[4].resulting == ZigzagType{0, -1, -3, -2});
    CHECK(t.final_type == ZigzagType{0, -1, -3, -2});
}

TEST_CASE("degenerate and asymmetric traces") {
    MoveTrace t0 = reversion_trace({0, -1});
    REQUIRE(t0.steps.size() == 1);
    CHECK(t0.steps[0].label == "theta_0");
    CHECK(t0.final_type == ZigzagType{0, -1});
    CHECK(reversion_trace({0, -1, -5, -2}).final_type == ZigzagType{0, -1, -2, -5});
}

TEST_CASE("non-standard input errors") {
    CHECK_THROWS_AS(reversion_trace({0, -1, -1}), domain_error);
    CHECK_THROWS_AS(reversion_trace({}), domain_error);
}

TEST_CASE("reversal is exhaustively correct and involutive for short types") {
    // All (0,-1,-a_1,...,-a_r) with 2 <= a_i <= 6, r <= 4.
    std::vector<ZigzagType> types = {{0, -1}};
    for (int r = 1; r <= 4; ++r) {
        std::vector<ZigzagType> next;
        for (const ZigzagType& z : types) {
            if (static_cast<int>(z.size()) != r + 1) continue;
            for (int a = 2; a <= 6; ++a) {
                ZigzagType t = z;
                t.push_back(-a);
                next.push_back(t);
            }
        }
        for (auto& t : next) types.push_back(t);
    }
    int checked = 0;
    for (const ZigzagType& z : types) {
        MoveTrace t = reversion_trace(z);
        CHECK(t.final_type == reversed_type(z));
        for (const MoveStep& s : t.steps) CHECK(s.resulting.size() == z.size());
        CHECK(reversion_trace(t.final_type).final_type == z);
        ++checked;
    }
    CHECK(checked == 1 + 5 + 25 + 125 + 625);
}
