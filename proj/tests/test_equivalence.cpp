#include "zz/equivalence.hpp"
#include "zz/errors.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace zz;

namespace {

const Poly w = Poly::variable();

Poly substituted(const Poly& p, const Rational& alpha, const Rational& beta) {
    return alpha * p.scaled_arg(beta);
}

Poly substituted(const Poly& p, const Rational& gamma, const Rational& delta, const Rational& t) {
    return gamma * p.composed_affine(delta, t);
}

} // namespace

TEST_CASE("scale solutions of (w^2-1, 4w^2-1) are exactly (1,2) and (1,-2)") {
    auto sols = scale_equivalences(w * w - Poly::constant(Rational(1)),
                                   Rational(4) * (w * w) - Poly::constant(Rational(1)));
    REQUIRE(sols.kind() == ScaleSolutions::Kind::Finite);
    REQUIRE(sols.witnesses().size() == 2);
    CHECK(sols.witnesses()[0] == ScaleWitness{Rational(1), Rational(2)});
    CHECK(sols.witnesses()[1] == ScaleWitness{Rational(1), Rational(-2)});
    CHECK(sols.smallest() == ScaleWitness{Rational(1), Rational(2)});
    CHECK(sols.contains(Rational(1), Rational(-2)));
    CHECK_FALSE(sols.contains(Rational(1), Rational(3)));
}

TEST_CASE("scale solutions: identity, support mismatch, monomials") {
    const Poly p = w * w * w - Rational(2) * w + Poly::constant(Rational(1, 3));
    CHECK(scale_equivalences(p, p).contains(Rational(1), Rational(1)));
    CHECK(scale_equivalences(w * w - Poly::constant(Rational(1)), w * w + w).empty());

    auto mono = scale_equivalences(Poly::monomial(Rational(1), 3),
                                   Poly::monomial(Rational(2), 3));
    REQUIRE(mono.kind() == ScaleSolutions::Kind::OneParameter);
    auto at3 = mono.witness_for(Rational(3));
    REQUIRE(at3);
    CHECK(at3->alpha == Rational(2, 27));
    CHECK(at3->beta == Rational(3));
    CHECK(mono.contains(Rational(2), Rational(1)));
    CHECK_FALSE(mono.witness_for(Rational(0)));
}

TEST_CASE("scale solver is sound and complete on random constructions") {
    std::mt19937 gen(4201);
    for (int it = 0; it < 120; ++it) {
        const Poly p = zztest::random_poly(gen, 1 + it % 5);
        const Rational alpha = zztest::small_nonzero(gen);
        const Rational beta = zztest::small_nonzero(gen);
        const Poly p2 = substituted(p, alpha, beta);
        auto sols = scale_equivalences(p, p2);
        CHECK(sols.contains(alpha, beta));
        for (const auto& ws : sols.witnesses())
            CHECK(substituted(p, ws.alpha, ws.beta) == p2);
        auto back = scale_equivalences(p2, p);
        CHECK(back.contains(Rational(1) / (alpha), Rational(1) / beta));
    }
}

TEST_CASE("affine solutions of (w^2-1, w^2-2w) with shift") {
    const Poly q = w * w - Poly::constant(Rational(1));
    const Poly q2 = w * w - Rational(2) * w;
    auto sols = affine_equivalences(q, q2, true);
    REQUIRE(sols.kind() == AffineSolutions::Kind::Finite);
    REQUIRE(sols.witnesses().size() == 2);
    CHECK(sols.witnesses()[0] == AffineWitness{Rational(1), Rational(1), Rational(-1)});
    CHECK(sols.witnesses()[1] == AffineWitness{Rational(1), Rational(-1), Rational(1)});
    CHECK(affine_equivalences(q, q2, false).empty());
}

TEST_CASE("shiftless affine solving equals scale solving") {
    std::mt19937 gen(4202);
    for (int it = 0; it < 60; ++it) {
        const Poly p = zztest::random_poly(gen, 1 + it % 4);
        const Rational alpha = zztest::small_nonzero(gen);
        const Rational beta = zztest::small_nonzero(gen);
        auto aff = affine_equivalences(p, substituted(p, alpha, beta), false);
        CHECK(aff.contains(alpha, beta, Rational(0)));
        for (const auto& ws : aff.witnesses()) CHECK(ws.t == 0);
    }
}

TEST_CASE("affine solver recovers random affine substitutions") {
    std::mt19937 gen(4203);
    for (int it = 0; it < 120; ++it) {
        const Poly q = zztest::random_poly(gen, 1 + it % 5);
        const Rational gamma = zztest::small_nonzero(gen);
        const Rational delta = zztest::small_nonzero(gen);
        const Rational t = zztest::small_rational(gen);
        const Poly q2 = substituted(q, gamma, delta, t);
        auto sols = affine_equivalences(q, q2, true);
        CHECK(sols.contains(gamma, delta, t));
        for (const auto& ws : sols.witnesses())
            CHECK(substituted(q, ws.gamma, ws.delta, ws.t) == q2);
    }
}

TEST_CASE("affine equivalence is symmetric and transitive") {
    std::mt19937 gen(4204);
    for (int it = 0; it < 40; ++it) {
        const Poly q = zztest::random_poly(gen, 1 + it % 5);
        const Poly q1 = substituted(q, zztest::small_nonzero(gen), zztest::small_nonzero(gen),
                                    zztest::small_rational(gen));
        const Poly q2 = substituted(q1, zztest::small_nonzero(gen), zztest::small_nonzero(gen),
                                    zztest::small_rational(gen));
        CHECK(affine_equivalences(q, q, true).contains(Rational(1), Rational(1), Rational(0)));
        CHECK_FALSE(affine_equivalences(q1, q, true).empty());
        CHECK_FALSE(affine_equivalences(q, q2, true).empty());
    }
}

TEST_CASE("stabilizer of w(w-2) with shift is {identity, reflection at 1}") {
    auto stab = stabilizer(w * (w - Poly::constant(Rational(2))), true);
    REQUIRE(stab.witnesses().size() == 2);
    CHECK(stab.witnesses()[0] == AffineWitness{Rational(1), Rational(1), Rational(0)});
    CHECK(stab.witnesses()[1] == AffineWitness{Rational(1), Rational(-1), Rational(2)});
}

TEST_CASE("stabilizer of w^2-3 with shift is {(1,1,0),(1,-1,0)}") {
    auto stab = stabilizer(w * w - Poly::constant(Rational(3)), true);
    REQUIRE(stab.witnesses().size() == 2);
    CHECK(stab.witnesses()[0] == AffineWitness{Rational(1), Rational(1), Rational(0)});
    CHECK(stab.witnesses()[1] == AffineWitness{Rational(1), Rational(-1), Rational(0)});
}

TEST_CASE("shiftless stabilizer of w(w-1) is trivial; monomials are one-parameter") {
    auto stab = stabilizer(w * (w - Poly::constant(Rational(1))), false);
    REQUIRE(stab.witnesses().size() == 1);
    CHECK(stab.witnesses()[0].delta == 1);
    CHECK(stabilizer(w * w, false).kind() == AffineSolutions::Kind::OneParameter);
}

TEST_CASE("stabilizers are closed under composition and inversion") {
    std::mt19937 gen(4205);
    const Poly polys[] = {w * (w - Poly::constant(Rational(2))),
                          w * w - Poly::constant(Rational(3)),
                          (w * w - Poly::constant(Rational(1))) * w,
                          w * w * w - w};
    for (const Poly& p : polys) {
        for (bool allow_shift : {false, true}) {
            auto stab = stabilizer(p, allow_shift);
            REQUIRE(stab.kind() == AffineSolutions::Kind::Finite);
            for (const auto& u : stab.witnesses()) {
                auto ui = inverse(u);
                CHECK(stab.contains(ui.gamma, ui.delta, ui.t));
                for (const auto& v : stab.witnesses()) {
                    auto uv = compose(u, v);
                    CHECK(stab.contains(uv.gamma, uv.delta, uv.t));
                }
            }
        }
    }
    (void)gen;
}

TEST_CASE("compose acts on the argument; inverse undoes compose") {
    std::mt19937 gen(4206);
    for (int it = 0; it < 60; ++it) {
        const Poly q = zztest::random_poly(gen, 2 + it % 3);
        AffineWitness u{zztest::small_nonzero(gen), zztest::small_nonzero(gen),
                        zztest::small_rational(gen)};
        AffineWitness v{zztest::small_nonzero(gen), zztest::small_nonzero(gen),
                        zztest::small_rational(gen)};
        const Poly qu = substituted(q, u.gamma, u.delta, u.t);
        const Poly quv = substituted(qu, v.gamma, v.delta, v.t);
        auto vu = compose(v, u);
        CHECK(substituted(q, vu.gamma, vu.delta, vu.t) == quv);
        auto e = compose(u, inverse(u));
        CHECK(e.gamma == 1);
        CHECK(e.delta == 1);
        CHECK(e.t == 0);
    }
}

TEST_CASE("one-parameter affine family exposes the depression shifts") {
    // (w+1)^2 depresses to w^2: one-parameter with s1 = 1, witness t = delta*s2 - s1.
    const Poly q = (w + Poly::constant(Rational(1))) * (w + Poly::constant(Rational(1)));
    auto sols = affine_equivalences(q, w * w, true);
    REQUIRE(sols.kind() == AffineSolutions::Kind::OneParameter);
    CHECK(sols.s1() == Rational(1));
    CHECK(sols.s2() == Rational(0));
    auto ws = sols.witness_for(Rational(2));
    REQUIRE(ws);
    CHECK(ws->t == Rational(-1));
    CHECK(ws->gamma * q.composed_affine(ws->delta, ws->t) == w * w);
}

TEST_CASE("constant targets with shift form a two-parameter family and error") {
    CHECK_THROWS_AS(affine_equivalences(Poly::constant(Rational(2)),
                                        Poly::constant(Rational(2)), true),
                    domain_error);
}
