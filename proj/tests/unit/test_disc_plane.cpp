/*
   Copyright 2026 The gwa-skew Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <doctest.h>

#include "generators.hpp"
#include "gwaskew/disc_plane.hpp"
#include "gwaskew/ortho.hpp"
#include "oracles.hpp"

using namespace gwa;

namespace {

const GwaElement X = GwaElement::x();
const GwaElement Y = GwaElement::y();

}  // namespace

TEST_CASE("zero on h family") {
    const GwaAlgebra D = GwaAlgebra::disc(Rat(2));
    const SkewDerivation d = build_prop51(ZeroOnH{Poly(1), Rat(2)}, D);
    CHECK(d.on_x() == X);
    CHECK(d.on_y() == Rat(-2) * Y);
    CHECK(d.on_h().is_zero());
    CHECK(build_prop51(ZeroOnH{Poly(), Rat(2)}, D) == zero_derivation(D, Rat(2)));
    CHECK_THROWS_AS(build_prop51(ZeroOnH{Poly(1), Rat(0)}, D), DomainError);
}

TEST_CASE("mu power family") {
    const GwaAlgebra D = GwaAlgebra::disc(Rat(2));
    const SkewDerivation d = build_prop51(MuPower{0, {Rat(1)}, {}}, D);
    CHECK(d.mu() == Rat(2));
    CHECK(d.on_x().is_zero());
    CHECK(d.on_y() == GwaElement(Poly(1)));
    CHECK(build_prop51(MuPower{1, {}, {}}, D).values() == zero_derivation(D, Rat(1)).values());
    CHECK(build_prop51(MuPower{3, {Rat(1)}, {Rat(2)}}, D).mu() == Rat(1, 4));
    CHECK_THROWS_AS(build_prop51(MuPower{-1, {}, {}}, D), DomainError);
    CHECK_THROWS_AS(build_prop51(MuPower{0, {}, {}}, GwaAlgebra::custom(Poly::h(), AffineAuto::scaling(Rat(2)))),
                    DomainError);
}

TEST_CASE("families pass the relations for random data") {
    gen::Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        const GwaAlgebra A = gen::disc_or_plane(rng, gen::generic_q(rng));
        std::vector<Rat> a, b;
        for (int i = 0; i < gen::uniform(rng, 0, 3); ++i) a.push_back(gen::rat(rng));
        for (int i = 0; i < gen::uniform(rng, 0, 3); ++i) b.push_back(gen::rat(rng));
        CHECK_NOTHROW(build_prop51(MuPower{gen::uniform(rng, 0, 3), a, b}, A));
        CHECK_NOTHROW(build_prop51(ZeroOnH{gen::poly(rng, 3), gen::nonzero_rat(rng)}, A));
    }
}

TEST_CASE("sigma_q examples") {
    const Rat q(2);
    const GwaAlgebra D = GwaAlgebra::disc(q);
    SUBCASE("alpha_{0,1} = 1") {
        SigmaQData data;
        data.M = 1, data.N = 1;
        data.alpha[{0, 1}] = Rat(1);
        const SkewDerivation d = build_sigma_q(data, D);
        CHECK(d.on_x() == X);
        CHECK(d.on_y() == Rat(-2) * Y);
        CHECK(d == build_prop51(ZeroOnH{Poly(1), q}, D));
    }
    SUBCASE("f(x) = x^2") {
        SigmaQData data;
        data.N = 2;
        data.f = {Rat(0), Rat(0), Rat(1)};
        const SkewDerivation d = build_sigma_q(data, D);
        CHECK(d.on_x().is_zero());
        CHECK(d.on_y() == GwaElement::x(2));
    }
    SUBCASE("empty data") { CHECK(build_sigma_q(SigmaQData{}, D) == zero_derivation(D, q)); }
    SUBCASE("indices out of range") {
        SigmaQData data;
        data.M = 1, data.N = 1;
        data.alpha[{1, 1}] = Rat(1);
        CHECK_THROWS_AS(build_sigma_q(data, D), DomainError);
        data.alpha.clear();
        data.alpha[{0, 0}] = Rat(1);
        CHECK_THROWS_AS(build_sigma_q(data, D), DomainError);
    }
}

TEST_CASE("sigma_q build and classify round trip") {
    gen::Rng rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        const GwaAlgebra A = gen::disc_or_plane(rng, gen::generic_q(rng));
        const SigmaQData data = gen::sigma_q_data(rng, 3, 3);
        const SkewDerivation d = build_sigma_q(data, A);
        const SigmaQClassification c = classify_sigma_q(d);
        REQUIRE(std::holds_alternative<SigmaQData>(c));
        CHECK(std::get<SigmaQData>(c) == data.normalized());
    }
}

TEST_CASE("sigma_q classification reports violations") {
    const GwaAlgebra D = GwaAlgebra::disc(Rat(2));
    // d(x) = x needs d(y) = -2y; leave it out
    const SigmaQClassification c = classify_sigma_q(DerivationValues{Rat(2), {}, X, {}}, D);
    REQUIRE(std::holds_alternative<SigmaQViolation>(c));
    const auto& v = std::get<SigmaQViolation>(c);
    CHECK(v.m == 0);
    CHECK(v.n == 1);
    CHECK(v.expected == Rat(-2));
    CHECK(v.actual == Rat(0));

    const SigmaQClassification twisted = classify_sigma_q(build_prop51(ZeroOnH{Poly(1), Rat(3)}, D));
    CHECK(std::holds_alternative<SigmaQViolation>(twisted));

    const SigmaQClassification zero = classify_sigma_q(zero_derivation(D, Rat(2)));
    REQUIRE(std::holds_alternative<SigmaQData>(zero));
    CHECK(std::get<SigmaQData>(zero) == SigmaQData{});
}

TEST_CASE("zero on h is the diagonal sigma_q pattern") {
    gen::Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const Rat q = gen::generic_q(rng);
        const GwaAlgebra A = gen::disc_or_plane(rng, q);
        const Poly f = gen::poly(rng, 3);
        const auto coords = to_yx_basis(A, GwaElement::term(1, f));
        SigmaQData data;
        for (const auto& [key, value] : coords) {
            CHECK(key.second == key.first + 1);
            data.alpha[key] = value;
        }
        data = data.normalized();
        CHECK(build_sigma_q(data, A) == build_prop51(ZeroOnH{f, q}, A));
    }
}

TEST_CASE("y^m x^n coordinates") {
    gen::Rng rng(54);
    for (int trial = 0; trial < 60; ++trial) {
        const GwaAlgebra A = gen::disc_or_plane(rng, gen::generic_q(rng));
        const GwaElement e = gen::element(rng, 3, 3);
        CHECK(from_yx_basis(A, to_yx_basis(A, e)) == e);
    }
    CHECK_THROWS_AS(to_yx_basis(GwaAlgebra::custom(Poly::monomial(Rat(1), 2), AffineAuto::identity()), X), DomainError);
}

TEST_CASE("bounded sigma_q solution space") {
    for (const bool disc : {true, false})
        for (const auto [M, N] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{1, 3}, std::pair{0, 2}})
            CHECK(oracle::sigma_q_solution_dimension(disc, Rat(2), M, N) == static_cast<std::size_t>(M * N + M + N + 2));
}

TEST_CASE("disc commutation identities") {
    CHECK(lemma52_check(1, Rat(2)));
    CHECK(lemma52_check(3, Rat(2)));
    for (const Rat& q : {Rat(2), Rat(3), Rat(-2), Rat(1, 2)})
        for (int n = 1; n <= 12; ++n) CHECK(lemma52_check(n, q));
    CHECK_THROWS_AS(lemma52_check(0, Rat(2)), DomainError);
    CHECK_THROWS_AS(lemma52_check(2, Rat(0)), DomainError);
}

TEST_CASE("perturbed identity fails") {
    const auto [first, second] = lemma52_residuals(1, Rat(2));
    CHECK(first.is_zero());
    CHECK_FALSE((first + GwaElement(Poly(1))).is_zero());
    // the same identity with the wrong power of q
    const GwaAlgebra D = GwaAlgebra::disc(Rat(2));
    const GwaElement wrong = D.mul(X, D.pow(Y, 2)) - Rat(2) * D.mul(D.pow(Y, 2), X) - Rat(-1) * Y;
    CHECK_FALSE(wrong.is_zero());
}
