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
#include "gwaskew/derivation.hpp"
#include "gwaskew/gwa.hpp"
#include "oracles.hpp"

using namespace gwa;

namespace {

GwaAlgebra random_custom(gen::Rng& rng) {
    Poly a;
    while (a.is_zero()) a = gen::poly(rng, 2);
    return GwaAlgebra::custom(a, AffineAuto(gen::nonzero_rat(rng, 3), gen::rat(rng, 3)));
}

}  // namespace

TEST_CASE("presets reject degenerate q") {
    for (const Rat& q : {Rat(0), Rat(1), Rat(-1)}) {
        CHECK_THROWS_AS(GwaAlgebra::disc(q), DomainError);
        CHECK_THROWS_AS(GwaAlgebra::plane(q), DomainError);
    }
    CHECK(GwaAlgebra::disc(Rat(2)).q() == Rat(2));
    CHECK_FALSE(GwaAlgebra::custom(Poly::h(), AffineAuto::scaling(Rat(2))).q().has_value());
}

TEST_CASE("defining relations") {
    gen::Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const GwaAlgebra A = random_custom(rng);
        const GwaElement x = GwaElement::x(), y = GwaElement::y(), h(Poly::h());
        CHECK(A.mul(x, y) == GwaElement(A.shift(1, A.a())));
        CHECK(A.mul(y, x) == GwaElement(A.a()));
        CHECK(A.mul(x, h) == A.shift(1, Poly::h()) * x);
        CHECK(A.mul(y, h) == A.shift(-1, Poly::h()) * y);
    }
}

TEST_CASE("xy on the disc at q = 2 is 1 - 2h") {
    const GwaAlgebra D = GwaAlgebra::disc(Rat(2));
    CHECK(D.mul(GwaElement::x(), GwaElement::y()) == GwaElement(Poly{Rat(1), Rat(-2)}));
    CHECK(D.mul(GwaElement::y(), GwaElement::x()) == GwaElement(Poly{Rat(1), Rat(-1)}));
}

TEST_CASE("products agree with word rewriting on disc and plane") {
    gen::Rng rng(22);
    for (int trial = 0; trial < 150; ++trial) {
        const Rat q = gen::generic_q(rng);
        const bool disc = gen::coin(rng);
        const GwaAlgebra A = disc ? GwaAlgebra::disc(q) : GwaAlgebra::plane(q);
        const oracle::RewritingAlgebra W(disc, q);
        const GwaElement a = gen::element(rng, 2, 2), b = gen::element(rng, 2, 2);
        CHECK(W.from_element(A.mul(a, b)) == W.multiply(W.from_element(a), W.from_element(b)));
    }
}

TEST_CASE("y^m x^n matches its word") {
    for (const bool disc : {true, false}) {
        const Rat q(3, 2);
        const GwaAlgebra A = disc ? GwaAlgebra::disc(q) : GwaAlgebra::plane(q);
        const oracle::RewritingAlgebra W(disc, q);
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) CHECK(W.from_element(A.yx_monomial(m, n)) == oracle::RewritingAlgebra::yx_word(m, n));
    }
}

TEST_CASE("multiplication is associative and distributive") {
    gen::Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const GwaAlgebra A = random_custom(rng);
        const GwaElement a = gen::element(rng, 2, 2), b = gen::element(rng, 2, 2), c = gen::element(rng, 2, 2);
        CHECK(A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c)));
        CHECK(A.mul(a, b + c) == A.mul(a, b) + A.mul(a, c));
        CHECK(A.mul(GwaElement(Poly(1)), a) == a);
        const Poly r = gen::poly(rng, 2);
        CHECK(A.mul_right(a, r) == A.mul(a, GwaElement(r)));
    }
}

TEST_CASE("powers") {
    const GwaAlgebra P = GwaAlgebra::plane(Rat(2));
    CHECK(P.pow(GwaElement::x(), 3) == GwaElement::x(3));
    CHECK(P.pow(GwaElement::y(), 0) == GwaElement(Poly(1)));
    CHECK_THROWS_AS(P.pow(GwaElement::x(), -1), DomainError);
}

TEST_CASE("the x-y symmetry is multiplicative") {
    gen::Rng rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const GwaAlgebra A = random_custom(rng);
        const GwaAlgebra B = xy_mirror(A);
        const GwaElement a = gen::element(rng, 2, 2), b = gen::element(rng, 2, 2);
        CHECK(xy_symmetry(A, A.mul(a, b)).second == B.mul(xy_symmetry(A, a).second, xy_symmetry(A, b).second));
        CHECK(xy_symmetry(B, xy_symmetry(A, a).second).second == a);
    }
}

TEST_CASE("the degree-counting twist is multiplicative") {
    gen::Rng rng(25);
    for (int trial = 0; trial < 100; ++trial) {
        const GwaAlgebra A = random_custom(rng);
        const DegreeCountingAuto sigma{gen::nonzero_rat(rng)};
        const GwaElement a = gen::element(rng, 2, 2), b = gen::element(rng, 2, 2);
        CHECK(sigma.apply(A.mul(a, b)) == A.mul(sigma.apply(a), sigma.apply(b)));
        CHECK(sigma.apply_inverse(sigma.apply(a)) == a);
    }
    const DegreeCountingAuto sigma{Rat(3)};
    CHECK(sigma.apply(GwaElement::x()) == Rat(1, 3) * GwaElement::x());
    CHECK(sigma.apply(GwaElement::y(2)) == Rat(9) * GwaElement::y(2));
}

TEST_CASE("graded degree") {
    const GwaAlgebra P = GwaAlgebra::plane(Rat(2));
    const Grading g{1, 0, 1};
    g.validate(P);
    CHECK(graded_degree(g, GwaElement::x()) == GradedDegree{GradedDegree::Kind::Homogeneous, 0});
    CHECK(graded_degree(g, GwaElement::y()) == GradedDegree{GradedDegree::Kind::Homogeneous, 1});
    CHECK(graded_degree(g, GwaElement::term(1, Poly::h())) == GradedDegree{GradedDegree::Kind::Homogeneous, 1});
    CHECK(graded_degree(g, GwaElement::y() + GwaElement::x()).kind == GradedDegree::Kind::Inhomogeneous);
    CHECK(graded_degree(g, GwaElement()).kind == GradedDegree::Kind::Zero);
    CHECK_THROWS_AS((Grading{2, 0, 1}).validate(P), DomainError);
    CHECK_THROWS_AS((Grading{1, 0, 1}).validate(GwaAlgebra::disc(Rat(2))), DomainError);
}

TEST_CASE("element normal form") {
    GwaElement e = GwaElement::term(2, Poly::h());
    e.add_term(2, -Poly::h());
    CHECK(e.is_zero());
    CHECK(GwaElement(Poly()).is_zero());
    CHECK(GwaElement::term(-1, Poly(3)).coeff(-1) == Poly(3));
    CHECK((Poly::h() * GwaElement::x()).coeff(1) == Poly::h());
}
