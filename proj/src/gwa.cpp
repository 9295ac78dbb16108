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


#include "gwaskew/gwa.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace gwa {

GwaElement::GwaElement(TermMap terms) {
    for (auto& [deg, coeff] : terms) add_term(deg, coeff);
}

GwaElement GwaElement::term(int degree, const Poly& coeff) {
    GwaElement e;
    e.add_term(degree, coeff);
    return e;
}

Poly GwaElement::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Poly() : it->second;
}

void GwaElement::add_term(int degree, const Poly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(degree, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

GwaElement GwaElement::operator-() const {
    GwaElement out = *this;
    for (auto& [deg, coeff] : out.terms_) coeff = -coeff;
    return out;
}

GwaElement& GwaElement::operator+=(const GwaElement& other) {
    for (const auto& [deg, coeff] : other.terms_) add_term(deg, coeff);
    return *this;
}

GwaElement& GwaElement::operator-=(const GwaElement& other) {
    for (const auto& [deg, coeff] : other.terms_) add_term(deg, -coeff);
    return *this;
}

GwaElement& GwaElement::operator*=(const Rat& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [deg, coeff] : terms_) coeff *= scalar;
    return *this;
}

GwaElement operator*(const Poly& r, const GwaElement& e) {
    GwaElement out;
    for (const auto& [deg, coeff] : e.terms_) out.add_term(deg, r * coeff);
    return out;
}

std::string GwaElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff << ")";
        if (deg > 0) os << "*x" << (deg > 1 ? "^" + std::to_string(deg) : "");
        if (deg < 0) os << "*y" << (deg < -1 ? "^" + std::to_string(-deg) : "");
    }
    return os.str();
}

GwaElement gwa_add(const GwaElement& lhs, const GwaElement& rhs) { return lhs + rhs; }
GwaElement gwa_scale(const Rat& s, const GwaElement& e) { return s * e; }
bool gwa_eq(const GwaElement& lhs, const GwaElement& rhs) { return lhs == rhs; }

std::string to_string(AlgebraLabel label) {
    switch (label) {
    case AlgebraLabel::Disc:
        return "disc";
    case AlgebraLabel::Plane:
        return "plane";
    case AlgebraLabel::Custom:
        return "custom";
    }
    return "custom";
}

namespace {

void require_generic_q(const Rat& q) {
    if (q.is_zero() || is_root_of_unity(q)) throw DomainError("q must be nonzero and not a root of unity (q != 1, -1)");
}

}  // namespace

GwaAlgebra GwaAlgebra::disc(const Rat& q) {
    require_generic_q(q);
    return GwaAlgebra(Poly({Rat(1), Rat(-1)}), AffineAuto::scaling(q), AlgebraLabel::Disc);
}

GwaAlgebra GwaAlgebra::plane(const Rat& q) {
    require_generic_q(q);
    return GwaAlgebra(Poly::h(), AffineAuto::scaling(q), AlgebraLabel::Plane);
}

GwaAlgebra GwaAlgebra::custom(Poly a, AffineAuto phi) { return GwaAlgebra(std::move(a), std::move(phi), AlgebraLabel::Custom); }

std::optional<Rat> GwaAlgebra::q() const {
    if (label_ == AlgebraLabel::Custom) return std::nullopt;
    return phi_.u();
}

Poly GwaAlgebra::monomial_product(int e, int f) const {
    if ((e >= 0 && f >= 0) || (e <= 0 && f <= 0)) return Poly(1);
    Poly acc(1);
    if (e > 0) {
        // x^m y^n = phi^m(a) phi^{m-1}(a) ... phi^{m-t+1}(a) x^{m-t} y^{n-t}
        const int m = e, t = std::min(e, -f);
        for (int i = 0; i < t; ++i) acc *= shift(m - i, a_);
    } else {
        // y^n x^m = phi^{-n+1}(a) ... phi^{-n+t}(a) y^{n-t} x^{m-t}
        const int n = -e, t = std::min(-e, f);
        for (int i = 1; i <= t; ++i) acc *= shift(-n + i, a_);
    }
    return acc;
}

GwaElement GwaAlgebra::mul(const GwaElement& lhs, const GwaElement& rhs) const {
    GwaElement out;
    for (const auto& [e, p] : lhs.terms()) {
        for (const auto& [f, r] : rhs.terms()) {
            // (p M_e)(r M_f) = p phi^e(r) (M_e M_f)
            out.add_term(e + f, p * shift(e, r) * monomial_product(e, f));
        }
    }
    return out;
}

GwaElement GwaAlgebra::pow(const GwaElement& e, int exponent) const {
    if (exponent < 0) throw DomainError("negative power in a generalized Weyl algebra");
    GwaElement acc(Poly(1));
    for (int i = 0; i < exponent; ++i) acc = mul(acc, e);
    return acc;
}

GwaElement GwaAlgebra::mul_right(const GwaElement& e, const Poly& r) const {
    GwaElement out;
    for (const auto& [deg, coeff] : e.terms()) out.add_term(deg, coeff * shift(deg, r));
    return out;
}

GwaElement GwaAlgebra::yx_monomial(int m, int n) const {
    if (m < 0 || n < 0) throw DomainError("yx_monomial: negative exponent");
    return GwaElement::term(n - m, monomial_product(-m, n));
}

GwaElement gwa_mul(const GwaAlgebra& algebra, const GwaElement& lhs, const GwaElement& rhs) { return algebra.mul(lhs, rhs); }

void Grading::validate(const GwaAlgebra& algebra) const {
    const Poly& a = algebra.a();
    for (int j = 0; j <= a.degree(); ++j)
        if (!a.coeff(j).is_zero() && j * w != d)
            throw DomainError("grading: a is not homogeneous of degree d = " + std::to_string(d));
    if (w != 0 && !algebra.phi().v().is_zero()) throw DomainError("grading: phi does not preserve degrees");
}

int Grading::monomial_degree(int h_power, int signed_degree) const {
    const int gen = signed_degree >= 0 ? signed_degree * k : (-signed_degree) * (d - k);
    return h_power * w + gen;
}

GradedDegree graded_degree(const Grading& grading, const GwaElement& e) {
    GradedDegree out;
    for (const auto& [deg, coeff] : e.terms()) {
        for (int j = 0; j <= coeff.degree(); ++j) {
            if (coeff.coeff(j).is_zero()) continue;
            const int value = grading.monomial_degree(j, deg);
            if (out.kind == GradedDegree::Kind::Zero) {
                out = {GradedDegree::Kind::Homogeneous, value};
            } else if (out.value != value) {
                return {GradedDegree::Kind::Inhomogeneous, 0};
            }
        }
    }
    return out;
}

GwaAlgebra xy_mirror(const GwaAlgebra& algebra) {
    return GwaAlgebra::custom(algebra.shift(1, algebra.a()), algebra.phi().inverse());
}

GwaElement mirror_element(const GwaElement& e) {
    GwaElement out;
    for (const auto& [deg, coeff] : e.terms()) out.add_term(-deg, coeff);
    return out;
}

std::pair<GwaAlgebra, GwaElement> xy_symmetry(const GwaAlgebra& algebra, const GwaElement& e) {
    return {xy_mirror(algebra), mirror_element(e)};
}

}  // namespace gwa
