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


#include "gwaskew/poly.hpp"

#include <sstream>

namespace gwa {

Poly::Poly(const Rat& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, int power) {
    if (c.is_zero()) return {};
    if (power < 0) throw DomainError("negative power of h");
    std::vector<Rat> coeffs(static_cast<std::size_t>(power) + 1);
    coeffs.back() = c;
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat Poly::evaluate(const Rat& at) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::compose_affine(const Rat& u, const Rat& v) const {
    // Horner in the substituted variable.
    const Poly lin({v, u});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly(*it);
    return acc;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rat& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rat mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) os << mag << "*";
        os << "h";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
Poly poly_scale(const Poly& p, const Rat& c) { return p * c; }

Poly poly_pow(const Poly& p, int exponent) {
    if (exponent < 0) throw DomainError("negative polynomial power");
    Poly acc(1);
    for (int i = 0; i < exponent; ++i) acc *= p;
    return acc;
}

std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    const int dd = d.degree();
    if (p.degree() < dd) return {Poly(), p};
    std::vector<Rat> rem = p.coeffs();
    std::vector<Rat> quot(static_cast<std::size_t>(p.degree() - dd) + 1);
    const Rat lead = d.leading();
    for (int k = p.degree() - dd; k >= 0; --k) {
        const Rat c = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * d.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool divides(const Poly& d, const Poly& p) { return poly_divrem(p, d).second.is_zero(); }

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.leading().inverse();
}

AffineAuto::AffineAuto(Rat u, Rat v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_.is_zero()) throw DomainError("affine automorphism needs u != 0");
}

AffineAuto AffineAuto::inverse() const {
    // h -> (h - v)/u
    const Rat ui = u_.inverse();
    return AffineAuto(ui, -v_ * ui);
}

AffineAuto AffineAuto::power(long k) const {
    if (k < 0) return inverse().power(-k);
    // u^k h + v (u^{k-1} + ... + 1)
    Rat geometric(0);
    Rat term(1);
    for (long i = 0; i < k; ++i) {
        geometric += term;
        term *= u_;
    }
    return AffineAuto(u_.pow(k), v_ * geometric);
}

Poly AffineAuto::image_of_h(long k) const {
    const AffineAuto p = power(k);
    return Poly({p.v_, p.u_});
}

Poly AffineAuto::apply(long k, const Poly& p) const {
    if (k == 0 || is_identity()) return p;
    const AffineAuto p_k = power(k);
    return p.compose_affine(p_k.u_, p_k.v_);
}

Poly apply_auto(const AffineAuto& phi, long k, const Poly& p) { return phi.apply(k, p); }

BezoutWitness extended_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("extended_gcd of two zero polynomials");
    Poly r0 = p, r1 = q;
    Poly s0(1), s1;
    Poly t0, t1(1);
    while (!r1.is_zero()) {
        auto [quot, rem] = poly_divrem(r0, r1);
        Poly s2 = s0 - quot * s1;
        Poly t2 = t0 - quot * t1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Rat scale = r0.leading().inverse();
    return BezoutWitness{r0 * scale, s0 * scale, t0 * scale, p, q};
}

}  // namespace gwa
