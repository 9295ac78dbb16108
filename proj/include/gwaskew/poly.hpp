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


#ifndef GWASKEW_POLY_HPP
#define GWASKEW_POLY_HPP

#include <climits>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gwaskew/rational.hpp"

namespace gwa {

/**
 * Dense univariate polynomial in h over the rationals.
 *
 * coeffs()[i] is the coefficient of h^i. The highest stored coefficient is
 * always nonzero; the zero polynomial has no coefficients and degree
 * Poly::kZeroDegree.
 */
class Poly {
  public:
    static constexpr int kZeroDegree = INT_MIN;

    Poly() = default;
    Poly(const Rat& constant);
    Poly(long constant) : Poly(Rat(constant)) {}
    Poly(int constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

    static Poly h() { return monomial(Rat(1), 1); }
    static Poly monomial(const Rat& c, int power);

    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    int degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of h^i; zero outside the stored range.
    Rat coeff(int i) const;
    Rat leading() const;

    Rat evaluate(const Rat& at) const;
    /// p(u h + v).
    Poly compose_affine(const Rat& u, const Rat& v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rat& scalar);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Poly operator*(const Rat& lhs, Poly rhs) { return rhs *= lhs; }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form such as "1 - 3/2*h + h^2".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_scale(const Poly& p, const Rat& c);
Poly poly_pow(const Poly& p, int exponent);

/// Quotient and remainder with p = quotient * d + remainder, deg remainder < deg d.
std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& d);

/// True iff d divides p exactly; d must be nonzero.
bool divides(const Poly& d, const Poly& p);

/// Divides p by p's leading coefficient; zero stays zero.
Poly monic(const Poly& p);

/**
 * Affine automorphism h -> u h + v of K[h].
 *
 * Acts on polynomials by substitution, so apply(k, p) = p(phi^k(h)).
 */
class AffineAuto {
  public:
    AffineAuto() = default;
    AffineAuto(Rat u, Rat v);

    static AffineAuto identity() { return {}; }
    static AffineAuto scaling(const Rat& q) { return AffineAuto(q, Rat(0)); }

    const Rat& u() const noexcept { return u_; }
    const Rat& v() const noexcept { return v_; }

    bool is_identity() const { return u_.is_one() && v_.is_zero(); }

    AffineAuto inverse() const;
    /// phi^k for any integer k.
    AffineAuto power(long k) const;
    /// phi^k(h) as a polynomial.
    Poly image_of_h(long k = 1) const;
    Poly apply(long k, const Poly& p) const;
    Poly operator()(const Poly& p) const { return apply(1, p); }

    friend bool operator==(const AffineAuto&, const AffineAuto&) = default;

  private:
    Rat u_{1};
    Rat v_{0};
};

Poly apply_auto(const AffineAuto& phi, long k, const Poly& p);

/// s*lhs + t*rhs = g, with g the monic gcd (or zero).
struct BezoutWitness {
    Poly g;
    Poly s;
    Poly t;
    Poly lhs;
    Poly rhs;

    bool coprime() const { return g == Poly(1); }
    /// Recomputes s*lhs + t*rhs and compares with g.
    bool holds() const { return s * lhs + t * rhs == g; }
};

/// Extended Euclid; throws DomainError if both inputs are zero.
BezoutWitness extended_gcd(const Poly& p, const Poly& q);

}  // namespace gwa

#endif  // GWASKEW_POLY_HPP
