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


#ifndef GWASKEW_GWA_HPP
#define GWASKEW_GWA_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "gwaskew/poly.hpp"

namespace gwa {

/**
 * Element of a degree-one generalized Weyl algebra in normal form.
 *
 * A term (k, r) stands for r*x^k when k > 0, r when k = 0 and r*y^{-k} when
 * k < 0, with the coefficient r in K[h] always on the left. Zero
 * coefficients are never stored, so two elements are equal iff their term
 * maps are equal. Elements carry no reference to an algebra: addition and
 * scaling are algebra independent, multiplication goes through GwaAlgebra.
 */
class GwaElement {
  public:
    using TermMap = std::map<int, Poly>;

    GwaElement() = default;
    GwaElement(const Poly& r) { add_term(0, r); }
    explicit GwaElement(TermMap terms);

    static GwaElement term(int degree, const Poly& coeff);
    static GwaElement x(int power = 1) { return term(power, Poly(1)); }
    static GwaElement y(int power = 1) { return term(-power, Poly(1)); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Coefficient of the degree-k term (zero if absent).
    Poly coeff(int degree) const;
    bool is_single_term() const noexcept { return terms_.size() == 1; }
    /// True iff the element lies in K[h] (degree-0 part only).
    bool in_base_ring() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

    void add_term(int degree, const Poly& coeff);

    GwaElement operator-() const;
    GwaElement& operator+=(const GwaElement& other);
    GwaElement& operator-=(const GwaElement& other);
    GwaElement& operator*=(const Rat& scalar);

    friend GwaElement operator+(GwaElement lhs, const GwaElement& rhs) { return lhs += rhs; }
    friend GwaElement operator-(GwaElement lhs, const GwaElement& rhs) { return lhs -= rhs; }
    friend GwaElement operator*(GwaElement lhs, const Rat& s) { return lhs *= s; }
    friend GwaElement operator*(const Rat& s, GwaElement rhs) { return rhs *= s; }

    /// Left multiplication by a base-ring element; no algebra needed.
    friend GwaElement operator*(const Poly& r, const GwaElement& e);

    friend bool operator==(const GwaElement&, const GwaElement&) = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GwaElement& e) { return os << e.str(); }

  private:
    TermMap terms_;
};

GwaElement gwa_add(const GwaElement& lhs, const GwaElement& rhs);
GwaElement gwa_scale(const Rat& s, const GwaElement& e);
bool gwa_eq(const GwaElement& lhs, const GwaElement& rhs);

enum class AlgebraLabel { Disc, Plane, Custom };

std::string to_string(AlgebraLabel label);

/**
 * The data (a, phi) of R(a, phi) with R = K[h]:
 *
 *   xy = phi(a),  yx = a,  x r = phi(r) x,  y r = phi^{-1}(r) y.
 *
 * The quantum disc is (1 - h, h -> q h) and the quantum plane is
 * (h, h -> q h); both presets require q outside {0, 1, -1}.
 */
class GwaAlgebra {
  public:
    static GwaAlgebra disc(const Rat& q);
    static GwaAlgebra plane(const Rat& q);
    static GwaAlgebra custom(Poly a, AffineAuto phi);

    const Poly& a() const noexcept { return a_; }
    const AffineAuto& phi() const noexcept { return phi_; }
    AlgebraLabel label() const noexcept { return label_; }
    /// The scaling parameter of a disc or plane preset.
    std::optional<Rat> q() const;

    /// phi^k(r).
    Poly shift(long k, const Poly& r) const { return phi_.apply(k, r); }

    /// Coefficient c with M_e * M_f = c * M_{e+f}, M_k the signed monomial.
    Poly monomial_product(int e, int f) const;

    GwaElement mul(const GwaElement& lhs, const GwaElement& rhs) const;
    GwaElement pow(const GwaElement& e, int exponent) const;
    /// e * r for r in K[h]: pulls r through to the left.
    GwaElement mul_right(const GwaElement& e, const Poly& r) const;

    /// y^m x^n written in normal form.
    GwaElement yx_monomial(int m, int n) const;

    friend bool operator==(const GwaAlgebra& lhs, const GwaAlgebra& rhs) {
        return lhs.a_ == rhs.a_ && lhs.phi_ == rhs.phi_;
    }

  private:
    GwaAlgebra(Poly a, AffineAuto phi, AlgebraLabel label) : a_(std::move(a)), phi_(std::move(phi)), label_(label) {}

    Poly a_;
    AffineAuto phi_;
    AlgebraLabel label_ = AlgebraLabel::Custom;
};

GwaElement gwa_mul(const GwaAlgebra& algebra, const GwaElement& lhs, const GwaElement& rhs);

/**
 * (d, k)-type grading: deg h = w, deg x = k, deg y = d - k, where a must be
 * homogeneous of degree d and phi must preserve degrees.
 */
struct Grading {
    int d = 0;
    int k = 0;
    int w = 0;

    /// Throws DomainError if the grading is not compatible with the algebra.
    void validate(const GwaAlgebra& algebra) const;
    int monomial_degree(int h_power, int signed_degree) const;
};

struct GradedDegree {
    enum class Kind { Homogeneous, Inhomogeneous, Zero };
    Kind kind = Kind::Zero;
    int value = 0;

    bool homogeneous() const { return kind == Kind::Homogeneous; }
    friend bool operator==(const GradedDegree&, const GradedDegree&) = default;
};

GradedDegree graded_degree(const Grading& grading, const GwaElement& e);

/// Image of R(a, phi) under the x-y symmetry: R(phi(a), phi^{-1}).
GwaAlgebra xy_mirror(const GwaAlgebra& algebra);

/// x -> y, y -> x, identity on K[h]; returns the target algebra and the image.
std::pair<GwaAlgebra, GwaElement> xy_symmetry(const GwaAlgebra& algebra, const GwaElement& e);

/// Image element only (degree map negated).
GwaElement mirror_element(const GwaElement& e);

}  // namespace gwa

#endif  // GWASKEW_GWA_HPP
