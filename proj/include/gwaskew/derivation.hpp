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


#ifndef GWASKEW_DERIVATION_HPP
#define GWASKEW_DERIVATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gwaskew/gwa.hpp"

namespace gwa {

/**
 * Degree-counting extension sigma_mu of the identity of K[h]:
 * h -> h, x -> mu^{-1} x, y -> mu y. Since mu is a scalar it commutes with
 * phi, so sigma_mu(r x^k) = mu^{-k} r x^k for every signed degree k.
 */
struct DegreeCountingAuto {
    Rat mu{1};

    GwaElement apply(const GwaElement& e) const;
    GwaElement apply_inverse(const GwaElement& e) const;
};

/// Values of a candidate sigma_mu-derivation on the generators h, x, y.
struct DerivationValues {
    Rat mu{1};
    GwaElement on_h;
    GwaElement on_x;
    GwaElement on_y;

    DerivationValues& operator+=(const DerivationValues& other);
    friend DerivationValues operator+(DerivationValues lhs, const DerivationValues& rhs) { return lhs += rhs; }
    friend bool operator==(const DerivationValues&, const DerivationValues&) = default;
};

/**
 * A sigma_mu-skew derivation of R(a, phi) whose generator values have been
 * checked against every defining relation. Only check_relations (and the
 * constructors built on it) can produce one.
 */
class SkewDerivation {
  public:
    const GwaAlgebra& algebra() const noexcept { return algebra_; }
    const DerivationValues& values() const noexcept { return values_; }
    const Rat& mu() const noexcept { return values_.mu; }
    const GwaElement& on_h() const noexcept { return values_.on_h; }
    const GwaElement& on_x() const noexcept { return values_.on_x; }
    const GwaElement& on_y() const noexcept { return values_.on_y; }
    DegreeCountingAuto twist() const { return {values_.mu}; }

    /// Value on an arbitrary element by the twisted Leibniz rule.
    GwaElement operator()(const GwaElement& e) const;

    friend bool operator==(const SkewDerivation& lhs, const SkewDerivation& rhs) {
        return lhs.algebra_ == rhs.algebra_ && lhs.values_ == rhs.values_;
    }

  private:
    friend class RelationChecker;
    SkewDerivation(GwaAlgebra algebra, DerivationValues values) : algebra_(std::move(algebra)), values_(std::move(values)) {}

    GwaAlgebra algebra_;
    DerivationValues values_;
};

/// Right-twisted Leibniz extension d(ab) = d(a) sigma(b) + a d(b) of the
/// generator values, applied to a normal-form element. No relation checks.
GwaElement apply_leibniz(const GwaAlgebra& algebra, const DerivationValues& values, const GwaElement& e);

struct RelationViolation {
    std::string relation;
    GwaElement residual;
};

using RelationCheck = std::variant<SkewDerivation, RelationViolation>;

/**
 * Verifies that the Leibniz extension vanishes on xy - phi(a), yx - a,
 * xh - phi(h)x and yh - phi^{-1}(h)y. Both sides of each r-relation are
 * twisted derivations in r, so checking r = h covers all of K[h].
 */
RelationCheck check_relations(const DerivationValues& values, const GwaAlgebra& algebra);

/// check_relations, throwing DomainError with the violated relation on failure.
SkewDerivation verify(const DerivationValues& values, const GwaAlgebra& algebra);

/// Throws DomainError if the derivation was verified against another algebra.
GwaElement evaluate(const SkewDerivation& d, const GwaAlgebra& algebra, const GwaElement& e);

SkewDerivation zero_derivation(const GwaAlgebra& algebra, const Rat& mu = Rat(1));

/// Sum of two derivations with the same twist on the same algebra.
SkewDerivation operator+(const SkewDerivation& lhs, const SkewDerivation& rhs);

/// Twisted commutator d_b(g) = b sigma_mu(g) - g b.
GwaElement twisted_commutator(const GwaAlgebra& algebra, const Rat& mu, const GwaElement& b, const GwaElement& g);
SkewDerivation inner_derivation(const GwaAlgebra& algebra, const Rat& mu, const GwaElement& b);

/**
 * (alpha, phi^i)-skew derivation of K[h] determined by its value on h:
 * alpha(fg) = alpha(f) phi^i(g) + f alpha(g).
 */
struct TwistedPolyDerivation {
    int twist_exp = 0;
    Poly on_h;

    Poly apply(const AffineAuto& phi, const Poly& p) const;
    /// alpha(phi(h)) - mu phi(alpha(h)); zero iff alpha o phi = mu phi o alpha.
    Poly commutation_residual(const AffineAuto& phi, const Rat& mu) const;

    friend bool operator==(const TwistedPolyDerivation&, const TwistedPolyDerivation&) = default;
};

/// Input of the main constructor: alpha_i for weights i in [-N, M], b, c and mu.
struct TheoremData {
    std::map<int, TwistedPolyDerivation> alphas;
    Poly b;
    Poly c;
    Rat mu{1};

    /// Adds (or replaces) alpha_weight with the given value on h.
    TheoremData& with_alpha(int weight, Poly on_h);
    /// Drops zero alphas so structurally equal data compare equal.
    TheoremData normalized() const;

    TheoremData& operator+=(const TheoremData& other);
    friend TheoremData operator+(TheoremData lhs, const TheoremData& rhs) { return lhs += rhs; }
    friend bool operator==(const TheoremData&, const TheoremData&) = default;
};

/// Throws DomainError naming the failed admissibility clause.
void validate(const TheoremData& data, const GwaAlgebra& algebra);

/**
 * Builds d(h) = sum alpha_m(h) x^m + sum alpha_{-n}(h) y^n,
 * d(x) = (c - phi(b) + b/mu) x + sum phi(alpha_{-n}(a)) y^{n-1},
 * d(y) = (alpha_0(a)/a - phi^{-1}(c + b/mu) + b) mu y + sum alpha_m(a) mu x^{m-1}.
 */
SkewDerivation from_theorem_data(const TheoremData& data, const GwaAlgebra& algebra);

/// Elementary derivation of the given weight; extra is c for weight 0 and must be zero otherwise.
SkewDerivation elementary(int weight, const TwistedPolyDerivation& alpha, const Poly& extra, const GwaAlgebra& algebra,
                          const Rat& mu);
/// The elementary family bar-d_b, vanishing on K[h].
SkewDerivation elementary_commutator(const Poly& b, const GwaAlgebra& algebra, const Rat& mu);

struct QCheckResult {
    bool is_q_derivation = false;
    std::optional<Rat> q;
};

/// Looks for a scalar Q with sigma o d o sigma^{-1} = Q d on h, x, y; Q = 1 for the zero map.
QCheckResult q_check(const SkewDerivation& d);

struct NotOfThisForm {
    std::string reason;
    GwaElement offending;
};

using Classification = std::variant<TheoremData, NotOfThisForm>;

/// Recovers constructor data for derivations with d(R) in the nonnegative
/// part and d(x) = 0, or (through the x-y symmetry) the mirrored case.
Classification classify_positive(const SkewDerivation& d);

/// Transport along the x-y symmetry onto R(phi(a), phi^{-1}); the twist becomes mu^{-1}.
SkewDerivation mirror_derivation(const SkewDerivation& d);

/**
 * Searches for b = sum_{|k| <= degree_bound} p_k(h) M_k with deg p_k <= poly_bound
 * such that d equals the twisted commutator with b, by exact linear algebra.
 */
std::optional<GwaElement> inner_witness(const SkewDerivation& d, int degree_bound, int poly_bound);

/// Degree l of d as a graded map, nullopt if d is not homogeneous. The zero map reports 0.
std::optional<int> degree_profile(const SkewDerivation& d, const Grading& grading);

/// Data for the finite-order family: phi^D = id, alphas are ordinary derivations.
struct FiniteOrderData {
    int order = 1;
    std::vector<std::pair<TwistedPolyDerivation, Poly>> positive;  // (alpha_m, b_m), m = 1, 2, ...
    std::vector<std::pair<TwistedPolyDerivation, Poly>> negative;  // (alpha_{-n}, c_n), n = 1, 2, ...
    Rat mu{1};
};

SkewDerivation finite_order_family(const FiniteOrderData& data, const GwaAlgebra& algebra);

/// d(h) recovered from d(x), d(y) through yx = a; requires deg a = 1.
GwaElement derive_h_from_generators(const GwaAlgebra& algebra, const Rat& mu, const GwaElement& on_x,
                                    const GwaElement& on_y);

}  // namespace gwa

#endif  // GWASKEW_DERIVATION_HPP
