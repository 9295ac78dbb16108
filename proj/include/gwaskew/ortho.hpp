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


#ifndef GWASKEW_ORTHO_HPP
#define GWASKEW_ORTHO_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gwaskew/derivation.hpp"

namespace gwa {

/// q-integer [m]_q = 1 + q + ... + q^{m-1}; total at q = 1.
Rat q_int(int m, const Rat& q);

struct CertificatePair {
    GwaElement a;
    GwaElement b;

    friend bool operator==(const CertificatePair&, const CertificatePair&) = default;
};

/**
 * Finite sets {a_it}, {b_it} with sum_t a_it d_k(b_it) = delta_ik.
 * entries[i] holds the pairs for derivation i (reported 1-based).
 */
struct OrthoCertificate {
    std::vector<std::vector<CertificatePair>> entries;

    friend bool operator==(const OrthoCertificate&, const OrthoCertificate&) = default;
};

struct CertificateTriple {
    GwaElement a;
    GwaElement b;
    GwaElement c;
};

/// Three-set form: sum_t a_it d_k(b_it) sigma_k(sigma_i^{-1}(c_it)) = delta_ik.
struct ThreeSetCertificate {
    std::vector<std::vector<CertificateTriple>> entries;
};

struct CertificateResidual {
    int i = 0;  // 1-based
    int k = 0;  // 1-based
    GwaElement value;  // sum minus delta_ik
};

struct CertificateCheck {
    bool ok = false;
    std::string reason;
    std::optional<CertificateResidual> residual;
};

/// Every derivation in the system must have been verified on `algebra`.
CertificateCheck verify_certificate(const OrthoCertificate& cert, const std::vector<SkewDerivation>& system,
                                    const GwaAlgebra& algebra);
CertificateCheck verify_three_set(const ThreeSetCertificate& cert, const std::vector<SkewDerivation>& system,
                                  const GwaAlgebra& algebra);

/// (a, b, c) -> {(a, b sigma_i^{-1}(c)), (-a b, sigma_i^{-1}(c))}; scalar c folds into a.
OrthoCertificate to_two_set(const ThreeSetCertificate& cert, const std::vector<SkewDerivation>& system,
                            const GwaAlgebra& algebra);

struct CertificateFailure {
    int index = 0;  // 1-based derivation index, 0 if not specific
    std::string reason;
    std::optional<Poly> gcd;  // set when the landed polynomials are not coprime
};

using CertificateResult = std::variant<OrthoCertificate, CertificateFailure>;

/**
 * Builds a certificate from b_list by landing single-term values in K[h]
 * with monomial flanks and solving a Bezout identity. Uses b_i alone when
 * d_k(b_i) = 0 for k != i; for a pair of derivations it otherwise combines
 * both b's with multipliers annihilating the other derivation. The result
 * is always re-verified.
 */
CertificateResult certificate_from_ideal(const std::vector<GwaElement>& b_list, const std::vector<SkewDerivation>& system,
                                         const GwaAlgebra& algebra);

struct HypothesisCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct PairHypotheses {
    std::vector<HypothesisCheck> checks;
    bool degenerate = false;  // alpha(a) or bar-alpha(a) vanishes

    bool all_pass() const;
};

struct ElementaryPair {
    SkewDerivation d;
    SkewDerivation d_bar;
    PairHypotheses report;
};

/**
 * Elementary pair of weights m+1 and -n-1 built from alpha and bar-alpha.
 * Hypothesis failures only show up in the report. Throws DomainError if a
 * twist exponent is wrong or a map fails the commutation condition (then it
 * is not a derivation at all).
 */
ElementaryPair prop42_pair(int m, int n, const TwistedPolyDerivation& alpha, const TwistedPolyDerivation& alpha_bar,
                       const GwaAlgebra& algebra, const Rat& mu, const Rat& mu_bar);

/// (1 - [k][l] q^{1-k}) / (1 - [k][l]); throws DomainError on a zero denominator.
Rat qkl(int k, int l, const Rat& q);

struct PairConditionReport {
    int k = 0;
    int l = 0;
    std::optional<Rat> q_kl;  // unset when the defining fraction has a zero denominator
    std::optional<Rat> q_lk;
    std::vector<int> violated_exponents;
    bool condition2_ok = false;

    bool satisfied() const { return q_kl && q_lk && violated_exponents.empty() && condition2_ok; }
};

struct KlConditionReport {
    std::vector<PairConditionReport> orderings;  // (m, n) then (n, m)

    bool satisfied() const;
};

/// Requires m, n > 1 and q outside {0, 1, -1}.
KlConditionReport kl_conditions(int m, int n, const Rat& q);

/// The sigma_q pair on the disc with d(x) = c x^n and bar-d(y) = c_bar y^m.
std::pair<SkewDerivation, SkewDerivation> disc_pair(int m, int n, const Rat& c, const Rat& c_bar, const Rat& q);

}  // namespace gwa

#endif  // GWASKEW_ORTHO_HPP
