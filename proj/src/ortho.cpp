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


#include "gwaskew/ortho.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace gwa {

Rat q_int(int m, const Rat& q) {
    if (m < 0) throw DomainError("q-integer needs m >= 0");
    Rat acc(0);
    Rat term(1);
    for (int i = 0; i < m; ++i) {
        acc += term;
        term *= q;
    }
    return acc;
}

namespace {

void require_same_algebra(const std::vector<SkewDerivation>& system, const GwaAlgebra& algebra) {
    for (const auto& d : system)
        if (!(d.algebra() == algebra)) throw DomainError("derivation in the system belongs to a different algebra");
}

GwaElement delta(std::size_t i, std::size_t k) { return i == k ? GwaElement(Poly(1)) : GwaElement(); }

bool is_scalar(const GwaElement& e) { return e.in_base_ring() && e.coeff(0).is_constant(); }

GwaElement monomial(int degree, const Poly& coeff = Poly(1)) { return GwaElement::term(degree, coeff); }

}  // namespace

CertificateCheck verify_certificate(const OrthoCertificate& cert, const std::vector<SkewDerivation>& system,
                                    const GwaAlgebra& algebra) {
    require_same_algebra(system, algebra);
    if (cert.entries.size() != system.size())
        return {false, "certificate has " + std::to_string(cert.entries.size()) + " entries for a system of " +
                           std::to_string(system.size()),
                std::nullopt};
    for (std::size_t i = 0; i < system.size(); ++i) {
        for (std::size_t k = 0; k < system.size(); ++k) {
            GwaElement sum;
            for (const auto& [a, b] : cert.entries[i]) sum += algebra.mul(a, system[k](b));
            GwaElement residual = sum - delta(i, k);
            if (!residual.is_zero())
                return {false, "orthogonality fails",
                        CertificateResidual{static_cast<int>(i) + 1, static_cast<int>(k) + 1, std::move(residual)}};
        }
    }
    return {true, "", std::nullopt};
}

CertificateCheck verify_three_set(const ThreeSetCertificate& cert, const std::vector<SkewDerivation>& system,
                                  const GwaAlgebra& algebra) {
    require_same_algebra(system, algebra);
    if (cert.entries.size() != system.size()) return {false, "entry count does not match the system", std::nullopt};
    for (std::size_t i = 0; i < system.size(); ++i) {
        for (std::size_t k = 0; k < system.size(); ++k) {
            const DegreeCountingAuto sigma_i = system[i].twist(), sigma_k = system[k].twist();
            GwaElement sum;
            for (const auto& [a, b, c] : cert.entries[i])
                sum += algebra.mul(algebra.mul(a, system[k](b)), sigma_k.apply(sigma_i.apply_inverse(c)));
            GwaElement residual = sum - delta(i, k);
            if (!residual.is_zero())
                return {false, "orthogonality fails",
                        CertificateResidual{static_cast<int>(i) + 1, static_cast<int>(k) + 1, std::move(residual)}};
        }
    }
    return {true, "", std::nullopt};
}

OrthoCertificate to_two_set(const ThreeSetCertificate& cert, const std::vector<SkewDerivation>& system,
                            const GwaAlgebra& algebra) {
    if (cert.entries.size() != system.size()) throw DomainError("entry count does not match the system");
    OrthoCertificate out;
    out.entries.resize(cert.entries.size());
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        const DegreeCountingAuto sigma_i = system[i].twist();
        auto& pairs = out.entries[i];
        auto push = [&pairs](GwaElement a, GwaElement b) {
            if (!a.is_zero() && !b.is_zero()) pairs.push_back({std::move(a), std::move(b)});
        };
        for (const auto& [a, b, c] : cert.entries[i]) {
            if (is_scalar(c)) {
                push(algebra.mul(a, c), b);
                continue;
            }
            const GwaElement c_pulled = sigma_i.apply_inverse(c);
            push(a, algebra.mul(b, c_pulled));
            push(-algebra.mul(a, b), c_pulled);
        }
    }
    return out;
}

namespace {

/// A value that is zero or a single term p M_e.
struct SingleTerm {
    int degree = 0;
    bool zero = true;
};

std::optional<SingleTerm> single_term(const GwaElement& e) {
    if (e.is_zero()) return SingleTerm{};
    if (!e.is_single_term()) return std::nullopt;
    return SingleTerm{e.terms().begin()->first, false};
}

// Polynomials (w_0, w_1) with w_0 p_0 + w_1 p_1 = 0, gcd-minimal; nullopt if p_0 = p_1 = 0.
std::optional<std::array<Poly, 2>> annihilator(const Poly& p0, const Poly& p1) {
    if (p0.is_zero() && p1.is_zero()) return std::nullopt;
    const Poly g = extended_gcd(p0, p1).g;
    return std::array<Poly, 2>{poly_divrem(p1, g).first, -poly_divrem(p0, g).first};
}

// Bezout coefficients (s_0, s_1) with s_0 p_0 + s_1 p_1 = gcd(p_0, p_1).
std::array<Poly, 2> bezout_pair(const Poly& p0, const Poly& p1) {
    const BezoutWitness w = extended_gcd(p0, p1);
    if (!w.holds()) throw std::logic_error("Bezout identity failed to re-verify");
    return {w.s, w.t};
}

struct Landing {
    Poly left;   // the element landed by the left flank
    Poly right;  // the element landed by the right flank
    std::vector<CertificateTriple> left_parts;   // (lambda_t, b_t, 1)
    std::vector<CertificateTriple> right_parts;  // (1, b_t, c_t)
};

std::variant<std::vector<CertificateTriple>, CertificateFailure> bezout_triples(const Landing& landing, int index) {
    if (landing.left.is_zero() && landing.right.is_zero())
        return CertificateFailure{index, "both landed polynomials vanish", std::nullopt};
    const BezoutWitness w = extended_gcd(landing.left, landing.right);
    if (!w.holds()) throw std::logic_error("Bezout identity failed to re-verify");
    if (!w.coprime()) return CertificateFailure{index, "landed polynomials are not coprime", w.g};
    std::vector<CertificateTriple> out;
    for (const auto& [a, b, c] : landing.left_parts) out.push_back({w.s * a, b, c});
    for (const auto& [a, b, c] : landing.right_parts) out.push_back({w.t * a, b, c});
    std::erase_if(out, [](const CertificateTriple& t) { return t.a.is_zero() || t.c.is_zero(); });
    return out;
}

// b_i alone, flanked by M_{-e} on both sides.
std::variant<Landing, CertificateFailure> land_single(const GwaElement& b, const GwaElement& value, const GwaAlgebra& algebra,
                                                      int index) {
    const auto shape = single_term(value);
    if (!shape) return CertificateFailure{index, "d_i(b_i) is not a single term " + value.str(), std::nullopt};
    if (shape->zero) return CertificateFailure{index, "d_i(b_i) = 0 generates the zero ideal", std::nullopt};
    const GwaElement flank = monomial(-shape->degree);
    Landing out;
    out.left = algebra.mul(flank, value).coeff(0);
    out.right = algebra.mul(value, flank).coeff(0);
    out.left_parts.push_back({flank, b, GwaElement(Poly(1))});
    out.right_parts.push_back({GwaElement(Poly(1)), b, flank});
    return out;
}

// Pair of derivations: combine both b's so that the other derivation cancels.
std::variant<Landing, CertificateFailure> land_combined(const std::vector<GwaElement>& b_list,
                                                        const std::vector<SkewDerivation>& system, std::size_t i,
                                                        const GwaAlgebra& algebra) {
    const int index = static_cast<int>(i) + 1;
    const std::size_t j = 1 - i;
    std::array<GwaElement, 2> own, other;
    std::array<SingleTerm, 2> own_shape, other_shape;
    for (std::size_t t = 0; t < 2; ++t) {
        own[t] = system[i](b_list[t]);
        other[t] = system[j](b_list[t]);
        const auto s_own = single_term(own[t]);
        const auto s_other = single_term(other[t]);
        if (!s_own || !s_other)
            return CertificateFailure{index, "values on b_list are not single terms", std::nullopt};
        own_shape[t] = *s_own;
        other_shape[t] = *s_other;
    }

    // Common degree shift f_t - e_t so the other derivation's parts can cancel.
    std::optional<int> shift;
    for (std::size_t t = 0; t < 2; ++t) {
        if (own_shape[t].zero || other_shape[t].zero) continue;
        const int s = other_shape[t].degree - own_shape[t].degree;
        if (shift && *shift != s) return CertificateFailure{index, "degrees of the two combinations do not align", std::nullopt};
        shift = s;
    }
    std::array<int, 2> flank_deg{0, 0};
    for (std::size_t t = 0; t < 2; ++t) {
        if (!own_shape[t].zero)
            flank_deg[t] = own_shape[t].degree;
        else if (!other_shape[t].zero)
            flank_deg[t] = other_shape[t].degree - shift.value_or(0);
    }

    const DegreeCountingAuto sigma_i = system[i].twist(), sigma_j = system[j].twist();
    Landing out;

    // Left multipliers rho_t M_{-e_t}.
    std::array<Poly, 2> own_left, other_left;
    for (std::size_t t = 0; t < 2; ++t) {
        const GwaElement flank = monomial(-flank_deg[t]);
        own_left[t] = algebra.mul(flank, own[t]).coeff(0);
        const GwaElement landed_other = algebra.mul(flank, other[t]);
        other_left[t] = landed_other.is_zero() ? Poly() : landed_other.terms().begin()->second;
    }
    std::array<Poly, 2> rho;
    if (auto ann = annihilator(other_left[0], other_left[1]))
        rho = *ann;
    else
        rho = bezout_pair(own_left[0], own_left[1]);
    for (std::size_t t = 0; t < 2; ++t) {
        if (rho[t].is_zero()) continue;
        out.left += rho[t] * own_left[t];
        out.left_parts.push_back({monomial(-flank_deg[t], rho[t]), b_list[t], GwaElement(Poly(1))});
    }

    // Right multipliers r_t M_{-e_t}; the other derivation sees sigma_j sigma_i^{-1} of them.
    std::array<Poly, 2> own_right, other_right;
    for (std::size_t t = 0; t < 2; ++t) {
        const GwaElement flank = monomial(-flank_deg[t]);
        own_right[t] = algebra.mul(own[t], flank).coeff(0);
        const GwaElement landed_other = algebra.mul(other[t], sigma_j.apply(sigma_i.apply_inverse(flank)));
        other_right[t] = landed_other.is_zero() ? Poly() : landed_other.terms().begin()->second;
    }
    // other[t] r_t = phi^{f_t}(r_t) other[t], own[t] r_t = phi^{e_t}(r_t) own[t]
    std::array<Poly, 2> right_mult;
    if (auto ann = annihilator(other_right[0], other_right[1])) {
        for (std::size_t t = 0; t < 2; ++t)
            right_mult[t] = algebra.shift(other_shape[t].zero ? 0 : -other_shape[t].degree, (*ann)[t]);
    } else {
        const auto s = bezout_pair(own_right[0], own_right[1]);
        for (std::size_t t = 0; t < 2; ++t) right_mult[t] = algebra.shift(-flank_deg[t], s[t]);
    }
    for (std::size_t t = 0; t < 2; ++t) {
        if (right_mult[t].is_zero()) continue;
        const GwaElement c = monomial(-flank_deg[t], right_mult[t]);
        const GwaElement landed = algebra.mul(own[t], c);
        if (!landed.in_base_ring()) throw std::logic_error("right flank did not land in the base ring");
        out.right += landed.coeff(0);
        out.right_parts.push_back({GwaElement(Poly(1)), b_list[t], c});
    }
    return out;
}

bool lemma_hypothesis(const std::vector<GwaElement>& b_list, const std::vector<SkewDerivation>& system, std::size_t i) {
    for (std::size_t k = 0; k < system.size(); ++k)
        if (k != i && !system[k](b_list[i]).is_zero()) return false;
    return true;
}

}  // namespace

CertificateResult certificate_from_ideal(const std::vector<GwaElement>& b_list, const std::vector<SkewDerivation>& system,
                                         const GwaAlgebra& algebra) {
    require_same_algebra(system, algebra);
    if (b_list.size() != system.size())
        return CertificateFailure{0, "b_list must have one element per derivation", std::nullopt};

    ThreeSetCertificate three;
    for (std::size_t i = 0; i < system.size(); ++i) {
        const int index = static_cast<int>(i) + 1;
        std::variant<Landing, CertificateFailure> landing;
        if (lemma_hypothesis(b_list, system, i)) {
            landing = land_single(b_list[i], system[i](b_list[i]), algebra, index);
        } else if (system.size() == 2) {
            landing = land_combined(b_list, system, i, algebra);
        } else {
            return CertificateFailure{index, "d_k(b_i) != 0 for some k != i", std::nullopt};
        }
        if (auto* failure = std::get_if<CertificateFailure>(&landing)) return *failure;
        auto triples = bezout_triples(std::get<Landing>(landing), index);
        if (auto* failure = std::get_if<CertificateFailure>(&triples)) return *failure;
        three.entries.push_back(std::get<std::vector<CertificateTriple>>(std::move(triples)));
    }

    const CertificateCheck three_check = verify_three_set(three, system, algebra);
    if (!three_check.ok) throw std::logic_error("three-set certificate failed to verify");
    OrthoCertificate cert = to_two_set(three, system, algebra);
    const CertificateCheck check = verify_certificate(cert, system, algebra);
    if (!check.ok) throw std::logic_error("constructed certificate failed to verify");
    return cert;
}

bool PairHypotheses::all_pass() const {
    return !degenerate && std::all_of(checks.begin(), checks.end(), [](const HypothesisCheck& c) { return c.ok; });
}

namespace {

struct CoprimeOutcome {
    bool ok;
    Poly gcd;
};

CoprimeOutcome coprime(const Poly& p, const Poly& r) {
    if (p.is_zero() && r.is_zero()) return {false, Poly()};
    const BezoutWitness w = extended_gcd(p, r);
    if (!w.holds()) throw std::logic_error("Bezout identity failed to re-verify");
    return {w.coprime(), w.g};
}

HypothesisCheck coprime_with_shifts(const std::string& name, const Poly& value, const GwaAlgebra& algebra,
                                    const std::vector<int>& shifts, const Poly& extra, const std::string& extra_name) {
    for (int j : shifts) {
        const auto outcome = coprime(value, algebra.shift(j, algebra.a()));
        if (!outcome.ok)
            return {name, false, "not coprime with phi^" + std::to_string(j) + "(a), gcd " + outcome.gcd.str()};
    }
    const auto outcome = coprime(value, extra);
    if (!outcome.ok) return {name, false, "not coprime with " + extra_name + ", gcd " + outcome.gcd.str()};
    return {name, true, ""};
}

std::vector<int> twin_range(int m) {
    std::vector<int> out;
    for (int j = -m - 1; j <= 0; ++j) out.push_back(j);
    for (int j = m + 1; j <= 2 * m; ++j) out.push_back(j);
    return out;
}

}  // namespace

ElementaryPair prop42_pair(int m, int n, const TwistedPolyDerivation& alpha, const TwistedPolyDerivation& alpha_bar,
                       const GwaAlgebra& algebra, const Rat& mu, const Rat& mu_bar) {
    if (m < 0 || n < 0) throw DomainError("prop42_pair needs m, n >= 0");
    if (alpha.twist_exp != m + 1) throw DomainError("alpha must have twist exponent m + 1");
    if (alpha_bar.twist_exp != -n - 1) throw DomainError("bar-alpha must have twist exponent -n - 1");

    SkewDerivation d = elementary(m + 1, alpha, Poly(), algebra, mu);
    SkewDerivation d_bar = elementary(-n - 1, alpha_bar, Poly(), algebra, mu_bar);

    const AffineAuto& phi = algebra.phi();
    const Poly& a = algebra.a();
    PairHypotheses report;

    const int big_n = std::max({m, n, 1});
    HypothesisCheck global{"a coprime with phi^i(a), i = 1.." + std::to_string(2 * big_n - 1), true, ""};
    for (int i = 1; i <= 2 * big_n - 1; ++i) {
        const auto outcome = coprime(a, algebra.shift(i, a));
        if (!outcome.ok) {
            global.ok = false;
            global.detail = "fails at i = " + std::to_string(i) + ", gcd " + outcome.gcd.str();
            break;
        }
    }
    report.checks.push_back(global);

    const Poly alpha_a = alpha.apply(phi, a);
    const Poly alpha_bar_a = alpha_bar.apply(phi, a);
    report.degenerate = alpha_a.is_zero() || alpha_bar_a.is_zero();

    report.checks.push_back({"(a)(i) alpha(a) central", true, "base ring is commutative"});
    report.checks.push_back(coprime_with_shifts("(a)(ii) alpha(a) coprimality", alpha_a, algebra, twin_range(m),
                                                algebra.shift(-m, alpha_a), "phi^-m(alpha(a))"));
    const Poly res = alpha.commutation_residual(phi, mu);
    report.checks.push_back({"(a)(iii) alpha o phi = mu phi o alpha", res.is_zero(), res.is_zero() ? "" : res.str()});

    report.checks.push_back({"(b)(i) bar-alpha(a) central", true, "base ring is commutative"});
    report.checks.push_back(coprime_with_shifts("(b)(ii) bar-alpha(a) coprimality", algebra.shift(n + 1, alpha_bar_a),
                                                algebra, twin_range(n), algebra.shift(1, alpha_bar_a),
                                                "phi(bar-alpha(a))"));
    const Poly res_bar = alpha_bar.commutation_residual(phi, mu_bar);
    report.checks.push_back(
        {"(b)(iii) bar-alpha o phi = mu_bar phi o bar-alpha", res_bar.is_zero(), res_bar.is_zero() ? "" : res_bar.str()});

    return {std::move(d), std::move(d_bar), std::move(report)};
}

Rat qkl(int k, int l, const Rat& q) {
    if (k < 0 || l < 0) throw DomainError("q_kl needs k, l >= 0");
    const Rat kl = q_int(k, q) * q_int(l, q);
    const Rat den = Rat(1) - kl;
    if (den.is_zero()) throw DomainError("q_kl: 1 - [k][l] vanishes");
    const Rat value = (Rat(1) - kl * q.pow(1 - k)) / den;
    if (k == l) {
        const Rat reduced_den = q_int(k, q) + Rat(1);
        if (!reduced_den.is_zero() && value != q.pow(-k) * q_int(k + 1, q) / reduced_den)
            throw std::logic_error("q_kk disagrees with its reduced form");
    }
    return value;
}

bool KlConditionReport::satisfied() const {
    return std::all_of(orderings.begin(), orderings.end(), [](const PairConditionReport& r) { return r.satisfied(); });
}

KlConditionReport kl_conditions(int m, int n, const Rat& q) {
    if (m <= 1 || n <= 1) throw DomainError("kl_conditions needs m, n > 1");
    if (q.is_zero() || is_root_of_unity(q)) throw DomainError("q must be nonzero and not a root of unity");
    auto try_qkl = [&q](int k, int l) -> std::optional<Rat> {
        try {
            return qkl(k, l, q);
        } catch (const DomainError&) {
            return std::nullopt;
        }
    };
    KlConditionReport out;
    const std::pair<int, int> orders[] = {{m, n}, {n, m}};
    for (const auto& [k, l] : orders) {
        PairConditionReport r;
        r.k = k;
        r.l = l;
        r.q_kl = try_qkl(k, l);
        r.q_lk = try_qkl(l, k);
        if (r.q_kl) {
            std::vector<int> exponents;
            for (int i = -2 * k + 3; i <= -k + 1; ++i) exponents.push_back(i);
            for (int i = l; i <= 2 * l - 3; ++i) exponents.push_back(i);
            exponents.push_back(2 * l - 1);
            for (int i : exponents)
                if (*r.q_kl == q.pow(i)) r.violated_exponents.push_back(i);
        }
        r.condition2_ok = r.q_kl && r.q_lk && *r.q_kl != q.pow(2 * l - 2) * *r.q_lk;
        out.orderings.push_back(std::move(r));
    }
    return out;
}

std::pair<SkewDerivation, SkewDerivation> disc_pair(int m, int n, const Rat& c, const Rat& c_bar, const Rat& q) {
    if (m <= 1 || n <= 1) throw DomainError("disc_pair needs m, n > 1");
    if (c.is_zero() || c_bar.is_zero()) throw DomainError("disc_pair needs nonzero c and c_bar");
    const GwaAlgebra disc = GwaAlgebra::disc(q);
    const Poly one_minus_h({Rat(1), Rat(-1)});

    DerivationValues v{q, {}, GwaElement::term(n, Poly(c)), GwaElement::term(n - 2, -q * q_int(n, q) * c * one_minus_h)};
    v.on_h = derive_h_from_generators(disc, q, v.on_x, v.on_y);

    const Poly shifted({Rat(1), -q.pow(2 - m)});
    DerivationValues w{q, {}, GwaElement::term(-(m - 2), -q.inverse() * q_int(m, q) * c_bar * shifted),
                       GwaElement::term(-m, Poly(c_bar))};
    w.on_h = derive_h_from_generators(disc, q, w.on_x, w.on_y);

    return {verify(v, disc), verify(w, disc)};
}

}  // namespace gwa
