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


#include "gwaskew/derivation.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

#include "gwaskew/linalg.hpp"

namespace gwa {

GwaElement DegreeCountingAuto::apply(const GwaElement& e) const {
    GwaElement out;
    for (const auto& [deg, coeff] : e.terms()) out.add_term(deg, coeff * mu.pow(-deg));
    return out;
}

GwaElement DegreeCountingAuto::apply_inverse(const GwaElement& e) const {
    GwaElement out;
    for (const auto& [deg, coeff] : e.terms()) out.add_term(deg, coeff * mu.pow(deg));
    return out;
}

DerivationValues& DerivationValues::operator+=(const DerivationValues& other) {
    if (mu != other.mu) throw DomainError("cannot add derivations with different twists");
    on_h += other.on_h;
    on_x += other.on_x;
    on_y += other.on_y;
    return *this;
}

namespace {

/// Leibniz extension with cached values on powers of the generators.
class LeibnizEvaluator {
  public:
    LeibnizEvaluator(const GwaAlgebra& algebra, const DerivationValues& values)
        : algebra_(algebra), values_(values), mu_inv_(values.mu.inverse()) {
        on_h_pows_.emplace_back();
        on_x_pows_.emplace_back();
        on_y_pows_.emplace_back();
    }

    GwaElement on_poly(const Poly& p) {
        GwaElement out;
        for (int j = 1; j <= p.degree(); ++j) {
            if (p.coeff(j).is_zero()) continue;
            out += p.coeff(j) * on_h_power(j);
        }
        return out;
    }

    GwaElement on_monomial(int k) {
        if (k == 0) return {};
        return k > 0 ? on_x_power(k) : on_y_power(-k);
    }

    GwaElement operator()(const GwaElement& e) {
        GwaElement out;
        for (const auto& [deg, coeff] : e.terms()) {
            // d(r M_k) = d(r) sigma(M_k) + r d(M_k), sigma(M_k) = mu^{-k} M_k
            GwaElement d_r = on_poly(coeff);
            if (!d_r.is_zero()) out += values_.mu.pow(-deg) * algebra_.mul(d_r, GwaElement::term(deg, Poly(1)));
            if (deg != 0) out += coeff * on_monomial(deg);
        }
        return out;
    }

  private:
    const GwaElement& on_h_power(int j) {
        while (static_cast<int>(on_h_pows_.size()) <= j) {
            const int i = static_cast<int>(on_h_pows_.size()) - 1;
            // d(h^{i+1}) = d(h^i) h + h^i d(h)
            GwaElement next = algebra_.mul_right(on_h_pows_.back(), Poly::h()) + Poly::monomial(Rat(1), i) * values_.on_h;
            on_h_pows_.push_back(std::move(next));
        }
        return on_h_pows_[static_cast<std::size_t>(j)];
    }

    const GwaElement& on_x_power(int k) {
        while (static_cast<int>(on_x_pows_.size()) <= k) {
            const int i = static_cast<int>(on_x_pows_.size()) - 1;
            GwaElement next = mu_inv_ * algebra_.mul(on_x_pows_.back(), GwaElement::x()) +
                              algebra_.mul(GwaElement::x(i), values_.on_x);
            on_x_pows_.push_back(std::move(next));
        }
        return on_x_pows_[static_cast<std::size_t>(k)];
    }

    const GwaElement& on_y_power(int k) {
        while (static_cast<int>(on_y_pows_.size()) <= k) {
            const int i = static_cast<int>(on_y_pows_.size()) - 1;
            GwaElement next = values_.mu * algebra_.mul(on_y_pows_.back(), GwaElement::y()) +
                              algebra_.mul(GwaElement::y(i), values_.on_y);
            on_y_pows_.push_back(std::move(next));
        }
        return on_y_pows_[static_cast<std::size_t>(k)];
    }

    const GwaAlgebra& algebra_;
    const DerivationValues& values_;
    Rat mu_inv_;
    std::vector<GwaElement> on_h_pows_;
    std::vector<GwaElement> on_x_pows_;
    std::vector<GwaElement> on_y_pows_;
};

}  // namespace

GwaElement apply_leibniz(const GwaAlgebra& algebra, const DerivationValues& values, const GwaElement& e) {
    if (values.mu.is_zero()) throw DomainError("coarseness mu must be nonzero");
    LeibnizEvaluator eval(algebra, values);
    return eval(e);
}

GwaElement SkewDerivation::operator()(const GwaElement& e) const { return apply_leibniz(algebra_, values_, e); }

class RelationChecker {
  public:
    static RelationCheck run(const DerivationValues& values, const GwaAlgebra& algebra) {
        if (values.mu.is_zero()) return RelationViolation{"mu != 0", {}};
        LeibnizEvaluator d(algebra, values);
        const DegreeCountingAuto sigma{values.mu};
        const GwaElement x = GwaElement::x(), y = GwaElement::y(), h = GwaElement(Poly::h());
        const auto& dx = values.on_x;
        const auto& dy = values.on_y;
        const auto& dh = values.on_h;

        // d(uv) for generators u, v via the twisted Leibniz rule
        auto d_pair = [&](const GwaElement& du, const GwaElement& v, const GwaElement& u, const GwaElement& dv) {
            return algebra.mul(du, sigma.apply(v)) + algebra.mul(u, dv);
        };

        const Poly phi_h = algebra.shift(1, Poly::h());
        const Poly phi_inv_h = algebra.shift(-1, Poly::h());

        const std::pair<const char*, GwaElement> residuals[] = {
            {"xy - phi(a)", d_pair(dx, y, x, dy) - d.on_poly(algebra.shift(1, algebra.a()))},
            {"yx - a", d_pair(dy, x, y, dx) - d.on_poly(algebra.a())},
            {"xh - phi(h)x", d_pair(dx, h, x, dh) - d_pair(d.on_poly(phi_h), x, GwaElement(phi_h), dx)},
            {"yh - phi^-1(h)y", d_pair(dy, h, y, dh) - d_pair(d.on_poly(phi_inv_h), y, GwaElement(phi_inv_h), dy)},
        };
        for (const auto& [name, residual] : residuals)
            if (!residual.is_zero()) return RelationViolation{name, residual};
        return SkewDerivation(algebra, values);
    }
};

RelationCheck check_relations(const DerivationValues& values, const GwaAlgebra& algebra) {
    return RelationChecker::run(values, algebra);
}

SkewDerivation verify(const DerivationValues& values, const GwaAlgebra& algebra) {
    auto result = check_relations(values, algebra);
    if (auto* v = std::get_if<RelationViolation>(&result))
        throw DomainError("relation " + v->relation + " violated, residual " + v->residual.str());
    return std::get<SkewDerivation>(std::move(result));
}

GwaElement evaluate(const SkewDerivation& d, const GwaAlgebra& algebra, const GwaElement& e) {
    if (!(d.algebra() == algebra)) throw DomainError("derivation was verified against a different algebra");
    return d(e);
}

SkewDerivation zero_derivation(const GwaAlgebra& algebra, const Rat& mu) { return verify(DerivationValues{mu, {}, {}, {}}, algebra); }

SkewDerivation operator+(const SkewDerivation& lhs, const SkewDerivation& rhs) {
    if (!(lhs.algebra() == rhs.algebra())) throw DomainError("cannot add derivations of different algebras");
    return verify(lhs.values() + rhs.values(), lhs.algebra());
}

GwaElement twisted_commutator(const GwaAlgebra& algebra, const Rat& mu, const GwaElement& b, const GwaElement& g) {
    const DegreeCountingAuto sigma{mu};
    return algebra.mul(b, sigma.apply(g)) - algebra.mul(g, b);
}

SkewDerivation inner_derivation(const GwaAlgebra& algebra, const Rat& mu, const GwaElement& b) {
    DerivationValues v{mu, twisted_commutator(algebra, mu, b, GwaElement(Poly::h())),
                       twisted_commutator(algebra, mu, b, GwaElement::x()),
                       twisted_commutator(algebra, mu, b, GwaElement::y())};
    return verify(v, algebra);
}

Poly TwistedPolyDerivation::apply(const AffineAuto& phi, const Poly& p) const {
    // alpha(h^j) = sum_{t<j} h^t alpha(h) phi^i(h)^{j-1-t}
    if (on_h.is_zero() || p.degree() < 1) return {};
    const Poly twisted_h = phi.image_of_h(twist_exp);
    Poly out;
    Poly alpha_pow;  // alpha(h^j)
    Poly h_pow(1);   // h^j
    for (int j = 1; j <= p.degree(); ++j) {
        // alpha(h^j) = alpha(h^{j-1}) phi^i(h) + h^{j-1} alpha(h)
        alpha_pow = alpha_pow * twisted_h + h_pow * on_h;
        h_pow *= Poly::h();
        if (!p.coeff(j).is_zero()) out += p.coeff(j) * alpha_pow;
    }
    return out;
}

Poly TwistedPolyDerivation::commutation_residual(const AffineAuto& phi, const Rat& mu) const {
    return apply(phi, phi.image_of_h(1)) - mu * phi.apply(1, on_h);
}

TheoremData& TheoremData::with_alpha(int weight, Poly on_h) {
    alphas[weight] = TwistedPolyDerivation{weight, std::move(on_h)};
    return *this;
}

TheoremData TheoremData::normalized() const {
    TheoremData out = *this;
    std::erase_if(out.alphas, [](const auto& kv) { return kv.second.on_h.is_zero(); });
    return out;
}

TheoremData& TheoremData::operator+=(const TheoremData& other) {
    if (mu != other.mu) throw DomainError("cannot add constructor data with different mu");
    for (const auto& [w, alpha] : other.alphas) {
        auto it = alphas.find(w);
        if (it == alphas.end())
            alphas.emplace(w, alpha);
        else
            it->second.on_h += alpha.on_h;
    }
    b += other.b;
    c += other.c;
    return *this;
}

void validate(const TheoremData& data, const GwaAlgebra& algebra) {
    if (data.mu.is_zero()) throw DomainError("mu must be nonzero");
    for (const auto& [w, alpha] : data.alphas) {
        if (alpha.twist_exp != w)
            throw DomainError("alpha at weight " + std::to_string(w) + " has twist exponent " +
                              std::to_string(alpha.twist_exp));
        const Poly residual = alpha.commutation_residual(algebra.phi(), data.mu);
        if (!residual.is_zero())
            throw DomainError("condition alpha o phi = mu phi o alpha fails at weight " + std::to_string(w) +
                              ", residual " + residual.str());
    }
    if (auto it = data.alphas.find(0); it != data.alphas.end()) {
        const Poly alpha0_a = it->second.apply(algebra.phi(), algebra.a());
        if (algebra.a().is_zero()) {
            if (!it->second.on_h.is_zero()) throw DomainError("a = 0 cannot divide alpha_0(a)");
        } else if (!divides(algebra.a(), alpha0_a)) {
            throw DomainError("a does not divide alpha_0(a) = " + alpha0_a.str());
        }
    }
}

SkewDerivation from_theorem_data(const TheoremData& data, const GwaAlgebra& algebra) {
    validate(data, algebra);
    const AffineAuto& phi = algebra.phi();
    const Poly& a = algebra.a();
    const Rat& mu = data.mu;
    const Rat mu_inv = mu.inverse();

    DerivationValues v{mu, {}, {}, {}};
    Poly y_coeff = data.b - phi.apply(-1, data.c + mu_inv * data.b);
    for (const auto& [w, alpha] : data.alphas) {
        if (alpha.on_h.is_zero()) continue;
        v.on_h.add_term(w, alpha.on_h);
        const Poly alpha_a = alpha.apply(phi, a);
        if (w > 0) {
            v.on_y.add_term(w - 1, mu * alpha_a);
        } else if (w < 0) {
            v.on_x.add_term(w + 1, phi.apply(1, alpha_a));
        } else if (!a.is_zero()) {
            y_coeff += poly_divrem(alpha_a, a).first;
        }
    }
    v.on_x.add_term(1, data.c - phi.apply(1, data.b) + mu_inv * data.b);
    v.on_y.add_term(-1, mu * y_coeff);

    auto result = check_relations(v, algebra);
    if (auto* viol = std::get_if<RelationViolation>(&result))
        throw std::logic_error("constructor output violates " + viol->relation + ": " + viol->residual.str());
    return std::get<SkewDerivation>(std::move(result));
}

SkewDerivation elementary(int weight, const TwistedPolyDerivation& alpha, const Poly& extra, const GwaAlgebra& algebra,
                          const Rat& mu) {
    if (alpha.twist_exp != weight) throw DomainError("elementary: alpha twist does not match the weight");
    if (weight != 0 && !extra.is_zero()) throw DomainError("elementary: extra term only allowed at weight 0");
    TheoremData data;
    data.mu = mu;
    data.alphas.emplace(weight, alpha);
    data.c = extra;
    return from_theorem_data(data, algebra);
}

SkewDerivation elementary_commutator(const Poly& b, const GwaAlgebra& algebra, const Rat& mu) {
    TheoremData data;
    data.mu = mu;
    data.b = b;
    return from_theorem_data(data, algebra);
}

namespace {

// Outcome of matching target = Q * base for a scalar Q.
struct ScalarRatio {
    bool consistent = true;
    std::optional<Rat> q;  // unset when base and target are both zero
};

ScalarRatio scalar_ratio(const GwaElement& target, const GwaElement& base) {
    if (base.is_zero()) return {target.is_zero(), std::nullopt};
    const auto& [deg, coeff] = *base.terms().begin();
    const Rat q = target.coeff(deg).leading() / coeff.leading();
    if (!(target == q * base)) return {false, std::nullopt};
    return {true, q};
}

}  // namespace

QCheckResult q_check(const SkewDerivation& d) {
    const DegreeCountingAuto sigma = d.twist();
    const Rat& mu = d.mu();
    const std::pair<GwaElement, GwaElement> pairs[] = {
        {sigma.apply(d.on_h()), d.on_h()},
        {mu * sigma.apply(d.on_x()), d.on_x()},
        {mu.inverse() * sigma.apply(d.on_y()), d.on_y()},
    };
    std::optional<Rat> q;
    for (const auto& [conjugated, base] : pairs) {
        const ScalarRatio r = scalar_ratio(conjugated, base);
        if (!r.consistent) return {false, std::nullopt};
        if (!r.q) continue;
        if (q && *q != *r.q) return {false, std::nullopt};
        q = r.q;
    }
    return {true, q.value_or(Rat(1))};
}

SkewDerivation mirror_derivation(const SkewDerivation& d) {
    DerivationValues v{d.mu().inverse(), mirror_element(d.on_h()), mirror_element(d.on_y()), mirror_element(d.on_x())};
    return verify(v, xy_mirror(d.algebra()));
}

namespace {

std::optional<NotOfThisForm> positive_shape(const SkewDerivation& d) {
    if (!d.on_x().is_zero()) return NotOfThisForm{"d(x) != 0", d.on_x()};
    for (const auto& [deg, coeff] : d.on_h().terms())
        if (deg < 0) return NotOfThisForm{"d(h) has a negative-degree term", GwaElement::term(deg, coeff)};
    return std::nullopt;
}

Classification classify_positive_case(const SkewDerivation& d) {
    if (auto bad = positive_shape(d)) return *bad;
    TheoremData data;
    data.mu = d.mu();
    for (const auto& [deg, coeff] : d.on_h().terms()) data.with_alpha(deg, coeff);
    try {
        const SkewDerivation rebuilt = from_theorem_data(data, d.algebra());
        if (!(rebuilt.values() == d.values()))
            return NotOfThisForm{"d(y) does not match the reconstructed value", d.on_y() - rebuilt.on_y()};
    } catch (const DomainError& e) {
        return NotOfThisForm{e.what(), d.on_h()};
    }
    return data;
}

}  // namespace

Classification classify_positive(const SkewDerivation& d) {
    auto direct = classify_positive_case(d);
    if (std::holds_alternative<TheoremData>(direct)) return direct;
    if (!d.on_y().is_zero()) return direct;
    for (const auto& [deg, coeff] : d.on_h().terms())
        if (deg > 0) return direct;

    // Mirrored case: d(R) in the nonpositive part and d(y) = 0.
    const SkewDerivation mirrored = mirror_derivation(d);
    auto mirrored_result = classify_positive_case(mirrored);
    if (auto* bad = std::get_if<NotOfThisForm>(&mirrored_result)) return NotOfThisForm{bad->reason, mirror_element(bad->offending)};
    const TheoremData& image = std::get<TheoremData>(mirrored_result);

    const GwaAlgebra& algebra = d.algebra();
    TheoremData data;
    data.mu = d.mu();
    for (const auto& [w, alpha] : image.alphas) data.with_alpha(-w, alpha.on_h);
    if (auto it = data.alphas.find(0); it != data.alphas.end()) {
        // d(y) = 0 forces c = phi(alpha_0(a)/a)
        const Poly quotient = poly_divrem(it->second.apply(algebra.phi(), algebra.a()), algebra.a()).first;
        data.c = algebra.shift(1, quotient);
    }
    try {
        const SkewDerivation rebuilt = from_theorem_data(data, algebra);
        if (!(rebuilt.values() == d.values()))
            return NotOfThisForm{"d(x) does not match the reconstructed value", d.on_x() - rebuilt.on_x()};
    } catch (const DomainError& e) {
        return NotOfThisForm{e.what(), d.on_h()};
    }
    return data;
}

std::optional<GwaElement> inner_witness(const SkewDerivation& d, int degree_bound, int poly_bound) {
    if (degree_bound < 0 || poly_bound < 0) throw DomainError("inner_witness: bounds must be nonnegative");
    const GwaAlgebra& algebra = d.algebra();
    const GwaElement generators[] = {GwaElement(Poly::h()), GwaElement::x(), GwaElement::y()};
    const GwaElement* targets[] = {&d.on_h(), &d.on_x(), &d.on_y()};

    struct Unknown {
        int degree;
        int power;
    };
    std::vector<Unknown> unknowns;
    for (int k = -degree_bound; k <= degree_bound; ++k)
        for (int j = 0; j <= poly_bound; ++j) unknowns.push_back({k, j});

    // Column images of each basis witness, keyed by (generator, degree, power of h).
    using Row = std::tuple<int, int, int>;
    std::map<Row, std::size_t> rows;
    std::vector<std::vector<std::pair<Row, Rat>>> columns(unknowns.size());
    auto row_of = [&rows](const Row& r) {
        auto [it, inserted] = rows.try_emplace(r, rows.size());
        return it->second;
    };
    for (std::size_t col = 0; col < unknowns.size(); ++col) {
        const GwaElement basis = GwaElement::term(unknowns[col].degree, Poly::monomial(Rat(1), unknowns[col].power));
        for (int g = 0; g < 3; ++g) {
            const GwaElement image = twisted_commutator(algebra, d.mu(), basis, generators[g]);
            for (const auto& [deg, coeff] : image.terms())
                for (int j = 0; j <= coeff.degree(); ++j)
                    if (!coeff.coeff(j).is_zero()) columns[col].push_back({Row{g, deg, j}, coeff.coeff(j)});
        }
    }
    std::vector<std::pair<Row, Rat>> rhs_entries;
    for (int g = 0; g < 3; ++g)
        for (const auto& [deg, coeff] : targets[g]->terms())
            for (int j = 0; j <= coeff.degree(); ++j)
                if (!coeff.coeff(j).is_zero()) rhs_entries.push_back({Row{g, deg, j}, coeff.coeff(j)});
    for (const auto& col : columns)
        for (const auto& [r, v] : col) row_of(r);
    for (const auto& [r, v] : rhs_entries) row_of(r);

    RatMatrix m(rows.size(), unknowns.size());
    std::vector<Rat> rhs(rows.size());
    for (std::size_t col = 0; col < columns.size(); ++col)
        for (const auto& [r, v] : columns[col]) m.at(rows.at(r), col) += v;
    for (const auto& [r, v] : rhs_entries) rhs[rows.at(r)] += v;

    const auto solution = solve(m, rhs);
    if (!solution) return std::nullopt;
    GwaElement b;
    for (std::size_t col = 0; col < unknowns.size(); ++col)
        b.add_term(unknowns[col].degree, Poly::monomial((*solution)[col], unknowns[col].power));
    for (int g = 0; g < 3; ++g)
        if (!(twisted_commutator(algebra, d.mu(), b, generators[g]) == *targets[g]))
            throw std::logic_error("inner_witness: solver returned a non-witness");
    return b;
}

std::optional<int> degree_profile(const SkewDerivation& d, const Grading& grading) {
    grading.validate(d.algebra());
    const std::pair<const GwaElement*, int> pairs[] = {
        {&d.on_h(), grading.w},
        {&d.on_x(), grading.k},
        {&d.on_y(), grading.d - grading.k},
    };
    std::optional<int> l;
    for (const auto& [value, generator_degree] : pairs) {
        const GradedDegree deg = graded_degree(grading, *value);
        if (deg.kind == GradedDegree::Kind::Zero) continue;
        if (deg.kind == GradedDegree::Kind::Inhomogeneous) return std::nullopt;
        const int shift = deg.value - generator_degree;
        if (l && *l != shift) return std::nullopt;
        l = shift;
    }
    return l.value_or(0);
}

SkewDerivation finite_order_family(const FiniteOrderData& data, const GwaAlgebra& algebra) {
    const AffineAuto& phi = algebra.phi();
    if (data.order < 1) throw DomainError("finite order D must be positive");
    if (!phi.power(data.order).is_identity())
        throw DomainError("phi^" + std::to_string(data.order) + " is not the identity");
    if (data.mu.is_zero()) throw DomainError("mu must be nonzero");
    auto check_alpha = [&](const TwistedPolyDerivation& alpha, const std::string& where) {
        if (alpha.twist_exp != 0) throw DomainError(where + ": alpha must be an untwisted derivation");
        const Poly residual = alpha.commutation_residual(phi, data.mu);
        if (!residual.is_zero())
            throw DomainError(where + ": alpha o phi = mu phi o alpha fails, residual " + residual.str());
    };

    const Poly& a = algebra.a();
    const int order = data.order;
    const Rat& mu = data.mu;
    DerivationValues v{mu, {}, {}, {}};
    for (std::size_t i = 0; i < data.positive.size(); ++i) {
        const int m = static_cast<int>(i) + 1;
        const auto& [alpha, b_m] = data.positive[i];
        check_alpha(alpha, "alpha_" + std::to_string(m));
        v.on_h.add_term(m * order, alpha.on_h);
        v.on_x.add_term(m * order + 1, b_m);
        v.on_y.add_term(m * order - 1, mu * (alpha.apply(phi, a) - phi.apply(-1, b_m) * a));
    }
    for (std::size_t i = 0; i < data.negative.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        const auto& [alpha, c_n] = data.negative[i];
        check_alpha(alpha, "alpha_-" + std::to_string(n));
        v.on_h.add_term(-n * order, alpha.on_h);
        v.on_x.add_term(-(n * order - 1), mu.inverse() * (alpha.apply(phi, phi.apply(1, a)) - phi.apply(1, c_n) * a));
        v.on_y.add_term(-(n * order + 1), c_n);
    }
    auto result = check_relations(v, algebra);
    if (auto* viol = std::get_if<RelationViolation>(&result))
        throw std::logic_error("finite-order output violates " + viol->relation + ": " + viol->residual.str());
    return std::get<SkewDerivation>(std::move(result));
}

GwaElement derive_h_from_generators(const GwaAlgebra& algebra, const Rat& mu, const GwaElement& on_x,
                                    const GwaElement& on_y) {
    const Poly& a = algebra.a();
    if (a.degree() != 1) throw DomainError("d(h) can only be recovered from d(x), d(y) when deg a = 1");
    // a = a0 + a1 h and yx = a, so a1 d(h) = d(y) sigma(x) + y d(x)
    const DegreeCountingAuto sigma{mu};
    GwaElement d_yx = algebra.mul(on_y, sigma.apply(GwaElement::x())) + algebra.mul(GwaElement::y(), on_x);
    return a.coeff(1).inverse() * d_yx;
}

}  // namespace gwa
