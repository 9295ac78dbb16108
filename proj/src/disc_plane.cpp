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


#include "gwaskew/disc_plane.hpp"

#include <algorithm>

#include "gwaskew/ortho.hpp"

namespace gwa {

namespace {

Rat require_preset_q(const GwaAlgebra& algebra) {
    const auto q = algebra.q();
    if (!q) throw DomainError("a disc or plane algebra is required");
    return *q;
}

void trim(std::vector<Rat>& coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

}  // namespace

SkewDerivation build_prop51(const Prop51Data& data, const GwaAlgebra& algebra) {
    const Rat q = require_preset_q(algebra);
    if (const auto* z = std::get_if<ZeroOnH>(&data)) {
        if (z->mu.is_zero()) throw DomainError("mu must be nonzero");
        DerivationValues v{z->mu, {}, GwaElement::term(1, z->f), GwaElement::term(-1, -z->mu * z->f.compose_affine(q.inverse(), Rat(0)))};
        return verify(v, algebra);
    }
    const auto& p = std::get<MuPower>(data);
    if (p.d < 0) throw DomainError("d must be nonnegative");
    const Rat mu = q.pow(1 - p.d);
    const Poly hd = Poly::monomial(Rat(1), p.d);
    DerivationValues v{mu, {}, {}, {}};
    for (std::size_t k = 0; k < p.b_poly.size(); ++k) v.on_x.add_term(-static_cast<int>(k), p.b_poly[k] * hd);
    for (std::size_t k = 0; k < p.a_poly.size(); ++k) v.on_y.add_term(static_cast<int>(k), p.a_poly[k] * hd);
    v.on_h = derive_h_from_generators(algebra, mu, v.on_x, v.on_y);
    return verify(v, algebra);
}

SigmaQData SigmaQData::normalized() const {
    SigmaQData out;
    out.f = f;
    out.g = g;
    trim(out.f);
    trim(out.g);
    for (const auto& [key, value] : alpha)
        if (!value.is_zero()) out.alpha.emplace(key, value);
    out.M = std::max(static_cast<int>(out.g.size()) - 1, 0);
    out.N = std::max(static_cast<int>(out.f.size()) - 1, 0);
    for (const auto& [key, value] : out.alpha) {
        out.M = std::max(out.M, key.first + 1);
        out.N = std::max(out.N, key.second);
    }
    return out;
}

void SigmaQData::validate() const {
    if (M < 0 || N < 0) throw DomainError("M and N must be nonnegative");
    for (const auto& [key, value] : alpha) {
        const auto [m, n] = key;
        if (m < 0 || m >= M || n < 1 || n > N)
            throw DomainError("alpha index (" + std::to_string(m) + ", " + std::to_string(n) + ") out of range");
    }
    if (static_cast<int>(f.size()) > N + 1) throw DomainError("f has degree above N");
    if (static_cast<int>(g.size()) > M + 1) throw DomainError("g has degree above M");
}

SkewDerivation build_sigma_q(const SigmaQData& data, const GwaAlgebra& algebra) {
    data.validate();
    const Rat q = require_preset_q(algebra);
    std::map<std::pair<int, int>, Rat> on_x, on_y;
    for (std::size_t k = 0; k < data.g.size(); ++k) on_x[{static_cast<int>(k), 0}] += data.g[k];
    for (std::size_t k = 0; k < data.f.size(); ++k) on_y[{0, static_cast<int>(k)}] += data.f[k];
    for (const auto& [key, value] : data.alpha) {
        const auto [m, n] = key;
        on_x[{m, n}] += value;
        // alpha_{m,n} forces the y^{m+1} x^{n-1} coefficient of d(y)
        on_y[{m + 1, n - 1}] += -q * q_int(n, q) / q_int(m + 1, q) * value;
    }
    DerivationValues v{q, {}, from_yx_basis(algebra, on_x), from_yx_basis(algebra, on_y)};
    v.on_h = derive_h_from_generators(algebra, q, v.on_x, v.on_y);
    return verify(v, algebra);
}

std::map<std::pair<int, int>, Rat> to_yx_basis(const GwaAlgebra& algebra, const GwaElement& e) {
    // y^m x^n has signed degree n - m and an h-coefficient of degree min(m, n)
    // when deg a = 1, so each term is peeled off from the top h-degree down.
    if (algebra.a().degree() != 1) throw DomainError("the y^m x^n basis needs deg a = 1");
    std::map<std::pair<int, int>, Rat> out;
    for (const auto& [k, coeff] : e.terms()) {
        Poly rest = coeff;
        while (!rest.is_zero()) {
            const int j = rest.degree();
            const int m = k >= 0 ? j : j - k;
            const int n = k >= 0 ? j + k : j;
            const Poly basis = algebra.yx_monomial(m, n).coeff(k);
            const Rat c = rest.leading() / basis.leading();
            out[{m, n}] += c;
            rest -= c * basis;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

GwaElement from_yx_basis(const GwaAlgebra& algebra, const std::map<std::pair<int, int>, Rat>& coords) {
    GwaElement out;
    for (const auto& [key, value] : coords) out += value * algebra.yx_monomial(key.first, key.second);
    return out;
}

SigmaQClassification classify_sigma_q(const SkewDerivation& d) { return classify_sigma_q(d.values(), d.algebra()); }

SigmaQClassification classify_sigma_q(const DerivationValues& d, const GwaAlgebra& algebra) {
    const Rat q = require_preset_q(algebra);
    if (d.mu != q) return SigmaQViolation{0, 0, q, d.mu, "twist is not sigma_q"};

    const auto on_x = to_yx_basis(algebra, d.on_x);
    const auto on_y = to_yx_basis(algebra, d.on_y);
    SigmaQData data;
    for (const auto& [key, value] : on_x) {
        const auto [m, n] = key;
        if (n == 0) {
            if (static_cast<int>(data.g.size()) <= m) data.g.resize(static_cast<std::size_t>(m) + 1);
            data.g[static_cast<std::size_t>(m)] = value;
        } else {
            data.alpha.emplace(key, value);
        }
    }
    std::map<std::pair<int, int>, Rat> forced;
    for (const auto& [key, value] : data.alpha)
        forced[{key.first + 1, key.second - 1}] = -q * q_int(key.second, q) / q_int(key.first + 1, q) * value;
    for (const auto& [key, value] : on_y) {
        if (key.first == 0) {
            if (static_cast<int>(data.f.size()) <= key.second) data.f.resize(static_cast<std::size_t>(key.second) + 1);
            data.f[static_cast<std::size_t>(key.second)] = value;
        } else {
            forced.try_emplace(key, Rat(0));
        }
    }
    for (const auto& [key, expected] : forced) {
        auto it = on_y.find(key);
        const Rat actual = it == on_y.end() ? Rat(0) : it->second;
        if (actual != expected)
            return SigmaQViolation{key.first - 1, key.second + 1, expected, actual,
                                   "coefficient of y^" + std::to_string(key.first) + " x^" + std::to_string(key.second) +
                                       " in d(y) does not match alpha"};
    }
    data = data.normalized();
    if (!(build_sigma_q(data, algebra).values() == d))
        return SigmaQViolation{0, 0, Rat(0), Rat(0), "rebuilt derivation differs"};
    return data;
}

std::pair<GwaElement, GwaElement> lemma52_residuals(int n, const Rat& q) {
    if (n < 1) throw DomainError("lemma52 needs n >= 1");
    if (q.is_zero()) throw DomainError("q must be nonzero");
    const GwaAlgebra disc = GwaAlgebra::custom(Poly({Rat(1), Rat(-1)}), AffineAuto::scaling(q));
    const GwaElement x = GwaElement::x(), y = GwaElement::y();
    const GwaElement yn = disc.pow(y, n), xn = disc.pow(x, n);
    const Rat qn = q.pow(n);
    GwaElement first = disc.mul(x, yn) - qn * disc.mul(yn, x) - (Rat(1) - qn) * disc.pow(y, n - 1);
    GwaElement second = disc.mul(xn, y) - qn * disc.mul(y, xn) - (Rat(1) - qn) * disc.pow(x, n - 1);
    return {std::move(first), std::move(second)};
}

bool lemma52_check(int n, const Rat& q) {
    const auto [first, second] = lemma52_residuals(n, q);
    return first.is_zero() && second.is_zero();
}

}  // namespace gwa
