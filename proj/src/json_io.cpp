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


#include "gwaskew/json_io.hpp"

#include <string>

namespace gwa::json_io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

const Json* optional_field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

int int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("\"") + what + "\" must be an integer");
    const auto value = j.get<long long>();
    if (value < -1'000'000 || value > 1'000'000) throw ParseError(std::string("\"") + what + "\" out of range");
    return static_cast<int>(value);
}

const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
    return a;
}

template <typename F>
auto with_context(const char* where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(std::string(where) + ": " + e.what());
    }
}

std::vector<Rat> rats_from_json(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("\"") + what + "\" must be an array of rationals");
    std::vector<Rat> out;
    for (const auto& item : j) out.push_back(rat_from_json(item));
    return out;
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rationals are written as strings \"n\" or \"n/d\"");
    return Rat::parse(j.get<std::string>());
}

Json to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Poly poly_from_json(const Json& j) { return Poly(rats_from_json(j, "poly")); }

Json to_json(const AffineAuto& phi) { return {{"u", to_json(phi.u())}, {"v", to_json(phi.v())}}; }

AffineAuto affine_from_json(const Json& j) {
    return with_context("phi", [&] {
        const Rat u = rat_from_json(field(j, "u"));
        if (u.is_zero()) throw ParseError("u must be nonzero");
        return AffineAuto(u, rat_from_json(field(j, "v")));
    });
}

Json to_json(const GwaElement& e) {
    Json terms = Json::array();
    for (const auto& [deg, coeff] : e.terms()) terms.push_back({{"deg", deg}, {"poly", to_json(coeff)}});
    return {{"terms", terms}};
}

GwaElement element_from_json(const Json& j) {
    return with_context("element", [&] {
        GwaElement out;
        for (const auto& t : array_field(j, "terms"))
            out.add_term(int_from_json(field(t, "deg"), "deg"), poly_from_json(field(t, "poly")));
        return out;
    });
}

Json to_json(const GwaAlgebra& algebra) {
    Json out = {{"label", to_string(algebra.label())}, {"a", to_json(algebra.a())}, {"phi", to_json(algebra.phi())}};
    if (auto q = algebra.q()) out["q"] = to_json(*q);
    return out;
}

GwaAlgebra algebra_from_json(const Json& j) {
    return with_context("algebra", [&] {
        const Json& label = field(j, "label");
        if (!label.is_string()) throw ParseError("\"label\" must be a string");
        const auto name = label.get<std::string>();
        if (name == "disc" || name == "plane") {
            const Rat q = rat_from_json(field(j, "q"));
            GwaAlgebra preset = name == "disc" ? GwaAlgebra::disc(q) : GwaAlgebra::plane(q);
            if (const Json* a = optional_field(j, "a"); a && !(poly_from_json(*a) == preset.a()))
                throw ParseError("\"a\" does not match the " + name + " preset");
            if (const Json* phi = optional_field(j, "phi"); phi && !(affine_from_json(*phi) == preset.phi()))
                throw ParseError("\"phi\" does not match the " + name + " preset");
            return preset;
        }
        if (name == "custom") return GwaAlgebra::custom(poly_from_json(field(j, "a")), affine_from_json(field(j, "phi")));
        throw ParseError("unknown algebra label \"" + name + "\"");
    });
}

Json to_json(const DerivationValues& v) {
    return {{"mu", to_json(v.mu)}, {"on_h", to_json(v.on_h)}, {"on_x", to_json(v.on_x)}, {"on_y", to_json(v.on_y)}};
}

Json to_json(const SkewDerivation& d) {
    Json out = to_json(d.values());
    out["verified"] = true;
    return out;
}

DerivationValues values_from_json(const Json& j) {
    return with_context("derivation", [&] {
        DerivationValues v;
        v.mu = rat_from_json(field(j, "mu"));
        v.on_h = element_from_json(field(j, "on_h"));
        v.on_x = element_from_json(field(j, "on_x"));
        v.on_y = element_from_json(field(j, "on_y"));
        return v;
    });
}

Json to_json(const TheoremData& data) {
    Json alphas = Json::array();
    for (const auto& [w, alpha] : data.alphas) alphas.push_back({{"weight", w}, {"on_h", to_json(alpha.on_h)}});
    return {{"mu", to_json(data.mu)}, {"alphas", alphas}, {"b", to_json(data.b)}, {"c", to_json(data.c)}};
}

TheoremData theorem_data_from_json(const Json& j) {
    return with_context("theorem data", [&] {
        TheoremData data;
        data.mu = rat_from_json(field(j, "mu"));
        for (const auto& a : array_field(j, "alphas")) {
            const int w = int_from_json(field(a, "weight"), "weight");
            if (data.alphas.contains(w)) throw ParseError("duplicate weight " + std::to_string(w));
            data.with_alpha(w, poly_from_json(field(a, "on_h")));
        }
        if (const Json* b = optional_field(j, "b")) data.b = poly_from_json(*b);
        if (const Json* c = optional_field(j, "c")) data.c = poly_from_json(*c);
        return data;
    });
}

FiniteOrderData finite_order_from_json(const Json& j) {
    return with_context("finite-order data", [&] {
        FiniteOrderData data;
        data.order = int_from_json(field(j, "order"), "order");
        data.mu = rat_from_json(field(j, "mu"));
        if (const Json* pos = optional_field(j, "positive")) {
            if (!pos->is_array()) throw ParseError("\"positive\" must be an array");
            for (const auto& item : *pos)
                data.positive.push_back({TwistedPolyDerivation{0, poly_from_json(field(item, "alpha"))},
                                         poly_from_json(field(item, "b"))});
        }
        if (const Json* neg = optional_field(j, "negative")) {
            if (!neg->is_array()) throw ParseError("\"negative\" must be an array");
            for (const auto& item : *neg)
                data.negative.push_back({TwistedPolyDerivation{0, poly_from_json(field(item, "alpha"))},
                                         poly_from_json(field(item, "c"))});
        }
        return data;
    });
}

Prop51Data prop51_from_json(const Json& j) {
    return with_context("prop51 data", [&]() -> Prop51Data {
        const Json& variant = field(j, "variant");
        if (!variant.is_string()) throw ParseError("\"variant\" must be a string");
        const auto name = variant.get<std::string>();
        if (name == "zero_on_h") return ZeroOnH{poly_from_json(field(j, "f")), rat_from_json(field(j, "mu"))};
        if (name == "mu_power")
            return MuPower{int_from_json(field(j, "d"), "d"), rats_from_json(field(j, "a"), "a"),
                           rats_from_json(field(j, "b"), "b")};
        throw ParseError("unknown variant \"" + name + "\"");
    });
}

Json to_json(const SigmaQData& data) {
    Json alpha = Json::array();
    for (const auto& [key, value] : data.alpha) alpha.push_back({{"m", key.first}, {"n", key.second}, {"value", to_json(value)}});
    Json f = Json::array(), g = Json::array();
    for (const auto& c : data.f) f.push_back(to_json(c));
    for (const auto& c : data.g) g.push_back(to_json(c));
    return {{"M", data.M}, {"N", data.N}, {"alpha", alpha}, {"f", f}, {"g", g}};
}

SigmaQData sigma_q_from_json(const Json& j) {
    return with_context("sigma-q data", [&] {
        SigmaQData data;
        data.M = int_from_json(field(j, "M"), "M");
        data.N = int_from_json(field(j, "N"), "N");
        for (const auto& a : array_field(j, "alpha")) {
            const std::pair<int, int> key{int_from_json(field(a, "m"), "m"), int_from_json(field(a, "n"), "n")};
            if (data.alpha.contains(key)) throw ParseError("duplicate alpha index");
            data.alpha.emplace(key, rat_from_json(field(a, "value")));
        }
        data.f = rats_from_json(field(j, "f"), "f");
        data.g = rats_from_json(field(j, "g"), "g");
        try {
            data.validate();
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
        return data;
    });
}

Json to_json(const OrthoCertificate& cert) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < cert.entries.size(); ++i) {
        Json pairs = Json::array();
        for (const auto& [a, b] : cert.entries[i]) pairs.push_back({{"a", to_json(a)}, {"b", to_json(b)}});
        entries.push_back({{"index", static_cast<int>(i) + 1}, {"pairs", pairs}});
    }
    return {{"entries", entries}};
}

OrthoCertificate certificate_from_json(const Json& j) {
    return with_context("certificate", [&] {
        OrthoCertificate cert;
        const Json& entries = array_field(j, "entries");
        cert.entries.resize(entries.size());
        std::vector<bool> seen(entries.size(), false);
        for (const auto& entry : entries) {
            const int index = int_from_json(field(entry, "index"), "index");
            if (index < 1 || index > static_cast<int>(entries.size()) || seen[static_cast<std::size_t>(index - 1)])
                throw ParseError("entry indices must be 1..n without repeats");
            seen[static_cast<std::size_t>(index - 1)] = true;
            auto& pairs = cert.entries[static_cast<std::size_t>(index - 1)];
            for (const auto& p : array_field(entry, "pairs"))
                pairs.push_back({element_from_json(field(p, "a")), element_from_json(field(p, "b"))});
        }
        return cert;
    });
}

Grading grading_from_json(const Json& j) {
    return with_context("grading", [&] {
        return Grading{int_from_json(field(j, "d"), "d"), int_from_json(field(j, "k"), "k"), int_from_json(field(j, "w"), "w")};
    });
}

}  // namespace gwa::json_io
