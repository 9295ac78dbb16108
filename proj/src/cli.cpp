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


#include "gwaskew/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "gwaskew/json_io.hpp"

namespace gwa::cli {

namespace {

using json_io::Json;
using namespace json_io;

struct Options {
    std::string algebra = "disc";
    std::string q;
    std::string mu;
    std::string a;
    std::string phi;
    std::string input = "-";
    std::string lhs;
    std::string rhs;
    std::string kind;
    int n = 1;
    int d = 0;
    int k = 0;
    int w = 0;
    int degree_bound = 3;
    int poly_bound = 3;
};

class Session {
  public:
    Session(const Options& opts, std::istream& in) : opts_(opts), in_(in) {}

    GwaAlgebra algebra() const {
        if (opts_.algebra == "disc" || opts_.algebra == "plane") {
            if (opts_.q.empty()) throw ParseError("--q is required for --algebra " + opts_.algebra);
            const Rat q = Rat::parse(opts_.q);
            return opts_.algebra == "disc" ? GwaAlgebra::disc(q) : GwaAlgebra::plane(q);
        }
        if (opts_.algebra == "custom") {
            if (opts_.a.empty() || opts_.phi.empty()) throw ParseError("--algebra custom needs --a and --phi");
            return GwaAlgebra::custom(poly_from_json(parse_text(opts_.a, "--a")), affine_from_json(parse_text(opts_.phi, "--phi")));
        }
        throw ParseError("unknown algebra \"" + opts_.algebra + "\"");
    }

    Json input() const {
        if (opts_.input == "-") return parse_stream(in_, "standard input");
        std::ifstream file(opts_.input);
        if (!file) throw ParseError("cannot open input file " + opts_.input);
        return parse_stream(file, opts_.input);
    }

    /// Fills a missing "mu" from --mu.
    Json with_default_mu(Json j) const {
        if (j.is_object() && !j.contains("mu") && !opts_.mu.empty()) j["mu"] = Rat::parse(opts_.mu).str();
        return j;
    }

    SkewDerivation derivation(const Json& j, const GwaAlgebra& algebra) const {
        return verify(values_from_json(with_default_mu(j)), algebra);
    }

    std::vector<SkewDerivation> system(const Json& j, const GwaAlgebra& algebra) const {
        if (!j.is_array()) throw ParseError("\"system\" must be an array of derivations");
        std::vector<SkewDerivation> out;
        for (const auto& item : j) out.push_back(derivation(item, algebra));
        return out;
    }

    static Json parse_text(const std::string& text, const std::string& what) {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(what + " is not valid JSON: " + e.what());
        }
    }

    const Options& opts() const { return opts_; }

  private:
    static Json parse_stream(std::istream& s, const std::string& what) {
        try {
            return Json::parse(s);
        } catch (const Json::parse_error& e) {
            throw ParseError(what + " is not valid JSON: " + e.what());
        }
    }

    const Options& opts_;
    std::istream& in_;
};

struct Outcome {
    Json body;
    int code = kExitOk;
};

Outcome cmd_mul(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    Json lhs, rhs;
    if (!s.opts().lhs.empty() || !s.opts().rhs.empty()) {
        lhs = Session::parse_text(s.opts().lhs, "--lhs");
        rhs = Session::parse_text(s.opts().rhs, "--rhs");
    } else {
        const Json j = s.input();
        if (!j.is_object() || !j.contains("lhs") || !j.contains("rhs")) throw ParseError("input needs \"lhs\" and \"rhs\"");
        lhs = j.at("lhs");
        rhs = j.at("rhs");
    }
    return {to_json(algebra.mul(element_from_json(lhs), element_from_json(rhs)))};
}

Outcome cmd_check(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    const auto result = check_relations(values_from_json(s.with_default_mu(s.input())), algebra);
    if (const auto* v = std::get_if<RelationViolation>(&result))
        return {{{"ok", false}, {"relation", v->relation}, {"residual", to_json(v->residual)}}, kExitFailure};
    return {to_json(std::get<SkewDerivation>(result))};
}

Outcome cmd_build(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    const Json j = s.with_default_mu(s.input());
    const std::string& kind = s.opts().kind;
    if (kind == "theorem") return {to_json(from_theorem_data(theorem_data_from_json(j), algebra))};
    if (kind == "finite-order") return {to_json(finite_order_family(finite_order_from_json(j), algebra))};
    if (kind == "prop51") return {to_json(build_prop51(prop51_from_json(j), algebra))};
    throw ParseError("--kind must be theorem, finite-order or prop51");
}

Outcome cmd_build_sigma_q(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    return {to_json(build_sigma_q(sigma_q_from_json(s.input()), algebra))};
}

Outcome cmd_classify(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    const SkewDerivation d = s.derivation(s.input(), algebra);
    const std::string& kind = s.opts().kind;
    if (kind == "positive") {
        const Classification c = classify_positive(d);
        if (const auto* bad = std::get_if<NotOfThisForm>(&c))
            return {{{"ok", false}, {"reason", bad->reason}, {"offending", to_json(bad->offending)}}, kExitFailure};
        return {{{"ok", true}, {"data", to_json(std::get<TheoremData>(c))}}};
    }
    if (kind == "sigma-q") {
        const SigmaQClassification c = classify_sigma_q(d);
        if (const auto* bad = std::get_if<SigmaQViolation>(&c))
            return {{{"ok", false},
                     {"reason", bad->reason},
                     {"m", bad->m},
                     {"n", bad->n},
                     {"expected", to_json(bad->expected)},
                     {"actual", to_json(bad->actual)}},
                    kExitFailure};
        return {{{"ok", true}, {"data", to_json(std::get<SigmaQData>(c))}}};
    }
    throw ParseError("--kind must be positive or sigma-q");
}

Outcome cmd_q_check(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    const QCheckResult r = q_check(s.derivation(s.input(), algebra));
    return {{{"is_q_derivation", r.is_q_derivation}, {"q", r.q ? to_json(*r.q) : Json(nullptr)}}};
}

Outcome cmd_degree_profile(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    const SkewDerivation d = s.derivation(s.input(), algebra);
    const auto l = degree_profile(d, Grading{s.opts().d, s.opts().k, s.opts().w});
    return {{{"homogeneous", l.has_value()}, {"degree", l ? Json(*l) : Json(nullptr)}}};
}

Outcome cmd_inner_witness(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    const SkewDerivation d = s.derivation(s.input(), algebra);
    const auto b = inner_witness(d, s.opts().degree_bound, s.opts().poly_bound);
    if (!b) return {{{"inner", false}}};
    return {{{"inner", true}, {"witness", to_json(*b)}}};
}

Outcome cmd_ortho_build(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    const Json j = s.input();
    if (!j.is_object() || !j.contains("system") || !j.contains("b_list"))
        throw ParseError("input needs \"system\" and \"b_list\"");
    const auto sys = s.system(j.at("system"), algebra);
    if (!j.at("b_list").is_array()) throw ParseError("\"b_list\" must be an array of elements");
    std::vector<GwaElement> b_list;
    for (const auto& item : j.at("b_list")) b_list.push_back(element_from_json(item));
    const CertificateResult r = certificate_from_ideal(b_list, sys, algebra);
    if (const auto* bad = std::get_if<CertificateFailure>(&r)) {
        Json body = {{"ok", false}, {"index", bad->index}, {"reason", bad->reason}};
        if (bad->gcd) body["gcd"] = to_json(*bad->gcd);
        return {body, kExitFailure};
    }
    return {to_json(std::get<OrthoCertificate>(r))};
}

Outcome cmd_ortho_verify(const Session& s) {
    const GwaAlgebra algebra = s.algebra();
    const Json j = s.input();
    if (!j.is_object() || !j.contains("system") || !j.contains("certificate"))
        throw ParseError("input needs \"system\" and \"certificate\"");
    const auto sys = s.system(j.at("system"), algebra);
    const CertificateCheck c = verify_certificate(certificate_from_json(j.at("certificate")), sys, algebra);
    if (c.ok) return {{{"ok", true}}};
    Json body = {{"ok", false}, {"reason", c.reason}};
    if (c.residual) {
        body["i"] = c.residual->i;
        body["k"] = c.residual->k;
        body["residual"] = to_json(c.residual->value);
    }
    return {body, kExitFailure};
}

Outcome cmd_lemma52(const Session& s) {
    if (s.opts().q.empty()) throw ParseError("--q is required");
    const bool ok = lemma52_check(s.opts().n, Rat::parse(s.opts().q));
    return {{{"ok", ok}}, ok ? kExitOk : kExitFailure};
}

Json error_body(const std::string& kind, const std::string& detail) {
    return {{"error", {{"kind", kind}, {"detail", detail}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
    Options opts;
    CLI::App app{"Skew derivations of generalized Weyl algebras", "gwa-skew"};
    app.require_subcommand(1);

    auto add_algebra = [&opts](CLI::App* sub) {
        sub->add_option("--algebra", opts.algebra, "disc, plane or custom")->check(CLI::IsMember({"disc", "plane", "custom"}));
        sub->add_option("--q", opts.q, "deformation parameter, num/den");
        sub->add_option("--a", opts.a, "custom algebra: a as a JSON coefficient array");
        sub->add_option("--phi", opts.phi, "custom algebra: phi as {\"u\",\"v\"}");
    };
    auto add_input = [&opts](CLI::App* sub) {
        sub->add_option("--input", opts.input, "JSON input file, - for standard input");
        sub->add_option("--mu", opts.mu, "default twist when the input omits \"mu\"");
    };

    using Handler = std::function<Outcome(const Session&)>;
    std::map<CLI::App*, Handler> handlers;
    auto subcommand = [&](const std::string& name, const std::string& help, Handler handler) {
        CLI::App* sub = app.add_subcommand(name, help);
        handlers.emplace(sub, std::move(handler));
        return sub;
    };

    auto* mul = subcommand("mul", "multiply two elements", cmd_mul);
    add_algebra(mul);
    add_input(mul);
    mul->add_option("--lhs", opts.lhs, "left factor as JSON");
    mul->add_option("--rhs", opts.rhs, "right factor as JSON");

    auto* check = subcommand("check-derivation", "verify generator values against the relations", cmd_check);
    add_algebra(check);
    add_input(check);

    auto* build = subcommand("build-derivation", "construct a derivation from parameters", cmd_build);
    add_algebra(build);
    add_input(build);
    build->add_option("--kind", opts.kind, "theorem, finite-order or prop51")->required();

    auto* sigma_q = subcommand("build-sigma-q", "construct a sigma_q derivation of the disc or plane", cmd_build_sigma_q);
    add_algebra(sigma_q);
    add_input(sigma_q);

    auto* classify = subcommand("classify", "recover constructor data from a derivation", cmd_classify);
    add_algebra(classify);
    add_input(classify);
    classify->add_option("--kind", opts.kind, "positive or sigma-q")->required();

    auto* qcheck = subcommand("q-check", "test for a skew Q-derivation", cmd_q_check);
    add_algebra(qcheck);
    add_input(qcheck);

    auto* profile = subcommand("degree-profile", "degree of a derivation under a grading", cmd_degree_profile);
    add_algebra(profile);
    add_input(profile);
    profile->add_option("--d", opts.d, "degree of a");
    profile->add_option("--k", opts.k, "degree of x");
    profile->add_option("--w", opts.w, "degree of h");

    auto* inner = subcommand("inner-witness", "search for an inner witness", cmd_inner_witness);
    add_algebra(inner);
    add_input(inner);
    inner->add_option("--degree-bound", opts.degree_bound, "largest |degree| of the witness")->check(CLI::Range(0, 50));
    inner->add_option("--poly-bound", opts.poly_bound, "largest h-degree of the witness")->check(CLI::Range(0, 50));

    auto* obuild = subcommand("ortho-build", "construct an orthogonality certificate", cmd_ortho_build);
    add_algebra(obuild);
    add_input(obuild);

    auto* overify = subcommand("ortho-verify", "check an orthogonality certificate", cmd_ortho_verify);
    add_algebra(overify);
    add_input(overify);

    auto* lemma = subcommand("lemma52", "check the disc commutation identities", cmd_lemma52);
    lemma->add_option("--q", opts.q, "deformation parameter")->required();
    lemma->add_option("--n", opts.n, "exponent")->check(CLI::Range(1, 200));

    if (!args.empty() && !args.front().starts_with('-') && app.get_subcommand_no_throw(args.front()) == nullptr) {
        out << error_body("usage", "unknown subcommand '" + args.front() + "'").dump() << '\n';
        return kExitMalformed;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        out << error_body("usage", e.what()).dump() << '\n';
        return kExitMalformed;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const Session session(opts, in);
    try {
        const Outcome outcome = handlers.at(chosen)(session);
        out << outcome.body.dump() << '\n';
        return outcome.code;
    } catch (const ParseError& e) {
        out << error_body("parse", e.what()).dump() << '\n';
        return kExitMalformed;
    } catch (const Json::exception& e) {
        out << error_body("parse", e.what()).dump() << '\n';
        return kExitMalformed;
    } catch (const DomainError& e) {
        out << error_body("domain", e.what()).dump() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        out << error_body("internal", e.what()).dump() << '\n';
        return kExitFailure;
    }
}

}  // namespace gwa::cli
