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


#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "gwaskew/cli.hpp"
#include "gwaskew/json_io.hpp"
#include "gwaskew/ortho.hpp"

using namespace gwa;
using json_io::Json;

namespace {

struct Run {
    int code;
    std::string out;
    Json body() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    const int code = cli::run(args, in, out);
    return {code, out.str()};
}

const std::string kX = R"({"terms":[{"deg":1,"poly":["1"]}]})";
const std::string kY = R"({"terms":[{"deg":-1,"poly":["1"]}]})";

}  // namespace

TEST_CASE("golden corpus replays byte for byte") {
    std::ifstream file(GWASKEW_GOLDEN);
    REQUIRE(file);
    const Json cases = Json::parse(file);
    CHECK(cases.size() >= 15);
    for (const auto& c : cases) {
        CAPTURE(c.at("name").get<std::string>());
        const Run r = run(c.at("args").get<std::vector<std::string>>(), c.value("stdin", std::string()));
        CHECK(r.out == c.at("stdout").get<std::string>());
        CHECK(r.code == c.at("exit").get<int>());
    }
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"build-sigma-q", "--algebra", "plane", "--q", "3/5"};
    const std::string input = R"({"M":2,"N":2,"alpha":[{"m":1,"n":2,"value":"-4/3"},{"m":0,"n":1,"value":"2"}],"f":["1","0","5"],"g":["0","7"]})";
    const Run first = run(args, input), second = run(args, input);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.back() == '\n');
    CHECK(first.out.find(' ') == std::string::npos);
}

TEST_CASE("built derivations pass check-derivation and classify back") {
    const std::string input = R"({"M":1,"N":2,"alpha":[{"m":0,"n":2,"value":"3"}],"f":["1"],"g":["0","1"]})";
    const Run built = run({"build-sigma-q", "--algebra", "disc", "--q", "-3/2"}, input);
    REQUIRE(built.code == 0);
    const Run checked = run({"check-derivation", "--algebra", "disc", "--q", "-3/2"}, built.out);
    CHECK(checked.code == 0);
    CHECK(checked.body().at("verified") == true);
    const Run classified = run({"classify", "--kind", "sigma-q", "--algebra", "disc", "--q", "-3/2"}, built.out);
    CHECK(classified.code == 0);
    CHECK(classified.body().at("data") == Json::parse(input));
}

TEST_CASE("input from a file") {
    const std::string path = "test_cli_input.json";
    {
        std::ofstream f(path);
        f << R"({"lhs":)" << kX << R"(,"rhs":)" << kY << "}";
    }
    const Run r = run({"mul", "--algebra", "disc", "--q", "2", "--input", path});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out == "{\"terms\":[{\"deg\":0,\"poly\":[\"1\",\"-2\"]}]}\n");
    CHECK(run({"mul", "--algebra", "disc", "--q", "2", "--input", "no/such/file.json"}).code == 2);
}

TEST_CASE("mu flag only fills a missing twist") {
    // d(x) = x, d(y) = -mu y is a derivation only for the mu it names
    const std::string with_mu = R"({"mu":"3","on_h":{"terms":[]},"on_x":{"terms":[{"deg":1,"poly":["1"]}]},"on_y":{"terms":[{"deg":-1,"poly":["-3"]}]}})";
    const Run r = run({"check-derivation", "--algebra", "plane", "--q", "2", "--mu", "5"}, with_mu);
    CHECK(r.code == 0);
    CHECK(r.body().at("mu") == "3");
    const Run missing = run({"check-derivation", "--algebra", "plane", "--q", "2"}, R"({"on_h":{"terms":[]},"on_x":{"terms":[]},"on_y":{"terms":[]}})");
    CHECK(missing.code == 2);
    CHECK(missing.body().at("error").at("kind") == "parse");
}

TEST_CASE("error classes and exit codes") {
    auto kind = [](const Run& r) { return r.body().at("error").at("kind").get<std::string>(); };
    const Run usage = run({});
    CHECK(usage.code == 2);
    CHECK(kind(usage) == "usage");
    CHECK(run({"mul", "--algebra", "torus"}).code == 2);
    CHECK(run({"lemma52", "--q", "2", "--n", "0"}).code == 2);

    const Run custom = run({"mul", "--algebra", "custom", "--lhs", kX, "--rhs", kY});
    CHECK(custom.code == 2);
    CHECK(kind(custom) == "parse");

    const Run bad_json = run({"mul", "--algebra", "disc", "--q", "2", "--lhs", "{", "--rhs", kY});
    CHECK(bad_json.code == 2);
    CHECK(kind(bad_json) == "parse");

    const Run bad_term = run({"mul", "--algebra", "disc", "--q", "2", "--lhs", R"({"terms":[{"deg":"1","poly":[]}]})", "--rhs", kY});
    CHECK(bad_term.code == 2);

    const Run root = run({"mul", "--algebra", "plane", "--q", "-1", "--lhs", kX, "--rhs", kY});
    CHECK(root.code == 1);
    CHECK(kind(root) == "domain");

    const Run theorem = run({"build-derivation", "--kind", "theorem", "--algebra", "disc", "--q", "2"},
                            R"({"mu":"3","alphas":[{"weight":1,"on_h":["1"]}]})");
    CHECK(theorem.code == 1);
    CHECK(kind(theorem) == "domain");

    const Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("ortho-verify") != std::string::npos);
}

TEST_CASE("custom algebra flags") {
    const Run r = run({"mul", "--algebra", "custom", "--a", R"(["1","0","1"])", "--phi", R"({"u":"1","v":"1"})", "--lhs", kX, "--rhs", kY});
    CHECK(r.code == 0);
    // xy = phi(a) = 1 + (h + 1)^2
    CHECK(r.body() == Json::parse(R"({"terms":[{"deg":0,"poly":["2","2","1"]}]})"));
}

TEST_CASE("JSON round trips") {
    gen::Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const Rat r = gen::rat(rng, 1000);
        CHECK(json_io::rat_from_json(json_io::to_json(r)) == r);
        const Poly p = gen::poly(rng, 4);
        CHECK(json_io::poly_from_json(json_io::to_json(p)) == p);
        const GwaElement e = gen::element(rng, 3, 3);
        CHECK(json_io::element_from_json(json_io::to_json(e)) == e);
        const GwaAlgebra A = gen::disc_or_plane(rng, gen::generic_q(rng));
        CHECK(json_io::algebra_from_json(json_io::to_json(A)) == A);
        const TheoremData data = gen::theorem_data(rng, A, 1, -2, 2);
        CHECK(json_io::theorem_data_from_json(json_io::to_json(data)).normalized() == data.normalized());
        const SigmaQData s = gen::sigma_q_data(rng, 3, 3);
        CHECK(json_io::sigma_q_from_json(json_io::to_json(s)) == s);
        const SkewDerivation d = from_theorem_data(data, A);
        CHECK(json_io::values_from_json(json_io::to_json(d)) == d.values());
    }
    const OrthoCertificate cert{{{{GwaElement(Poly(1)), GwaElement::y()}}, {{GwaElement(Poly(1)), GwaElement::x()}}}};
    CHECK(json_io::certificate_from_json(json_io::to_json(cert)) == cert);
    CHECK(json_io::to_json(cert).at("entries").at(0).at("index") == 1);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(json_io::rat_from_json(Json(3)), ParseError);
    CHECK_THROWS_AS(json_io::poly_from_json(Json::parse(R"(["1", 2])")), ParseError);
    CHECK_THROWS_AS(json_io::element_from_json(Json::parse(R"({"terms":{}})")), ParseError);
    CHECK_THROWS_AS(json_io::certificate_from_json(Json::parse(R"({"entries":[{"index":2,"pairs":[]}]})")), ParseError);
    CHECK_THROWS_AS(json_io::sigma_q_from_json(Json::parse(R"({"M":0,"N":0,"alpha":[{"m":0,"n":1,"value":"1"}],"f":[],"g":[]})")),
                    ParseError);
    CHECK_THROWS_AS(json_io::algebra_from_json(Json::parse(R"({"label":"disc","q":"2","a":["0","1"]})")), ParseError);
    CHECK_THROWS_AS(json_io::algebra_from_json(Json::parse(R"({"label":"plane","q":"2","phi":{"u":"3","v":"0"}})")), ParseError);
    CHECK(json_io::algebra_from_json(Json::parse(R"({"label":"disc","q":"2","a":["1","-1"]})")) == GwaAlgebra::disc(Rat(2)));
    CHECK_THROWS_AS(json_io::prop51_from_json(Json::parse(R"({"variant":"other"})")), ParseError);
}
