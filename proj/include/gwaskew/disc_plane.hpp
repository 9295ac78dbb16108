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


#ifndef GWASKEW_DISC_PLANE_HPP
#define GWASKEW_DISC_PLANE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gwaskew/derivation.hpp"

namespace gwa {

/// d(x) = f(h) x, d(y) = -mu f(q^{-1} h) y, d(h) = 0.
struct ZeroOnH {
    Poly f;
    Rat mu{1};
};

/// d(x) = h^d b(y), d(y) = h^d a(x) with mu = q^{1-d}.
struct MuPower {
    int d = 0;
    std::vector<Rat> a_poly;  // coefficients of a(x)
    std::vector<Rat> b_poly;  // coefficients of b(y)
};

using Prop51Data = std::variant<ZeroOnH, MuPower>;

/// The algebra must be a disc or plane preset; q is read from it.
SkewDerivation build_prop51(const Prop51Data& data, const GwaAlgebra& algebra);

/**
 * sigma_q-derivation data: alpha_{mn} for 0 <= m < M, 1 <= n <= N and the
 * polynomials f(x), g(y). The coefficients of y^m x^n in d(y) for m >= 1 are
 * determined by alpha and are not stored.
 */
struct SigmaQData {
    int M = 0;
    int N = 0;
    std::map<std::pair<int, int>, Rat> alpha;
    std::vector<Rat> f;
    std::vector<Rat> g;

    /// Drops zeros and shrinks M, N to the smallest values that hold the data.
    SigmaQData normalized() const;
    /// Throws DomainError if an index lies outside its range.
    void validate() const;

    friend bool operator==(const SigmaQData&, const SigmaQData&) = default;
};

SkewDerivation build_sigma_q(const SigmaQData& data, const GwaAlgebra& algebra);

/// The first coefficient of d(y) that disagrees with the value forced by alpha.
struct SigmaQViolation {
    int m = 0;  // alpha index (m, n) whose partner coefficient is wrong
    int n = 0;
    Rat expected;
    Rat actual;
    std::string reason;
};

using SigmaQClassification = std::variant<SigmaQData, SigmaQViolation>;

SigmaQClassification classify_sigma_q(const SkewDerivation& d);
/// Same reading on raw generator values; a map that is not a derivation
/// surfaces as a violation instead of failing verification first.
SigmaQClassification classify_sigma_q(const DerivationValues& values, const GwaAlgebra& algebra);

/// Coordinates of a normal-form element in the basis y^m x^n.
std::map<std::pair<int, int>, Rat> to_yx_basis(const GwaAlgebra& algebra, const GwaElement& e);
GwaElement from_yx_basis(const GwaAlgebra& algebra, const std::map<std::pair<int, int>, Rat>& coords);

/// x y^n - q^n y^n x - (1 - q^n) y^{n-1} and x^n y - q^n y x^n - (1 - q^n) x^{n-1} on the disc.
std::pair<GwaElement, GwaElement> lemma52_residuals(int n, const Rat& q);
bool lemma52_check(int n, const Rat& q);

}  // namespace gwa

#endif  // GWASKEW_DISC_PLANE_HPP
