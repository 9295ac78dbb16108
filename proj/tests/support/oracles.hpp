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


#ifndef GWASKEW_TESTS_ORACLES_HPP
#define GWASKEW_TESTS_ORACLES_HPP

#include <map>
#include <string>

#include "gwaskew/gwa.hpp"

namespace gwa::oracle {

/// Linear combination of words in x and y.
using WordSum = std::map<std::string, Rat>;

/**
 * Quantum disc (xy = q yx + 1 - q) or plane (xy = q yx), presented only by
 * generators and the single relation. Products are computed by rewriting
 * the leftmost "xy" one step at a time until every word reads y...yx...x.
 */
class RewritingAlgebra {
  public:
    RewritingAlgebra(bool disc, Rat q) : disc_(disc), q_(std::move(q)) {}

    WordSum normalize(const WordSum& s) const;
    WordSum multiply(const WordSum& lhs, const WordSum& rhs) const;

    /// Word expansion of a normal-form element, with h = 1 - yx or h = yx.
    WordSum from_element(const GwaElement& e) const;

    static WordSum word(const std::string& w) { return {{w, Rat(1)}}; }
    static WordSum yx_word(int m, int n) { return word(std::string(static_cast<std::size_t>(m), 'y') + std::string(static_cast<std::size_t>(n), 'x')); }

  private:
    bool disc_;
    Rat q_;
};

void add_into(WordSum& acc, const WordSum& s, const Rat& scale = Rat(1));

/**
 * Dimension of the space of sigma_q-derivations with d(x), d(y) in the span
 * of y^m x^n, m <= M, n <= N, found by imposing d(xy) = q d(yx) (disc and
 * plane) through the rewriting algebra and counting free parameters.
 */
std::size_t sigma_q_solution_dimension(bool disc, const Rat& q, int M, int N);

}  // namespace gwa::oracle

#endif  // GWASKEW_TESTS_ORACLES_HPP
