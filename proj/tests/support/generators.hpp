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


#ifndef GWASKEW_TESTS_GENERATORS_HPP
#define GWASKEW_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include "gwaskew/derivation.hpp"
#include "gwaskew/disc_plane.hpp"

namespace gwa::gen {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

inline Rat rat(Rng& rng, int bound = 5) { return Rat(uniform(rng, -bound, bound), uniform(rng, 1, 3)); }

inline Rat nonzero_rat(Rng& rng, int bound = 5) {
    for (;;) {
        Rat r = rat(rng, bound);
        if (!r.is_zero()) return r;
    }
}

inline Poly poly(Rng& rng, int max_degree, int bound = 5) {
    std::vector<Rat> c;
    const int deg = uniform(rng, -1, max_degree);
    for (int i = 0; i <= deg; ++i) c.push_back(rat(rng, bound));
    return Poly(std::move(c));
}

inline GwaElement element(Rng& rng, int max_abs_degree, int max_poly_degree) {
    GwaElement e;
    const int terms = uniform(rng, 0, 3);
    for (int t = 0; t < terms; ++t) e.add_term(uniform(rng, -max_abs_degree, max_abs_degree), poly(rng, max_poly_degree));
    return e;
}

inline Rat generic_q(Rng& rng) {
    static const Rat choices[] = {Rat(2), Rat(3), Rat(1, 2), Rat(-2), Rat(3, 5), Rat(-3, 2)};
    return choices[uniform(rng, 0, 5)];
}

inline GwaAlgebra disc_or_plane(Rng& rng, const Rat& q) { return coin(rng) ? GwaAlgebra::disc(q) : GwaAlgebra::plane(q); }

/**
 * Admissible constructor data on a disc or plane: alpha_i(h) = gamma_i h^d
 * with mu = q^{1-d}, weight 0 only where a | alpha_0(a).
 */
inline TheoremData theorem_data(Rng& rng, const GwaAlgebra& algebra, int d, int min_weight, int max_weight,
                                bool with_b_c = true) {
    const Rat q = *algebra.q();
    TheoremData data;
    data.mu = q.pow(1 - d);
    for (int w = min_weight; w <= max_weight; ++w) {
        if (w == 0 && (algebra.label() == AlgebraLabel::Disc || d == 0)) continue;
        if (coin(rng)) data.with_alpha(w, Poly::monomial(nonzero_rat(rng), d));
    }
    if (with_b_c) {
        data.b = poly(rng, 4);
        data.c = poly(rng, 4);
    }
    return data;
}

inline SigmaQData sigma_q_data(Rng& rng, int max_m, int max_n) {
    SigmaQData data;
    data.M = uniform(rng, 0, max_m);
    data.N = uniform(rng, 0, max_n);
    for (int m = 0; m < data.M; ++m)
        for (int n = 1; n <= data.N; ++n)
            if (coin(rng)) data.alpha.emplace(std::pair{m, n}, nonzero_rat(rng));
    for (int i = 0; i <= data.N; ++i) data.f.push_back(coin(rng) ? rat(rng) : Rat(0));
    for (int i = 0; i <= data.M; ++i) data.g.push_back(coin(rng) ? rat(rng) : Rat(0));
    return data;
}

}  // namespace gwa::gen

#endif  // GWASKEW_TESTS_GENERATORS_HPP
