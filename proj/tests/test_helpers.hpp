#pragma once

// Shared builders and deterministic generators for the test suites. The
// random generators are seeded with constants so failures reproduce.

#include <random>

#include "skeinlab/polyx.hpp"

namespace skeinlab::testing {

inline LaurentPoly lint(long long n) { return LaurentPoly::integer(n); }
inline LaurentPoly vp(int k) { return LaurentPoly::v_pow(k); }
inline LaurentPoly qp(int k) { return LaurentPoly::q_pow(k); }

inline LaurentPoly random_laurent(std::mt19937& rng, int max_abs_exp = 8,
                                  int max_abs_coeff = 9, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp_dist(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<int> coeff_dist(-max_abs_coeff, max_abs_coeff);
    LaurentPoly out;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        out += LaurentPoly::monomial(exp_dist(rng), coeff_dist(rng));
    }
    return out;
}

inline LaurentPoly random_nonneg_laurent(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> nterms(nonzero ? 1 : 0, 3);
    std::uniform_int_distribution<int> exp_dist(-6, 6);
    std::uniform_int_distribution<int> coeff_dist(nonzero ? 1 : 0, 9);
    LaurentPoly out;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        out += LaurentPoly::monomial(exp_dist(rng), coeff_dist(rng));
    }
    return out;
}

inline PolyX random_polyx(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    PolyX out;
    int top = deg_dist(rng);
    for (int d = 0; d <= top; ++d) {
        out += PolyX::monomial(d, random_laurent(rng, 4, 5, 2));
    }
    return out;
}

}  // namespace skeinlab::testing
