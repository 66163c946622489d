#pragma once

// Coefficient-extraction audit for the lower-bound argument: expand
// (beta + a) * sum_k c_k Tbar_k(alpha) in the annulus model, substitute
// x = R_1(x) - a on every basis symbol, and collect the symbol rows plus
// the symbol-free constant d. A sequence can only be positive if a = 0 and
// every c_k is a nonneg Laurent polynomial; d detects a nonzero a.

#include <map>
#include <stdexcept>
#include <vector>

#include "skeinlab/twist_models.hpp"

namespace skeinlab {

struct AuditReport {
    LaurentPoly a;                              // constant term of R_1 = x + a
    std::vector<LaurentPoly> c;                 // Tbar-coefficients of R_n
    LaurentPoly rn_coefficient;                 // coefficient of the R_n(alpha) row (= a)
    std::map<Symbol, LaurentPoly> term_coefficients;  // annulus rows tau^k R_1(...)
    LaurentPoly d;                              // symbol-free constant
};

// c_k coefficients of P over the Tbar basis.
inline std::vector<LaurentPoly> expand_in_Tbar(const PolyX& p) {
    return expand_in_sequence(p, seq_Tbar());
}

// d = -a * { c_0 + sum c_{2k} (q^k + q^{-k}) + sum c_{2k-1} (v^{2k-1} + v^{-(2k-1)}) },
// the closed form of the audit's constant term.
inline LaurentPoly audit_d_closed_form(const LaurentPoly& a, const std::vector<LaurentPoly>& c) {
    LaurentPoly bracket;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        if (j == 0) {
            bracket += c[j];
        } else if (j % 2 == 0) {
            bracket += c[j] * LaurentPoly::q_plus_inv(static_cast<int>(j) / 2);
        } else {
            bracket += c[j] * LaurentPoly::v_plus_inv(static_cast<int>(j));
        }
    }
    return -(a * bracket);
}

inline AuditReport audit_R1_Rn(const LaurentPoly& a, const std::vector<LaurentPoly>& c) {
    AuditReport report;
    report.a = a;
    report.c = c;
    report.rn_coefficient = a;

    // rows of the annulus expansion of beta * sum c_k Tbar_k(alpha)
    SkeinElement rows;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        if (j == 0) {
            rows.add(Symbol::beta(0), c[0]);
        } else {
            rows += c[j] * beta_mul_Tbar(static_cast<int>(j));
        }
    }
    report.term_coefficients = rows.support();

    // substituting x = R_1(x) - a turns each symbol row X into R_1(X) with the
    // same coefficient and leaves -a * (sum of row coefficients) as constant
    LaurentPoly row_sum;
    for (const auto& [sym, coeff] : rows.support()) {
        (void)sym;
        row_sum += coeff;
    }
    report.d = -(a * row_sum);

    // the closed form must reproduce the model computation exactly
    if (report.d != audit_d_closed_form(a, c)) {
        throw std::logic_error("audit_R1_Rn: model d disagrees with closed form");
    }
    return report;
}

// Necessary positivity conditions from the lower-bound theorem: R_1 = x and
// every R_n is a nonneg Tbar-combination, up to degree max_degree.
inline bool lower_bound_check(const NormalizedSequence& r, int max_degree) {
    if (max_degree < 0) throw std::domain_error("lower_bound_check: max degree must be >= 0");
    if (!(r.at(1) == PolyX::x())) return false;
    for (int n = 0; n <= max_degree; ++n) {
        for (const auto& coeff : expand_in_Tbar(r.at(n))) {
            if (!coeff.is_nonneg()) return false;
        }
    }
    return true;
}

}  // namespace skeinlab
