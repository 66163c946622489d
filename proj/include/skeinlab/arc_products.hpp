#pragma once

// Structure constants for powers of a single arc class. An arc alpha and
// the loop p = alpha^2 - 2 generate a commutative subalgebra; any P(alpha)
// splits as E(p) + O(p)*alpha via alpha^2 = p + 2. Products of Tbar's of a
// single class are computed two independent ways (closed form vs full
// multiplication + triangular re-expression) and must agree.

#include <map>
#include <stdexcept>

#include "skeinlab/chebyshev.hpp"

namespace skeinlab {

// P(alpha) rewritten over the basis {p^m, p^m * alpha}. Both parts are
// polynomials in the loop variable p.
struct ArcPolyExpansion {
    PolyX even_part;
    PolyX odd_part;

    friend bool operator==(const ArcPolyExpansion&, const ArcPolyExpansion&) = default;
};

inline ArcPolyExpansion expand_arc_poly(const PolyX& p) {
    PolyX even_in_y;  // even-degree coefficients, variable y = alpha^2
    PolyX odd_in_y;
    for (const auto& [deg, c] : p.coeffs()) {
        PolyX term = PolyX::monomial(deg / 2, c);
        if (deg % 2 == 0) {
            even_in_y += term;
        } else {
            odd_in_y += term;
        }
    }
    PolyX p_plus_2 = PolyX::x() + PolyX::constant(LaurentPoly::integer(2));
    return {even_in_y.compose(p_plus_2), odd_in_y.compose(p_plus_2)};
}

// Substitute p = x^2 - 2 back; inverse of expand_arc_poly.
inline PolyX arc_reassemble(const ArcPolyExpansion& e) {
    PolyX p_of_x = PolyX::x() * PolyX::x() - PolyX::constant(LaurentPoly::integer(2));
    return e.even_part.compose(p_of_x) + e.odd_part.compose(p_of_x) * PolyX::x();
}

using TbarExpansion = std::map<int, LaurentPoly>;  // Tbar index -> coefficient

inline TbarExpansion product_in_tbar_closed(int m, int n) {
    if (m < 0 || n < 0) throw std::domain_error("product_in_tbar_closed: indices must be >= 0");
    TbarExpansion out;
    if (m == 0 && n == 0) {
        out[0] = LaurentPoly::one();
    } else if (m == 0 || n == 0) {
        out[m + n] = LaurentPoly::one();
    } else if (m == n) {
        out[2 * n] = LaurentPoly::one();
        out[0] = LaurentPoly::integer(2);
    } else {
        out[m + n] = LaurentPoly::one();
        out[std::abs(m - n)] = LaurentPoly::one();
    }
    return out;
}

inline TbarExpansion product_in_tbar_oracle(int m, int n) {
    if (m < 0 || n < 0) throw std::domain_error("product_in_tbar_oracle: indices must be >= 0");
    auto coeffs = expand_in_sequence(cheb_Tbar(m) * cheb_Tbar(n), seq_Tbar());
    TbarExpansion out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_zero()) out[static_cast<int>(k)] = coeffs[k];
    }
    return out;
}

// Expansion of Tbar_m * Tbar_n over {Tbar_k}; both routes are evaluated and
// cross-checked on every call.
inline TbarExpansion product_in_Tbar_basis(int m, int n) {
    TbarExpansion closed = product_in_tbar_closed(m, n);
    TbarExpansion oracle = product_in_tbar_oracle(m, n);
    if (closed != oracle) {
        throw std::logic_error("product_in_Tbar_basis: closed form and oracle disagree at (" +
                               std::to_string(m) + ", " + std::to_string(n) + ")");
    }
    return closed;
}

// Tbar_{2n+1} * Tbar_{2m+1} = T_{n+m+1}(p) + T_{|n-m|}(p), i.e.
// Tbar_{2(n+m+1)} + Tbar_{2|n-m|} for n != m and Tbar_{2(n+m+1)} + 2*Tbar_0
// for n = m (T_0(p) = 2). Checked in the {p^m, p^m alpha} picture and via
// full multiplication in x.
inline bool verify_odd_odd_display(int n, int m) {
    if (n < 0 || m < 0) throw std::domain_error("verify_odd_odd_display: indices must be >= 0");
    ArcPolyExpansion a = expand_arc_poly(cheb_Tbar(2 * n + 1));
    ArcPolyExpansion b = expand_arc_poly(cheb_Tbar(2 * m + 1));
    if (!a.even_part.is_zero() || !b.even_part.is_zero()) return false;

    // (O_n(p) alpha)(O_m(p) alpha) = O_n O_m (p + 2)
    PolyX p_plus_2 = PolyX::x() + PolyX::constant(LaurentPoly::integer(2));
    PolyX lhs = a.odd_part * b.odd_part * p_plus_2;
    PolyX rhs = cheb_T(n + m + 1) + cheb_T(std::abs(n - m));  // in the variable p
    if (lhs != rhs) return false;

    // independent route: multiply out in x and compare with p = x^2 - 2
    return cheb_Tbar(2 * n + 1) * cheb_Tbar(2 * m + 1) ==
           arc_reassemble({rhs, PolyX::zero()});
}

}  // namespace skeinlab
