#pragma once

// Exact sparse Laurent polynomials in one variable v = q^{1/2} over the
// integers. Exponents count powers of v, so q^k is v_pow(2k) and q^{k/2}
// is v_pow(k); every scalar that appears downstream is an honest monomial.
//
// Also carries the positivity cone test (all coefficients >= 0), the bar
// involution v -> v^{-1}, and reduction into the group ring of Z/M
// (v^M = 1), which is how root-of-unity specializations are checked.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "skeinlab/bigint.hpp"

namespace skeinlab {

// Reduction context imposing v^M = 1.
struct CyclotomicContext {
    int modulus;

    explicit CyclotomicContext(int m) : modulus(m) {
        if (m < 1) throw std::invalid_argument("CyclotomicContext: modulus must be >= 1");
    }
};

class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }

    static LaurentPoly integer(BigInt value) {
        LaurentPoly out;
        if (!value.is_zero()) out.terms_.emplace(0, std::move(value));
        return out;
    }

    static LaurentPoly monomial(int exp, BigInt coeff) {
        LaurentPoly out;
        if (!coeff.is_zero()) out.terms_.emplace(exp, std::move(coeff));
        return out;
    }

    static LaurentPoly v_pow(int k) { return monomial(k, 1); }
    static LaurentPoly q_pow(int k) { return monomial(2 * k, 1); }
    static LaurentPoly q() { return q_pow(1); }

    // q^k + q^{-k} and the v-graded analogue; these show up everywhere.
    static LaurentPoly q_plus_inv(int k = 1) { return q_pow(k) + q_pow(-k); }
    static LaurentPoly v_plus_inv(int k) { return v_pow(k) + v_pow(-k); }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second == BigInt(1);
    }

    // Membership in Z_{>=0}[q^{+-1/2}]; the zero polynomial qualifies.
    bool is_nonneg() const {
        for (const auto& [exp, coeff] : terms_) {
            (void)exp;
            if (coeff.is_negative()) return false;
        }
        return true;
    }

    BigInt coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt{} : it->second;
    }

    const std::map<int, BigInt>& terms() const { return terms_; }

    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [exp, coeff] : b.terms_) out.add_term(exp, coeff);
        return out;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [exp, coeff] : b.terms_) out.add_term(exp, -coeff);
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out;
        for (const auto& [exp, coeff] : terms_) out.terms_.emplace(exp, -coeff);
        return out;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add_term(ea + eb, ca * cb);
            }
        }
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    // The bar involution q^{1/2} -> q^{-1/2}; a ring automorphism.
    LaurentPoly bar() const {
        LaurentPoly out;
        for (const auto& [exp, coeff] : terms_) out.terms_.emplace(-exp, coeff);
        return out;
    }

    // Image in Z[v]/(v^M - 1): exponents folded into [0, M), collisions summed.
    LaurentPoly reduce_mod_order(const CyclotomicContext& ctx) const {
        LaurentPoly out;
        int m = ctx.modulus;
        for (const auto& [exp, coeff] : terms_) {
            int folded = ((exp % m) + m) % m;
            out.add_term(folded, coeff);
        }
        return out;
    }

    // Exact quotient in Z[v^{+-1}], nullopt when b does not divide a.
    static std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) return std::nullopt;
        LaurentPoly quotient;
        LaurentPoly rem = a;
        const int exp_floor = a.is_zero() ? 0 : a.min_exp() - b.min_exp();
        while (!rem.is_zero()) {
            int texp = rem.max_exp() - b.max_exp();
            if (texp < exp_floor) return std::nullopt;
            auto tc = rem.terms_.rbegin()->second.exact_quotient(b.terms_.rbegin()->second);
            if (!tc) return std::nullopt;
            LaurentPoly t = monomial(texp, *tc);
            quotient += t;
            rem -= t * b;
        }
        return quotient;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [exp, coeff] : terms_) {
            std::string mag = coeff.abs().to_string();
            if (out.empty()) {
                if (coeff.is_negative()) out += "-";
            } else {
                out += coeff.is_negative() ? " - " : " + ";
            }
            if (exp == 0) {
                out += mag;
            } else {
                if (mag != "1") out += mag + "*";
                out += "v^" + std::to_string(exp);
            }
        }
        return out;
    }

private:
    std::map<int, BigInt> terms_;  // exponent -> nonzero coefficient

    void add_term(int exp, BigInt delta) {
        if (delta.is_zero()) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, std::move(delta));
            return;
        }
        it->second += delta;
        if (it->second.is_zero()) terms_.erase(it);
    }
};

}  // namespace skeinlab
