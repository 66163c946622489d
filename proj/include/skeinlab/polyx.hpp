#pragma once

// Univariate polynomials in a formal variable x with LaurentPoly
// coefficients. Hosts the Chebyshev-type sequences and everything that is
// "a polynomial identity" in the toolkit. Degrees are nonnegative; the
// zero polynomial has an empty coefficient map and degree -1.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

class PolyX {
public:
    PolyX() = default;

    static PolyX zero() { return {}; }
    static PolyX one() { return constant(LaurentPoly::one()); }
    static PolyX x() { return monomial(1, LaurentPoly::one()); }

    static PolyX constant(LaurentPoly c) { return monomial(0, std::move(c)); }

    static PolyX monomial(int degree, LaurentPoly c) {
        if (degree < 0) throw std::invalid_argument("PolyX: negative degree");
        PolyX out;
        if (!c.is_zero()) out.coeffs_.emplace(degree, std::move(c));
        return out;
    }

    bool is_zero() const { return coeffs_.empty(); }

    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    LaurentPoly coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? LaurentPoly::zero() : it->second;
    }

    const std::map<int, LaurentPoly>& coeffs() const { return coeffs_; }

    LaurentPoly leading() const {
        return coeffs_.empty() ? LaurentPoly::zero() : coeffs_.rbegin()->second;
    }

    bool is_monic_of_degree(int n) const { return degree() == n && leading().is_one(); }

    friend PolyX operator+(const PolyX& a, const PolyX& b) {
        PolyX out = a;
        for (const auto& [deg, c] : b.coeffs_) out.add_term(deg, c);
        return out;
    }

    friend PolyX operator-(const PolyX& a, const PolyX& b) {
        PolyX out = a;
        for (const auto& [deg, c] : b.coeffs_) out.add_term(deg, -c);
        return out;
    }

    PolyX operator-() const {
        PolyX out;
        for (const auto& [deg, c] : coeffs_) out.coeffs_.emplace(deg, -c);
        return out;
    }

    friend PolyX operator*(const PolyX& a, const PolyX& b) {
        PolyX out;
        for (const auto& [da, ca] : a.coeffs_) {
            for (const auto& [db, cb] : b.coeffs_) {
                out.add_term(da + db, ca * cb);
            }
        }
        return out;
    }

    friend PolyX operator*(const LaurentPoly& s, const PolyX& p) {
        PolyX out;
        for (const auto& [deg, c] : p.coeffs_) out.add_term(deg, s * c);
        return out;
    }

    PolyX& operator+=(const PolyX& o) { return *this = *this + o; }
    PolyX& operator-=(const PolyX& o) { return *this = *this - o; }
    PolyX& operator*=(const PolyX& o) { return *this = *this * o; }

    friend bool operator==(const PolyX& a, const PolyX& b) { return a.coeffs_ == b.coeffs_; }

    // P(inner): substitute another polynomial for x (Horner).
    PolyX compose(const PolyX& inner) const {
        PolyX acc;
        for (int d = degree(); d >= 0; --d) {
            acc = acc * inner;
            auto it = coeffs_.find(d);
            if (it != coeffs_.end()) acc += constant(it->second);
        }
        return acc;
    }

    // P(value) for a scalar value (Horner).
    LaurentPoly eval(const LaurentPoly& value) const {
        LaurentPoly acc;
        for (int d = degree(); d >= 0; --d) {
            acc = acc * value;
            auto it = coeffs_.find(d);
            if (it != coeffs_.end()) acc += it->second;
        }
        return acc;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + it->second.to_string() + ")";
            if (it->first > 0) out += "*x^" + std::to_string(it->first);
        }
        return out;
    }

private:
    std::map<int, LaurentPoly> coeffs_;  // degree -> nonzero coefficient

    void add_term(int deg, LaurentPoly delta) {
        if (delta.is_zero()) return;
        auto it = coeffs_.find(deg);
        if (it == coeffs_.end()) {
            coeffs_.emplace(deg, std::move(delta));
            return;
        }
        it->second += delta;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
};

}  // namespace skeinlab
