#pragma once

// Chebyshev-type polynomial sequences and the calculus around them:
//
//   T_n  : T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}
//   S_n  : S_{-1} = 0, S_0 = 1, S_1 = x, same recurrence
//   Tbar : Tbar_0 = 1, Tbar_n = T_n for n >= 1
//   U_n  : (x^2-2)^{n/2}, resp. (x^2-2)^{(n-1)/2} x
//
// plus the product/composition identities relating them, triangular
// change-of-basis between normalized sequences, and the dominance order
// "every A_n is a nonneg-Laurent combination of B_0..B_n".

#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinlab/polyx.hpp"

namespace skeinlab {

// One monic polynomial of each degree n >= 0, produced lazily and memoized.
// Copies share the cache; access is internally synchronized.
class NormalizedSequence {
public:
    NormalizedSequence(std::string name, std::function<PolyX(int)> generator)
        : state_(std::make_shared<State>()) {
        state_->name = std::move(name);
        state_->generator = std::move(generator);
    }

    const std::string& name() const { return state_->name; }

    PolyX at(int n) const {
        if (n < 0) throw std::domain_error("NormalizedSequence: index must be >= 0");
        std::lock_guard<std::mutex> lock(state_->mutex);
        if (n < static_cast<int>(state_->cache.size())) return state_->cache[n];
        for (int k = static_cast<int>(state_->cache.size()); k <= n; ++k) {
            PolyX value = state_->generator(k);
            if (!value.is_monic_of_degree(k)) {
                throw std::logic_error("NormalizedSequence '" + state_->name +
                                       "': term " + std::to_string(k) +
                                       " is not monic of degree " + std::to_string(k));
            }
            state_->cache.push_back(std::move(value));
        }
        return state_->cache[n];
    }

    PolyX operator()(int n) const { return at(n); }

private:
    struct State {
        std::string name;
        std::function<PolyX(int)> generator;
        std::vector<PolyX> cache;
        std::mutex mutex;
    };
    std::shared_ptr<State> state_;
};

namespace detail {

// Memoized three-term recurrence; copies out under the lock so callers never
// hold references into a vector that may reallocate.
inline PolyX cheb_from_table(std::vector<PolyX>& table, std::mutex& mutex,
                             std::size_t index) {
    std::lock_guard<std::mutex> lock(mutex);
    while (table.size() <= index) {
        std::size_t k = table.size();
        table.push_back(PolyX::x() * table[k - 1] - table[k - 2]);
    }
    return table[index];
}

}  // namespace detail

inline PolyX cheb_T(int n) {
    if (n < 0) throw std::domain_error("cheb_T: n must be >= 0");
    static std::vector<PolyX> table{PolyX::constant(LaurentPoly::integer(2)), PolyX::x()};
    static std::mutex mutex;
    return detail::cheb_from_table(table, mutex, static_cast<std::size_t>(n));
}

inline PolyX cheb_S(int n) {
    if (n < -1) throw std::domain_error("cheb_S: n must be >= -1");
    // slot 0 holds S_{-1} = 0
    static std::vector<PolyX> table{PolyX::zero(), PolyX::one(), PolyX::x()};
    static std::mutex mutex;
    return detail::cheb_from_table(table, mutex, static_cast<std::size_t>(n + 1));
}

inline PolyX cheb_Tbar(int n) {
    if (n < 0) throw std::domain_error("cheb_Tbar: n must be >= 0");
    return n == 0 ? PolyX::one() : cheb_T(n);
}

// S_n - S_{n-1}; the odd-part family. Defined for n >= 0 (value 1 at n = 0).
inline PolyX cheb_S_diff(int n) {
    if (n < 0) throw std::domain_error("cheb_S_diff: n must be >= 0");
    return cheb_S(n) - cheb_S(n - 1);
}

inline PolyX seq_U(int n) {
    if (n < 0) throw std::domain_error("seq_U: n must be >= 0");
    PolyX p_alpha = PolyX::x() * PolyX::x() - PolyX::constant(LaurentPoly::integer(2));
    PolyX out = PolyX::one();
    for (int i = 0; i < n / 2; ++i) out *= p_alpha;
    if (n % 2 == 1) out *= PolyX::x();
    return out;
}

inline int eps(int n, int m) {
    if (n < 0 || m < 0) throw std::domain_error("eps: indices must be >= 0");
    return n > m ? n - m - 1 : m - n;
}

// The named families used by the dominance tests and the CLI.
inline NormalizedSequence seq_Tbar() { return {"Tbar", [](int n) { return cheb_Tbar(n); }}; }
inline NormalizedSequence seq_S() { return {"S", [](int n) { return cheb_S(n); }}; }
inline NormalizedSequence seq_SmS() { return {"SmS", [](int n) { return cheb_S_diff(n); }}; }
inline NormalizedSequence seq_U_family() { return {"U", [](int n) { return seq_U(n); }}; }
inline NormalizedSequence seq_xn() {
    return {"xn", [](int n) { return PolyX::monomial(n, LaurentPoly::one()); }};
}

inline NormalizedSequence named_sequence(const std::string& name) {
    if (name == "Tbar") return seq_Tbar();
    if (name == "S") return seq_S();
    if (name == "SmS") return seq_SmS();
    if (name == "U") return seq_U_family();
    if (name == "xn") return seq_xn();
    throw std::invalid_argument("unknown sequence family '" + name +
                                "' (expected Tbar, S, SmS, U or xn)");
}

enum class IdentityTag { Eq1, Eq2, Eq3, Eq4, Eq6, Rmk23a, Rmk23b, Rmk23c };

inline const char* identity_name(IdentityTag tag) {
    switch (tag) {
        case IdentityTag::Eq1: return "eq1";
        case IdentityTag::Eq2: return "eq2";
        case IdentityTag::Eq3: return "eq3";
        case IdentityTag::Eq4: return "eq4";
        case IdentityTag::Eq6: return "eq6";
        case IdentityTag::Rmk23a: return "rmk23a";
        case IdentityTag::Rmk23b: return "rmk23b";
        case IdentityTag::Rmk23c: return "rmk23c";
    }
    return "?";
}

inline IdentityTag identity_from_name(const std::string& name) {
    for (IdentityTag tag : {IdentityTag::Eq1, IdentityTag::Eq2, IdentityTag::Eq3,
                            IdentityTag::Eq4, IdentityTag::Eq6, IdentityTag::Rmk23a,
                            IdentityTag::Rmk23b, IdentityTag::Rmk23c}) {
        if (name == identity_name(tag)) return tag;
    }
    throw std::invalid_argument("unknown identity tag '" + name + "'");
}

inline bool identity_uses_m(IdentityTag tag) {
    return tag == IdentityTag::Eq1 || tag == IdentityTag::Eq3 || tag == IdentityTag::Eq4;
}

// Fully expanded left/right side of one identity instance.
struct IdentitySides {
    PolyX lhs;
    PolyX rhs;
    bool holds() const { return lhs == rhs; }
};

inline IdentitySides identity_sides(IdentityTag tag, int n, int m) {
    auto require = [&](bool ok, const char* what) {
        if (!ok) {
            throw std::domain_error(std::string("identity ") + identity_name(tag) +
                                    ": " + what);
        }
    };
    PolyX x = PolyX::x();
    PolyX x2m2 = x * x - PolyX::constant(LaurentPoly::integer(2));
    switch (tag) {
        case IdentityTag::Eq1:
            require(n >= 0 && m >= 0, "requires n, m >= 0");
            return {cheb_T(m) * cheb_T(n), cheb_T(m + n) + cheb_T(std::abs(m - n))};
        case IdentityTag::Eq2:
            require(n >= 0, "requires n >= 0");
            return {cheb_T(2 * n), cheb_T(n).compose(x2m2)};
        case IdentityTag::Eq3:
            require(n >= 0 && m >= 0, "requires n, m >= 0");
            return {cheb_S_diff(n) * cheb_S_diff(m) *
                        (x + PolyX::constant(LaurentPoly::integer(2))),
                    cheb_T(n + m + 1) + cheb_T(std::abs(n - m))};
        case IdentityTag::Eq4:
            require(n >= 0 && m >= 0, "requires n, m >= 0");
            return {cheb_T(n) * cheb_S_diff(m),
                    cheb_S_diff(n + m) + cheb_S_diff(eps(n, m))};
        case IdentityTag::Eq6:
            require(n >= 1, "requires n >= 1");
            return {cheb_Tbar(2 * n + 1), cheb_S_diff(n).compose(x2m2) * x};
        case IdentityTag::Rmk23a:
            require(n >= 1, "requires n >= 1");
            return {cheb_Tbar(n), cheb_S_diff(n) + cheb_S_diff(n - 1)};
        case IdentityTag::Rmk23b: {
            require(n >= 0, "requires n >= 0");
            PolyX sum;
            for (int i = 0; i <= n; ++i) sum += cheb_Tbar(2 * n - 2 * i);
            return {cheb_S(2 * n), sum};
        }
        case IdentityTag::Rmk23c: {
            require(n >= 0, "requires n >= 0");
            PolyX sum;
            for (int i = 0; i <= n; ++i) sum += cheb_Tbar(2 * n - 2 * i + 1);
            return {cheb_S(2 * n + 1), sum};
        }
    }
    throw std::logic_error("identity_sides: unreachable");
}

inline bool verify_identity(IdentityTag tag, int n, int m = 0) {
    return identity_sides(tag, n, m).holds();
}

// Coefficients (c_0, ..., c_deg) with P = sum c_i * B_i. Exact triangular
// peel; every normalized sequence spans, so the remainder always clears.
inline std::vector<LaurentPoly> expand_in_sequence(const PolyX& p, const NormalizedSequence& basis) {
    int deg = p.degree();
    std::vector<LaurentPoly> out(static_cast<std::size_t>(deg < 0 ? 0 : deg) + 1);
    PolyX rem = p;
    for (int i = deg; i >= 0; --i) {
        LaurentPoly c = rem.coeff(i);
        if (!c.is_zero()) {
            out[static_cast<std::size_t>(i)] = c;
            rem -= c * basis.at(i);
        }
    }
    if (!rem.is_zero()) {
        throw std::logic_error("expand_in_sequence: nonzero remainder against '" +
                               basis.name() + "'");
    }
    return out;
}

using BasisMatrix = std::vector<std::vector<LaurentPoly>>;

// (N+1)x(N+1) lower-triangular M with A_n = sum_{i<=n} M[n][i] B_i.
inline BasisMatrix change_of_basis(const NormalizedSequence& a, const NormalizedSequence& b,
                                   int max_degree) {
    if (max_degree < 0) throw std::domain_error("change_of_basis: max degree must be >= 0");
    BasisMatrix matrix(static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        auto row = expand_in_sequence(a.at(n), b);
        row.resize(static_cast<std::size_t>(max_degree) + 1);
        matrix[static_cast<std::size_t>(n)] = std::move(row);
    }
    return matrix;
}

// The order of Definition "(Q_i) >= (R_i)", truncated at max_degree.
inline bool dominates(const NormalizedSequence& a, const NormalizedSequence& b, int max_degree) {
    for (int n = 0; n <= max_degree; ++n) {
        for (const auto& entry : expand_in_sequence(a.at(n), b)) {
            if (!entry.is_nonneg()) return false;
        }
    }
    return true;
}

}  // namespace skeinlab
