#pragma once

// Sign-magnitude arbitrary-precision integer, base 10^9 limbs.
// Only what the Laurent ring needs: +, -, *, comparisons, decimal I/O,
// and exact division (used by the polynomial exact-division helper).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skeinlab {

class BigInt {
public:
    BigInt() = default;

    BigInt(long long value) {  // NOLINT: implicit by design, mirrors int literals
        bool neg = value < 0;
        unsigned long long mag = neg ? 0ULL - static_cast<unsigned long long>(value)
                                     : static_cast<unsigned long long>(value);
        while (mag != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
            mag /= kBase;
        }
        negative_ = neg && !limbs_.empty();
    }

    static BigInt from_string(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t pos = 0;
        if (text[0] == '-' || text[0] == '+') {
            neg = text[0] == '-';
            pos = 1;
        }
        if (pos == text.size()) throw std::invalid_argument("BigInt: sign without digits");
        BigInt out;
        std::size_t ndigits = text.size() - pos;
        std::size_t first = ndigits % 9;
        if (first == 0) first = 9;
        std::size_t cursor = pos;
        auto chunk = [&](std::size_t len) {
            std::uint32_t value = 0;
            for (std::size_t i = 0; i < len; ++i, ++cursor) {
                char ch = text[cursor];
                if (ch < '0' || ch > '9') throw std::invalid_argument("BigInt: bad digit");
                value = value * 10 + static_cast<std::uint32_t>(ch - '0');
            }
            return value;
        };
        std::vector<std::uint32_t> big_endian{chunk(first)};
        while (cursor < text.size()) big_endian.push_back(chunk(9));
        out.limbs_.assign(big_endian.rbegin(), big_endian.rend());
        out.trim();
        out.negative_ = neg && !out.limbs_.empty();
        return out;
    }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::string out = negative_ ? "-" : "";
        out += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            out += std::string(9 - part.size(), '0');
            out += part;
        }
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const {
        BigInt out = *this;
        if (!out.limbs_.empty()) out.negative_ = !out.negative_;
        return out;
    }

    BigInt abs() const {
        BigInt out = *this;
        out.negative_ = false;
        return out;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.negative_ == b.negative_) {
            BigInt out;
            out.limbs_ = add_mag(a.limbs_, b.limbs_);
            out.negative_ = a.negative_ && !out.limbs_.empty();
            return out;
        }
        int cmp = cmp_mag(a.limbs_, b.limbs_);
        if (cmp == 0) return BigInt{};
        BigInt out;
        if (cmp > 0) {
            out.limbs_ = sub_mag(a.limbs_, b.limbs_);
            out.negative_ = a.negative_;
        } else {
            out.limbs_ = sub_mag(b.limbs_, a.limbs_);
            out.negative_ = b.negative_;
        }
        if (out.limbs_.empty()) out.negative_ = false;
        return out;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt{};
        std::vector<std::uint32_t> prod(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = prod[i + j] + ai * b.limbs_[j] + carry;
                prod[i + j] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t pos = i + b.limbs_.size();
            while (carry != 0) {
                std::uint64_t cur = prod[pos] + carry;
                prod[pos] = static_cast<std::uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++pos;
            }
        }
        BigInt out;
        out.limbs_ = std::move(prod);
        out.trim();
        out.negative_ = (a.negative_ != b.negative_) && !out.limbs_.empty();
        return out;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign() != b.sign()) return a.sign() <=> b.sign();
        int mag = cmp_mag(a.limbs_, b.limbs_);
        if (a.negative_) mag = -mag;
        return mag <=> 0;
    }

    // Quotient when b divides *this exactly; nullopt otherwise. Division is
    // per-digit binary search, adequate for the coefficient sizes seen here.
    std::optional<BigInt> exact_quotient(const BigInt& b) const {
        if (b.is_zero()) return std::nullopt;
        if (is_zero()) return BigInt{};
        auto [quot, rem] = divmod_mag(limbs_, b.limbs_);
        if (!rem.empty()) return std::nullopt;
        BigInt out;
        out.limbs_ = std::move(quot);
        out.trim();
        out.negative_ = (negative_ != b.negative_) && !out.limbs_.empty();
        return out;
    }

private:
    static constexpr std::uint64_t kBase = 1'000'000'000;

    std::vector<std::uint32_t> limbs_;  // little-endian, no leading zero limb
    bool negative_ = false;             // false when zero

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) negative_ = false;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            out[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            out[i] = static_cast<std::uint32_t>(cur);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }

    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> quot(a.size(), 0);
        std::vector<std::uint32_t> rem;
        for (std::size_t i = a.size(); i-- > 0;) {
            rem.insert(rem.begin(), a[i]);
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (cmp_mag(rem, b) < 0) continue;
            std::uint32_t lo = 1, hi = kBase - 1, digit = 1;
            while (lo <= hi) {
                std::uint32_t mid = lo + (hi - lo) / 2;
                if (cmp_mag(mul_digit(b, mid), rem) <= 0) {
                    digit = mid;
                    lo = mid + 1;
                } else {
                    hi = mid - 1;
                }
            }
            quot[i] = digit;
            rem = sub_mag(rem, mul_digit(b, digit));
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        return {quot, rem};
    }

    static std::vector<std::uint32_t> mul_digit(const std::vector<std::uint32_t>& a,
                                                std::uint32_t d) {
        std::vector<std::uint32_t> out(a.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * d + carry;
            out[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        out[a.size()] = static_cast<std::uint32_t>(carry);
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }
};

}  // namespace skeinlab
