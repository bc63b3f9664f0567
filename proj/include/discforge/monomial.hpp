#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "discforge/errors.hpp"

namespace discforge {

// Exponents are bounded machine integers; arithmetic that would push an
// exponent past kMaxExponent throws instead of wrapping.
inline constexpr std::int32_t kMaxExponent = 1 << 30;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<std::int32_t> exps) : e_(std::move(exps)) {}

    std::size_t arity() const { return e_.size(); }
    std::int32_t exp(std::size_t i) const { return e_[i]; }
    std::int32_t& exp(std::size_t i) { return e_[i]; }
    const std::vector<std::int32_t>& exps() const { return e_; }

    bool is_one() const {
        for (auto v : e_)
            if (v != 0) return false;
        return true;
    }

    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (auto v : e_) d += v;
        return d;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    // Bit i%64 set when variable i occurs; cheap divisibility prefilter.
    std::uint64_t divmask() const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0) m |= std::uint64_t(1) << (i & 63);
        return m;
    }

private:
    std::vector<std::int32_t> e_;
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        std::int64_t s = std::int64_t(a.exp(i)) + b.exp(i);
        if (s >= kMaxExponent) throw exponent_overflow_error("monomial exponent overflow");
        r.exp(i) = static_cast<std::int32_t>(s);
    }
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.exp(i) > b.exp(i)) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) r.exp(i) = a.exp(i) - b.exp(i);
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
        r.exp(i) = a.exp(i) > b.exp(i) ? a.exp(i) : b.exp(i);
    return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
        r.exp(i) = a.exp(i) < b.exp(i) ? a.exp(i) : b.exp(i);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

inline Monomial mono_pow(const Monomial& a, std::int32_t k) {
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        std::int64_t s = std::int64_t(a.exp(i)) * k;
        if (s >= kMaxExponent) throw exponent_overflow_error("monomial exponent overflow");
        r.exp(i) = static_cast<std::int32_t>(s);
    }
    return r;
}

}  // namespace discforge
