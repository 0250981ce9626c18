#pragma once

// Exact field arithmetic in two modes: arbitrary-precision rationals and the
// prime field F_p with p = 2^61 - 1.  All identity checks in this library are
// coefficientwise equalities of such field elements; the prime-field mode is
// used for Schwartz-Zippel style verification over several seeds.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace saw {

enum class Mode { ExactRational, PrimeField };

struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signals that a sampled parameter specialization hit a pole (vanishing
// denominator); the caller should resample rather than report a verdict.
struct resample_signal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace pf {
inline constexpr std::uint64_t P = (std::uint64_t(1) << 61) - 1;

inline std::uint64_t reduce(std::uint64_t x) { return x >= P ? x - P : x; }

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) { return reduce(a + b); }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return reduce(a + P - b); }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 t = (unsigned __int128)a * b;
    // Mersenne reduction: x = hi*2^61 + lo  ==>  x mod p = hi + lo (mod p)
    std::uint64_t lo = (std::uint64_t)t & P;
    std::uint64_t hi = (std::uint64_t)(t >> 61);
    return reduce(lo + hi);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t inv(std::uint64_t a) {
    if (a == 0) throw math_error("prime-field division by zero");
    return pow(a, P - 2);
}
} // namespace pf

class Scalar {
public:
    Scalar() : mode_(Mode::ExactRational), rat_(0), res_(0) {}

    static Scalar zero(Mode m) { return integer(0, m); }
    static Scalar one(Mode m) { return integer(1, m); }

    static Scalar integer(long v, Mode m) {
        Scalar s;
        s.mode_ = m;
        if (m == Mode::ExactRational) {
            s.rat_ = v;
        } else {
            long r = v % (long)pf::P;
            if (r < 0) r += (long)pf::P;
            s.res_ = (std::uint64_t)r;
        }
        return s;
    }

    static Scalar rational(long num, long den) {
        if (den == 0) throw math_error("zero denominator");
        Scalar s;
        s.mode_ = Mode::ExactRational;
        s.rat_ = mpq_class(num, den);
        s.rat_.canonicalize();
        return s;
    }

    static Scalar residue(std::uint64_t r) {
        Scalar s;
        s.mode_ = Mode::PrimeField;
        s.res_ = r % pf::P;
        return s;
    }

    Mode mode() const { return mode_; }

    Scalar unit() const { return one(mode_); }

    bool is_zero() const {
        return mode_ == Mode::ExactRational ? rat_ == 0 : res_ == 0;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar r;
        r.mode_ = a.mode_;
        if (a.mode_ == Mode::ExactRational) r.rat_ = a.rat_ + b.rat_;
        else r.res_ = pf::add(a.res_, b.res_);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar r;
        r.mode_ = a.mode_;
        if (a.mode_ == Mode::ExactRational) r.rat_ = a.rat_ - b.rat_;
        else r.res_ = pf::sub(a.res_, b.res_);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar r;
        r.mode_ = a.mode_;
        if (a.mode_ == Mode::ExactRational) r.rat_ = a.rat_ * b.rat_;
        else r.res_ = pf::mul(a.res_, b.res_);
        return r;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        a.check(b);
        if (b.is_zero()) throw math_error("division by zero");
        Scalar r;
        r.mode_ = a.mode_;
        if (a.mode_ == Mode::ExactRational) r.rat_ = a.rat_ / b.rat_;
        else r.res_ = pf::mul(a.res_, pf::inv(b.res_));
        return r;
    }
    Scalar operator-() const {
        Scalar r = *this;
        if (mode_ == Mode::ExactRational) r.rat_ = -rat_;
        else r.res_ = res_ == 0 ? 0 : pf::P - res_;
        return r;
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inv() const {
        if (is_zero()) throw math_error("inverse of zero");
        return one(mode_) / *this;
    }

    // Integer power, negative exponents via the inverse.
    Scalar pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Scalar base = *this, r = one(mode_);
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check(b);
        return a.mode_ == Mode::ExactRational ? a.rat_ == b.rat_ : a.res_ == b.res_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const {
        if (mode_ == Mode::ExactRational) return rat_.get_str();
        return std::to_string(res_);
    }

    // Total ordering for canonical map keys (not a numeric order in prime mode).
    friend bool key_less(const Scalar& a, const Scalar& b) {
        a.check(b);
        if (a.mode_ == Mode::ExactRational) return a.rat_ < b.rat_;
        return a.res_ < b.res_;
    }

private:
    void check(const Scalar& b) const {
        if (mode_ != b.mode_) throw math_error("mixed scalar modes");
    }
    Mode mode_;
    mpq_class rat_;
    std::uint64_t res_;
};

} // namespace saw
