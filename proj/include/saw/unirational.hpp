#pragma once

// Univariate rational functions over a field K, in one distinguished symbol.
// These form a field themselves, so the localization sums can be evaluated
// with one parameter left symbolic and the limit at infinity read off from
// leading coefficients (used for the stabilization/factorization check).

#include <vector>
#include <stdexcept>
#include "saw/scalar.hpp"

namespace saw {

template <class K>
struct UniPoly {
    std::vector<K> c; // c[i] is the coefficient of x^i; empty = zero polynomial

    static UniPoly zero() { return {}; }
    static UniPoly constant(const K& k) {
        if (k.is_zero()) return {};
        return UniPoly{{k}};
    }

    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; } // -1 for zero
    const K& lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), zero_like(a, b));
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        UniPoly r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), zero_like(a, b));
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        K z = a.c[0] - a.c[0];
        UniPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, z);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }

    // Euclidean division: returns remainder, quotient discarded by callers.
    static UniPoly rem(UniPoly a, const UniPoly& b) {
        if (b.is_zero()) throw math_error("polynomial division by zero");
        while (!a.is_zero() && a.deg() >= b.deg()) {
            K f = a.lead() / b.lead();
            int shift = a.deg() - b.deg();
            for (int i = 0; i <= b.deg(); ++i)
                a.c[i + shift] -= f * b.c[i];
            a.trim();
        }
        return a;
    }

    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = rem(a, b);
            a = b;
            b = r;
        }
        return a;
    }

    // Exact division (used after gcd), asserts zero remainder.
    static UniPoly divexact(UniPoly a, const UniPoly& b) {
        if (b.is_zero()) throw math_error("polynomial division by zero");
        if (a.is_zero()) return {};
        K z = a.c[0] - a.c[0];
        UniPoly q;
        q.c.assign(a.deg() - b.deg() + 1 > 0 ? a.deg() - b.deg() + 1 : 0, z);
        while (!a.is_zero() && a.deg() >= b.deg()) {
            K f = a.lead() / b.lead();
            int shift = a.deg() - b.deg();
            q.c[shift] = f;
            for (int i = 0; i <= b.deg(); ++i)
                a.c[i + shift] -= f * b.c[i];
            a.trim();
        }
        if (!a.is_zero()) throw math_error("inexact polynomial division");
        q.trim();
        return q;
    }

private:
    static K zero_like(const UniPoly& a, const UniPoly& b) {
        const K& any = a.c.empty() ? b.c[0] : a.c[0];
        return any - any;
    }
};

template <class K>
class UniRational {
public:
    UniRational() = default; // zero with denominator 1 of unknown mode: avoid

    static UniRational constant(const K& k) {
        UniRational r;
        r.num_ = UniPoly<K>::constant(k);
        r.den_ = UniPoly<K>::constant(k.unit());
        return r;
    }
    // The distinguished symbol x; `one` supplies the field's multiplicative unit.
    static UniRational variable(const K& one) {
        UniRational r;
        r.num_.c = {one - one, one};
        r.den_ = UniPoly<K>::constant(one);
        return r;
    }

    const UniPoly<K>& num() const { return num_; }
    const UniPoly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    friend UniRational operator+(const UniRational& a, const UniRational& b) {
        UniRational r;
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.reduce();
        return r;
    }
    friend UniRational operator-(const UniRational& a, const UniRational& b) {
        UniRational r;
        r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.reduce();
        return r;
    }
    friend UniRational operator*(const UniRational& a, const UniRational& b) {
        UniRational r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        r.reduce();
        return r;
    }
    friend UniRational operator/(const UniRational& a, const UniRational& b) {
        if (b.is_zero()) throw math_error("division by zero rational function");
        UniRational r;
        r.num_ = a.num_ * b.den_;
        r.den_ = a.den_ * b.num_;
        r.reduce();
        return r;
    }
    UniRational operator-() const {
        UniRational r = *this;
        UniPoly<K> z;
        r.num_ = z - r.num_;
        return r;
    }
    UniRational& operator+=(const UniRational& b) { return *this = *this + b; }
    UniRational& operator-=(const UniRational& b) { return *this = *this - b; }
    UniRational& operator*=(const UniRational& b) { return *this = *this * b; }
    UniRational& operator/=(const UniRational& b) { return *this = *this / b; }

    UniRational inv() const {
        if (is_zero()) throw math_error("inverse of zero rational function");
        UniRational r;
        r.num_ = den_;
        r.den_ = num_;
        r.reduce();
        return r;
    }
    UniRational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        UniRational r = unit();
        UniRational base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const UniRational& a, const UniRational& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const UniRational& a, const UniRational& b) { return !(a == b); }

public:
    UniRational unit() const { return constant(den_.lead().unit()); }

private:
    void reduce() {
        if (den_.is_zero()) throw math_error("zero denominator");
        if (num_.is_zero()) {
            K one = den_.lead() / den_.lead();
            den_ = UniPoly<K>::constant(one);
            return;
        }
        UniPoly<K> g = UniPoly<K>::gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = UniPoly<K>::divexact(num_, g);
            den_ = UniPoly<K>::divexact(den_, g);
        }
        // make the denominator monic for canonicity
        K lead = den_.lead();
        for (auto& c : num_.c) c /= lead;
        for (auto& c : den_.c) c /= lead;
    }

    UniPoly<K> num_, den_;
};

enum class LimitKind { Finite, Zero, DivergesToInfinity };

template <class K>
struct LimitResult {
    LimitKind kind;
    K value; // meaningful only when kind == Finite
};

// Limit of f(x) as x -> infinity: compare numerator and denominator degrees.
template <class K>
LimitResult<K> uni_limit_at_infinity(const UniRational<K>& f) {
    if (f.den().is_zero()) throw math_error("zero denominator");
    if (f.num().is_zero())
        return {LimitKind::Zero, f.den().lead() - f.den().lead()};
    int dn = f.num().deg(), dd = f.den().deg();
    if (dn < dd) return {LimitKind::Zero, f.den().lead() - f.den().lead()};
    if (dn > dd) return {LimitKind::DivergesToInfinity, f.den().lead() - f.den().lead()};
    return {LimitKind::Finite, f.num().lead() / f.den().lead()};
}

} // namespace saw
