#pragma once

// Truncated multigraded formal power series in p_1..p_N over a field K,
// truncated by TOTAL degree, plus the q-series operators acting on them:
// finite/infinite Pochhammer products, the q-Borel transform, and the
// theta / q-Laplacian monomial rescalings.

#include <map>
#include <vector>
#include <string>
#include <nlohmann/json.hpp>
#include "saw/scalar.hpp"

namespace saw {

template <class K = Scalar>
class PSeries {
public:
    using Index = std::vector<int>;

    PSeries(int n_vars, int trunc, const K& unit)
        : n_(n_vars), trunc_(trunc), one_(unit) {}

    static PSeries zero(int n_vars, int trunc, const K& unit) {
        return PSeries(n_vars, trunc, unit);
    }
    static PSeries constant(int n_vars, int trunc, const K& c) {
        PSeries r(n_vars, trunc, c.unit());
        r.add_term(Index(n_vars, 0), c);
        return r;
    }
    static PSeries one(int n_vars, int trunc, const K& unit) {
        return constant(n_vars, trunc, unit.unit());
    }
    static PSeries monomial(int n_vars, int trunc, const Index& v, const K& c) {
        PSeries r(n_vars, trunc, c.unit());
        r.add_term(v, c);
        return r;
    }

    int n_vars() const { return n_; }
    int trunc() const { return trunc_; }
    const K& unit() const { return one_; }
    const std::map<Index, K>& terms() const { return terms_; }

    static int total(const Index& v) {
        int s = 0;
        for (int x : v) s += x;
        return s;
    }

    K coeff(const Index& v) const {
        auto it = terms_.find(v);
        return it == terms_.end() ? one_ - one_ : it->second;
    }

    void add_term(const Index& v, const K& c) {
        if ((int)v.size() != n_) throw math_error("PSeries: index arity mismatch");
        for (int x : v)
            if (x < 0) throw math_error("PSeries: negative exponent");
        if (total(v) > trunc_) return;
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(v, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    friend PSeries operator+(const PSeries& a, const PSeries& b) {
        a.check(b);
        PSeries r = a;
        for (const auto& [v, c] : b.terms_) r.add_term(v, c);
        return r;
    }
    friend PSeries operator-(const PSeries& a, const PSeries& b) {
        a.check(b);
        PSeries r = a;
        for (const auto& [v, c] : b.terms_) r.add_term(v, (a.one_ - a.one_) - c);
        return r;
    }
    friend PSeries operator*(const PSeries& a, const PSeries& b) {
        a.check(b);
        PSeries r(a.n_, a.trunc_, a.one_);
        for (const auto& [va, ca] : a.terms_) {
            int da = total(va);
            for (const auto& [vb, cb] : b.terms_) {
                if (da + total(vb) > a.trunc_) continue;
                Index v(a.n_);
                for (int i = 0; i < a.n_; ++i) v[i] = va[i] + vb[i];
                r.add_term(v, ca * cb);
            }
        }
        return r;
    }
    PSeries operator*(const K& k) const {
        PSeries r(n_, trunc_, one_);
        for (const auto& [v, c] : terms_) r.add_term(v, c * k);
        return r;
    }
    PSeries operator-() const {
        PSeries r(n_, trunc_, one_);
        for (const auto& [v, c] : terms_) r.add_term(v, (one_ - one_) - c);
        return r;
    }
    PSeries& operator+=(const PSeries& b) { return *this = *this + b; }
    PSeries& operator-=(const PSeries& b) { return *this = *this - b; }
    PSeries& operator*=(const PSeries& b) { return *this = *this * b; }

    // Truncated multiplicative inverse; requires a nonzero constant term.
    PSeries invert() const {
        K c0 = coeff(Index(n_, 0));
        if (c0.is_zero()) throw math_error("PSeries: non-invertible constant term");
        // f = c0(1 - g) with val(g) >= 1: 1/f = (1/c0) sum g^k
        PSeries g(n_, trunc_, one_);
        K c0inv = c0.inv();
        for (const auto& [v, c] : terms_) {
            if (total(v) == 0) continue;
            g.add_term(v, (one_ - one_) - c * c0inv);
        }
        PSeries r = one(n_, trunc_, one_), pw = one(n_, trunc_, one_);
        for (int k = 1; k <= trunc_; ++k) {
            pw *= g;
            if (pw.is_zero()) break;
            r += pw;
        }
        return r * c0inv;
    }

    friend bool operator==(const PSeries& a, const PSeries& b) {
        a.check(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PSeries& a, const PSeries& b) { return !(a == b); }

    // First multi-index (lex order) at which the two series differ, if any.
    static bool first_mismatch(const PSeries& a, const PSeries& b, Index& where) {
        a.check(b);
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                where = ia->first;
                return true;
            }
            if (ia == a.terms_.end() || ib->first < ia->first) {
                where = ib->first;
                return true;
            }
            if (!(ia->second == ib->second)) {
                where = ia->first;
                return true;
            }
            ++ia;
            ++ib;
        }
        return false;
    }

    // minimum total degree of a nonzero term; trunc+1 if zero series
    int valuation() const {
        int v = trunc_ + 1;
        for (const auto& [idx, c] : terms_) v = std::min(v, total(idx));
        return v;
    }

private:
    void check(const PSeries& b) const {
        if (n_ != b.n_ || trunc_ != b.trunc_)
            throw math_error("PSeries: bound mismatch");
    }

    int n_, trunc_;
    K one_;
    std::map<Index, K> terms_;
};

// (x; q)_k = prod_{i=0}^{k-1} (1 - x q^i)
template <class K>
K finite_poch(const K& x, const K& q, long k) {
    if (k < 0) throw math_error("finite_poch: negative k");
    K one = x.unit(), r = one, xq = x;
    for (long i = 0; i < k; ++i) {
        r *= one - xq;
        xq *= q;
    }
    return r;
}

// Infinite multi-parameter Pochhammer product
//   (base; param_1, ..., param_k)_inf = prod_{i_1..i_k >= 0} (1 - base prod param_j^{i_j})
// computed through the plethystic logarithm
//   log = - sum_{m>=1} base^m / (m prod_j (1 - param_j^m)).
// base must have positive p-valuation so the m-sum terminates.
template <class K>
PSeries<K> inf_poch(const PSeries<K>& base, const std::vector<PSeries<K>>& params) {
    int n = base.n_vars(), trunc = base.trunc();
    const K one = base.unit();
    if (base.valuation() < 1)
        throw math_error("inf_poch: base must have zero constant term");

    PSeries<K> log = PSeries<K>::zero(n, trunc, one);
    PSeries<K> bm = PSeries<K>::one(n, trunc, one);
    for (long m = 1; m <= trunc; ++m) {
        bm *= base;
        if (bm.is_zero()) break;
        PSeries<K> term = bm;
        for (const auto& par : params) {
            PSeries<K> pm = PSeries<K>::one(n, trunc, one);
            for (long i = 0; i < m; ++i) pm *= par;
            PSeries<K> denom = PSeries<K>::one(n, trunc, one) - pm;
            term *= denom.invert(); // throws/resamples if 1 - param^m vanishes
        }
        K minv = one;
        for (long i = 1; i < m; ++i) minv += one; // m as field element
        log -= term * minv.inv();
    }

    // exp of a series with positive valuation
    PSeries<K> r = PSeries<K>::one(n, trunc, one);
    PSeries<K> pw = PSeries<K>::one(n, trunc, one);
    K fact = one;
    for (int k = 1; k <= trunc; ++k) {
        pw *= log;
        if (pw.is_zero()) break;
        K kk = one - one;
        for (int i = 0; i < k; ++i) kk += one;
        fact *= kk;
        r += pw * fact.inv();
    }
    return r;
}

// B^{+-1}: coefficient of p^n multiplied by q^{+-n(n+1)/2} (univariate only)
template <class K>
PSeries<K> q_borel(const PSeries<K>& f, int direction, const K& q) {
    if (f.n_vars() != 1) throw math_error("q_borel: univariate series required");
    if (direction != 1 && direction != -1) throw math_error("q_borel: direction must be +-1");
    PSeries<K> r = PSeries<K>::zero(1, f.trunc(), f.unit());
    for (const auto& [v, c] : f.terms()) {
        long n = v[0];
        r.add_term(v, c * q.pow(direction * n * (n + 1) / 2));
    }
    return r;
}

// q^{sum c_i theta_i / 2}: monomial p^v scaled by s^{sum c_i v_i}
template <class K>
PSeries<K> theta_shift(const PSeries<K>& f, const std::vector<int>& c, const K& s) {
    if ((int)c.size() != f.n_vars()) throw math_error("theta_shift: arity mismatch");
    PSeries<K> r = PSeries<K>::zero(f.n_vars(), f.trunc(), f.unit());
    for (const auto& [v, coef] : f.terms()) {
        long e = 0;
        for (int i = 0; i < f.n_vars(); ++i) e += (long)c[i] * v[i];
        r.add_term(v, coef * s.pow(e));
    }
    return r;
}

// q^{-Delta/2} with Delta = sum theta_i^2 - sum theta_i theta_{i+1} (cyclic):
// monomial p^v scaled by s^{-Q(v)}, Q(v) = sum v_i^2 - sum v_i v_{i+1 mod N}.
// At N = 1 the cyclic neighbor is the variable itself, so Q = 0.
template <class K>
PSeries<K> q_laplacian_shift(const PSeries<K>& f, const K& s) {
    int N = f.n_vars();
    PSeries<K> r = PSeries<K>::zero(N, f.trunc(), f.unit());
    for (const auto& [v, coef] : f.terms()) {
        long Q = 0;
        for (int i = 0; i < N; ++i) {
            Q += (long)v[i] * v[i];
            Q -= (long)v[i] * v[(i + 1) % N];
        }
        r.add_term(v, coef * s.pow(-Q));
    }
    return r;
}

// canonical JSON: {"vars": N, "trunc": n, "terms": [[v_1..v_N, "coeff"], ...]}
// with terms sorted lexicographically (the std::map order).
inline nlohmann::json pseries_to_json(const PSeries<Scalar>& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [v, c] : f.terms()) {
        nlohmann::json row = nlohmann::json::array();
        for (int x : v) row.push_back(x);
        row.push_back(c.str());
        terms.push_back(row);
    }
    return {{"vars", f.n_vars()}, {"trunc", f.trunc()}, {"terms", terms}};
}

inline std::string pseries_to_csv(const PSeries<Scalar>& f) {
    std::string out;
    out += "v1";
    for (int i = 2; i <= f.n_vars(); ++i) out += ",v" + std::to_string(i);
    out += ",coeff\n";
    for (const auto& [v, c] : f.terms()) {
        for (int i = 0; i < f.n_vars(); ++i) out += std::to_string(v[i]) + ",";
        out += c.str() + "\n";
    }
    return out;
}

} // namespace saw
