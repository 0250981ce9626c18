#pragma once

// Parameter specializations.  A Context<K> carries values of the equivariant
// parameters q^{1/2} = s, t, kappa and the framing parameters e, mu, nu
// indexed by (vertex i in Z/N, alpha = 1..r_i).  K is usually Scalar, but can
// be UniRational<Scalar> to leave one parameter symbolic.

#include <cstdint>
#include <random>
#include <vector>
#include "saw/scalar.hpp"

namespace saw {

template <class K>
struct Context {
    int N = 1;
    std::vector<int> r;          // framing count per vertex, size N
    K s, t, kappa;               // s = q^{1/2}
    std::vector<std::vector<K>> e, mu, nu; // [vertex i (0-based)][alpha (0-based)]

    K q() const { return s * s; }
    K q_pow(long k) const { return s.pow(2 * k); }
    K kappa_pow(long k) const { return kappa.pow(k); }
    K t_pow(long k) const { return t.pow(k); }

    // Half-integer q-powers appear only in the q-Laplacian contexts; everywhere
    // else an odd s-exponent indicates a transcription error.
    K s_pow(long k, bool allow_odd = false) const {
        if (!allow_odd && (k % 2 != 0)) throw math_error("odd s-exponent outside half-integer context");
        return s.pow(k);
    }

    // vertex index arithmetic mod N with representatives 0..N-1
    int vmod(int i) const {
        int m = i % N;
        return m < 0 ? m + N : m;
    }
};

struct EvalContext : Context<Scalar> {
    Mode mode = Mode::PrimeField;
    std::uint64_t seed = 0;
    int trunc_bound = 0;
};

namespace detail {
inline Scalar sample_value(std::mt19937_64& rng, Mode mode) {
    if (mode == Mode::PrimeField) {
        std::uniform_int_distribution<std::uint64_t> d(2, pf::P - 2);
        return Scalar::residue(d(rng));
    }
    // modest rationals keep exact-mode coefficient growth manageable
    std::uniform_int_distribution<long> num(2, 4096);
    std::uniform_int_distribution<long> den(1, 512);
    std::uniform_int_distribution<int> sign(0, 1);
    long n = num(rng);
    return Scalar::rational(sign(rng) ? n : -n, den(rng));
}

// 1 - x^j != 0 for all j up to bound
inline bool no_small_root_of_unity(const Scalar& x, int bound) {
    Scalar one = x.unit();
    Scalar p = one;
    for (int j = 1; j <= bound; ++j) {
        p *= x;
        if (p == one) return false;
    }
    return true;
}
} // namespace detail

inline EvalContext sample_context(int N, const std::vector<int>& r, int trunc_bound,
                                  std::uint64_t seed, Mode mode) {
    if (N < 1 || (int)r.size() != N) throw math_error("bad framing vector");
    EvalContext ctx;
    ctx.N = N;
    ctx.r = r;
    ctx.mode = mode;
    ctx.seed = seed;
    ctx.trunc_bound = trunc_bound;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);

    int bound = 2 * trunc_bound + 2;
    const int budget = 256;

    auto sample_checked = [&](auto&& ok) {
        for (int tries = 0; tries < budget; ++tries) {
            Scalar v = detail::sample_value(rng, mode);
            if (!v.is_zero() && ok(v)) return v;
        }
        throw math_error("sample_context: retry budget exhausted");
    };

    ctx.s = sample_checked([&](const Scalar& v) {
        return detail::no_small_root_of_unity(v * v, bound);
    });
    ctx.t = sample_checked([&](const Scalar& v) {
        return detail::no_small_root_of_unity(v, bound);
    });
    ctx.kappa = sample_checked([&](const Scalar& v) {
        return detail::no_small_root_of_unity(v.pow(N), bound);
    });

    ctx.e.resize(N);
    ctx.mu.resize(N);
    ctx.nu.resize(N);
    std::vector<Scalar> all_e;
    for (int i = 0; i < N; ++i) {
        for (int a = 0; a < r[i]; ++a) {
            Scalar v = sample_checked([&](const Scalar& cand) {
                for (const auto& prev : all_e)
                    if (prev == cand) return false;
                return true;
            });
            all_e.push_back(v);
            ctx.e[i].push_back(v);
            ctx.mu[i].push_back(sample_checked([](const Scalar&) { return true; }));
            ctx.nu[i].push_back(sample_checked([](const Scalar&) { return true; }));
        }
    }
    return ctx;
}

// Lemma check: -Res_{u=0} - Res_{u=infty} of (du/u) prod (1-u z_k)/(1-u w_k)
// equals prod z_k / prod w_k - 1.  Both residues are computed by brute-force
// truncated Laurent expansion (u -> 1/v at infinity), not from the closed form.
inline bool residue_sum_check(const std::vector<Scalar>& z, const std::vector<Scalar>& w) {
    if (z.size() != w.size() || z.empty()) throw math_error("residue_sum_check: |z| != |w| or empty");
    size_t K = z.size();
    for (size_t i = 0; i < K; ++i)
        for (size_t j = i + 1; j < K; ++j)
            if (w[i] == w[j]) throw math_error("residue_sum_check: repeated pole");
    for (const auto& wk : w)
        if (wk.is_zero()) throw math_error("residue_sum_check: zero pole");

    Scalar one = z[0].unit(), zero = one - one;
    int ord = (int)K + 1; // plenty for the constant term after products
    auto mul_trunc = [&](std::vector<Scalar> a, const std::vector<Scalar>& b) {
        std::vector<Scalar> r(ord, zero);
        for (int i = 0; i < ord; ++i)
            for (int j = 0; i + j < ord && j < (int)b.size(); ++j)
                r[i + j] += a[i] * b[j];
        return r;
    };

    // Res_{u=0}: constant term of prod (1-u z)/(1-u w)
    std::vector<Scalar> f(ord, zero);
    f[0] = one;
    for (size_t k = 0; k < K; ++k) {
        std::vector<Scalar> lin(ord, zero), geo(ord, zero);
        lin[0] = one;
        if (ord > 1) lin[1] = -z[k];
        Scalar p = one;
        for (int j = 0; j < ord; ++j) {
            geo[j] = p;
            p *= w[k];
        }
        f = mul_trunc(mul_trunc(f, lin), geo);
    }
    Scalar res0 = f[0];

    // Res_{u=infty} via u = 1/v: -Res_{v=0} of (dv/v) prod (v - z)/(v - w)
    std::vector<Scalar> g(ord, zero);
    g[0] = one;
    for (size_t k = 0; k < K; ++k) {
        std::vector<Scalar> lin(ord, zero), geo(ord, zero);
        lin[0] = -z[k];
        if (ord > 1) lin[1] = one;
        // 1/(v - w) = -(1/w) * 1/(1 - v/w)
        Scalar winv = w[k].inv();
        Scalar p = -winv;
        for (int j = 0; j < ord; ++j) {
            geo[j] = p;
            p *= winv;
        }
        g = mul_trunc(mul_trunc(g, lin), geo);
    }
    Scalar res_inf = -g[0];

    Scalar lhs = -res0 - res_inf;
    Scalar rhs = one;
    for (size_t k = 0; k < K; ++k) rhs *= z[k] / w[k];
    rhs -= one;
    return lhs == rhs;
}

} // namespace saw
