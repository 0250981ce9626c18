#pragma once

/*
 * Handsaw (type A_1) partition functions via torus fixed-point localization.
 * Fixed points of M^{+-}(r0, r1; n) are compositions k of n indexed by the
 * co-framing set J1 = {r0+1..r} (plus side) resp. the framing set
 * J0 = {1..r0} (minus side).  Weights live in Z[q^{+-1}, e^{+-1}, mu^{+-1}];
 * the raw tangent character from the quiver formula
 *
 *   T = Hom(V,V) q + Hom(W0,V) + Hom(V,W1) q - Hom(V,V)
 *
 * is the single source of truth; the row-product closed forms (tm+-), the
 * explicit hypergeometric sums, and the Borel-transformed fundamental sums
 * are all validated against it in the test suite.
 */

#include <cstdint>
#include <map>
#include <vector>
#include "saw/chainsaw.hpp"
#include "saw/context.hpp"
#include "saw/pseries.hpp"
#include "saw/report.hpp"

namespace saw {

enum class HsSide { Plus, Minus };

struct HsContext {
    int r0 = 0, r1 = 0;
    Mode mode = Mode::PrimeField;
    std::uint64_t seed = 0;
    Scalar q, t;
    std::vector<Scalar> e, mu; // flat index: J0 = [0..r0), J1 = [r0..r)

    int r() const { return r0 + r1; }
};

inline HsContext sample_hs_context(int r0, int r1, int trunc_bound, std::uint64_t seed,
                                   Mode mode) {
    if (r0 < 0 || r1 < 0 || r0 + r1 < 1) throw math_error("bad handsaw framing");
    HsContext ctx;
    ctx.r0 = r0;
    ctx.r1 = r1;
    ctx.mode = mode;
    ctx.seed = seed;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL);

    int bound = 2 * trunc_bound + 2;
    const int budget = 256;
    auto sample_checked = [&](auto&& ok) {
        for (int tries = 0; tries < budget; ++tries) {
            Scalar v = detail::sample_value(rng, mode);
            if (!v.is_zero() && ok(v)) return v;
        }
        throw math_error("sample_hs_context: retry budget exhausted");
    };

    ctx.q = sample_checked([&](const Scalar& v) {
        return detail::no_small_root_of_unity(v, bound);
    });
    ctx.t = sample_checked([&](const Scalar& v) {
        return detail::no_small_root_of_unity(v, bound);
    });
    for (int c = 0; c < r0 + r1; ++c) {
        Scalar v = sample_checked([&](const Scalar& cand) {
            for (const auto& prev : ctx.e)
                if (prev == cand) return false;
            return true;
        });
        ctx.e.push_back(v);
        ctx.mu.push_back(sample_checked([](const Scalar&) { return true; }));
    }
    return ctx;
}

struct HsWeight {
    int k = 0; // q exponent
    std::vector<int> e, mu;

    explicit HsWeight(int n_comps = 0) : e(n_comps, 0), mu(n_comps, 0) {}
    auto operator<=>(const HsWeight&) const = default;
};

using HsCharacter = std::map<HsWeight, int>;

namespace detail {

inline HsWeight hw_mul(const HsWeight& a, const HsWeight& b) {
    HsWeight r = a;
    r.k += b.k;
    for (size_t c = 0; c < r.e.size(); ++c) {
        r.e[c] += b.e[c];
        r.mu[c] += b.mu[c];
    }
    return r;
}

inline HsWeight hw_inv(const HsWeight& a) {
    HsWeight r = a;
    r.k = -r.k;
    for (size_t c = 0; c < r.e.size(); ++c) {
        r.e[c] = -r.e[c];
        r.mu[c] = -r.mu[c];
    }
    return r;
}

inline void hw_add(HsCharacter& ch, const HsWeight& w, int mult) {
    if (mult == 0) return;
    auto [it, fresh] = ch.emplace(w, mult);
    if (!fresh) {
        it->second += mult;
        if (it->second == 0) ch.erase(it);
    }
}

} // namespace detail

// all compositions of n into `parts` nonnegative entries
inline std::vector<std::vector<int>> hs_fixed_points(int parts, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == parts) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        if (pos == parts - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    if (parts == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    rec(0, n);
    return out;
}

// weights of the tautological fiber V at the fixed point k (eqs taut+-):
// plus: e_a q^i (a in J1, i = 1..k_a); minus: e_a q^{-i+1} (a in J0)
inline HsCharacter hs_taut(HsSide side, const std::vector<int>& k, int r0, int r1) {
    int r = r0 + r1;
    int offset = (side == HsSide::Plus) ? r0 : 0;
    HsCharacter V;
    for (size_t a = 0; a < k.size(); ++a)
        for (int i = 1; i <= k[a]; ++i) {
            HsWeight w(r);
            w.e[offset + (int)a] = 1;
            w.k = (side == HsSide::Plus) ? i : -i + 1;
            detail::hw_add(V, w, 1);
        }
    return V;
}

// raw tangent / adjoint class character: Hom(V,V) q + Hom(W0,V) + Hom(V,W1) q - Hom(V,V)
inline HsCharacter hs_tangent_raw(HsSide side, const std::vector<int>& k, int r0, int r1) {
    int r = r0 + r1;
    HsCharacter V = hs_taut(side, k, r0, r1);
    HsCharacter T;
    HsWeight qw(r);
    qw.k = 1;
    for (const auto& [wa, ma] : V)
        for (const auto& [wb, mb] : V) {
            HsWeight h = detail::hw_mul(wa, detail::hw_inv(wb));
            detail::hw_add(T, detail::hw_mul(h, qw), ma * mb);
            detail::hw_add(T, h, -ma * mb);
        }
    for (const auto& [wv, m] : V) {
        for (int a = 0; a < r0; ++a) { // Hom(W0, V) = V W0^bar
            HsWeight w0(r);
            w0.e[a] = -1;
            detail::hw_add(T, detail::hw_mul(wv, w0), m);
        }
        for (int a = r0; a < r; ++a) { // Hom(V, W1) q = W1 V^bar q
            HsWeight w1(r);
            w1.e[a] = 1;
            w1.k = 1;
            detail::hw_add(T, detail::hw_mul(w1, detail::hw_inv(wv)), m);
        }
    }
    return T;
}

// closed form (tm+-): plus: sum_{a,b in J1} e_a^{-1} e_b q^{k_b-k_a+1..k_b}
// + sum_{a in J0, b in J1} e_a^{-1} e_b q^{1..k_b}; minus mirrors with e_a e_b^{-1}
inline HsCharacter hs_tangent_closed(HsSide side, const std::vector<int>& k, int r0, int r1) {
    int r = r0 + r1;
    int offset = (side == HsSide::Plus) ? r0 : 0;
    int other_off = (side == HsSide::Plus) ? 0 : r0;
    int other_cnt = (side == HsSide::Plus) ? r0 : r1;
    HsCharacter T;
    for (size_t a = 0; a < k.size(); ++a)
        for (size_t b = 0; b < k.size(); ++b)
            for (int l = k[b] - k[a] + 1; l <= k[b]; ++l) {
                HsWeight w(r);
                int sa = offset + (int)a, sb = offset + (int)b;
                if (side == HsSide::Plus) {
                    w.e[sa] -= 1;
                    w.e[sb] += 1;
                } else {
                    w.e[sa] += 1;
                    w.e[sb] -= 1;
                }
                w.k = l;
                detail::hw_add(T, w, 1);
            }
    for (int a = 0; a < other_cnt; ++a)
        for (size_t b = 0; b < k.size(); ++b)
            for (int i = 1; i <= k[b]; ++i) {
                HsWeight w(r);
                int sa = other_off + a, sb = offset + (int)b;
                if (side == HsSide::Plus) {
                    w.e[sa] -= 1;
                    w.e[sb] += 1;
                } else {
                    w.e[sa] += 1;
                    w.e[sb] -= 1;
                }
                w.k = i;
                detail::hw_add(T, w, 1);
            }
    return T;
}

// matter class character: adjoint (cls1) coincides with the tangent character;
// fundamental (cls2) = sum_{a in J0} V mu_a/q + sum_{a in J1} V^dual q/mu_a
inline HsCharacter hs_class(HsSide side, MatterClass cls, const std::vector<int>& k,
                            int r0, int r1) {
    if (cls == MatterClass::Adjoint) return hs_tangent_raw(side, k, r0, r1);
    int r = r0 + r1;
    HsCharacter V = hs_taut(side, k, r0, r1);
    HsCharacter L;
    for (const auto& [wv, m] : V) {
        for (int a = 0; a < r0; ++a) {
            HsWeight tw(r);
            tw.mu[a] = 1;
            tw.k = -1;
            detail::hw_add(L, detail::hw_mul(wv, tw), m);
        }
        for (int a = r0; a < r; ++a) {
            HsWeight tw(r);
            tw.mu[a] = -1;
            tw.k = 1;
            detail::hw_add(L, detail::hw_mul(detail::hw_inv(wv), tw), m);
        }
    }
    return L;
}

inline Scalar hs_weight_value(const HsWeight& w, const HsContext& ctx) {
    Scalar v = ctx.q.pow(w.k);
    for (size_t c = 0; c < w.e.size(); ++c) {
        if (w.e[c]) v *= ctx.e[c].pow(w.e[c]);
        if (w.mu[c]) v *= ctx.mu[c].pow(w.mu[c]);
    }
    return v;
}

// Eu^t(Lambda) = prod_w (1 - t w^{-1})^{mult(w)}
inline Scalar hs_eu_t(const HsCharacter& ch, const HsContext& ctx, const Scalar& t_val) {
    Scalar one = ctx.q.unit(), num = one, den = one;
    for (const auto& [w, m] : ch) {
        Scalar f = one - t_val * hs_weight_value(detail::hw_inv(w), ctx);
        if (m > 0) {
            for (int i = 0; i < m; ++i) num *= f;
        } else {
            if (f.is_zero()) throw resample_signal("vanishing Euler factor in denominator");
            for (int i = 0; i < -m; ++i) den *= f;
        }
    }
    return num / den;
}

// Z series by localization; for the fundamental class t is substituted to 1
inline PSeries<Scalar> hs_localization(HsSide side, MatterClass cls, int trunc,
                                       const HsContext& ctx, const Scalar& t_val) {
    Scalar one = ctx.q.unit();
    Scalar tv = (cls == MatterClass::Fundamental) ? one : t_val;
    int parts = (side == HsSide::Plus) ? ctx.r1 : ctx.r0;
    PSeries<Scalar> Z = PSeries<Scalar>::zero(1, trunc, one);
    for (int n = 0; n <= trunc; ++n)
        for (const auto& k : hs_fixed_points(parts, n)) {
            Scalar den = hs_eu_t(hs_tangent_raw(side, k, ctx.r0, ctx.r1), ctx, one);
            if (den.is_zero()) throw resample_signal("vanishing tangent Euler class");
            Scalar num = hs_eu_t(hs_class(side, cls, k, ctx.r0, ctx.r1), ctx, tv);
            Z.add_term({n}, num / den);
        }
    return Z;
}

namespace detail {

inline Scalar poch_ratio(const Scalar& num_base, const Scalar& den_base, const Scalar& q,
                         long k) {
    Scalar den = finite_poch(den_base, q, k);
    if (den.is_zero()) throw resample_signal("vanishing Pochhammer denominator");
    return finite_poch(num_base, q, k) / den;
}

} // namespace detail

// Theorem explicit1: the adjoint generating series as row-product sums
inline PSeries<Scalar> hs_z_adj_explicit(HsSide side, int trunc, const HsContext& ctx) {
    Scalar one = ctx.q.unit(), q = ctx.q, t = ctx.t;
    int parts = (side == HsSide::Plus) ? ctx.r1 : ctx.r0;
    int offset = (side == HsSide::Plus) ? ctx.r0 : 0;
    int other_off = (side == HsSide::Plus) ? 0 : ctx.r0;
    int other_cnt = (side == HsSide::Plus) ? ctx.r0 : ctx.r1;
    Scalar pref = t.pow(other_cnt);
    PSeries<Scalar> Z = PSeries<Scalar>::zero(1, trunc, one);
    for (int n = 0; n <= trunc; ++n)
        for (const auto& k : hs_fixed_points(parts, n)) {
            Scalar term = pref.pow(n);
            for (int a = 0; a < parts; ++a)
                for (int b = 0; b < parts; ++b) {
                    Scalar ratio = (side == HsSide::Plus)
                                       ? ctx.e[offset + a] / ctx.e[offset + b]
                                       : ctx.e[offset + b] / ctx.e[offset + a];
                    Scalar base = q.pow(-k[b]) * ratio;
                    term *= detail::poch_ratio(t * base, base, q, k[a]);
                }
            for (int b = 0; b < parts; ++b)
                for (int a = 0; a < other_cnt; ++a) {
                    Scalar ratio = (side == HsSide::Plus)
                                       ? ctx.e[offset + b] / ctx.e[other_off + a]
                                       : ctx.e[other_off + a] / ctx.e[offset + b];
                    term *= detail::poch_ratio(q * ratio / t, q * ratio, q, k[b]);
                }
            Z.add_term({n}, term);
        }
    return Z;
}

// eqs (hati+-): the Borel-inverted fundamental series B^{-1} Z_fund
inline PSeries<Scalar> hs_z_fund_hat(HsSide side, int trunc, const HsContext& ctx) {
    Scalar one = ctx.q.unit(), q = ctx.q;
    int r = ctx.r();
    int parts = (side == HsSide::Plus) ? ctx.r1 : ctx.r0;
    int offset = (side == HsSide::Plus) ? ctx.r0 : 0;
    Scalar pref = -one;
    if (side == HsSide::Plus) {
        pref = -q.pow(ctx.r0);
        for (int a = 0; a < ctx.r0; ++a) pref /= ctx.e[a] * ctx.mu[a];
    } else {
        for (int a = ctx.r0; a < r; ++a) pref *= ctx.e[a] * ctx.mu[a];
    }
    PSeries<Scalar> Z = PSeries<Scalar>::zero(1, trunc, one);
    for (int n = 0; n <= trunc; ++n)
        for (const auto& k : hs_fixed_points(parts, n)) {
            Scalar term = pref.pow(n);
            // Vandermonde ratio Delta(q^k x)/Delta(x), x = e (plus) or e^{-1} (minus)
            for (int a = 0; a < parts; ++a)
                for (int b = a + 1; b < parts; ++b) {
                    Scalar xa = ctx.e[offset + a], xb = ctx.e[offset + b];
                    if (side == HsSide::Minus) {
                        xa = xa.inv();
                        xb = xb.inv();
                    }
                    term *= (q.pow(k[a]) * xa - q.pow(k[b]) * xb) / (xa - xb);
                }
            for (int b = 0; b < parts; ++b)
                for (int a = 0; a < r; ++a) {
                    Scalar num_base = (side == HsSide::Plus)
                                          ? ctx.e[offset + b] * ctx.mu[a]
                                          : q / (ctx.e[offset + b] * ctx.mu[a]);
                    Scalar den_base = (side == HsSide::Plus)
                                          ? q * ctx.e[offset + b] / ctx.e[a]
                                          : q * ctx.e[a] / ctx.e[offset + b];
                    term *= detail::poch_ratio(num_base, den_base, q, k[b]);
                }
            Z.add_term({n}, term);
        }
    return Z;
}

// wall-crossing factor of Theorem main1 as numerator/denominator products:
// num = (q t^{r0} p; q,t)(t^{r1+1} p; q,t), den = (t^{r0+1} p; q,t)(q t^{r1} p; q,t)
inline void hs_main1_parts(int trunc, const HsContext& ctx, PSeries<Scalar>& num,
                           PSeries<Scalar>& den) {
    auto mono = [&](const Scalar& c) { return PSeries<Scalar>::monomial(1, trunc, {1}, c); };
    PSeries<Scalar> qq = PSeries<Scalar>::constant(1, trunc, ctx.q);
    PSeries<Scalar> tt = PSeries<Scalar>::constant(1, trunc, ctx.t);
    num = inf_poch(mono(ctx.q * ctx.t.pow(ctx.r0)), {qq, tt}) *
          inf_poch(mono(ctx.t.pow(ctx.r1 + 1)), {qq, tt});
    den = inf_poch(mono(ctx.t.pow(ctx.r0 + 1)), {qq, tt}) *
          inf_poch(mono(ctx.q * ctx.t.pow(ctx.r1)), {qq, tt});
}

// eq (adjfactor) left-hand side: prod_{s=1}^{r1-r0} (q t^{r0+s-1} p)_inf / (t^{r0+s} p)_inf
inline PSeries<Scalar> hs_adj_factor_single(int trunc, const HsContext& ctx) {
    if (ctx.r1 < ctx.r0) throw math_error("adjfactor single-product form needs r1 >= r0");
    Scalar one = ctx.q.unit();
    auto mono = [&](const Scalar& c) { return PSeries<Scalar>::monomial(1, trunc, {1}, c); };
    PSeries<Scalar> qq = PSeries<Scalar>::constant(1, trunc, ctx.q);
    PSeries<Scalar> f = PSeries<Scalar>::one(1, trunc, one);
    for (int s = 1; s <= ctx.r1 - ctx.r0; ++s) {
        f *= inf_poch(mono(ctx.q * ctx.t.pow(ctx.r0 + s - 1)), {qq});
        f *= inf_poch(mono(ctx.t.pow(ctx.r0 + s)), {qq}).invert();
    }
    return f;
}

inline VerdictReport verify_hs_main1(int trunc, const HsContext& ctx) {
    WallTimer timer;
    auto Zp = hs_localization(HsSide::Plus, MatterClass::Adjoint, trunc, ctx, ctx.t);
    auto Zm = hs_localization(HsSide::Minus, MatterClass::Adjoint, trunc, ctx, ctx.t);
    PSeries<Scalar> num(1, trunc, ctx.q.unit()), den = num;
    hs_main1_parts(trunc, ctx, num, den);
    auto rep = compare_series("main1", {{"r0", ctx.r0}, {"r1", ctx.r1}, {"order", trunc}},
                              Zp * den, Zm * num);
    rep.wall_time_ms = timer.ms();
    return rep;
}

inline VerdictReport verify_hs_main2(int trunc, const HsContext& ctx) {
    WallTimer timer;
    Scalar one = ctx.q.unit();
    Scalar A = one, B = ctx.q.pow(ctx.r0);
    for (int a = 0; a < ctx.r0; ++a) B /= ctx.e[a] * ctx.mu[a];
    for (int a = ctx.r0; a < ctx.r(); ++a) A *= ctx.e[a] * ctx.mu[a];
    auto Ip = hs_z_fund_hat(HsSide::Plus, trunc, ctx);
    auto Im = hs_z_fund_hat(HsSide::Minus, trunc, ctx);
    auto mono = [&](const Scalar& c) { return PSeries<Scalar>::monomial(1, trunc, {1}, c); };
    PSeries<Scalar> qq = PSeries<Scalar>::constant(1, trunc, ctx.q);
    auto num = inf_poch(mono(-A), {qq});
    auto den = inf_poch(mono(-B), {qq});
    auto rep = compare_series("main2", {{"r0", ctx.r0}, {"r1", ctx.r1}, {"order", trunc}},
                              Ip * den, Im * num);
    rep.wall_time_ms = timer.ms();
    return rep;
}

// Kajihara-Noumi multiple basic hypergeometric series phi^{m,n} (eq. multhyp);
// the series variable carries the extra factor u_coef per power
inline PSeries<Scalar> kajihara_phi(const std::vector<Scalar>& a, const std::vector<Scalar>& x,
                                    const std::vector<Scalar>& b, const std::vector<Scalar>& c,
                                    const Scalar& u_coef, int trunc, const Scalar& q) {
    if (a.size() != x.size() || b.size() != c.size()) throw math_error("kajihara_phi: arity");
    int m = (int)x.size(), n = (int)b.size();
    Scalar one = q.unit();
    PSeries<Scalar> Z = PSeries<Scalar>::zero(1, trunc, one);
    for (int d = 0; d <= trunc; ++d)
        for (const auto& k : hs_fixed_points(m, d)) {
            Scalar term = u_coef.pow(d);
            for (int al = 0; al < m; ++al)
                for (int be = al + 1; be < m; ++be)
                    term *= (q.pow(k[al]) * x[al] - q.pow(k[be]) * x[be]) / (x[al] - x[be]);
            for (int al = 0; al < m; ++al)
                for (int be = 0; be < m; ++be)
                    term *= detail::poch_ratio(a[al] * x[be] / x[al], q * x[be] / x[al], q, k[be]);
            for (int be = 0; be < m; ++be)
                for (int al = 0; al < n; ++al)
                    term *= detail::poch_ratio(x[be] * b[al], x[be] * c[al], q, k[be]);
            Z.add_term({d}, term);
        }
    return Z;
}

// eq (kajihara) Euler transformation, cross-multiplied:
// phi^{m,n}(a | b y; x | c y; u) (u)_inf = (abu/c^n)_inf phi^{n,m}(c/b | cx/a; y | cx; abu/c^n)
inline VerdictReport verify_kajihara(const std::vector<Scalar>& a, const std::vector<Scalar>& x,
                                     const std::vector<Scalar>& b, const std::vector<Scalar>& y,
                                     const Scalar& c, const Scalar& u_coef, int trunc,
                                     const Scalar& q) {
    WallTimer timer;
    int m = (int)x.size(), n = (int)y.size();
    Scalar ab = c.unit();
    for (const auto& v : a) ab *= v;
    for (const auto& v : b) ab *= v;
    Scalar u2 = ab * u_coef / c.pow(n);

    std::vector<Scalar> by, cy, cb, cxa, cx;
    for (int i = 0; i < n; ++i) {
        by.push_back(b[i] * y[i]);
        cy.push_back(c * y[i]);
        cb.push_back(c / b[i]);
    }
    for (int i = 0; i < m; ++i) {
        cxa.push_back(c * x[i] / a[i]);
        cx.push_back(c * x[i]);
    }
    auto lhs = kajihara_phi(a, x, by, cy, u_coef, trunc, q);
    auto rhs = kajihara_phi(cb, y, cxa, cx, u2, trunc, q);
    auto mono = [&](const Scalar& cc) { return PSeries<Scalar>::monomial(1, trunc, {1}, cc); };
    PSeries<Scalar> qq = PSeries<Scalar>::constant(1, trunc, q);
    auto rep = compare_series("kajihara", {{"m", m}, {"n", n}, {"order", trunc}},
                              lhs * inf_poch(mono(u_coef), {qq}),
                              rhs * inf_poch(mono(u2), {qq}));
    rep.wall_time_ms = timer.ms();
    return rep;
}

// F_{m,n}(x, y; p) from the proof of Theorem noumi (series variable scaled by p_coef)
inline PSeries<Scalar> noumi_f(const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                               const Scalar& p_coef, const Scalar& tau, int trunc,
                               const Scalar& q) {
    int m = (int)x.size(), n = (int)y.size();
    Scalar one = q.unit();
    PSeries<Scalar> Z = PSeries<Scalar>::zero(1, trunc, one);
    for (int d = 0; d <= trunc; ++d)
        for (const auto& k : hs_fixed_points(m, d)) {
            Scalar term = p_coef.pow(d);
            for (int al = 0; al < m; ++al)
                for (int be = 0; be < m; ++be) {
                    Scalar base = q.pow(-k[be]) * x[al] / x[be];
                    term *= detail::poch_ratio(q * base / tau, base, q, k[al]);
                }
            for (int be = 0; be < m; ++be)
                for (int al = 0; al < n; ++al)
                    term *= detail::poch_ratio(x[be] * y[al], q * x[be] * y[al] / tau, q, k[be]);
            Z.add_term({d}, term);
        }
    return Z;
}

// eq (noumi1) for r0 = r1, eq (noumi2) for r0 < r1, both in the F-normalized form
// F_{r1,r0}(x,y;p) = prod_{s=1}^{r1-r0} (q^s p/tau^{s-1})_inf/(q^s p/tau^s)_inf
//                    * F_{r0,r1}(y,x; (q/tau)^{r1-r0} p)
inline VerdictReport verify_noumi(const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                                  const Scalar& tau, int trunc, const Scalar& q) {
    WallTimer timer;
    int r1 = (int)x.size(), r0 = (int)y.size();
    if (r0 > r1) throw math_error("verify_noumi requires r0 <= r1");
    Scalar one = q.unit();
    auto lhs = noumi_f(x, y, one, tau, trunc, q);
    auto rhs = noumi_f(y, x, (q / tau).pow(r1 - r0), tau, trunc, q);
    auto mono = [&](const Scalar& cc) { return PSeries<Scalar>::monomial(1, trunc, {1}, cc); };
    PSeries<Scalar> qq = PSeries<Scalar>::constant(1, trunc, q);
    PSeries<Scalar> num = PSeries<Scalar>::one(1, trunc, one), den = num;
    for (int s = 1; s <= r1 - r0; ++s) {
        num *= inf_poch(mono(q.pow(s) / tau.pow(s - 1)), {qq});
        den *= inf_poch(mono(q.pow(s) / tau.pow(s)), {qq});
    }
    auto rep = compare_series((r0 == r1) ? "lsw" : "noumi",
                              {{"r0", r0}, {"r1", r1}, {"order", trunc}},
                              lhs * den, rhs * num);
    rep.wall_time_ms = timer.ms();
    return rep;
}

// Lemma elem: prod 1/(q^{-k_b} x_a/x_b)_{k_a} = (-1)^{|k|} q^{|k|(|k|+1)/2}
//             * prod_{a<b} (q^{k_a}x_a - q^{k_b}x_b)/(x_a - x_b) * prod 1/(q x_a/x_b)_{k_a}
inline bool lemma_elem_check(const std::vector<Scalar>& x, const std::vector<int>& k,
                             const Scalar& q) {
    if (x.size() != k.size()) throw math_error("lemma_elem_check: arity");
    int m = (int)x.size();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (x[a] == x[b]) throw math_error("lemma_elem_check: coincident x");
    Scalar one = q.unit(), lhs = one, rhs = one;
    long tot = 0;
    for (int v : k) tot += v;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            lhs /= finite_poch(q.pow(-k[b]) * x[a] / x[b], q, k[a]);
            rhs /= finite_poch(q * x[a] / x[b], q, k[a]);
        }
    rhs *= (tot % 2 ? -one : one) * q.pow(tot * (tot + 1) / 2);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            rhs *= (q.pow(k[a]) * x[a] - q.pow(k[b]) * x[b]) / (x[a] - x[b]);
    return lhs == rhs;
}

// eq (stvsco), corrected: the plus tangent character of (r0, r1) at k equals the
// minus tangent character of the mirrored framing (r1, r0) at the same k after
// swapping the two framing groups and inverting all e (the printed same-framing
// statement fails already at (r0, r1) = (1, 1))
inline bool hs_mirror_tangent_check(const std::vector<int>& k, int r0, int r1) {
    HsCharacter plus = hs_tangent_raw(HsSide::Plus, k, r0, r1);
    HsCharacter minus = hs_tangent_raw(HsSide::Minus, k, r1, r0);
    int r = r0 + r1;
    HsCharacter mapped;
    for (const auto& [w, m] : minus) {
        HsWeight v(r);
        v.k = w.k;
        for (int c = 0; c < r; ++c) {
            int src = (c < r1) ? r0 + c : c - r1; // J0' <- J1, J1' <- J0
            v.e[src] = -w.e[c];
            v.mu[src] = -w.mu[c];
        }
        detail::hw_add(mapped, v, m);
    }
    return plus == mapped;
}

} // namespace saw
