#pragma once

/*
 * Handsaw wall-crossing: the iterated-residue coefficients a_I(r) attached to
 * Dec-chains, the adjoint recursion relating H+_n and H-_n, the vanishing of
 * the chain sums for balanced framings, and the Borel-side recursion (check2)
 * with its composition-chain closed form.
 */

#include <vector>
#include "saw/handsaw.hpp"
#include "saw/partitions.hpp"

namespace saw {

// gamma_d(t) = t^d (q/t; q)_d / (q; q)_d
template <class K>
K gamma_d(int d, const K& q, const K& t) {
    if (d < 1) throw math_error("gamma_d: d >= 1 required");
    return t.pow(d) * finite_poch(q / t, q, d) / finite_poch(q, q, d);
}

// a_I(r) = prod_i t^{d_i} [d_i - 1]_t!/(t-1) (q/t)_{d_i}/(q)_{d_i}
//          (t^{s(I^(i), I^{>i}) + r1 d_i} - t^{s(I^{>i}, I^(i)) + r0 d_i})
// where I^{>i} is the union of I^infty with the later blocks; the n = 1 base
// cases force the extra t^{r0 d_i} in both exponents
inline Scalar a_coeff(const DecChain& chain, int r0, int r1, const Scalar& q,
                      const Scalar& t) {
    Scalar one = q.unit(), r = one;
    int j = (int)chain.blocks.size();
    for (int i = 0; i < j; ++i) {
        const auto& blk = chain.blocks[i];
        int d = (int)blk.size();
        std::vector<int> later = chain.inf;
        for (int k = i + 1; k < j; ++k)
            later.insert(later.end(), chain.blocks[k].begin(), chain.blocks[k].end());
        long s_out = s_stat(blk, later);
        long s_in = s_stat(later, blk);
        r *= t.pow(d) * t_fact_full(d - 1, t) / (t - one);
        r *= finite_poch(q / t, q, d) / finite_poch(q, q, d);
        r *= t.pow(s_out + (long)r1 * d) - t.pow(s_in + (long)r0 * d);
    }
    return r;
}

// eq (adj), sign-free once a_I carries the corrected exponents:
// H+_n - H-_n = sum_j sum_{Dec_j^n} [n-|d|]_t!/[n]_t! a_I(r) H-_{n-|d|}
inline VerdictReport verify_adj_recursion(int n, const HsContext& ctx) {
    WallTimer timer;
    Scalar one = ctx.q.unit();
    auto Hp = hs_z_adj_explicit(HsSide::Plus, n, ctx);
    auto Hm = hs_z_adj_explicit(HsSide::Minus, n, ctx);
    Scalar lhs = Hp.coeff({n}) - Hm.coeff({n});
    Scalar rhs = one - one;
    Scalar nfact = t_fact_full(n, ctx.t);
    for (int j = 1; j <= n; ++j)
        for (const auto& chain : enumerate_dec(n, j)) {
            int moved = chain.moved();
            rhs += t_fact_full(n - moved, ctx.t) / nfact *
                   a_coeff(chain, ctx.r0, ctx.r1, ctx.q, ctx.t) * Hm.coeff({n - moved});
        }
    VerdictReport rep;
    rep.identity = "adj-recursion";
    rep.params = {{"r0", ctx.r0}, {"r1", ctx.r1}, {"n", n}};
    if (!(lhs == rhs)) {
        rep.pass = false;
        rep.mismatch_index = {n};
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
    }
    rep.wall_time_ms = timer.ms();
    return rep;
}

// chain sums grouped by |d|: out[d-1] = sum_j eps^j sum over chains with |d|
// moved elements of [n-d]_t!/[n]_t! a_I(r); alternate restores the (-1)^j of
// the vanishing lemma as displayed
inline std::vector<Scalar> dec_chain_sums(int n, int r0, int r1, const Scalar& q,
                                          const Scalar& t, bool alternate = false) {
    Scalar one = q.unit();
    Scalar nfact = t_fact_full(n, t);
    std::vector<Scalar> out((size_t)n, one - one);
    for (int j = 1; j <= n; ++j) {
        Scalar sign = (alternate && j % 2) ? -one : one;
        for (const auto& chain : enumerate_dec(n, j)) {
            int moved = chain.moved();
            out[moved - 1] += sign * t_fact_full(n - moved, t) / nfact *
                              a_coeff(chain, r0, r1, q, t);
        }
    }
    return out;
}

// Lemma vanish: for r0 = r1 every fixed-|d| chain sum is zero (with or
// without the alternating sign)
inline bool lemma_vanish_check(int n, const Scalar& q, const Scalar& t, bool alternate = false) {
    for (const auto& s : dec_chain_sums(n, 0, 0, q, t, alternate))
        if (!s.is_zero()) return false;
    return true;
}

// strictly increasing chains 0 = c_0 < c_1 < ... < c_j = l (c_0 omitted)
inline std::vector<std::vector<int>> increasing_chains(int l) {
    std::vector<std::vector<int>> out;
    if (l < 1) return out;
    for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
        std::vector<int> c;
        for (int v = 1; v < l; ++v)
            if (mask & (1u << (v - 1))) c.push_back(v);
        c.push_back(l);
        out.push_back(c);
    }
    return out;
}

// sum over chains of prod_i (1/c_i)(1 - x^{c_i - c_{i-1}})/(1 - q^{c_i - c_{i-1}})
inline Scalar chain_sum(int l, const Scalar& x, const Scalar& q) {
    Scalar one = q.unit(), sum = one - one;
    for (const auto& c : increasing_chains(l)) {
        Scalar term = one;
        int prev = 0;
        for (int ci : c) {
            int gap = ci - prev;
            term *= (one - x.pow(gap)) / ((one - q.pow(gap)) * Scalar::integer(ci, q.mode()));
            prev = ci;
        }
        sum += term;
    }
    return sum;
}

// closed form of the chain sum at x = 1/B: (1/B; q)_l / (q; q)_l
inline bool chain_sum_closed_form(int l, const Scalar& B, const Scalar& q) {
    return chain_sum(l, B.inv(), q) == finite_poch(B.inv(), q, l) / finite_poch(q, q, l);
}

// eq (check2): Ihat+_n - Ihat-_n = sum_l Ihat-_{n-l} (-B)^l chain_sum(l, A/B)
// with B = q^{r0}/(mu_1 e_1 ... mu_{r0} e_{r0}), A = mu_{r0+1} e_{r0+1} ... mu_r e_r
inline VerdictReport verify_check2(int n, const HsContext& ctx) {
    WallTimer timer;
    Scalar one = ctx.q.unit();
    Scalar A = one, B = ctx.q.pow(ctx.r0);
    for (int a = 0; a < ctx.r0; ++a) B /= ctx.e[a] * ctx.mu[a];
    for (int a = ctx.r0; a < ctx.r(); ++a) A *= ctx.e[a] * ctx.mu[a];
    auto Ip = hs_z_fund_hat(HsSide::Plus, n, ctx);
    auto Im = hs_z_fund_hat(HsSide::Minus, n, ctx);
    Scalar lhs = Ip.coeff({n}) - Im.coeff({n});
    Scalar rhs = one - one;
    for (int l = 1; l <= n; ++l)
        rhs += Im.coeff({n - l}) * (-B).pow(l) * chain_sum(l, A / B, ctx.q);
    VerdictReport rep;
    rep.identity = "check2";
    rep.params = {{"r0", ctx.r0}, {"r1", ctx.r1}, {"n", n}};
    if (!(lhs == rhs)) {
        rep.pass = false;
        rep.mismatch_index = {n};
        rep.lhs = lhs.str();
        rep.rhs = rhs.str();
    }
    rep.wall_time_ms = timer.ms();
    return rep;
}

} // namespace saw
