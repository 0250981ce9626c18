#pragma once

/*
 * Chainsaw (affine Laumon) partition functions via torus fixed-point
 * localization.  Weights live in the free abelian group on the symbols
 * s = q^{1/2}, kappa, e_{(i,alpha)}, mu_{(i,alpha)}, nu_{(i,alpha)}; a
 * Character is a signed multiset of such weights.  The Gamma_N-graded
 * tangent character, computed from the Jordan-quiver formula
 *
 *   T = V V^bar (kappa + q - 1 - kappa q) + W^bar V + V^bar W kappa q
 *
 * filtered to degree 0 (deg kappa = -1, deg q = 0, deg e_{(i,alpha)} = i),
 * is the single source of truth; the Nekrasov-product closed forms are
 * validated against it in the test suite.
 */

#include <functional>
#include <map>
#include <tuple>
#include <utility>
#include <vector>
#include "saw/context.hpp"
#include "saw/nekrasov.hpp"
#include "saw/partitions.hpp"
#include "saw/pseries.hpp"
#include "saw/report.hpp"
#include "saw/unirational.hpp"

namespace saw {

enum class MatterClass { Adjoint, Fundamental };

struct CWeight {
    int s = 0; // q = s^2; always even outside half-integer contexts
    int k = 0; // kappa exponent
    std::vector<int> e, mu, nu; // flat component index -> exponent

    explicit CWeight(int n_comps = 0) : e(n_comps, 0), mu(n_comps, 0), nu(n_comps, 0) {}
    auto operator<=>(const CWeight&) const = default;
};

using Character = std::map<CWeight, int>;

// flat ordering of framing components: (vertex i, alpha) with i major
struct CompLayout {
    int N = 1;
    std::vector<int> r;
    std::vector<std::pair<int, int>> comps;
    std::vector<int> offset;

    CompLayout(int N_, std::vector<int> r_) : N(N_), r(std::move(r_)) {
        offset.assign(N, 0);
        for (int i = 0; i < N; ++i) {
            offset[i] = (int)comps.size();
            for (int a = 0; a < r[i]; ++a) comps.push_back({i, a});
        }
    }
    int index(int i, int alpha) const { return offset[i] + alpha; }
    int size() const { return (int)comps.size(); }
};

namespace detail {

inline CWeight cw_mul(const CWeight& a, const CWeight& b) {
    CWeight r = a;
    r.s += b.s;
    r.k += b.k;
    for (size_t c = 0; c < r.e.size(); ++c) {
        r.e[c] += b.e[c];
        r.mu[c] += b.mu[c];
        r.nu[c] += b.nu[c];
    }
    return r;
}

inline CWeight cw_inv(const CWeight& a) {
    CWeight r = a;
    r.s = -r.s;
    r.k = -r.k;
    for (size_t c = 0; c < r.e.size(); ++c) {
        r.e[c] = -r.e[c];
        r.mu[c] = -r.mu[c];
        r.nu[c] = -r.nu[c];
    }
    return r;
}

inline void add_weight(Character& ch, const CWeight& w, int mult) {
    if (mult == 0) return;
    auto [it, fresh] = ch.emplace(w, mult);
    if (!fresh) {
        it->second += mult;
        if (it->second == 0) ch.erase(it);
    }
}

} // namespace detail

// deg kappa = -1, deg q = 0, deg e_{(i,alpha)} = i, deg mu = deg nu = 0 (mod N)
inline int weight_degree(const CWeight& w, const CompLayout& L) {
    long d = -(long)w.k;
    for (int c = 0; c < L.size(); ++c) d += (long)w.e[c] * (L.comps[c].first + 1);
    int m = (int)(d % L.N);
    return m < 0 ? m + L.N : m;
}

// graded pieces V_j of the fiber of the tautological bundle at a fixed point:
// stable box (l,m) of (i,alpha) has weight e kappa^{-l+1} q^{-m+1} and color
// i+l-1; co-stable has weight e kappa^l q^m and color i-l (mod N)
inline std::vector<Character> v_decomposition(const PartitionTuple& fp, Stability st) {
    CompLayout L(fp.N, fp.r);
    std::vector<Character> V(fp.N);
    for (int i = 0; i < fp.N; ++i)
        for (int a = 0; a < fp.r[i]; ++a) {
            const Partition& lam = fp.entries[i][a];
            int c = L.index(i, a);
            for (int l = 1; l <= lam.length(); ++l)
                for (int m = 1; m <= lam.row(l); ++m) {
                    CWeight w(L.size());
                    w.e[c] = 1;
                    if (st == Stability::Stable) {
                        w.k = -l + 1;
                        w.s = 2 * (-m + 1);
                    } else {
                        w.k = l;
                        w.s = 2 * m;
                    }
                    detail::add_weight(V[row_color(fp.N, i, l, st)], w, 1);
                }
        }
    return V;
}

inline Character tangent_character(const PartitionTuple& fp, Stability st) {
    CompLayout L(fp.N, fp.r);
    std::vector<CWeight> boxes;
    for (const auto& Vj : v_decomposition(fp, st))
        for (const auto& [w, m] : Vj)
            for (int c = 0; c < m; ++c) boxes.push_back(w);

    Character out;
    auto push = [&](const CWeight& w, int mult) {
        if (weight_degree(w, L) == 0) detail::add_weight(out, w, mult);
    };
    CWeight kap(L.size()), qq(L.size()), kq(L.size());
    kap.k = 1;
    qq.s = 2;
    kq.k = 1;
    kq.s = 2;

    for (const auto& v : boxes)
        for (const auto& w : boxes) {
            CWeight c = detail::cw_mul(v, detail::cw_inv(w));
            push(detail::cw_mul(c, kap), +1);
            push(detail::cw_mul(c, qq), +1);
            push(c, -1);
            push(detail::cw_mul(c, kq), -1);
        }
    for (int c = 0; c < L.size(); ++c) {
        for (const auto& v : boxes) {
            CWeight a = v; // W^bar V
            a.e[c] -= 1;
            push(a, +1);
            CWeight b = detail::cw_inv(v); // V^bar W kappa q
            b.e[c] += 1;
            push(detail::cw_mul(b, kq), +1);
        }
    }
    return out;
}

// the matter classes, built from the graded display (independent code path
// from tangent_character; their equality at every fixed point is a test)
inline Character class_character(const PartitionTuple& fp, Stability st, MatterClass cls) {
    CompLayout L(fp.N, fp.r);
    auto V = v_decomposition(fp, st);
    Character out;
    CWeight kq(L.size());
    kq.k = 1;
    kq.s = 2;

    if (cls == MatterClass::Fundamental) {
        // sum_j V_j mu_{(j,beta)}^{-1} + sum_j V_j^vee nu_{(j+1,alpha)} kappa q
        for (int j = 0; j < fp.N; ++j) {
            int jn = (j + 1) % fp.N;
            for (const auto& [w, m] : V[j]) {
                for (int b = 0; b < fp.r[j]; ++b) {
                    CWeight a = w;
                    a.mu[L.index(j, b)] -= 1;
                    detail::add_weight(out, a, m);
                }
                for (int a2 = 0; a2 < fp.r[jn]; ++a2) {
                    CWeight b = detail::cw_inv(w);
                    b.nu[L.index(jn, a2)] += 1;
                    detail::add_weight(out, detail::cw_mul(b, kq), m);
                }
            }
        }
        return out;
    }

    // adjoint: sum_j V_j e_{(j,beta)}^{-1} + sum_j V_j^vee e_{(j+1,alpha)} kappa q
    //        + Hom(V, V[1]) (kappa - kappa q) + End(V) (q - 1)
    CWeight kap(L.size()), qq(L.size());
    kap.k = 1;
    qq.s = 2;
    for (int j = 0; j < fp.N; ++j) {
        int jn = (j + 1) % fp.N;
        for (const auto& [w, m] : V[j]) {
            for (int b = 0; b < fp.r[j]; ++b) {
                CWeight a = w;
                a.e[L.index(j, b)] -= 1;
                detail::add_weight(out, a, m);
            }
            for (int a2 = 0; a2 < fp.r[jn]; ++a2) {
                CWeight b = detail::cw_inv(w);
                b.e[L.index(jn, a2)] += 1;
                detail::add_weight(out, detail::cw_mul(b, kq), m);
            }
            for (const auto& [w2, m2] : V[jn]) {
                CWeight c = detail::cw_mul(detail::cw_inv(w), w2);
                detail::add_weight(out, detail::cw_mul(c, kap), m * m2);
                detail::add_weight(out, detail::cw_mul(c, kq), -m * m2);
            }
            for (const auto& [w2, m2] : V[j]) {
                CWeight c = detail::cw_mul(detail::cw_inv(w), w2);
                detail::add_weight(out, detail::cw_mul(c, qq), m * m2);
                detail::add_weight(out, c, -m * m2);
            }
        }
    }
    return out;
}

template <class K>
struct FlatParams {
    K s, kappa;
    std::vector<K> e, mu, nu;
    explicit FlatParams(const Context<K>& ctx) : s(ctx.s), kappa(ctx.kappa) {
        for (int i = 0; i < ctx.N; ++i)
            for (int a = 0; a < ctx.r[i]; ++a) {
                e.push_back(ctx.e[i][a]);
                mu.push_back(ctx.mu[i][a]);
                nu.push_back(ctx.nu[i][a]);
            }
    }
};

template <class K>
K weight_value(const CWeight& w, const FlatParams<K>& P) {
    K v = P.s.pow(w.s) * P.kappa.pow(w.k);
    for (size_t c = 0; c < w.e.size(); ++c) {
        if (w.e[c]) v *= P.e[c].pow(w.e[c]);
        if (w.mu[c]) v *= P.mu[c].pow(w.mu[c]);
        if (w.nu[c]) v *= P.nu[c].pow(w.nu[c]);
    }
    return v;
}

// Eu^t(Lambda) = prod_w (1 - t w^{-1})^{mult(w)}
template <class K>
K eu_t(const Character& ch, const Context<K>& ctx, const K& t_val) {
    FlatParams<K> P(ctx);
    K one = t_val.unit(), num = one, den = one;
    for (const auto& [w, m] : ch) {
        K f = one - t_val * weight_value(detail::cw_inv(w), P);
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
template <class K>
PSeries<K> z_series(Stability st, MatterClass cls, int trunc, const Context<K>& ctx,
                    const K& t_val) {
    K one = ctx.s.unit();
    K tv = (cls == MatterClass::Fundamental) ? one : t_val;
    PSeries<K> Z = PSeries<K>::zero(ctx.N, trunc, one);
    for (const auto& fp : enumerate_tuples(ctx.N, ctx.r, trunc)) {
        K den = eu_t(tangent_character(fp, st), ctx, one);
        if (den.is_zero()) throw resample_signal("vanishing tangent Euler class");
        K num = eu_t(class_character(fp, st, cls), ctx, tv);
        Z.add_term(dimension_vector(fp, st), num / den);
    }
    return Z;
}

// Nekrasov-product closed form of Eu^t(T M) at a fixed point: for the stable
// side prod N^{(j-i|N)}_{lam^{(i,a)}, lam^{(j,b)}}(t e_{(j,b)}/e_{(i,a)});
// co-stable flips to N^{(i-j|N)}(t e_{(i,a)}/e_{(j,b)})
template <class K>
K tangent_nek_product(const PartitionTuple& fp, Stability st, const Context<K>& ctx,
                      const K& t_val) {
    FlatParams<K> P(ctx);
    CompLayout L(fp.N, fp.r);
    K r = ctx.s.unit();
    K q = ctx.q();
    for (int c1 = 0; c1 < L.size(); ++c1)
        for (int c2 = 0; c2 < L.size(); ++c2) {
            auto [i, a] = L.comps[c1];
            auto [j, b] = L.comps[c2];
            const Partition& la = fp.entries[i][a];
            const Partition& lb = fp.entries[j][b];
            if (st == Stability::Stable)
                r *= nek_row(la, lb, j - i, fp.N, t_val * P.e[c2] / P.e[c1], q, ctx.kappa);
            else
                r *= nek_row(la, lb, i - j, fp.N, t_val * P.e[c1] / P.e[c2], q, ctx.kappa);
        }
    return r;
}

// the hypergeometric-type sum f(a,b,c|p|q,kappa); Z_fund = f(nu^{-1}, e^{-1}, mu^{-1})
template <class K>
PSeries<K> f_series(int N, const std::vector<int>& r, const std::vector<K>& a,
                    const std::vector<K>& b, const std::vector<K>& c, int trunc,
                    const K& q, const K& kappa) {
    CompLayout L(N, r);
    K one = q.unit();
    PSeries<K> Z = PSeries<K>::zero(N, trunc, one);
    for (const auto& fp : enumerate_tuples(N, r, trunc)) {
        K term = one;
        for (int c1 = 0; c1 < L.size(); ++c1)
            for (int c2 = 0; c2 < L.size(); ++c2) {
                auto [i, aa] = L.comps[c1];
                auto [j, bb] = L.comps[c2];
                int k = j - i;
                term *= nek_row(Partition{}, fp.entries[j][bb], k, N, a[c1] / b[c2], q, kappa);
                term *= nek_row(fp.entries[i][aa], Partition{}, k, N, b[c1] / c[c2], q, kappa);
                K den = nek_row(fp.entries[i][aa], fp.entries[j][bb], k, N, b[c1] / b[c2], q, kappa);
                if (den.is_zero()) throw resample_signal("vanishing Nekrasov denominator");
                term /= den;
            }
        Z.add_term(dimension_vector(fp, Stability::Stable), term);
    }
    return Z;
}

namespace detail {

// base * prod over params; params given as ready-made series
template <class K>
PSeries<K> poch(const PSeries<K>& base, std::vector<PSeries<K>> params) {
    return inf_poch(base, params);
}

template <class K>
PSeries<K> mono(int N, int trunc, const std::vector<int>& v, const K& c) {
    return PSeries<K>::monomial(N, trunc, v, c);
}

} // namespace detail

// numerator / denominator infinite products of the wall-crossing factor
// Phi^r = Z_adj / Zcheck_adj (orientation pinned against the localization
// p-weights at rank one); the modulus of both Pochhammer families is
// t^{|r|} p_1...p_N (the alternate t^l modulus is kept only to document that
// it fails the rank-(2,1) factorization check)
template <class K>
void phi_parts(int trunc, const Context<K>& ctx, PSeries<K>& num, PSeries<K>& den,
               bool alt_second_modulus = false) {
    int N = ctx.N;
    K one = ctx.s.unit();
    int rtot = 0;
    for (int ri : ctx.r) rtot += ri;
    num = PSeries<K>::one(N, trunc, one);
    den = PSeries<K>::one(N, trunc, one);
    std::vector<int> full(N, 1);
    PSeries<K> qq = PSeries<K>::constant(N, trunc, ctx.q());
    PSeries<K> tt = PSeries<K>::constant(N, trunc, ctx.t);
    PSeries<K> T = detail::mono(N, trunc, full, ctx.t.pow(rtot));
    for (int k = 1; k <= N - 1; ++k)
        for (int l = 0; l < N; ++l) {
            std::vector<int> x(N, 0);
            for (int m = 0; m < k; ++m) x[ctx.vmod(l + m)] += 1;
            long R1 = 0, R0 = 0;
            for (int m = 1; m <= k; ++m) R1 += ctx.r[ctx.vmod(l + m)];
            for (int m = 0; m < k; ++m) R0 += ctx.r[ctx.vmod(l + m)];
            PSeries<K> T2 = alt_second_modulus ? detail::mono(N, trunc, full, ctx.t.pow(l + 1)) : T;
            num *= detail::poch(detail::mono(N, trunc, x, ctx.q() * ctx.t.pow(R1)), {qq, T, tt});
            num *= detail::poch(detail::mono(N, trunc, x, ctx.t.pow(R0 + 1)), {qq, T2, tt});
            den *= detail::poch(detail::mono(N, trunc, x, ctx.t.pow(R1 + 1)), {qq, T, tt});
            den *= detail::poch(detail::mono(N, trunc, x, ctx.q() * ctx.t.pow(R0)), {qq, T2, tt});
        }
}

template <class K>
PSeries<K> phi_ratio(int trunc, const Context<K>& ctx) {
    PSeries<K> num(ctx.N, trunc, ctx.s.unit()), den = num;
    phi_parts(trunc, ctx, num, den);
    return num * den.invert();
}

// closed form of Z^{e_l}_adj (dual = false) resp. Zcheck^{e_l}_adj (dual = true)
template <class K>
PSeries<K> adj_rank1_closed(bool dual, int l, int trunc, const Context<K>& ctx) {
    int N = ctx.N;
    K one = ctx.s.unit();
    std::vector<int> full(N, 1);
    PSeries<K> qq = PSeries<K>::constant(N, trunc, ctx.q());
    PSeries<K> kN = PSeries<K>::constant(N, trunc, ctx.kappa.pow(N));
    PSeries<K> tP = detail::mono(N, trunc, full, ctx.t);
    PSeries<K> Z = PSeries<K>::one(N, trunc, one);
    for (int k = 1; k <= N - 1; ++k) {
        std::vector<int> x(N, 0);
        if (dual)
            for (int m = 1; m <= k; ++m) x[ctx.vmod(l - m)] += 1;
        else
            for (int m = 0; m < k; ++m) x[ctx.vmod(l + m)] += 1;
        Z *= detail::poch(detail::mono(N, trunc, x, ctx.q()), {qq, tP});
        Z *= detail::poch(detail::mono(N, trunc, x, ctx.t), {qq, tP}).invert();
    }
    Z *= detail::poch(detail::mono(N, trunc, full, ctx.q() * ctx.t), {qq, kN, tP});
    Z *= detail::poch(detail::mono(N, trunc, full, ctx.kappa.pow(N) * ctx.t), {qq, kN, tP});
    Z *= detail::poch(detail::mono(N, trunc, full, ctx.t * ctx.t), {qq, kN, tP}).invert();
    Z *= detail::poch(detail::mono(N, trunc, full, ctx.q() * ctx.kappa.pow(N)), {qq, kN, tP}).invert();
    return Z;
}

inline VerdictReport verify_identity_adj(int trunc, const EvalContext& ctx) {
    WallTimer timer;
    auto Z = z_series(Stability::Stable, MatterClass::Adjoint, trunc, ctx, ctx.t);
    auto Zc = z_series(Stability::CoStable, MatterClass::Adjoint, trunc, ctx, ctx.t);
    PSeries<Scalar> num(ctx.N, trunc, ctx.s.unit()), den = num;
    phi_parts(trunc, ctx, num, den);
    auto rep = compare_series("thm-adj", {{"N", ctx.N}, {"r", ctx.r}, {"order", trunc}},
                              Z * den, Zc * num);
    rep.wall_time_ms = timer.ms();
    return rep;
}

// Conjecture adj (1): rank-one closed forms; ctx.r must be a unit vector e_l
inline VerdictReport verify_conj_adj1(int trunc, const EvalContext& ctx) {
    WallTimer timer;
    int l = -1, rtot = 0;
    for (int i = 0; i < ctx.N; ++i) {
        rtot += ctx.r[i];
        if (ctx.r[i] == 1) l = i;
    }
    if (rtot != 1) throw math_error("conj-adj-1 requires a unit framing vector");
    auto Z = z_series(Stability::Stable, MatterClass::Adjoint, trunc, ctx, ctx.t);
    auto Zc = z_series(Stability::CoStable, MatterClass::Adjoint, trunc, ctx, ctx.t);
    auto rep = compare_series("conj-adj-1", {{"N", ctx.N}, {"r", ctx.r}, {"order", trunc}},
                              Zc, adj_rank1_closed(true, l, trunc, ctx));
    if (rep.pass) {
        auto rep2 = compare_series("conj-adj-1", rep.params, Z, adj_rank1_closed(false, l, trunc, ctx));
        rep2.wall_time_ms = timer.ms();
        return rep2;
    }
    rep.wall_time_ms = timer.ms();
    return rep;
}

// Conjecture adj (2): Z = Zcheck when all r_i coincide
inline VerdictReport verify_conj_adj2(int trunc, const EvalContext& ctx) {
    WallTimer timer;
    auto Z = z_series(Stability::Stable, MatterClass::Adjoint, trunc, ctx, ctx.t);
    auto Zc = z_series(Stability::CoStable, MatterClass::Adjoint, trunc, ctx, ctx.t);
    auto rep = compare_series("conj-adj-2", {{"N", ctx.N}, {"r", ctx.r}, {"order", trunc}}, Z, Zc);
    rep.wall_time_ms = timer.ms();
    return rep;
}

namespace detail {

inline std::vector<Scalar> framing_products(const std::vector<std::vector<Scalar>>& v) {
    std::vector<Scalar> out;
    for (const auto& vi : v) {
        if (vi.empty()) throw math_error("conj-fund requires r_i >= 1 for all i");
        Scalar p = vi[0].unit();
        for (const auto& x : vi) p *= x;
        out.push_back(p);
    }
    return out;
}

} // namespace detail

// Conjecture fund (the dual-pair functional equation for the fundamental class)
inline VerdictReport verify_conj_fund(int trunc, const EvalContext& ctx) {
    WallTimer timer;
    int N = ctx.N;
    Scalar one = ctx.s.unit();
    auto Zf = z_series(Stability::Stable, MatterClass::Fundamental, trunc, ctx, one);
    auto Zc = z_series(Stability::CoStable, MatterClass::Fundamental, trunc, ctx, one);
    auto ee = detail::framing_products(ctx.e);
    auto mm = detail::framing_products(ctx.mu);
    auto nn = detail::framing_products(ctx.nu);

    std::vector<int> full(N, 1);
    PSeries<Scalar> kN = PSeries<Scalar>::constant(N, trunc, ctx.kappa.pow(N));

    auto side = [&](bool left) {
        Scalar cpre = one;
        for (int i = 0; i < N; ++i) cpre *= left ? mm[i] / ee[i] : ee[i] / nn[i];
        PSeries<Scalar> pre = inf_poch(detail::mono(N, trunc, full, cpre), {kN});
        const PSeries<Scalar>& base = left ? Zf : Zc;
        PSeries<Scalar> shifted0 = q_laplacian_shift(base, ctx.s);
        PSeries<Scalar> sum = PSeries<Scalar>::zero(N, trunc, one);
        std::vector<int> l(N, 0);
        std::function<void(int, int)> rec = [&](int pos, int rem) {
            if (pos == N) {
                long cross = 0;
                for (int i = 0; i < N; ++i) cross += (long)l[i] * l[(i + 1) % N];
                Scalar coef = ctx.s_pow(cross, true);
                std::vector<int> c(N, 0);
                for (int i = 0; i < N; ++i) {
                    Scalar x = left ? mm[i] / ee[i] : ee[(i + 1) % N] / nn[(i + 1) % N];
                    coef *= (-(ctx.s) * x).pow(l[i]) / finite_poch(ctx.q(), ctx.q(), l[i]);
                    int ip = (i + 1) % N, im = (i - 1 + N) % N;
                    c[i] = left ? -l[ip] + l[im] : l[ip] - l[im];
                }
                sum += detail::mono(N, trunc, l, coef) * theta_shift(shifted0, c, ctx.s);
                return;
            }
            for (int x = 0; x <= rem; ++x) {
                l[pos] = x;
                rec(pos + 1, rem - x);
            }
            l[pos] = 0;
        };
        rec(0, trunc);
        return pre * sum;
    };
    auto rep = compare_series("conj-fund", {{"N", N}, {"r", ctx.r}, {"order", trunc}},
                              side(true), side(false));
    rep.wall_time_ms = timer.ms();
    return rep;
}

// Zcheck^r_fund(e,mu,nu|p) = Z^{r_vee}_fund(e', mu', nu'|p') with the vertex
// reflection i -> -i, e' = 1/e, mu' = 1/nu, nu' = 1/mu, p'_j = p_{-j-1}
inline bool verify_duality(const std::vector<int>& v, const EvalContext& ctx) {
    int N = ctx.N;
    int trunc = 0;
    for (int x : v) trunc += x;
    auto Zc = z_series(Stability::CoStable, MatterClass::Fundamental, trunc, ctx, ctx.s.unit());

    EvalContext rctx = ctx;
    rctx.r.assign(N, 0);
    rctx.e.assign(N, {});
    rctx.mu.assign(N, {});
    rctx.nu.assign(N, {});
    for (int i = 0; i < N; ++i) {
        int ri = ctx.vmod(-i);
        rctx.r[i] = ctx.r[ri];
        for (int a = 0; a < ctx.r[ri]; ++a) {
            rctx.e[i].push_back(ctx.e[ri][a].inv());
            rctx.mu[i].push_back(ctx.nu[ri][a].inv());
            rctx.nu[i].push_back(ctx.mu[ri][a].inv());
        }
    }
    auto Z = z_series(Stability::Stable, MatterClass::Fundamental, trunc, rctx, ctx.s.unit());

    std::vector<int> w(N, 0);
    for (int j = 0; j < N; ++j) w[ctx.vmod(-j - 1)] = v[j];
    return Zc.coeff(v) == Z.coeff(w);
}

namespace detail {

template <class K>
Context<K> lift_context(const EvalContext& ctx) {
    Context<K> out;
    out.N = ctx.N;
    out.r = ctx.r;
    out.s = K::constant(ctx.s);
    out.t = K::constant(ctx.t);
    out.kappa = K::constant(ctx.kappa);
    out.e.resize(ctx.N);
    out.mu.resize(ctx.N);
    out.nu.resize(ctx.N);
    for (int i = 0; i < ctx.N; ++i)
        for (int a = 0; a < ctx.r[i]; ++a) {
            out.e[i].push_back(K::constant(ctx.e[i][a]));
            out.mu[i].push_back(K::constant(ctx.mu[i][a]));
            out.nu[i].push_back(K::constant(ctx.nu[i][a]));
        }
    return out;
}

} // namespace detail

// stabilization: lim_{e_(l, r_l + 1) -> inf} Z^{r + e_l}_adj
//   = Z^r_adj(t^{e_l} p) * Z^{e_l}_adj(t^{r[1]} p), same for the dual side
inline VerdictReport limit_factorization(int l, int trunc, Stability st, const EvalContext& ctx) {
    WallTimer timer;
    using U = UniRational<Scalar>;
    Scalar one = ctx.s.unit();

    Context<U> uc = detail::lift_context<U>(ctx);
    uc.r[l] += 1;
    uc.e[l].push_back(U::variable(one));
    uc.mu[l].push_back(U::constant(one));
    uc.nu[l].push_back(U::constant(one));
    auto Zbig = z_series(st, MatterClass::Adjoint, trunc, uc, uc.t);

    VerdictReport rep;
    rep.identity = "prop-str";
    rep.params = {{"N", ctx.N}, {"r", ctx.r}, {"l", l}, {"order", trunc},
                  {"side", st == Stability::Stable ? "stable" : "co-stable"}};
    PSeries<Scalar> L = PSeries<Scalar>::zero(ctx.N, trunc, one);
    for (const auto& [v, c] : Zbig.terms()) {
        auto lim = uni_limit_at_infinity(c);
        if (lim.kind == LimitKind::DivergesToInfinity) {
            rep.pass = false;
            rep.mismatch_index = v;
            rep.lhs = "divergent";
            rep.rhs = "finite";
            rep.wall_time_ms = timer.ms();
            return rep;
        }
        if (lim.kind == LimitKind::Finite) L.add_term(v, lim.value);
    }

    auto Z1 = z_series(st, MatterClass::Adjoint, trunc, ctx, ctx.t);
    std::vector<int> c1(ctx.N, 0);
    c1[l] = 1;
    Z1 = theta_shift(Z1, c1, ctx.t);

    EvalContext unit_ctx = ctx;
    unit_ctx.r.assign(ctx.N, 0);
    unit_ctx.r[l] = 1;
    unit_ctx.e.assign(ctx.N, {});
    unit_ctx.mu.assign(ctx.N, {});
    unit_ctx.nu.assign(ctx.N, {});
    unit_ctx.e[l].push_back(ctx.e[l].empty() ? ctx.t : ctx.e[l][0]);
    unit_ctx.mu[l].push_back(one);
    unit_ctx.nu[l].push_back(one);
    auto Z2 = z_series(st, MatterClass::Adjoint, trunc, unit_ctx, ctx.t);
    std::vector<int> c2(ctx.N, 0);
    for (int k = 0; k < ctx.N; ++k) c2[k] = ctx.r[ctx.vmod(k + 1)];
    Z2 = theta_shift(Z2, c2, ctx.t);

    auto cmp = compare_series(rep.identity, rep.params, L, Z1 * Z2);
    cmp.wall_time_ms = timer.ms();
    return cmp;
}

// gl_N limit: Z_adj(kappa^{-delta} s, t | x_2/t^d x_1, ..., x_N/t^d x_{N-1}, 0)
// equals the matrix sum f^{gl_N}(x|s|q, q/t); both sides expanded in
// y_a = x_{a+1}/x_a.  ctx.e supplies the s_{(i,alpha)} samples, r = (d,..,d).
// Derived from the row form of the Nekrasov factor: the first Pochhammer
// family of c_N carries an extra q in its denominator base, and the
// substitution scale is t^d (both reduce to the naive reading at d = 1).
inline VerdictReport gl_n_limit_check(int d, int trunc, const EvalContext& ctx) {
    WallTimer timer;
    int N = ctx.N;
    Scalar one = ctx.s.unit();
    for (int i = 0; i < N; ++i)
        if (ctx.r[i] != d) throw math_error("gl_n_limit_check: r must be (d,...,d)");

    EvalContext sctx = ctx;
    for (int i = 0; i < N; ++i)
        for (int a = 0; a < d; ++a) sctx.e[i][a] = ctx.kappa.pow(-i) * ctx.e[i][a];
    auto Z = z_series(Stability::Stable, MatterClass::Adjoint, trunc, sctx, ctx.t);
    PSeries<Scalar> L = PSeries<Scalar>::zero(N - 1, trunc, one);
    for (const auto& [v, c] : Z.terms()) {
        if (v[N - 1] != 0) continue;
        std::vector<int> y(v.begin(), v.end() - 1);
        int tot = 0;
        for (int x : y) tot += x;
        L.add_term(y, c * ctx.t.pow(-(long)d * tot));
    }

    // RHS: theta in (M_N)^d, entries theta[al][i][k] for 0 <= i < k < N
    Scalar q = ctx.q();
    Scalar tt = q / ctx.t; // the t-parameter of c_N is specialized to q/t
    PSeries<Scalar> R = PSeries<Scalar>::zero(N - 1, trunc, one);
    std::vector<std::vector<std::vector<int>>> th(
        d, std::vector<std::vector<int>>(N, std::vector<int>(N, 0)));
    std::vector<std::tuple<int, int, int>> slots;
    for (int al = 0; al < d; ++al)
        for (int i = 0; i < N; ++i)
            for (int k = i + 1; k < N; ++k) slots.push_back({al, i, k});

    auto c_N = [&]() {
        Scalar num = one, den = one;
        for (int al = 0; al < d; ++al)
            for (int be = 0; be < d; ++be) {
                for (int i = 0; i < N; ++i)
                    for (int j = i + 1; j < N; ++j)
                        for (int k = j; k < N; ++k) {
                            int n_ = th[al][i][k];
                            long E = 0;
                            for (int a = k + 1; a < N; ++a) E += th[al][i][a] - th[be][j][a];
                            Scalar base = q.pow(E) * ctx.e[j][be] / ctx.e[i][al];
                            num *= finite_poch(base * tt, q, n_);
                            den *= finite_poch(base * q, q, n_);
                        }
                for (int i = 0; i < N; ++i)
                    for (int j = i; j < N; ++j)
                        for (int k = j + 1; k < N; ++k) {
                            int n_ = th[al][i][k];
                            long E = -th[be][j][k];
                            for (int a = k + 1; a < N; ++a) E += th[al][i][a] - th[be][j][a];
                            Scalar base = q.pow(E) * ctx.e[j][be] / ctx.e[i][al];
                            num *= finite_poch(base * q / tt, q, n_);
                            den *= finite_poch(base, q, n_);
                        }
            }
        if (den.is_zero()) throw resample_signal("vanishing c_N denominator");
        return num / den;
    };

    std::function<void(size_t, int)> rec = [&](size_t pos, int rem) {
        if (pos == slots.size()) {
            std::vector<int> y(N - 1, 0);
            for (int al = 0; al < d; ++al)
                for (int i = 0; i < N; ++i)
                    for (int k = i + 1; k < N; ++k)
                        for (int a = i; a < k; ++a) y[a] += th[al][i][k];
            R.add_term(y, c_N());
            return;
        }
        auto [al, i, k] = slots[pos];
        int wt = k - i;
        for (int x = 0; x * wt <= rem; ++x) {
            th[al][i][k] = x;
            rec(pos + 1, rem - x * wt);
        }
        th[al][i][k] = 0;
    };
    rec(0, trunc);

    auto rep = compare_series("gl-n-limit", {{"N", N}, {"d", d}, {"order", trunc}}, L, R);
    rep.wall_time_ms = timer.ms();
    return rep;
}

} // namespace saw
