#pragma once

// Partitions, colored Young-diagram statistics, fixed-point enumeration data,
// and the Dec-set wall-crossing combinatorics.  Boxes of the Young diagram
// Y_lambda are addressed (l, m), 1-based: row l, column m <= lambda_l.

#include <algorithm>
#include <functional>
#include <vector>
#include "saw/scalar.hpp"

namespace saw {

struct Partition {
    std::vector<int> parts; // weakly decreasing, strictly positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw math_error("Partition: nonpositive part");
            if (i && parts[i] > parts[i - 1]) throw math_error("Partition: not weakly decreasing");
        }
    }

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int length() const { return (int)parts.size(); }
    // lambda_l with rows beyond the length read as 0
    int row(int l) const { return (l >= 1 && l <= length()) ? parts[l - 1] : 0; }

    Partition conjugate() const {
        std::vector<int> c;
        if (parts.empty()) return Partition{};
        c.assign(parts[0], 0);
        for (int p : parts)
            for (int m = 0; m < p; ++m) ++c[m];
        return Partition(std::move(c));
    }

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;
};

// all partitions of exactly n, in a fixed deterministic (lex-descending) order
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// arm A_mu(l,m) = mu_l - m and leg L_lambda(l,m) = lambda'_m - l.
// The box may live in either diagram, so both values can be negative.
inline std::pair<int, int> arm_leg(const Partition& lambda, const Partition& mu, int l, int m) {
    if (l < 1 || m < 1) throw math_error("arm_leg: box indices are 1-based");
    Partition lc = lambda.conjugate();
    int arm = mu.row(l) - m;
    int leg = lc.row(m) - l;
    return {arm, leg};
}

// number of boxes of Y_lambda in rows congruent to k mod N; equals |lambda|_k
inline int colored_row_count(const Partition& lambda, int N, int k) {
    int kk = ((k % N) + N) % N;
    int count = 0;
    for (int l = 1; l <= lambda.length(); ++l)
        if (l % N == kk) count += lambda.row(l);
    return count;
}

// l_Y(k) = #{boxes s of Y_lambda with leg L_lambda(s) congruent to k mod N}
inline int leg_colored_count(const Partition& lambda, int N, int k) {
    int kk = ((k % N) + N) % N;
    Partition lc = lambda.conjugate();
    int count = 0;
    for (int l = 1; l <= lambda.length(); ++l)
        for (int m = 1; m <= lambda.row(l); ++m) {
            int leg = lc.row(m) - l;
            if (((leg % N) + N) % N == kk) ++count;
        }
    return count;
}

enum class Stability { Stable, CoStable }; // zeta = (-1,..,-1) resp. (+1,..,+1)

struct PartitionTuple {
    int N = 1;
    std::vector<int> r;                             // framing counts
    std::vector<std::vector<Partition>> entries;    // [vertex i (0-based)][alpha]

    int total_size() const {
        int s = 0;
        for (const auto& vi : entries)
            for (const auto& lam : vi) s += lam.size();
        return s;
    }
    bool operator==(const PartitionTuple& o) const = default;
};

// color (0-based vertex index) of the boxes in row l of component (i0, alpha):
// stable i+l-1, co-stable i-l (mod N, 1-based row labels)
inline int row_color(int N, int i0, int l, Stability st) {
    int c = (st == Stability::Stable) ? i0 + l - 1 : i0 - l;
    c %= N;
    return c < 0 ? c + N : c;
}

inline std::vector<int> dimension_vector(const PartitionTuple& t, Stability st) {
    std::vector<int> v(t.N, 0);
    for (int i = 0; i < t.N; ++i)
        for (const auto& lam : t.entries[i])
            for (int l = 1; l <= lam.length(); ++l)
                v[row_color(t.N, i, l, st)] += lam.row(l);
    return v;
}

// every tuple with total size <= bound, exactly once, deterministic order
inline std::vector<PartitionTuple> enumerate_tuples(int N, const std::vector<int>& r, int bound) {
    if ((int)r.size() != N) throw math_error("enumerate_tuples: bad framing vector");
    int comps = 0;
    for (int ri : r) comps += ri;
    std::vector<PartitionTuple> out;
    PartitionTuple cur;
    cur.N = N;
    cur.r = r;
    cur.entries.resize(N);
    for (int i = 0; i < N; ++i) cur.entries[i].assign(r[i], Partition{});

    // flatten components in order (i, alpha) and distribute sizes recursively
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < N; ++i)
        for (int a = 0; a < r[i]; ++a) slots.push_back({i, a});

    std::function<void(int, int)> rec = [&](int si, int rem) {
        if (si == (int)slots.size()) {
            out.push_back(cur);
            return;
        }
        auto [i, a] = slots[si];
        for (int sz = 0; sz <= rem; ++sz)
            for (const auto& lam : partitions_of(sz)) {
                cur.entries[i][a] = lam;
                rec(si + 1, rem - sz);
            }
        cur.entries[i][a] = Partition{};
    };
    if (comps == 0) {
        if (bound >= 0) out.push_back(cur);
    } else {
        rec(0, bound);
    }
    return out;
}

inline std::vector<PartitionTuple> enumerate_fixed_points(int N, const std::vector<int>& r,
                                                          const std::vector<int>& v, Stability st) {
    int total = 0;
    for (int x : v) total += x;
    std::vector<PartitionTuple> out;
    for (const auto& t : enumerate_tuples(N, r, total))
        if (t.total_size() == total && dimension_vector(t, st) == v) out.push_back(t);
    return out;
}

// [m]_t = (1 - t^m)/(1 - t) and [m]_t! = [1]_t ... [m]_t
template <class K>
K t_factorial(int m, const K& t) {
    if (m < 0) throw math_error("t_factorial: negative m");
    K one = t.unit();
    return (one - t.pow(m)) / (one - t);
}
template <class K>
K t_fact_full(int m, const K& t) {
    K r = t.unit();
    for (int i = 1; i <= m; ++i) r *= t_factorial(i, t);
    return r;
}

// ordered disjoint nonempty subsets (I^(1),..,I^(j)) of [n] with strictly
// decreasing minima; I^infty is the complement
struct DecChain {
    int n = 0;
    std::vector<std::vector<int>> blocks; // elements 1-based, each sorted
    std::vector<int> inf;                 // complement, sorted

    int moved() const { // |d| = total size of the blocks
        int s = 0;
        for (const auto& b : blocks) s += (int)b.size();
        return s;
    }
};

inline std::vector<DecChain> enumerate_dec(int n, int j) {
    std::vector<DecChain> out;
    if (j < 1 || j > n) return out;
    // assign each element of [n] a label in {0 = I^infty, 1..j}; keep chains
    // whose blocks are all nonempty with strictly decreasing minima
    std::vector<int> label(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            std::vector<std::vector<int>> blocks(j);
            std::vector<int> inf;
            for (int x = 1; x <= n; ++x) {
                if (label[x - 1] == 0) inf.push_back(x);
                else blocks[label[x - 1] - 1].push_back(x);
            }
            for (const auto& b : blocks)
                if (b.empty()) return;
            for (int i = 0; i + 1 < j; ++i)
                if (!(blocks[i][0] > blocks[i + 1][0])) return;
            out.push_back(DecChain{n, blocks, inf});
            return;
        }
        for (int lab = 0; lab <= j; ++lab) {
            label[pos] = lab;
            rec(pos + 1);
        }
        label[pos] = 0;
    };
    rec(0);
    return out;
}

// s(I, I') = #{(l, l') in I x I' : l < l'}
inline int s_stat(const std::vector<int>& I, const std::vector<int>& J) {
    for (int a : I)
        for (int b : J)
            if (a == b) throw math_error("s_stat: overlapping subsets");
    int count = 0;
    for (int a : I)
        for (int b : J)
            if (a < b) ++count;
    return count;
}

} // namespace saw
