#include <catch2/catch_amalgamated.hpp>

#include <set>
#include "saw/partitions.hpp"
#include "saw/context.hpp"

using namespace saw;

TEST_CASE("partitions_of and conjugate") {
    REQUIRE(partitions_of(0).size() == 1);
    REQUIRE(partitions_of(2).size() == 2);
    REQUIRE(partitions_of(5).size() == 7);
    Partition p({3, 1});
    REQUIRE(p.conjugate() == Partition({2, 1, 1}));
    REQUIRE(p.conjugate().conjugate() == p);
    REQUIRE_THROWS_AS(Partition({1, 2}), math_error);
}

TEST_CASE("enumerate_tuples") {
    // bound 0 -> single all-empty tuple   [TRIVIAL]
    auto t0 = enumerate_tuples(2, {1, 1}, 0);
    REQUIRE(t0.size() == 1);
    REQUIRE(t0[0].total_size() == 0);

    // N=1, r=(1), bound 2 -> p(0)+p(1)+p(2) = 4 tuples   [DERIVED]
    REQUIRE(enumerate_tuples(1, {1}, 2).size() == 4);

    // N=2, r=(1,1), bound 1 -> 3 tuples   [DERIVED]
    REQUIRE(enumerate_tuples(2, {1, 1}, 1).size() == 3);

    // uniqueness
    auto ts = enumerate_tuples(2, {2, 1}, 3);
    std::set<std::vector<std::vector<std::vector<int>>>> seen;
    for (const auto& t : ts) {
        std::vector<std::vector<std::vector<int>>> key;
        for (auto& vi : t.entries) {
            key.emplace_back();
            for (auto& lam : vi) key.back().push_back(lam.parts);
        }
        REQUIRE(seen.insert(key).second);
        REQUIRE(t.total_size() <= 3);
    }
}

TEST_CASE("arm_leg") {
    // single box   [TRIVIAL]
    auto [a0, l0] = arm_leg(Partition({1}), Partition({1}), 1, 1);
    REQUIRE(a0 == 0);
    REQUIRE(l0 == 0);
    // lambda=(3,1), mu=(2,2), box (1,2)   [DERIVED]
    auto [a1, l1] = arm_leg(Partition({3, 1}), Partition({2, 2}), 1, 2);
    REQUIRE(a1 == 0);
    REQUIRE(l1 == 0);
    // lambda=mu=(2,2), box (1,1)   [DERIVED]
    auto [a2, l2] = arm_leg(Partition({2, 2}), Partition({2, 2}), 1, 1);
    REQUIRE(a2 == 1);
    REQUIRE(l2 == 1);
}

TEST_CASE("colored_row_count") {
    REQUIRE(colored_row_count(Partition{}, 2, 0) == 0); // [TRIVIAL]
    REQUIRE(colored_row_count(Partition({2, 1}), 2, 1) == 2); // [DERIVED]
    // N=1 -> |lambda| for any k   [TRIVIAL]
    REQUIRE(colored_row_count(Partition({3, 2, 2}), 1, 5) == 7);
}

TEST_CASE("leg_colored_count and Lemma l_Y(k) = |Y|_{k+1}") {
    REQUIRE(leg_colored_count(Partition{}, 3, 1) == 0); // [TRIVIAL]
    REQUIRE(leg_colored_count(Partition({1}), 2, 0) == 1); // [DERIVED]
    // brute force both sides for |lambda| <= 10, N <= 4, all k   [DERIVED]
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : partitions_of(n))
            for (int N = 1; N <= 4; ++N)
                for (int k = 0; k < N; ++k)
                    REQUIRE(leg_colored_count(lam, N, k) ==
                            colored_row_count(lam, N, k + 1));
}

TEST_CASE("dimension_vector") {
    PartitionTuple empty;
    empty.N = 2;
    empty.r = {1, 0};
    empty.entries = {{Partition{}}, {}};
    REQUIRE(dimension_vector(empty, Stability::Stable) == std::vector<int>({0, 0}));

    PartitionTuple t;
    t.N = 2;
    t.r = {1, 0};
    t.entries = {{Partition({1, 1})}, {}};
    // stable: rows 1,2 of vertex 1 have colors 1, 2 -> v = (1,1)   [DERIVED]
    REQUIRE(dimension_vector(t, Stability::Stable) == std::vector<int>({1, 1}));
    // co-stable: colors 1-l = 0 -> vertex 2, and -1 -> vertex 1   [DERIVED]
    REQUIRE(dimension_vector(t, Stability::CoStable) == std::vector<int>({1, 1}));

    // total box count preserved under both stabilities
    for (const auto& tup : enumerate_tuples(3, {1, 2, 0}, 4))
        for (auto st : {Stability::Stable, Stability::CoStable}) {
            auto v = dimension_vector(tup, st);
            int s = 0;
            for (int x : v) s += x;
            REQUIRE(s == tup.total_size());
        }
}

TEST_CASE("enumerate_fixed_points") {
    // v = 0 -> only the empty tuple   [TRIVIAL]
    REQUIRE(enumerate_fixed_points(2, {1, 1}, {0, 0}, Stability::Stable).size() == 1);
    // N=1, r=(1), v=(2) -> two tuples   [DERIVED]
    REQUIRE(enumerate_fixed_points(1, {1}, {2}, Stability::Stable).size() == 2);
    // filter-oracle agreement   [DERIVED]
    auto fps = enumerate_fixed_points(2, {1, 1}, {1, 0}, Stability::Stable);
    int count = 0;
    for (const auto& t : enumerate_tuples(2, {1, 1}, 1))
        if (dimension_vector(t, Stability::Stable) == std::vector<int>({1, 0})) ++count;
    REQUIRE((int)fps.size() == count);
}

TEST_CASE("t_factorial") {
    auto ctx = sample_context(1, {1}, 4, 2, Mode::ExactRational);
    Scalar t = ctx.t, one = t.unit();
    REQUIRE(t_fact_full(0, t) == one);             // [TRIVIAL]
    REQUIRE(t_factorial(2, t) == one + t);         // [DERIVED]
    REQUIRE(t_fact_full(3, t) == (one + t) * (one + t + t * t)); // [DERIVED]
}

namespace {
// independent recursive enumeration: append a new block whose minimum is
// smaller than the previous block's minimum
void rec_dec(int n, int j, std::vector<std::vector<int>>& blocks,
             std::vector<int> avail, int min_bound, std::vector<std::vector<std::vector<int>>>& out) {
    if ((int)blocks.size() == j) {
        out.push_back(blocks);
        return;
    }
    // choose a nonempty subset of avail with min < min_bound
    int m = (int)avail.size();
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> block, rest;
        for (int i = 0; i < m; ++i)
            (mask >> i & 1 ? block : rest).push_back(avail[i]);
        if (block[0] >= min_bound) continue;
        blocks.push_back(block);
        rec_dec(n, j, blocks, rest, block[0], out);
        blocks.pop_back();
    }
}
} // namespace

TEST_CASE("enumerate_dec") {
    // hand enumerations   [DERIVED]
    REQUIRE(enumerate_dec(1, 1).size() == 1);
    auto d21 = enumerate_dec(2, 1);
    REQUIRE(d21.size() == 3);
    // j > n -> empty   [TRIVIAL]
    REQUIRE(enumerate_dec(2, 3).empty());

    // cross-check against the independent recursive enumeration, n <= 6
    for (int n = 1; n <= 6; ++n)
        for (int j = 1; j <= n; ++j) {
            auto mine = enumerate_dec(n, j);
            std::vector<std::vector<std::vector<int>>> blocks, other;
            std::vector<int> all;
            for (int x = 1; x <= n; ++x) all.push_back(x);
            std::vector<std::vector<int>> cur;
            rec_dec(n, j, cur, all, n + 1, other);
            REQUIRE(mine.size() == other.size());
            std::set<std::vector<std::vector<int>>> a, b;
            for (const auto& c : mine) a.insert(c.blocks);
            for (const auto& c : other) b.insert(c);
            REQUIRE(a == b);
        }

    // chain invariants
    for (const auto& c : enumerate_dec(5, 2)) {
        REQUIRE(c.blocks.size() == 2);
        REQUIRE(c.blocks[0][0] > c.blocks[1][0]);
        REQUIRE((int)(c.inf.size() + c.blocks[0].size() + c.blocks[1].size()) == 5);
    }
}

TEST_CASE("s_stat") {
    REQUIRE(s_stat({1}, {2}) == 1); // [TRIVIAL]
    REQUIRE(s_stat({2}, {1}) == 0); // [TRIVIAL]
    REQUIRE(s_stat({1, 3}, {2, 4}) == 3); // [DERIVED]
    REQUIRE(s_stat({}, {1, 2, 3}) == 0);  // [TRIVIAL]
    REQUIRE_THROWS_AS(s_stat({1, 2}, {2, 3}), math_error);
}
