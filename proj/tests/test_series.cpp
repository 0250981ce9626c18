#include <catch2/catch_amalgamated.hpp>

#include "saw/pseries.hpp"
#include "saw/context.hpp"

using namespace saw;
using S = PSeries<Scalar>;

namespace {
EvalContext ctx_for(std::uint64_t seed, Mode mode = Mode::PrimeField) {
    return sample_context(1, {1}, 8, seed, mode);
}

S random_series(int n_vars, int trunc, std::mt19937_64& rng, Mode mode) {
    S r = S::zero(n_vars, trunc, Scalar::one(mode));
    std::vector<int> v(n_vars, 0);
    // walk all multi-indices with |v| <= trunc
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n_vars) {
            r.add_term(v, detail::sample_value(rng, mode));
            return;
        }
        for (int x = 0; x <= rem; ++x) {
            v[pos] = x;
            rec(pos + 1, rem - x);
        }
        v[pos] = 0;
    };
    rec(0, trunc);
    return r;
}
} // namespace

TEST_CASE("ring operations") {
    Scalar one = Scalar::one(Mode::ExactRational);
    // (1+p)(1-p) at trunc 2 -> 1-p^2   [TRIVIAL]
    S a = S::one(1, 2, one) + S::monomial(1, 2, {1}, one);
    S b = S::one(1, 2, one) - S::monomial(1, 2, {1}, one);
    S expect = S::one(1, 2, one) - S::monomial(1, 2, {2}, one);
    REQUIRE(a * b == expect);

    // invert(1-p) at trunc 3 -> 1+p+p^2+p^3   [TRIVIAL]
    S c = S::one(1, 3, one) - S::monomial(1, 3, {1}, one);
    S geo = S::zero(1, 3, one);
    for (int k = 0; k <= 3; ++k) geo.add_term({k}, one);
    REQUIRE(c.invert() == geo);

    // invert(1-qp)*(1-qp) = 1   [DERIVED: round-trip]
    auto ctx = ctx_for(5);
    S d = S::one(1, 4, ctx.s.unit()) - S::monomial(1, 4, {1}, ctx.q());
    REQUIRE(d.invert() * d == S::one(1, 4, ctx.s.unit()));

    REQUIRE_THROWS_AS(S::monomial(1, 4, {1}, one).invert(), math_error);
    REQUIRE_THROWS_AS(S::one(1, 2, one) + S::one(1, 3, one), math_error);
}

TEST_CASE("ring associativity on random series") {
    std::mt19937_64 rng(99);
    for (Mode mode : {Mode::PrimeField, Mode::ExactRational}) {
        for (int trial = 0; trial < 5; ++trial) {
            S a = random_series(2, 4, rng, mode);
            S b = random_series(2, 4, rng, mode);
            S c = random_series(2, 4, rng, mode);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("finite_poch") {
    auto ctx = ctx_for(3);
    Scalar q = ctx.q(), one = q.unit();
    Scalar x = ctx.e[0][0];
    REQUIRE(finite_poch(x, q, 0) == one);                    // [TRIVIAL]
    REQUIRE(finite_poch(x, q, 1) == one - x);                // [TRIVIAL]
    // (q^{-2};q)_2 = (1-q^{-2})(1-q^{-1})   [DERIVED]
    REQUIRE(finite_poch(q.pow(-2), q, 2) ==
            (one - q.pow(-2)) * (one - q.pow(-1)));
}

TEST_CASE("inf_poch basics") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto ctx = ctx_for(seed);
        Scalar q = ctx.q(), t = ctx.t, one = q.unit();
        Scalar x = ctx.e[0][0];

        // base = 0 -> 1   [TRIVIAL]
        S zero = S::zero(1, 4, one);
        REQUIRE(inf_poch(zero, {S::constant(1, 4, q)}) == S::one(1, 4, one));

        // (xp;q)_inf coefficient of p^1 -> -x/(1-q)   [DERIVED: log term m=1]
        S base = S::monomial(1, 4, {1}, x);
        S f = inf_poch(base, {S::constant(1, 4, q)});
        REQUIRE(f.coeff({1}) == (Scalar::zero(ctx.mode) - x) / (one - q));

        // (qp;q)_inf / (tp;q)_inf coefficient of p^1 -> (t-q)/(1-q)   [DERIVED]
        S num = inf_poch(S::monomial(1, 4, {1}, q), {S::constant(1, 4, q)});
        S den = inf_poch(S::monomial(1, 4, {1}, t), {S::constant(1, 4, q)});
        S g = num * den.invert();
        REQUIRE(g.coeff({1}) == (t - q) / (one - q));
    }
}

TEST_CASE("inf_poch shift identity") {
    // (x p; q)_inf = prod_{j<k} (1 - x p q^j) * (x q^k p; q)_inf, k <= 4
    for (std::uint64_t seed : {4ULL, 5ULL, 6ULL}) {
        auto ctx = ctx_for(seed);
        Scalar q = ctx.q(), one = q.unit();
        Scalar x = ctx.e[0][0];
        S qq = S::constant(1, 5, q);
        S full = inf_poch(S::monomial(1, 5, {1}, x), {qq});
        for (int k = 1; k <= 4; ++k) {
            S tail = inf_poch(S::monomial(1, 5, {1}, x * q.pow(k)), {qq});
            S fin = S::one(1, 5, one);
            for (int j = 0; j < k; ++j)
                fin *= S::one(1, 5, one) - S::monomial(1, 5, {1}, x * q.pow(j));
            REQUIRE(full == fin * tail);
        }
    }
}

TEST_CASE("double product inf_poch against direct truncation") {
    // (xp; q, t)_inf to p-order 2: factors with i+j small contribute;
    // check the p^1 coefficient: -x * sum_{i,j} q^i t^j = -x/((1-q)(1-t)).
    auto ctx = ctx_for(7, Mode::ExactRational);
    Scalar q = ctx.q(), t = ctx.t, one = q.unit();
    Scalar x = ctx.mu[0][0];
    S f = inf_poch(S::monomial(1, 2, {1}, x), {S::constant(1, 2, q), S::constant(1, 2, t)});
    Scalar expect1 = (Scalar::zero(ctx.mode) - x) / ((one - q) * (one - t));
    REQUIRE(f.coeff({1}) == expect1);
}

TEST_CASE("q_borel") {
    auto ctx = ctx_for(8);
    Scalar q = ctx.q(), one = q.unit();
    // constant unchanged   [TRIVIAL]
    REQUIRE(q_borel(S::one(1, 3, one), +1, q) == S::one(1, 3, one));
    // p -> q p ; p^2 -> q^3 p^2   [CLOSED FORM: B p^n = q^{n(n+1)/2} p^n]
    S f = S::monomial(1, 3, {1}, one) + S::monomial(1, 3, {2}, one);
    S bf = q_borel(f, +1, q);
    REQUIRE(bf.coeff({1}) == q);
    REQUIRE(bf.coeff({2}) == q.pow(3));
    // round trip
    std::mt19937_64 rng(17);
    S g = random_series(1, 5, rng, ctx.mode);
    REQUIRE(q_borel(q_borel(g, +1, q), -1, q) == g);
    REQUIRE_THROWS_AS(q_borel(S::one(2, 2, one), 1, q), math_error);
}

TEST_CASE("theta_shift") {
    auto ctx = ctx_for(9);
    Scalar s = ctx.s, one = s.unit();
    std::mt19937_64 rng(23);
    S f = random_series(2, 4, rng, ctx.mode);
    // c = 0 -> unchanged   [TRIVIAL]
    REQUIRE(theta_shift(f, {0, 0}, s) == f);
    // N=2, c=(1,0): p1 -> s p1   [TRIVIAL]
    S p1 = S::monomial(2, 4, {1, 0}, one);
    REQUIRE(theta_shift(p1, {1, 0}, s) == p1 * s);
    // N=2, c=(1,-1): p1 p2 fixed   [DERIVED]
    S p12 = S::monomial(2, 4, {1, 1}, one);
    REQUIRE(theta_shift(p12, {1, -1}, s) == p12);
    // additivity of shifts
    REQUIRE(theta_shift(theta_shift(f, {1, -2}, s), {2, 3}, s) ==
            theta_shift(f, {3, 1}, s));
}

TEST_CASE("q_laplacian_shift") {
    auto ctx = ctx_for(10);
    Scalar s = ctx.s, one = s.unit();
    std::mt19937_64 rng(31);
    // N=1: unchanged   [TRIVIAL]
    S f1 = random_series(1, 5, rng, ctx.mode);
    REQUIRE(q_laplacian_shift(f1, s) == f1);
    // N=2, v=(1,0): x s^{-1}; v=(1,1): unchanged   [DERIVED]
    S g = S::monomial(2, 3, {1, 0}, one) + S::monomial(2, 3, {1, 1}, one);
    S shifted = q_laplacian_shift(g, s);
    REQUIRE(shifted.coeff({1, 0}) == s.pow(-1));
    REQUIRE(shifted.coeff({1, 1}) == one);
}

TEST_CASE("json serialization is canonical") {
    Scalar one = Scalar::one(Mode::ExactRational);
    S f = S::monomial(2, 3, {1, 0}, Scalar::rational(1, 2)) +
          S::one(2, 3, one) +
          S::monomial(2, 3, {0, 2}, Scalar::integer(-3, Mode::ExactRational));
    auto j = pseries_to_json(f);
    REQUIRE(j["vars"] == 2);
    REQUIRE(j["trunc"] == 3);
    REQUIRE(j["terms"].size() == 3);
    // lexicographic ordering of multi-indices
    REQUIRE(j["terms"][0][0] == 0);
    REQUIRE(j["terms"][0][1] == 0);
    REQUIRE(j["terms"][0][2] == "1");
    REQUIRE(j["terms"][1][1] == 2);
    REQUIRE(j["terms"][1][2] == "-3");
    REQUIRE(j["terms"][2][0] == 1);
    REQUIRE(j["terms"][2][2] == "1/2");
    std::string csv = pseries_to_csv(f);
    REQUIRE(csv == "v1,v2,coeff\n0,0,1\n0,2,-3\n1,0,1/2\n");
}
