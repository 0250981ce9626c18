// Batch driver: verify identities, emit truncated series, run the suite.
//
//   saw verify  --identity main1 --r 1,2 --order 5 --mode prime --seeds 1,2,3
//   saw compute --series hs-z-adj --r 1,0 --side minus --order 3 --emit json
//   saw suite   --profile quick --seed 7
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error.  Conjecture-class
// identities report their verdict but never produce exit code 1.  The
// environment variable SAW_SEED supplies the default seed only.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "saw/chainsaw.hpp"
#include "saw/wallcross.hpp"

using namespace saw;
using nlohmann::json;

namespace {

struct Options {
    std::string identity, series, profile = "quick", emit = "json", side = "minus";
    int N = 0, order = 4, trials = 200;
    std::vector<int> r;
    Mode mode = Mode::PrimeField;
    std::vector<uint64_t> seeds;
    uint64_t seed = 0;
    long cap = 200000;
};

uint64_t env_default_seed() {
    if (const char* s = std::getenv("SAW_SEED")) return std::strtoull(s, nullptr, 10);
    return 1;
}

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::set<std::string> kConjecture = {"conj-adj-1", "conj-adj-2", "thm-adj",
                                           "conj-fund"};

const std::set<std::string> kIdentities = {
    "main1",     "main2",      "kajihara",  "lsw",          "noumi",
    "conj-adj-1", "conj-adj-2", "thm-adj",   "conj-fund",    "duality",
    "prop-str",  "gl-n-limit", "lemma-vanish", "adj-recursion", "check2",
    "residue1",  "lyk",        "elem",      "nek-forms"};

// ----- feasibility estimates --------------------------------------------

long chainsaw_fixed_point_count(int N, const std::vector<int>& r, int order) {
    int comps = 0;
    for (int ri : r) comps += ri;
    std::vector<long> pn(order + 1, 0);
    for (int n = 0; n <= order; ++n) pn[n] = (long)partitions_of(n).size();
    std::vector<long> dp(order + 1, 0);
    dp[0] = 1;
    for (int c = 0; c < comps; ++c) {
        std::vector<long> nx(order + 1, 0);
        for (int a = 0; a <= order; ++a)
            for (int b = 0; a + b <= order; ++b) nx[a + b] += dp[a] * pn[b];
        dp = nx;
    }
    long tot = 0;
    for (long v : dp) tot += v;
    return tot;
}

long handsaw_fixed_point_count(int parts, int order) {
    long tot = 0;
    for (int n = 0; n <= order; ++n) {
        long c = 1;
        for (int i = 1; i <= parts - 1; ++i) c = c * (n + i) / i;
        tot += (parts == 0) ? (n == 0 ? 1 : 0) : c;
    }
    return tot;
}

void check_cap(long estimate, long cap) {
    if (estimate > cap)
        throw usage_error("estimated fixed-point count " + std::to_string(estimate) +
                          " exceeds --cap-fixed-points " + std::to_string(cap));
}

// ----- random parameter helpers -----------------------------------------

Scalar rnd_unit(std::mt19937_64& rng, Mode mode, int bound) {
    for (int tries = 0; tries < 256; ++tries) {
        Scalar v = detail::sample_value(rng, mode);
        if (!v.is_zero() && detail::no_small_root_of_unity(v, bound)) return v;
    }
    throw math_error("parameter sampling budget exhausted");
}

std::vector<Scalar> rnd_distinct(std::mt19937_64& rng, Mode mode, int bound, int count) {
    std::vector<Scalar> out;
    while ((int)out.size() < count) {
        Scalar v = rnd_unit(rng, mode, bound);
        bool fresh = true;
        for (const auto& p : out) fresh = fresh && !(p == v);
        if (fresh) out.push_back(v);
    }
    return out;
}

// ----- single-seed dispatch ----------------------------------------------

VerdictReport bool_report(const std::string& id, json params, bool ok,
                          const std::string& what) {
    VerdictReport rep;
    rep.identity = id;
    rep.params = std::move(params);
    if (!ok) {
        rep.pass = false;
        rep.lhs = what;
        rep.rhs = "expected equality";
    }
    return rep;
}

VerdictReport merge(VerdictReport acc, const VerdictReport& next) {
    acc.wall_time_ms += next.wall_time_ms;
    if (acc.pass && !next.pass) {
        acc.pass = false;
        acc.mismatch_index = next.mismatch_index;
        acc.lhs = next.lhs;
        acc.rhs = next.rhs;
        acc.params = next.params;
    }
    return acc;
}

std::pair<int, int> handsaw_framing(const Options& opt) {
    if (opt.r.size() != 2) throw usage_error("--r must be r0,r1 for this identity");
    return {opt.r[0], opt.r[1]};
}

VerdictReport run_one(const Options& opt, uint64_t seed) {
    const std::string& id = opt.identity;
    int order = opt.order;
    int bound = 2 * order + 2;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x1f83d9abfb41bd6bULL);

    // chainsaw family
    if (id == "thm-adj" || id == "conj-adj-1" || id == "conj-adj-2" ||
        id == "conj-fund" || id == "duality" || id == "prop-str" || id == "gl-n-limit") {
        std::vector<int> r = opt.r;
        int N = opt.N ? opt.N : (int)r.size();
        if (r.empty() || (int)r.size() != N) throw usage_error("--r must list r_i for all N vertices");
        check_cap(chainsaw_fixed_point_count(N, r, order), opt.cap);
        auto ctx = sample_context(N, r, order, seed, opt.mode);
        if (id == "thm-adj") return verify_identity_adj(order, ctx);
        if (id == "conj-adj-1") return verify_conj_adj1(order, ctx);
        if (id == "conj-adj-2") return verify_conj_adj2(order, ctx);
        if (id == "conj-fund") return verify_conj_fund(order, ctx);
        if (id == "gl-n-limit") return gl_n_limit_check(r[0], order, ctx);
        if (id == "prop-str") {
            auto rep = limit_factorization(0, order, Stability::Stable, ctx);
            return merge(rep, limit_factorization(0, order, Stability::CoStable, ctx));
        }
        // duality: all multi-indices of total degree <= order
        WallTimer timer;
        VerdictReport rep = bool_report("duality", {{"N", N}, {"r", r}, {"order", order}},
                                        true, "");
        std::vector<int> v(N, 0);
        std::function<void(int, int)> rec = [&](int pos, int rem) {
            if (!rep.pass) return;
            if (pos == N) {
                if (!verify_duality(v, ctx)) {
                    rep.pass = false;
                    rep.mismatch_index = v;
                    rep.lhs = "coefficient differs from reflected dual";
                    rep.rhs = "";
                }
                return;
            }
            for (int x = 0; x <= rem; ++x) {
                v[pos] = x;
                rec(pos + 1, rem - x);
            }
            v[pos] = 0;
        };
        rec(0, order);
        rep.wall_time_ms = timer.ms();
        return rep;
    }

    // handsaw / wall-crossing family
    if (id == "main1" || id == "main2" || id == "adj-recursion" || id == "check2") {
        auto [r0, r1] = handsaw_framing(opt);
        check_cap(handsaw_fixed_point_count(std::max(r0, r1), order), opt.cap);
        auto ctx = sample_hs_context(r0, r1, order, seed, opt.mode);
        if (id == "main1") return verify_hs_main1(order, ctx);
        if (id == "main2") return verify_hs_main2(order, ctx);
        VerdictReport rep;
        rep.identity = id;
        rep.params = {{"r0", r0}, {"r1", r1}, {"order", order}};
        for (int n = 1; n <= order; ++n)
            rep = merge(rep, id == "check2" ? verify_check2(n, ctx)
                                            : verify_adj_recursion(n, ctx));
        return rep;
    }

    if (id == "lemma-vanish") {
        WallTimer timer;
        Scalar q = rnd_unit(rng, opt.mode, bound), t = rnd_unit(rng, opt.mode, bound);
        while (t == q) t = rnd_unit(rng, opt.mode, bound);
        bool ok = true;
        for (int n = 1; n <= order && ok; ++n)
            ok = lemma_vanish_check(n, q, t) && lemma_vanish_check(n, q, t, true);
        auto rep = bool_report(id, {{"order", order}}, ok, "chain sum nonzero");
        rep.wall_time_ms = timer.ms();
        return rep;
    }

    if (id == "kajihara") {
        if (opt.r.size() != 2) throw usage_error("--r must be m,n for kajihara");
        int m = opt.r[0], n = opt.r[1];
        Scalar q = rnd_unit(rng, opt.mode, bound);
        auto x = rnd_distinct(rng, opt.mode, bound, m);
        std::vector<Scalar> a, b, y;
        for (int i = 0; i < m; ++i) a.push_back(rnd_unit(rng, opt.mode, bound));
        for (int i = 0; i < n; ++i) {
            b.push_back(rnd_unit(rng, opt.mode, bound));
            y.push_back(rnd_unit(rng, opt.mode, bound));
        }
        Scalar c = rnd_unit(rng, opt.mode, bound), u = rnd_unit(rng, opt.mode, bound);
        return verify_kajihara(a, x, b, y, c, u, order, q);
    }

    if (id == "lsw" || id == "noumi") {
        auto [r0, r1] = handsaw_framing(opt);
        if (id == "lsw" && r0 != r1) throw usage_error("lsw needs r0 == r1");
        if (r0 > r1) throw usage_error("noumi needs r0 <= r1");
        Scalar q = rnd_unit(rng, opt.mode, bound), tau = rnd_unit(rng, opt.mode, bound);
        auto x = rnd_distinct(rng, opt.mode, bound, r1);
        auto y = rnd_distinct(rng, opt.mode, bound, r0);
        return verify_noumi(x, y, tau, order, q);
    }

    if (id == "residue1") {
        WallTimer timer;
        int K = std::max(1, std::min(order, 5));
        bool ok = true;
        for (int trial = 0; trial < opt.trials && ok; ++trial) {
            auto z = rnd_distinct(rng, opt.mode, 2, K);
            auto w = rnd_distinct(rng, opt.mode, 2, K);
            ok = residue_sum_check(z, w);
        }
        auto rep = bool_report(id, {{"K", K}, {"trials", opt.trials}}, ok,
                               "residue sum differs from closed form");
        rep.wall_time_ms = timer.ms();
        return rep;
    }

    if (id == "lyk") {
        WallTimer timer;
        int Nmax = opt.N ? opt.N : 4;
        bool ok = true;
        for (int N = 1; N <= Nmax && ok; ++N)
            for (int n = 0; n <= order && ok; ++n)
                for (const auto& lam : partitions_of(n))
                    for (int k = 0; k < N; ++k)
                        ok = ok && leg_colored_count(lam, N, k) ==
                                       colored_row_count(lam, N, k + 1);
        auto rep = bool_report(id, {{"N", Nmax}, {"max_size", order}}, ok,
                               "leg count differs from colored box count");
        rep.wall_time_ms = timer.ms();
        return rep;
    }

    if (id == "elem") {
        WallTimer timer;
        bool ok = true;
        std::uniform_int_distribution<int> kd(0, 3);
        for (int m = 1; m <= 3 && ok; ++m) {
            Scalar q = rnd_unit(rng, opt.mode, 16);
            auto x = rnd_distinct(rng, opt.mode, 2, m);
            std::vector<int> k(m);
            for (int& v : k) v = kd(rng);
            ok = lemma_elem_check(x, k, q);
        }
        auto rep = bool_report(id, {{"max_m", 3}}, ok, "product forms differ");
        rep.wall_time_ms = timer.ms();
        return rep;
    }

    if (id == "nek-forms") {
        WallTimer timer;
        int N = opt.N ? opt.N : 2;
        Scalar u = rnd_unit(rng, opt.mode, 2), q = rnd_unit(rng, opt.mode, 2);
        Scalar kap = rnd_unit(rng, opt.mode, 2);
        bool ok = true;
        std::vector<Partition> all;
        for (int n = 0; n <= order; ++n)
            for (const auto& lam : partitions_of(n)) all.push_back(lam);
        for (const auto& la : all)
            for (const auto& mu : all)
                for (int k = 0; k < N && ok; ++k)
                    ok = nek_row(la, mu, k, N, u, q, kap) ==
                         nek_box(la, mu, k, N, u, q, kap);
        auto rep = bool_report(id, {{"N", N}, {"max_size", order}}, ok,
                               "row and box forms differ");
        rep.wall_time_ms = timer.ms();
        return rep;
    }

    throw usage_error("unknown identity: " + id);
}

VerdictReport run_verify(const Options& opt) {
    if (!kIdentities.count(opt.identity)) throw usage_error("unknown identity: " + opt.identity);
    VerdictReport rep;
    rep.identity = opt.identity;
    bool first = true;
    for (uint64_t seed : opt.seeds) {
        VerdictReport one;
        bool done = false;
        for (uint64_t retry = 0; retry < 8 && !done; ++retry) {
            try {
                one = run_one(opt, seed + retry * 0x100000001b3ULL);
                done = true;
            } catch (const resample_signal&) {
            }
        }
        if (!done) throw math_error("resampling budget exhausted for seed " + std::to_string(seed));
        if (first) {
            rep = one;
            first = false;
        } else {
            rep = merge(rep, one);
        }
    }
    json seeds = json::array();
    for (uint64_t s : opt.seeds) seeds.push_back(s);
    rep.params["seeds"] = seeds;
    rep.params["mode"] = opt.mode == Mode::PrimeField ? "prime" : "exact";
    if (kConjecture.count(opt.identity)) rep.params["class"] = "conjecture";
    return rep;
}

// ----- compute ------------------------------------------------------------

PSeries<Scalar> compute_series(const Options& opt, uint64_t seed) {
    const std::string& id = opt.series;
    int order = opt.order;
    int bound = 2 * order + 2;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x1f83d9abfb41bd6bULL);

    if (id == "z-adj" || id == "z-adj-dual" || id == "z-fund" || id == "z-fund-dual" ||
        id == "phi-ratio" || id == "gl-n") {
        std::vector<int> r = opt.r;
        int N = opt.N ? opt.N : (int)r.size();
        if (r.empty() || (int)r.size() != N) throw usage_error("--r must list r_i for all N vertices");
        check_cap(chainsaw_fixed_point_count(N, r, order), opt.cap);
        auto ctx = sample_context(N, r, order, seed, opt.mode);
        Stability st = (id == "z-adj-dual" || id == "z-fund-dual") ? Stability::CoStable
                                                                   : Stability::Stable;
        if (id == "z-adj" || id == "z-adj-dual")
            return z_series(st, MatterClass::Adjoint, order, ctx, ctx.t);
        if (id == "z-fund" || id == "z-fund-dual")
            return z_series(st, MatterClass::Fundamental, order, ctx, ctx.s.unit());
        if (id == "phi-ratio") return phi_ratio(order, ctx);
        // gl-n: the kappa-twisted adjoint series at p_N = 0 in the y-variables
        int d = r[0];
        for (int ri : r)
            if (ri != d) throw usage_error("gl-n needs r = (d,...,d)");
        EvalContext sctx = ctx;
        for (int i = 0; i < N; ++i)
            for (int a = 0; a < d; ++a) sctx.e[i][a] = ctx.kappa.pow(-i) * ctx.e[i][a];
        auto Z = z_series(Stability::Stable, MatterClass::Adjoint, order, sctx, ctx.t);
        auto L = PSeries<Scalar>::zero(N - 1, order, ctx.s.unit());
        for (const auto& [v, c] : Z.terms()) {
            if (v[N - 1] != 0) continue;
            std::vector<int> y(v.begin(), v.end() - 1);
            int tot = 0;
            for (int x : y) tot += x;
            L.add_term(y, c * ctx.t.pow(-(long)d * tot));
        }
        return L;
    }

    if (id == "hs-z-adj" || id == "hs-z-fund-hat") {
        auto [r0, r1] = handsaw_framing(opt);
        check_cap(handsaw_fixed_point_count(std::max(r0, r1), order), opt.cap);
        auto ctx = sample_hs_context(r0, r1, order, seed, opt.mode);
        HsSide side;
        if (opt.side == "plus")
            side = HsSide::Plus;
        else if (opt.side == "minus")
            side = HsSide::Minus;
        else
            throw usage_error("--side must be plus or minus");
        return id == "hs-z-adj" ? hs_z_adj_explicit(side, order, ctx)
                                : hs_z_fund_hat(side, order, ctx);
    }

    if (id == "kajihara-phi") {
        if (opt.r.size() != 2) throw usage_error("--r must be m,n for kajihara-phi");
        int m = opt.r[0], n = opt.r[1];
        Scalar q = rnd_unit(rng, opt.mode, bound);
        auto x = rnd_distinct(rng, opt.mode, bound, m);
        std::vector<Scalar> a, b, c;
        for (int i = 0; i < m; ++i) a.push_back(rnd_unit(rng, opt.mode, bound));
        for (int i = 0; i < n; ++i) {
            b.push_back(rnd_unit(rng, opt.mode, bound));
            c.push_back(rnd_unit(rng, opt.mode, bound));
        }
        Scalar u = rnd_unit(rng, opt.mode, bound);
        return kajihara_phi(a, x, b, c, u, order, q);
    }

    throw usage_error("unknown series: " + id);
}

int run_compute(const Options& opt) {
    PSeries<Scalar> f = [&] {
        for (uint64_t retry = 0; retry < 8; ++retry) {
            try {
                return compute_series(opt, opt.seed + retry * 0x100000001b3ULL);
            } catch (const resample_signal&) {
            }
        }
        throw math_error("resampling budget exhausted");
    }();
    if (opt.emit == "csv")
        std::cout << pseries_to_csv(f);
    else
        std::cout << pseries_to_json(f).dump() << "\n";
    return 0;
}

// ----- suite ----------------------------------------------------------------

struct Job {
    std::string identity;
    std::vector<int> r;
    int N = 0;
    int order = 4;
    int trials = 200;
    Mode mode = Mode::PrimeField;
    int n_seeds = 3;
};

std::vector<Job> suite_jobs(const std::string& profile) {
    std::vector<Job> jobs;
    auto add = [&](std::string id, std::vector<int> r, int N, int order,
                   int n_seeds = 3, Mode mode = Mode::PrimeField) {
        jobs.push_back({std::move(id), std::move(r), N, order, 200, mode, n_seeds});
    };
    bool full = profile == "full";
    int ord = full ? 5 : 4;

    add("nek-forms", {}, 2, full ? 5 : 4);
    add("lyk", {}, 4, full ? 10 : 8, 1);
    add("elem", {}, 0, 3);
    add("residue1", {}, 0, full ? 5 : 3, 1);

    std::vector<std::pair<int, int>> framings = {{1, 0}, {0, 1}, {1, 1}};
    if (full) framings.insert(framings.end(), {{2, 1}, {1, 2}, {2, 2}});
    for (auto [r0, r1] : framings) {
        add("main1", {r0, r1}, 0, ord);
        add("main2", {r0, r1}, 0, ord);
    }
    for (int m = 1; m <= (full ? 2 : 1); ++m)
        for (int n = 1; n <= (full ? 2 : 1); ++n) add("kajihara", {m, n}, 0, ord);
    add("lsw", {1, 1}, 0, ord);
    if (full) add("lsw", {2, 2}, 0, ord);
    add("noumi", {1, 2}, 0, ord);
    if (full) add("noumi", {1, 3}, 0, ord);

    add("adj-recursion", {1, 0}, 0, full ? 4 : 3);
    if (full) add("adj-recursion", {2, 1}, 0, 4);
    add("check2", {1, 1}, 0, full ? 4 : 3);
    add("lemma-vanish", {}, 0, full ? 5 : 4, full ? 2 : 1);
    if (full) add("lemma-vanish", {}, 0, 5, 1, Mode::ExactRational);

    add("thm-adj", {1, 0}, 2, 3);
    if (full) {
        add("thm-adj", {2, 1}, 2, 3);
        add("thm-adj", {1, 1, 0}, 3, 2);
    }
    add("conj-adj-1", {1, 0}, 2, 3, 1);
    add("conj-adj-2", {1, 1}, 2, 3, 1);
    add("conj-fund", {1}, 1, 3, 1);
    if (full) add("conj-fund", {1, 1}, 2, 2, 1);
    add("duality", {1, 1}, 2, 2, 1);
    add("prop-str", {1, 0}, 2, 2, 1);
    add("gl-n-limit", {1, 1}, 2, 3, 1);
    if (full) add("gl-n-limit", {1, 1, 1}, 3, 3, 1);
    return jobs;
}

int run_suite(const Options& opt) {
    if (opt.profile != "quick" && opt.profile != "full")
        throw usage_error("--profile must be quick or full");
    auto jobs = suite_jobs(opt.profile);
    int passed = 0, failed = 0, conj_failed = 0;
    for (const auto& job : jobs) {
        Options o;
        o.identity = job.identity;
        o.r = job.r;
        o.N = job.N;
        o.order = job.order;
        o.trials = job.trials;
        o.mode = job.mode;
        o.cap = opt.cap;
        for (int i = 0; i < job.n_seeds; ++i) o.seeds.push_back(opt.seed + i);
        auto rep = run_verify(o);
        rep.wall_time_ms = 0; // timings are excluded so reports are reproducible
        std::cout << rep.to_json().dump() << "\n";
        bool conjecture = kConjecture.count(job.identity) > 0;
        if (rep.pass)
            ++passed;
        else if (conjecture)
            ++conj_failed;
        else
            ++failed;
    }
    json summary = {{"summary",
                     {{"profile", opt.profile},
                      {"seed", opt.seed},
                      {"total", (int)jobs.size()},
                      {"passed", passed},
                      {"failed", failed},
                      {"conjecture_failed", conj_failed}}}};
    std::cout << summary.dump() << "\n";
    return failed > 0 ? 1 : 0;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

std::vector<uint64_t> parse_seed_list(const std::string& s) {
    std::vector<uint64_t> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::strtoull(s.substr(pos, next - pos).c_str(), nullptr, 10));
        pos = next + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated-series identity verifier"};
    app.require_subcommand(1);
    Options opt;
    std::string r_str, seeds_str, mode_str = "prime";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--N", opt.N, "number of quiver vertices");
        sub->add_option("--r", r_str, "framing vector, comma separated");
        sub->add_option("--order", opt.order, "truncation order");
        sub->add_option("--mode", mode_str, "exact|prime")
            ->check(CLI::IsMember({"exact", "prime"}));
        sub->add_option("--cap-fixed-points", opt.cap, "fixed-point count cap");
    };

    auto* verify = app.add_subcommand("verify", "verify one identity");
    verify->add_option("--identity", opt.identity, "identity id")->required();
    verify->add_option("--seeds", seeds_str, "seeds, comma separated");
    verify->add_option("--trials", opt.trials, "trial count for randomized lemmas");
    add_common(verify);

    auto* compute = app.add_subcommand("compute", "emit a truncated series");
    compute->add_option("--series", opt.series, "series id")->required();
    compute->add_option("--seed", opt.seed, "sampling seed");
    compute->add_option("--side", opt.side, "plus|minus (handsaw series)");
    compute->add_option("--emit", opt.emit, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_common(compute);

    auto* suite = app.add_subcommand("suite", "run the verification battery");
    suite->add_option("--profile", opt.profile, "quick|full");
    suite->add_option("--seed", opt.seed, "base seed");
    suite->add_option("--cap-fixed-points", opt.cap, "fixed-point count cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        opt.mode = mode_str == "exact" ? Mode::ExactRational : Mode::PrimeField;
        if (!r_str.empty()) opt.r = parse_int_list(r_str);
        if (!seeds_str.empty()) opt.seeds = parse_seed_list(seeds_str);
        if (opt.seeds.empty()) opt.seeds = {env_default_seed()};
        if (!compute->parsed() && !suite->parsed()) opt.seed = opt.seeds[0];
        if ((compute->parsed() || suite->parsed()) && opt.seed == 0 &&
            suite->count("--seed") == 0 && compute->count("--seed") == 0)
            opt.seed = env_default_seed();

        if (verify->parsed()) {
            auto rep = run_verify(opt);
            std::cout << rep.to_json().dump() << "\n";
            if (!rep.pass && !kConjecture.count(opt.identity)) return 1;
            return 0;
        }
        if (compute->parsed()) return run_compute(opt);
        return run_suite(opt);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
