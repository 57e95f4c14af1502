#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rholab/mixing.hpp"
#include "rholab/rng.hpp"

using namespace rholab;

namespace {

// Exhaustive oracle: walk every one of degree^r edge sequences.
std::uint64_t count_paths_brute(const RhoGraph& g, std::uint64_t start,
                                const std::vector<std::uint64_t>& target, std::uint64_t r) {
    const std::uint64_t n = g.n.value();
    std::vector<std::uint64_t> ends = {start};
    for (std::uint64_t step = 0; step < r; ++step) {
        std::vector<std::uint64_t> next;
        next.reserve(ends.size() * g.degree());
        for (std::uint64_t v : ends) {
            for (std::uint64_t y : g.multipliers) next.push_back(add_mod(v, y % n, n));
            for (std::uint64_t p : g.powers) next.push_back(mul_mod(p % n, v, n));
        }
        ends.swap(next);
    }
    std::uint64_t hits = 0;
    for (std::uint64_t v : ends)
        for (std::uint64_t s : target)
            if (v == s) ++hits;
    return hits;
}

} // namespace

TEST_CASE("transition operator rows are stochastic and fix the uniform distribution") {
    const TransitionOperator op(RhoGraph(Modulus(101), 7));
    std::vector<double> p(101, 1.0 / 101.0), q(101);
    op.step(p, q);
    for (double v : q) REQUIRE(v == doctest::Approx(1.0 / 101.0).epsilon(1e-12));

    std::fill(p.begin(), p.end(), 0.0);
    p[13] = 1.0;
    op.step(p, q);
    double total = 0;
    for (double v : q) total += v;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("one step from a vertex reaches exactly its out-neighbours") {
    const std::uint64_t n = 11, y = 3, start = 4;
    const std::vector<std::uint64_t> neighbours = {add_mod(start, 1, n), add_mod(start, y, n),
                                                   mul_mod(2, start, n)};
    PathCountQuery q;
    q.n = n;
    q.y = y;
    q.start = start;
    q.target = neighbours;
    q.r = 1;
    CHECK(count_paths(q) == doctest::Approx(3.0));
}

TEST_CASE("paths into the whole vertex set count degree^r") {
    const std::uint64_t n = 11;
    std::vector<std::uint64_t> everything(n);
    for (std::uint64_t v = 0; v < n; ++v) everything[v] = v;
    for (std::uint64_t r : {1ull, 2ull, 4ull, 6ull}) {
        PathCountQuery q;
        q.n = n;
        q.y = 3;
        q.start = 2;
        q.target = everything;
        q.r = r;
        CHECK(count_paths(q) == doctest::Approx(std::pow(3.0, static_cast<double>(r))));
    }
}

TEST_CASE("length-4 path counts match the exhaustive 81-path enumeration") {
    const RhoGraph g(Modulus(11), 3);
    for (std::uint64_t s = 0; s < 11; ++s) {
        const std::vector<std::uint64_t> singleton = {s};
        const std::vector<double> counts = path_counts_all_starts(g, singleton, 4);
        for (std::uint64_t start = 0; start < 11; ++start)
            REQUIRE(counts[start] == doctest::Approx(static_cast<double>(
                        count_paths_brute(g, start, singleton, 4))));
    }
}

TEST_CASE("per-start counts over singleton targets conserve degree^r") {
    const RhoGraph g(Modulus(11), 3);
    const std::uint64_t r = 5;
    std::vector<double> total(11, 0.0);
    for (std::uint64_t s = 0; s < 11; ++s) {
        const std::vector<std::uint64_t> singleton = {s};
        const std::vector<double> counts = path_counts_all_starts(g, singleton, r);
        for (std::uint64_t start = 0; start < 11; ++start) total[start] += counts[start];
    }
    for (double t : total) REQUIRE(t == doctest::Approx(std::pow(3.0, 5.0)));
}

TEST_CASE("indicator splits exactly into mean plus a residual below sqrt|S|") {
    const std::uint64_t n = 101;
    SplitMix64 rng(8);
    std::vector<std::uint64_t> target;
    for (std::uint64_t v = 0; v < n; ++v)
        if (uniform_unit(rng) < 0.1) target.push_back(v);
    REQUIRE(!target.empty());

    std::vector<double> chi(n, 0.0);
    for (std::uint64_t v : target) chi[v] = 1.0;
    const double mean = static_cast<double>(target.size()) / static_cast<double>(n);
    double reconstruction_error = 0, w_norm2 = 0, sum_w = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
        const double w = chi[v] - mean;
        reconstruction_error = std::max(reconstruction_error, std::abs(mean + w - chi[v]));
        w_norm2 += w * w;
        sum_w += w;
    }
    CHECK(reconstruction_error == 0.0);
    CHECK(std::abs(sum_w) < 1e-12);
    CHECK(std::sqrt(w_norm2) <= std::sqrt(static_cast<double>(target.size())));

    // the point-mass residual has norm at most 1
    const double u_norm2 = (1.0 - 1.0 / n) * (1.0 - 1.0 / n) + (n - 1) * (1.0 / n) * (1.0 / n);
    CHECK(std::sqrt(u_norm2) <= 1.0);
}

TEST_CASE("repeated application contracts vectors orthogonal to constants by mu^r") {
    const std::uint64_t n = 101, y = 7;
    const RhoGraph g(Modulus(n), y);
    const double mu = operator_norm_l0(g).mu;
    const DenseMatrix m = build_dense_adjacency(g);

    SplitMix64 rng(21);
    std::vector<double> u(n);
    double mean = 0;
    for (auto& v : u) {
        v = 2.0 * uniform_unit(rng) - 1.0;
        mean += v;
    }
    for (auto& v : u) v -= mean / static_cast<double>(n);
    double u0 = 0;
    for (double v : u) u0 += v * v;
    u0 = std::sqrt(u0);

    std::vector<double> cur = u, next(n);
    for (std::uint64_t r = 1; r <= 8; ++r) {
        for (std::uint64_t i = 0; i < n; ++i) {
            double acc = 0;
            for (std::uint64_t j = 0; j < n; ++j) acc += m.at(i, j) * cur[j];
            next[i] = acc;
        }
        cur = next;
        double norm = 0;
        for (double v : cur) norm += v * v;
        norm = std::sqrt(norm);
        REQUIRE(norm <= std::pow(mu, static_cast<double>(r)) * u0 * (1.0 + 1e-9));
    }
}

TEST_CASE("path counts stay inside the band at the threshold length") {
    const Modulus n(101);
    const std::uint64_t y = 7;
    const double mu = operator_norm_l0(RhoGraph(n, y)).mu;
    BandCheckConfig cfg;
    cfg.subsets = 25;
    const BandCheckReport rep = verify_path_count_band(n, y, mu, cfg);
    CHECK(rep.ok);
    CHECK(rep.violations == 0);
    CHECK(rep.worst_ratio_low >= 0.5);
    CHECK(rep.worst_ratio_high <= 1.5);
    CHECK(rep.sharp_bound_worst <= 1.0);
    CHECK(rep.audit.size() == 25 * 101);
    const std::string csv = to_csv(rep);
    CHECK(csv.rfind("start,subset_id,count,expected,ratio\n", 0) == 0);
}

TEST_CASE("band check rejects mu out of range") {
    CHECK_THROWS_AS(verify_path_count_band(Modulus(101), 7, 3.0, {}), std::invalid_argument);
}

TEST_CASE("total variation of a point mass against uniform is 1 - 1/n") {
    const std::uint64_t n = 101;
    std::vector<double> p(n, 0.0);
    p[0] = 1.0;
    double tv = 0;
    for (double v : p) tv += std::abs(v - 1.0 / n);
    tv *= 0.5;
    CHECK(tv == doctest::Approx(1.0 - 1.0 / n).epsilon(1e-12));
}

TEST_CASE("walk graph mixes within the polylog budget and the curve is monotone") {
    const TransitionOperator op(RhoGraph(Modulus(101), 7));
    const double lncube = std::pow(std::log(101.0), 3.0);
    const MixingReport rep = tv_mixing_time(op, 0.25, static_cast<std::uint64_t>(4.0 * lncube));
    REQUIRE(rep.tau.has_value());
    CHECK(*rep.tau >= 2);
    CHECK(static_cast<double>(*rep.tau) <= 4.0 * lncube);
    for (std::size_t i = 1; i < rep.max_tv.size(); ++i)
        REQUIRE(rep.max_tv[i] <= rep.max_tv[i - 1] + 1e-12);
    CHECK(rep.variant == "rho");
    const std::string csv = to_csv(rep);
    CHECK(csv.rfind("n,variant,r,max_tv\n", 0) == 0);
}

TEST_CASE("the no-squaring chain is translation invariant and slow") {
    const std::uint64_t n = 53, y = 7;
    const TransitionOperator op(RhoGraph(Modulus(n), {1, y}, {}));
    REQUIRE(op.translation_invariant());

    // the distribution from start s is the shift of the distribution from 0
    std::vector<double> p0(n, 0.0), p17(n, 0.0), a(n), b(n);
    p0[0] = 1.0;
    p17[17] = 1.0;
    for (int r = 0; r < 100; ++r) {
        op.step(p0, a);
        op.step(p17, b);
        p0.swap(a);
        p17.swap(b);
    }
    for (std::uint64_t v = 0; v < n; ++v)
        REQUIRE(p0[v] == doctest::Approx(p17[(v + 17) % n]).epsilon(1e-12));

    const MixingReport rep = tv_mixing_time(op, 0.25, 2 * n * n);
    REQUIRE(rep.tau.has_value());
    CHECK(*rep.tau >= 300);   // polynomial scale even at n = 53
    CHECK(*rep.tau <= 900);
    CHECK(rep.variant == "no-squaring");
}

TEST_CASE("an exhausted budget reports not-mixed instead of failing") {
    const TransitionOperator op(RhoGraph(Modulus(101), {1, 7}, {}));
    const MixingReport rep = tv_mixing_time(op, 0.25, 10);
    CHECK_FALSE(rep.tau.has_value());
    CHECK(rep.max_tv.size() == 10);
}

TEST_CASE("collision-bound run records hits against the early iterate set") {
    const Modulus n(1009);
    const GroupSpec grp = GroupSpec::exponent_model(n, 501);
    const CollisionBoundRun run = collision_bound_run(grp, 31337, 31, 332, 90);
    CHECK(run.hits.size() == 90);
    if (run.first_hit) {
        CHECK(run.hits[*run.first_hit - 1] == 1);
        for (std::uint64_t j = 0; j + 1 < *run.first_hit; ++j) CHECK(run.hits[j] == 0);
    }
}

TEST_CASE("collision-bound check wires up its defaults") {
    const CollisionBoundRun run = collision_bound_check(1009, 42);
    CHECK(run.hits.size() == 9 * 31);
    const CollisionBoundRun again = collision_bound_check(1009, 42);
    CHECK(run.hits == again.hits);
    CHECK_THROWS_AS(collision_bound_check(1001, 1), std::invalid_argument);
}

TEST_CASE("collision-bound experiment: hit floor and geometric tail of the floor model") {
    const CollisionBoundReport rep = collision_bound_experiment(1009, 200, 2718, 3);
    CHECK(rep.t == 31);
    CHECK(rep.spacing == default_sample_spacing(1009));
    CHECK(rep.avg_hit_frequency >= rep.floor_rate);
    for (unsigned b = 1; b <= 3; ++b) {
        // 200 runs: allow three sigma around exp(-b)
        const double sigma = std::sqrt(rep.expected_tail[b - 1] * (1.0 - rep.expected_tail[b - 1]) / 200.0);
        CHECK(std::abs(rep.floor_model_no_hit_fraction[b - 1] - rep.expected_tail[b - 1]) <=
              3.0 * sigma + 1e-12);
    }
    // the walk's own tail is *not* geometric: it flattens once walks cycle
    CHECK(rep.walk_no_hit_fraction[2] <= rep.walk_no_hit_fraction[0]);
    CHECK(rep.runs == 200);

    // reproducibility
    const CollisionBoundReport again = collision_bound_experiment(1009, 200, 2718, 3);
    CHECK(again.avg_hit_frequency == rep.avg_hit_frequency);
    CHECK(again.floor_model_no_hit_fraction == rep.floor_model_no_hit_fraction);
}

TEST_CASE("default sample spacing is the cubed logarithm") {
    CHECK(default_sample_spacing(10007) == 782);
    const double ln = std::log(1009.0);
    CHECK(default_sample_spacing(1009) == static_cast<std::uint64_t>(std::ceil(ln * ln * ln)));
}
