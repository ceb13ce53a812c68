#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tbl/errors.hpp"
#include "tbl/metric.hpp"
#include "tbl/risk.hpp"
#include "tbl/rng.hpp"

using namespace tbl;

namespace {

GcnSpec constant_map_gcn(double w) {
    Matrix weight(1, 1);
    weight(0, 0) = w;
    std::vector<Matrix> weights{weight};
    return GcnSpec(1, {1, 1}, std::move(weights), {std::max(1.0, std::abs(w))},
                   Activation::identity);
}

Matrix row_features(std::initializer_list<double> vals) {
    Matrix x(1, static_cast<int>(vals.size()));
    int j = 0;
    for (double v : vals) x(0, j++) = v;
    return x;
}

TransductiveTask two_node_task() {
    // Teacher maps features to 0 (zero weight); the unit-weight hypothesis
    // reproduces the raw features (single layer: no diffusion).
    return TransductiveTask{complete_graph(2), row_features({0.0, 1.0}), constant_map_gcn(0.0),
                            DiscreteMeasure::uniform(2), LossSpec::absolute(), 1};
}

}  // namespace

TEST_CASE("loss specs") {
    const auto abs_loss = LossSpec::absolute();
    CHECK(abs_loss(3.0, 1.0) == 2.0);
    CHECK(abs_loss(1.0, 1.0) == 0.0);
    CHECK(abs_loss.lipschitz() == 2.0);  // attained by (1,-1) vs (0,0)

    const auto sq = LossSpec::squared_clipped(1.0);
    CHECK(sq(2.0, 0.0) == 1.0);  // clipped
    CHECK(sq(0.5, 0.0) == 0.25);

    const auto hub = LossSpec::huber(1.0);
    CHECK(hub(0.5, 0.0) == doctest::Approx(0.125));
    CHECK(hub(3.0, 0.0) == doctest::Approx(2.5));

    SUBCASE("declared lipschitz constants hold on samples") {
        Rng rng(88);
        for (const auto& loss : {abs_loss, sq, hub}) {
            for (int rep = 0; rep < 2000; ++rep) {
                const double y = rng.uniform(-2.0, 2.0), z = rng.uniform(-2.0, 2.0);
                const double y2 = rng.uniform(-2.0, 2.0), z2 = rng.uniform(-2.0, 2.0);
                const double lhs = std::abs(loss(y, z) - loss(y2, z2));
                const double rhs =
                    loss.lipschitz() * std::max(std::abs(y - y2), std::abs(z - z2));
                CHECK(lhs <= rhs + 1e-12);
                CHECK(loss(y, z) >= 0.0);
                CHECK(loss(y, y) == 0.0);
            }
        }
    }
}

TEST_CASE("empirical and true risk") {
    const auto task = two_node_task();
    const auto hypothesis = constant_map_gcn(1.0);  // outputs (0, 1); teacher labels (0, 0)

    SUBCASE("teacher scores zero") {
        const int sample[] = {0, 1, 1};
        CHECK(empirical_risk(task, task.teacher, sample) == 0.0);
        CHECK(true_risk(task, task.teacher) == 0.0);
    }
    SUBCASE("per-node empirical values") {
        const int node0[] = {0};
        CHECK(empirical_risk(task, hypothesis, node0) == 0.0);
        const int node1[] = {1};
        CHECK(empirical_risk(task, hypothesis, node1) == 1.0);  // sqrt(|1-0|)
    }
    SUBCASE("true risk is the measure-weighted sum") {
        CHECK(true_risk(task, hypothesis) == doctest::Approx(0.5));  // (1/2)*0 + (1/2)*1
    }
    SUBCASE("point-mass node measure reads one node") {
        auto concentrated = task;
        concentrated.node_measure = DiscreteMeasure::point_mass(2, 1);
        CHECK(true_risk(concentrated, hypothesis) == doctest::Approx(1.0));
    }
    SUBCASE("empty samples are rejected") {
        CHECK_THROWS_AS((void)empirical_risk(task, hypothesis, std::span<const int>{}),
                        DomainError);
    }
    SUBCASE("risks live in [0, sqrt(B_l diam_out)]") {
        const double cap = std::sqrt(task.loss.lipschitz() * 1.0);  // outputs range over [0,1]
        CHECK(true_risk(task, hypothesis) <= cap + 1e-12);
    }
}

TEST_CASE("empirical risk converges to true risk") {
    const auto task = two_node_task();
    const auto hypothesis = constant_map_gcn(1.0);
    Rng rng(7);
    const int n = 10000;
    std::vector<int> sample(n);
    for (int& v : sample) v = static_cast<int>(rng.discrete(task.node_measure.weights()));
    const double emp = empirical_risk(task, hypothesis, sample);
    const double truth = true_risk(task, hypothesis);
    // per-draw values are in {0, 1} with variance 1/4
    const double se = 0.5 / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(emp - truth) <= 3.0 * se);
}

TEST_CASE("fixed-graph gap bound") {
    SUBCASE("n = 16 makes the r1 branch 4 before outer factors") {
        const auto r = gap_bound_fixed_graph(2, 16, 1.0, 1.0, 1.0, 1.0, 0.5);
        CHECK(r.r1 == doctest::Approx(1.0));
        CHECK(4.0 * r.r1 == doctest::Approx(4.0));
    }
    SUBCASE("branch bookkeeping at large n") {
        const auto r = gap_bound_fixed_graph(2, 1000000, 1.0, 1.0, 1.0, 1.0, 0.5);
        CHECK(r.min_branch == "4r1");
        CHECK(4.0 * r.r1 < 48.0 * r.r2);
    }
    SUBCASE("bound is reproducible from the report fields") {
        const auto r = gap_bound_fixed_graph(7, 64, 2.0, 3.0, 1.5, 4.0, 0.2);
        const double rebuilt =
            std::sqrt(2.0 * r.loss_lipschitz * r.lipschitz_const) *
            (std::sqrt(r.diam_sum) * std::min(4.0 * r.r1, 48.0 * r.r2) + r.t_dev);
        CHECK(r.bound == doctest::Approx(rebuilt).epsilon(1e-15));
        CHECK(r.diam_sum == 5.0);
        CHECK(r.confidence == doctest::Approx(0.8));
    }
    SUBCASE("monotone in n, shrinking as delta grows") {
        double prev = gap_bound_fixed_graph(5, 16, 2.0, 1.0, 1.0, 2.0, 0.1).bound;
        for (int n = 32; n <= 4096; n *= 2) {
            const double cur = gap_bound_fixed_graph(5, n, 2.0, 1.0, 1.0, 2.0, 0.1).bound;
            CHECK(cur < prev);
            prev = cur;
        }
        double prev_t = gap_bound_fixed_graph(5, 64, 2.0, 1.0, 1.0, 2.0, 0.05).t_dev;
        for (double delta : {0.1, 0.3, 0.6, 0.9, 0.99}) {
            const double cur = gap_bound_fixed_graph(5, 64, 2.0, 1.0, 1.0, 2.0, delta).t_dev;
            CHECK(cur < prev_t);
            prev_t = cur;
        }
    }
    SUBCASE("rejects bad parameters") {
        CHECK_THROWS_AS((void)gap_bound_fixed_graph(2, 3, 1.0, 1.0, 1.0, 1.0, 0.5), DomainError);
        CHECK_THROWS_AS((void)gap_bound_fixed_graph(2, 16, 1.0, 1.0, 1.0, 1.0, 0.0), DomainError);
        const double inf = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS((void)gap_bound_fixed_graph(2, 16, inf, 1.0, 1.0, 1.0, 0.5), DomainError);
    }
}

TEST_CASE("gcn gap bound feeds the class constant through") {
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    std::vector<Matrix> weights;
    weights.emplace_back(1, 4);
    weights.emplace_back(1, 1);
    GcnSpec spec(1, {4, 1, 1}, std::move(weights), {1.0, 1.0}, Activation::relu);
    const auto r = gap_bound_gcn(spec, g, 16, 1.0, 1.0, 0.1);
    CHECK(r.mode == "c31");
    CHECK(r.lipschitz_const == doctest::Approx(11.6568542).epsilon(1e-6));

    SUBCASE("zero-weight class reduces to the output range") {
        std::vector<Matrix> zero{Matrix(1, 4), Matrix(1, 1)};
        GcnSpec zspec(1, {4, 1, 1}, std::move(zero), {0.0, 0.0}, Activation::relu);
        CHECK(gap_bound_gcn(zspec, g, 16, 2.0, 1.0, 0.1).lipschitz_const == 2.0);
        CHECK(gap_bound_gcn(zspec, g, 16, 0.0, 1.0, 0.1).bound == 0.0);
    }
}

TEST_CASE("common-noise gap bound") {
    Matrix w(1, 1);
    w(0, 0) = 1.0;
    std::vector<Matrix> weights{w};
    GcnSpec spec(1, {1, 1}, std::move(weights), {1.0}, Activation::identity);

    SUBCASE("frozen deviation scale at D = 2") {
        // c_k = k-1, m_feat = 1/2 gives D = 2; t = sqrt(3 log2(20) * 4)/4
        const auto r = gap_bound_common_noise(spec, 5, 16, 4.0, 0.5, 1.0, 0.1);
        CHECK(r.lipschitz_const == doctest::Approx(2.0));
        CHECK(r.t_dev == doctest::Approx(1.8004018).epsilon(1e-6));
        CHECK(r.confidence == doctest::Approx(0.8));
        const double rebuilt = std::sqrt(2.0 * 1.0 * 2.0) *
                               (2.0 * std::min(4.0 * r.r1, 48.0 * r.r2) + r.t_dev);
        CHECK(r.bound == doctest::Approx(rebuilt).epsilon(1e-12));
    }
    SUBCASE("zero budgets zero the bound") {
        std::vector<Matrix> zero{Matrix(1, 1)};
        GcnSpec zspec(1, {1, 1}, std::move(zero), {0.0}, Activation::identity);
        CHECK(gap_bound_common_noise(zspec, 5, 16, 4.0, 0.5, 1.0, 0.1).bound == 0.0);
    }
    SUBCASE("delta must stay below one half") {
        CHECK_THROWS_AS((void)gap_bound_common_noise(spec, 5, 16, 4.0, 0.5, 1.0, 0.6),
                        DomainError);
    }
}

TEST_CASE("loss chain constant holds numerically") {
    // |l(f_v, f*_v) - l(f_v', f*_v')| <= 2 B_l B d(v, v') over sampled pairs.
    Rng rng(660);
    const auto g = oracles::random_connected_graph(6, 0.6, rng);
    const auto metric = shortest_path_metric(g);
    const auto teacher = random_gcn(1, {2, 2, 1}, {1.0, 1.0}, Activation::tanh, 5u);
    const auto student = random_gcn(1, {2, 2, 1}, {1.0, 1.0}, Activation::tanh, 6u);
    Matrix x(2, 6);
    for (double& v : x.data()) v = rng.uniform(-1.0, 1.0);

    const auto fx = gcn_forward(student, g, x);
    const auto labels = gcn_forward(teacher, g, x);
    const auto loss = LossSpec::absolute();
    double diam_out = 0.0;
    for (double a : fx)
        for (double b : fx) diam_out = std::max(diam_out, std::abs(a - b));
    for (double a : labels)
        for (double b : labels) diam_out = std::max(diam_out, std::abs(a - b));
    const double B = lipschitz_B(student, g, diam_out);
    for (int v = 0; v < 6; ++v)
        for (int w2 = 0; w2 < 6; ++w2) {
            if (v == w2) continue;
            const double lhs =
                std::abs(loss(fx[v], labels[v]) - loss(fx[w2], labels[w2]));
            CHECK(lhs <= 2.0 * loss.lipschitz() * B * metric.dist(v, w2) + 1e-12);
        }
}

TEST_CASE("monte carlo validation harness") {
    const auto task = [&] {
        TransductiveTask t{complete_graph(2), row_features({0.0, 1.0}), constant_map_gcn(0.0),
                           DiscreteMeasure::uniform(2), LossSpec::absolute(), 4};
        return t;
    }();

    SUBCASE("teacher-only pool has zero gap everywhere") {
        const auto res = validate_bound_montecarlo(task, {task.teacher}, 0.5, 200, 3u);
        CHECK(res.coverage == 1.0);
        for (double gap : res.max_gaps) CHECK(gap == 0.0);
    }
    SUBCASE("zero bound with a nonzero-gap pool gives zero coverage") {
        auto odd_sample = task;
        odd_sample.sample_size = 3;  // S/3 never hits the true risk 1/2, so gaps stay positive
        const std::vector<GcnSpec> pool{constant_map_gcn(1.0)};
        const auto res = validate_bound_montecarlo(odd_sample, pool, 0.0, 200, 3u);
        CHECK(res.coverage == 0.0);
    }
    SUBCASE("deterministic in the seed") {
        const std::vector<GcnSpec> pool{constant_map_gcn(1.0), constant_map_gcn(-1.0)};
        const auto a = validate_bound_montecarlo(task, pool, 0.3, 150, 9u);
        const auto b = validate_bound_montecarlo(task, pool, 0.3, 150, 9u);
        CHECK(a.coverage == b.coverage);
        CHECK(a.max_gaps == b.max_gaps);
    }
    SUBCASE("gaps never leave [0, sqrt(B_l diam_out)]") {
        const std::vector<GcnSpec> pool{constant_map_gcn(1.0), constant_map_gcn(-1.0)};
        const auto res = validate_bound_montecarlo(task, pool, 0.3, 300, 12u);
        std::vector<const GcnSpec*> nets;
        for (const auto& member : pool) nets.push_back(&member);
        nets.push_back(&task.teacher);
        const double diam_out = output_range(nets, task.graph, task.features);
        const double cap = std::sqrt(task.loss.lipschitz() * diam_out);
        for (double gap : res.max_gaps) {
            CHECK(gap >= 0.0);
            CHECK(gap <= cap + 1e-12);
        }
    }
    SUBCASE("empty pool is rejected") {
        CHECK_THROWS_AS((void)validate_bound_montecarlo(task, {}, 1.0, 10, 0u), DomainError);
    }
}

TEST_CASE("output range") {
    const auto g = complete_graph(2);
    const auto a = constant_map_gcn(1.0);
    const auto b = constant_map_gcn(-1.0);
    const Matrix x = row_features({0.0, 2.0});
    CHECK(output_range({&a, &b}, g, x) == doctest::Approx(4.0));  // outputs {0,2} and {0,-2}
}
