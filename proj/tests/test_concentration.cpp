#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tbl/concentration.hpp"
#include "tbl/doubling.hpp"
#include "tbl/errors.hpp"
#include "tbl/metric.hpp"

using namespace tbl;

TEST_CASE("concentration rates") {
    SUBCASE("n = 16 forces r1 = 1") {
        const auto b = concentration_rates(2, 16, 1.0, 0.5, 2);
        CHECK(b.r1 == doctest::Approx(1.0));  // log2(16)/sqrt(16)
    }
    SUBCASE("M = 2 gives the 1/640 exponent") {
        const auto b = concentration_rates(2, 16, 1.0, 0.5, 2);
        CHECK(b.r3_exponent_den == 640);
        CHECK(b.r3 == doctest::Approx(std::pow(16.0, -1.0 / 640.0)));
    }
    SUBCASE("deviation scale") {
        const auto b = concentration_rates(2, 100, 4.0, 0.1, 2);
        CHECK(b.t_dev == doctest::Approx(0.7201607).epsilon(1e-6));  // frozen formula evaluation
    }
    SUBCASE("bad parameters") {
        CHECK_THROWS_AS((void)concentration_rates(2, 3, 1.0, 0.5, 2), DomainError);
        CHECK_THROWS_AS((void)concentration_rates(2, 16, 1.0, 1.5, 2), DomainError);
        CHECK_THROWS_AS((void)concentration_rates(2, 16, 1.0, 0.5, 1), DomainError);
    }
}

TEST_CASE("rate table entries") {
    SUBCASE("one dimension, alpha one") {
        const auto e = wasserstein_rate(1, 1.0);
        CHECK(e.regime == "m<2a");
        CHECK(e.constant == doctest::Approx((std::sqrt(2.0) + 1.0) / 2.0).epsilon(1e-12));
        CHECK(e.rate(64) == doctest::Approx(1.0 / 8.0));
    }
    SUBCASE("two dimensions, alpha one") {
        const auto e = wasserstein_rate(2, 1.0);
        CHECK(e.regime == "m=2a");
        CHECK(e.constant == 1.0);
        CHECK(e.rate(64) == doctest::Approx(6.0 / 8.0));   // ceil(log2 64) = 6
        CHECK(e.rate(65) == doctest::Approx(7.0 / std::sqrt(65.0)));
    }
    SUBCASE("three dimensions, alpha one") {
        const auto e = wasserstein_rate(3, 1.0);
        CHECK(e.regime == "m>2a");
        CHECK(e.constant == doctest::Approx(3.5992647).epsilon(1e-6));  // frozen evaluation
        CHECK(e.constant <= 18.0);
        CHECK(e.rate(64) == doctest::Approx(std::pow(64.0, -1.0 / 3.0)));
    }
    SUBCASE("half alpha hits the m=2a row at m=1") {
        const auto e = wasserstein_rate(1, 0.5);
        CHECK(e.regime == "m=2a");
        CHECK(e.constant == doctest::Approx(1.0 / (std::pow(2.0, -0.5) * 0.5)));
    }
    SUBCASE("constants stay below 18 through m = 64") {
        for (int m = 3; m <= 64; ++m) CHECK(wasserstein_rate(m, 1.0).constant <= 18.0);
    }
}

TEST_CASE("mean bound") {
    // n=16, k=2, diam=1: min(2*1, 24*0.5) = 2
    CHECK(mean_wasserstein_bound(2, 16, 1.0) == doctest::Approx(2.0));
    CHECK(mean_wasserstein_bound(5, 16, 0.0) == 0.0);  // singleton-range space
    SUBCASE("monotone decreasing for large n") {
        double prev = mean_wasserstein_bound(4, 256, 2.0);
        for (int n = 512; n <= 65536; n *= 2) {
            const double cur = mean_wasserstein_bound(4, n, 2.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("r3 exceeds r1 from n = 17 on when M = 2") {
    for (int n = 17; n <= 4096; n = n * 3 / 2 + 1) {
        const auto b = concentration_rates(2, n, 1.0, 0.5, 2);
        CHECK(b.r3 > b.r1);
    }
    const auto b16 = concentration_rates(2, 16, 1.0, 0.5, 2);
    CHECK(b16.r3 < b16.r1);  // boundary: r1(16) = 1
}

TEST_CASE("concentration experiment") {
    SUBCASE("point mass never moves") {
        const auto m = shortest_path_metric(complete_graph(3));
        const int ns[] = {4, 16};
        const auto rows = run_concentration_experiment(m, DiscreteMeasure::point_mass(3, 0), ns, 50,
                                                       9u, 0.1, 3);
        for (const auto& row : rows) {
            CHECK(row.mean_w == 0.0);
            CHECK(row.pass);
        }
    }
    SUBCASE("two-point binomial oracle at n = 4") {
        // Closed form: E|S/4 - 1/2|, S ~ Bin(4, 1/2) = 3/16.
        CHECK(oracles::two_point_mean_w(4) == doctest::Approx(0.1875));
        const auto m = shortest_path_metric(complete_graph(2));
        const int ns[] = {4};
        const auto rows =
            run_concentration_experiment(m, DiscreteMeasure::uniform(2), ns, 10000, 31u, 0.1, 2);
        const double se = rows[0].std_w / std::sqrt(10000.0);
        CHECK(std::abs(rows[0].mean_w - 0.1875) <= 3.0 * se);
        CHECK(rows[0].pass);
    }
    SUBCASE("uniform star stays under both bounds") {
        const auto m = shortest_path_metric(star_graph(5));
        const auto report = exact_doubling_constant(m);
        const int ns[] = {4, 16, 64};
        const auto rows = run_concentration_experiment(m, DiscreteMeasure::uniform(5), ns, 400, 5u,
                                                       0.1, *report.exact_M);
        for (const auto& row : rows) {
            CHECK(row.mean_w <= row.bound_mean);
            CHECK(row.quantile_dev <= row.bound_dev);
            CHECK(row.pass);
        }
    }
    SUBCASE("metric with distances below one is rejected") {
        Matrix d(2, 2);
        d(0, 1) = d(1, 0) = 0.5;
        const int ns[] = {4};
        CHECK_THROWS_AS((void)run_concentration_experiment(FiniteMetric::from_matrix(d),
                                                           DiscreteMeasure::uniform(2), ns, 10, 0u,
                                                           0.1, 2),
                        DomainError);
    }
    SUBCASE("determinism in the seed, trial-order independent") {
        const auto m = shortest_path_metric(complete_graph(4));
        const int ns[] = {8, 32};
        const auto a =
            run_concentration_experiment(m, DiscreteMeasure::uniform(4), ns, 60, 17u, 0.1, 4);
        const auto b =
            run_concentration_experiment(m, DiscreteMeasure::uniform(4), ns, 60, 17u, 0.1, 4);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].mean_w == b[i].mean_w);
            CHECK(a[i].quantile_dev == b[i].quantile_dev);
        }
        CHECK(concentration_csv(a) == concentration_csv(b));
    }
}

TEST_CASE("mean bound holds on the named uniform families") {
    for (const int k : {5, 10}) {
        for (const auto* kind : {"star", "complete", "p3"}) {
            Graph g = std::string(kind) == "star"     ? star_graph(k)
                      : std::string(kind) == "complete" ? complete_graph(k)
                                                        : path_graph(3);
            const auto m = shortest_path_metric(g);
            const auto doubling = exact_doubling_constant(m);
            const int ns[] = {4, 16, 64, 256};
            const auto rows =
                run_concentration_experiment(m, DiscreteMeasure::uniform(m.size()), ns, 1000,
                                             1234u, 0.1, *doubling.exact_M);
            for (const auto& row : rows) {
                CHECK(row.mean_w <= row.bound_mean);
                CHECK(row.quantile_dev <= row.bound_dev);
            }
        }
    }
}
