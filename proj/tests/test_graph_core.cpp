#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "tbl/errors.hpp"
#include "tbl/graph.hpp"
#include "tbl/metric.hpp"
#include "tbl/rng.hpp"

using namespace tbl;

namespace {

bool satisfies_metric_axioms(const FiniteMetric& m) {
    const int k = m.size();
    for (int i = 0; i < k; ++i) {
        if (m.dist(i, i) != 0.0) return false;
        for (int j = 0; j < k; ++j) {
            if (i != j && !(m.dist(i, j) > 0.0)) return false;
            if (m.dist(i, j) != m.dist(j, i)) return false;
            for (int l = 0; l < k; ++l)
                if (m.dist(i, j) > m.dist(i, l) + m.dist(l, j) + 1e-12) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("shortest path metric on small graphs") {
    const auto p3 = shortest_path_metric(path_graph(3));
    CHECK(p3.dist(0, 2) == 2.0);  // two hops forced
    CHECK(p3.dist(0, 1) == 1.0);

    const auto k4 = shortest_path_metric(complete_graph(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(k4.dist(i, j) == (i == j ? 0.0 : 1.0));

    // two disjoint edges: cross-component pairs are unreachable, flagged
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    const auto disc = shortest_path_metric(two_edges);
    CHECK(!disc.is_finite());
    CHECK(std::isinf(disc.dist(0, 2)));
    CHECK(disc.dist(0, 1) == 1.0);
}

TEST_CASE("diameter") {
    CHECK(diameter(shortest_path_metric(complete_graph(5))) == 1.0);
    CHECK(diameter(shortest_path_metric(star_graph(5))) == 2.0);  // BFS oracle: leaf-hub-leaf
    CHECK(std::isinf(diameter(shortest_path_metric(Graph(4, {{0, 1}, {2, 3}})))));
}

TEST_CASE("degree stats") {
    const auto star = degree_stats(star_graph(5));
    CHECK(star.deg_min == 1);
    CHECK(star.deg_max == 4);

    const auto k4 = degree_stats(complete_graph(4));
    CHECK(k4.deg_min == 3);
    CHECK(k4.deg_max == 3);

    const auto isolated = degree_stats(Graph(3, {{0, 1}}));
    CHECK(isolated.deg_min == 0);
}

TEST_CASE("product metric") {
    const auto base = shortest_path_metric(path_graph(3));

    SUBCASE("equal labels reproduce the base") {
        const double labels[] = {2.0, 2.0, 2.0};
        const auto prod = product_metric(base, labels);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(prod.dist(i, j) == base.dist(i, j));
    }
    SUBCASE("label gap dominates") {
        const auto k2 = shortest_path_metric(complete_graph(2));
        const double labels[] = {0.0, 3.0};
        CHECK(product_metric(k2, labels).dist(0, 1) == 3.0);
    }
    SUBCASE("max of the two parts") {
        const double labels[] = {0.0, 0.0, 1.0};
        CHECK(product_metric(base, labels).dist(0, 2) == 2.0);  // max(2, 1)
    }
    SUBCASE("label count must match") {
        const double labels[] = {0.0, 1.0};
        CHECK_THROWS_AS((void)product_metric(base, labels), DomainError);
    }
}

TEST_CASE("property: BFS metric satisfies the axioms on random connected graphs") {
    Rng rng(2024);
    for (int rep = 0; rep < 40; ++rep) {
        const int k = 2 + static_cast<int>(rng.next_u64() % 29);
        const auto g = oracles::random_connected_graph(k, 0.2 + 0.6 * rng.next_unit(), rng);
        const auto m = shortest_path_metric(g);
        REQUIRE(m.is_finite());
        CHECK(satisfies_metric_axioms(m));
    }
}

TEST_CASE("property: product metric keeps the triangle inequality and diameter bound") {
    Rng rng(77);
    for (int rep = 0; rep < 40; ++rep) {
        const int k = 2 + static_cast<int>(rng.next_u64() % 10);
        const auto g = oracles::random_connected_graph(k, 0.5, rng);
        const auto base = shortest_path_metric(g);
        std::vector<double> labels(k);
        for (double& v : labels) v = rng.uniform(-2.0, 2.0);
        const auto prod = product_metric(base, labels);  // from_matrix re-checks the axioms
        double label_range = 0.0;
        for (double a : labels)
            for (double b : labels) label_range = std::max(label_range, std::abs(a - b));
        CHECK(prod.diameter() <= base.diameter() + label_range + 1e-12);
    }
}

TEST_CASE("edge list parsing") {
    SUBCASE("plain list with comments") {
        std::istringstream in("# triangle plus tail\n0 1\n1 2\n0 2\n2 3\n");
        const Graph g = parse_edge_list(in);
        CHECK(g.vertex_count() == 4);
        CHECK(g.edge_count() == 4);
        CHECK(g.has_edge(0, 2));
    }
    SUBCASE("header fixes the vertex count") {
        std::istringstream in("k=6\n0 1\n");
        CHECK(parse_edge_list(in).vertex_count() == 6);
    }
    SUBCASE("malformed lines are parse errors") {
        std::istringstream bad_token("0 x\n");
        CHECK_THROWS_AS((void)parse_edge_list(bad_token), ParseError);
        std::istringstream self_loop("3 3\n");
        CHECK_THROWS_AS((void)parse_edge_list(self_loop), ParseError);
        std::istringstream out_of_range("k=2\n0 5\n");
        CHECK_THROWS_AS((void)parse_edge_list(out_of_range), ParseError);
    }
    SUBCASE("round trip") {
        const Graph g = star_graph(5);
        std::istringstream in(format_edge_list(g));
        const Graph back = parse_edge_list(in);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), DomainError);
    const Graph dedup(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dedup.edge_count() == 1);
}
