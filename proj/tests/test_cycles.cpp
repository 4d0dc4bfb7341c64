#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nuphase/cayley.hpp"
#include "nuphase/cycles.hpp"
#include "nuphase/presets.hpp"
#include "oracles.hpp"

using namespace nuphase;

TEST_CASE("walk counts on K4") {
    const SimpleGraph k4 = SimpleGraph::complete(4);
    const WalkCounts wc = count_walks(k4, 0, 8);
    CHECK(wc.C[0] == 1);
    CHECK(wc.C[1] == 0);
    CHECK(wc.C[2] == 3);
    CHECK(wc.C[3] == 6);
    CHECK(wc.C[4] == 21);
    CHECK(wc.a_star[3] == 6);
    CHECK(wc.a_star[4] == 6);
    CHECK(wc.a_simple[3] == 6);
}

TEST_CASE("walk counts agree with DFS oracles on small graphs") {
    for (const SimpleGraph& g : {SimpleGraph::complete(4), SimpleGraph::petersen()}) {
        const WalkCounts wc = count_walks(g, 0, 8);
        for (std::size_t n = 0; n <= 8; ++n) {
            CHECK(wc.C[n] == oracles::closed_walks(g, 0, n));
            if (n >= 3) CHECK(wc.a_star[n] == oracles::nb_closed_walks(g, 0, n));
        }
    }
}

TEST_CASE("the chain a_n <= a*_n <= C_n holds for n >= 3") {
    for (const SimpleGraph& g : {SimpleGraph::complete(4), SimpleGraph::petersen()}) {
        const WalkCounts wc = count_walks(g, 0, 12);
        for (std::size_t n = 3; n <= 12; ++n) {
            CHECK(wc.a_simple[n] <= wc.a_star[n]);
            CHECK(wc.a_star[n] <= wc.C[n]);
        }
    }
}

TEST_CASE("petersen girth and simple cycle counts") {
    const WalkCounts wc = count_walks(SimpleGraph::petersen(), 0, 8);
    CHECK(wc.a_star[3] == 0);
    CHECK(wc.a_star[4] == 0);
    CHECK(wc.a_simple[5] == 12); // six undirected 5-cycles through a vertex
}

TEST_CASE("return probabilities match the stochastic matrix power") {
    // p^(n)(o,o) = C_n / k^n on k-regular graphs
    const SimpleGraph g = SimpleGraph::petersen();
    const WalkCounts wc = count_walks(g, 0, 12);
    const auto adj = g.adjacency();
    std::vector<double> x(g.n, 0.0), y(g.n);
    x[0] = 1.0;
    for (std::size_t n = 1; n <= 12; ++n) {
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t u = 0; u < g.n; ++u)
            for (auto v : adj[u]) y[v] += x[u] / 3.0;
        x = y;
        const double expected = to_double(wc.C[n]) / std::pow(3.0, static_cast<double>(n));
        CHECK(x[0] == Catch::Approx(expected).margin(1e-12));
    }
}

TEST_CASE("walk budget errors") {
    CHECK_THROWS_MATCHES(count_walks(SimpleGraph::complete(4), 0, 41), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::budget_exceeded;
                         }));
}

TEST_CASE("tree path table basics") {
    const TreePathTable t3 = tree_path_table(3, 10);
    CHECK(t3.at(2, 0) == 3);   // k out-and-back walks
    CHECK(t3.at(4, 0) == 15);  // frozen DP oracle value
    for (std::size_t d = 0; d <= 10; ++d) CHECK(t3.at(d, d) == 1);
    for (std::size_t n = 0; n <= 10; ++n)
        for (std::size_t d = 0; d <= n; ++d)
            if ((n - d) % 2 == 1) CHECK(t3.at(n, d) == 0);

    const TreePathTable t12 = tree_path_table(12, 6);
    CHECK(t12.at(2, 0) == 12);
    CHECK(t12.at(4, 0) == 12 * 11 + 12 * 12); // away-and-back plus two bounces
}

TEST_CASE("rolling return counts match the full table") {
    const TreePathTable t = tree_path_table(5, 20);
    const auto r = tree_return_counts(5, 20);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(t.at(n, 0) == r[n]);
}

TEST_CASE("universal cover identity on K4 and Petersen") {
    CHECK(verify_universal_cover_identity(SimpleGraph::complete(4), 0, 14).ok());
    CHECK(verify_universal_cover_identity(SimpleGraph::petersen(), 0, 14).ok());
}

TEST_CASE("universal cover identity is trivial on trees") {
    CayleyBall ball = build_ball(free_product_system(4), 6);
    const SimpleGraph g = ball.as_graph();
    const WalkCounts wc = count_walks(g, 0, 10);
    const TreePathTable tab = tree_path_table(4, 10);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(wc.C[n] == tab.at(n, 0));
    for (std::size_t d = 1; d <= 10; ++d) CHECK(wc.a_star[d] == 0);
    CHECK(verify_universal_cover_identity(g, 0, 10).ok());
}

TEST_CASE("universal cover identity on the full (2,3,5) group graph") {
    // the whole Cayley graph of a finite group is regular everywhere, so the
    // identity holds at any horizon; this exercises a braid-labelled system
    const CayleyBall ball = build_ball(triangle_system(2, 3, 5), 15, BallMode::word);
    REQUIRE(ball.vertex_count() == 120);
    CHECK(verify_universal_cover_identity(ball.as_graph(), 0, 12).ok());
}

TEST_CASE("universal cover identity on 4-regular circulants") {
    for (std::uint32_t n : {7u, 9u, 12u}) {
        SimpleGraph g;
        g.n = n;
        for (std::uint32_t i = 0; i < n; ++i) {
            g.add_edge(i, (i + 1) % n);
            g.add_edge(i, (i + 2) % n);
        }
        CHECK(verify_universal_cover_identity(g, 0, 10).ok());
    }
}

TEST_CASE("universal cover identity rejects irregular horizons") {
    // a path graph is not 2-regular at its interior within any horizon >= 2
    SimpleGraph path;
    path.n = 3;
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS_MATCHES(verify_universal_cover_identity(path, 1, 6), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::not_regular_within_horizon;
                         }));
}

TEST_CASE("green function evaluation") {
    for (unsigned k : {3u, 12u}) {
        CHECK(green_function_eval(k, 0, 0.0) == Catch::Approx(1.0)); // G(0, 0) = 0^0
        CHECK(green_function_eval(k, 3, 0.0) == Catch::Approx(0.0)); // G(d, 0) = 0^d
        const double boundary = 1.0 / (2.0 * std::sqrt(k - 1.0));
        // f at the boundary is 1/sqrt(k-1): check via G(1,.)/G(0,.)
        const double f = green_function_eval(k, 1, boundary) / green_function_eval(k, 0, boundary);
        CHECK(f == Catch::Approx(tree_contact_value(k)).epsilon(1e-12));
        CHECK_THROWS_MATCHES(green_function_eval(k, 0, boundary * 1.01), error,
                             Catch::Matchers::Predicate<error>([](const error& e) {
                                 return e.code() == errc::outside_disc;
                             }));
    }
}

TEST_CASE("green series coefficients equal the tree DP exactly") {
    for (unsigned k : {3u, 12u}) {
        const TreePathTable tab = tree_path_table(k, 30);
        for (unsigned d = 0; d <= 6; ++d) {
            const auto series = green_series(k, d, 30);
            for (std::size_t n = 0; n <= 30; ++n) {
                REQUIRE(denominator(series[n]) == 1);
                const BigInt expected = n >= d ? tab.at(n, d) : BigInt(0);
                CHECK(numerator(series[n]) == expected);
            }
        }
    }
}

TEST_CASE("tree walk growth approaches 2 sqrt(k-1)") {
    for (unsigned k : {2u, 3u, 12u}) {
        const auto returns = tree_return_counts(k, 1000);
        const double est = std::exp2(log2_big(returns[1000]) / 1000.0);
        CHECK(std::abs(est - rho_tilde_tree(k)) / rho_tilde_tree(k) < 0.02);
    }
    CHECK(rho_tilde_tree(2) == Catch::Approx(2.0));
    CHECK(rho_tilde_tree(3) == Catch::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rho_tilde_tree(12) == Catch::Approx(2.0 * std::sqrt(11.0)).epsilon(1e-12));
}
