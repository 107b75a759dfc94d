#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include "zft/catalog.hpp"
#include "zft/spectral.hpp"
#include "zft/throttle.hpp"

using namespace zft;
using Catch::Matchers::WithinAbs;

namespace {

double eigen_radius(const Graph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.order(), g.order());
    for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

} // namespace

TEST_CASE("spectral radius examples") {
    CHECK_THAT(spectral_radius(complete_graph(4)), WithinAbs(3.0, 1e-9));
    CHECK_THAT(spectral_radius(path_graph(3)), WithinAbs(std::sqrt(2.0), 1e-9));
    CHECK_THAT(spectral_radius(star_graph(3)), WithinAbs(std::sqrt(3.0), 1e-9));
    CHECK_THAT(spectral_radius(path_graph(4)), WithinAbs((1 + std::sqrt(5.0)) / 2, 1e-9));
    CHECK(spectral_radius(empty_graph(3)) == 0.0);
    CHECK_THROWS_AS(spectral_radius(Graph(0)), DomainError);
    for (int n = 1; n <= 8; ++n) CHECK_THAT(spectral_radius(complete_graph(n)), WithinAbs(n - 1.0, 1e-9));
}

TEST_CASE("spectral radius agrees with a dense eigensolver") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_all(n)) {
            INFO(emit_graph6(g));
            REQUIRE_THAT(spectral_radius(g), WithinAbs(eigen_radius(g), 1e-9));
        }
    // bipartite graphs have a symmetric spectrum; the shift keeps the top one dominant
    CHECK_THAT(spectral_radius(cycle_graph(6)), WithinAbs(2.0, 1e-9));
    CHECK_THAT(spectral_radius(complete_bipartite(3, 4)), WithinAbs(std::sqrt(12.0), 1e-9));
}

TEST_CASE("extremal spectral graphs") {
    const auto four = max_spectral_graphs(4, 3);
    REQUIRE(four.size() == 1);
    CHECK(isomorphic(four[0], star_graph(3)));
    const auto five = max_spectral_graphs(5, 4);
    REQUIRE(five.size() == 1);
    CHECK(isomorphic(five[0], star_graph(4)));
    for (int n = 1; n <= 7; ++n) {
        const auto full = max_spectral_graphs(n, n * (n - 1) / 2);
        REQUIRE(full.size() == 1);
        CHECK(isomorphic(full[0], complete_graph(n)));
    }
    CHECK_THROWS_AS(max_spectral_graphs(4, 2), DomainError);
    CHECK_THROWS_AS(max_spectral_graphs(8, 10), CapacityError);
}

TEST_CASE("extremal spectral graphs have th = n") {
    for (int n = 1; n <= 7; ++n)
        for (int m = n - 1; m <= n * (n - 1) / 2; ++m)
            for (const auto& g : max_spectral_graphs(n, m)) {
                INFO(emit_graph6(g));
                REQUIRE(throttling_number(Rule::Z, g).th == n);
                REQUIRE_FALSE(contains_induced(named_graph("twoK2"), g));
            }
}
