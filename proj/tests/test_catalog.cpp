#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "zft/catalog.hpp"
#include "zft/enumerate.hpp"
#include "zft/throttle.hpp"

using namespace zft;

namespace {

bool valid_decomposition(const Graph& g, const AcceleratorDecomposition& d) {
    VertexSet covered = 0;
    for (std::size_t i = 0; i < d.s.size(); ++i) {
        const VertexSet s = d.s_set(static_cast<int>(i));
        const VertexSet t = d.t_set(static_cast<int>(i));
        if (popcount(s) != d.composition[i] + 1 || popcount(t) != d.composition[i] + 1) return false;
        for (std::size_t j = 0; j < d.s[i].size(); ++j)
            if (!g.adjacent(d.s[i][j], d.t[i][j]) || popcount(g.neighbors(d.s[i][j]) & t) != 1) return false;
        covered |= s | t;
    }
    return covered == g.vertices() && oracle::accelerator(g, d.composition);
}

} // namespace

TEST_CASE("named graphs match their descriptions") {
    const Graph& bowtie = named_graph("bowtie");
    CHECK(bowtie.order() == 5);
    CHECK(bowtie.size() == 6);
    CHECK(bowtie.degree(0) == 4);
    const Graph& house = named_graph("house");
    CHECK(house.size() == 6);
    CHECK(contains_induced(cycle_graph(4), house));
    CHECK(contains_induced(complete_graph(3), house));
    CHECK(isomorphic(house, add_edge(cycle_graph(5), 0, 2)));
    CHECK(named_graph("K2xP3").size() == 7);
    CHECK(named_graph("K2xP4").size() == 10);
    CHECK_THROWS_AS(named_graph("petersen"), UsageError);

    // the double diamond is a minimal graph with th+ < n - 1 and no induced K3bar
    const Graph& dd = named_graph("double_diamond");
    CHECK(throttling_number(Rule::ZPlus, dd).th == dd.order() - 2);
    CHECK_FALSE(contains_induced(empty_graph(3), dd));
    for (const char* name : {"C5", "house"}) CHECK_FALSE(contains_induced(named_graph(name), dd));
    for (int v = 0; v < dd.order(); ++v) {
        const Graph sub = induced_subgraph(dd, dd.vertices() & ~bit(v));
        if (is_connected(sub)) CHECK(throttling_number(Rule::ZPlus, sub).th >= sub.order() - 1);
    }
}

TEST_CASE("th = n classifier examples") {
    for (int n = 1; n <= 8; ++n) CHECK(classify_th_eq_n(complete_graph(n)));
    CHECK_FALSE(classify_th_eq_n(path_graph(4)));
    CHECK_FALSE(classify_th_eq_n(cycle_graph(5)));
    CHECK_FALSE(classify_th_eq_n(named_graph("bowtie")));
    CHECK(classify_th_eq_n(star_graph(4)));
    CHECK_THROWS_AS(classify_th_eq_n(empty_graph(2)), DomainError);
}

TEST_CASE("th = n classifier agrees with brute force") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n)) {
            INFO(emit_graph6(g));
            REQUIRE(classify_th_eq_n(g) == (oracle::throttling(g, false) == n));
        }
}

TEST_CASE("th+ trichotomy examples") {
    CHECK(classify_thplus(complete_graph(5)) == ThPlusClass::equals_n);
    CHECK(classify_thplus(path_graph(3)) == ThPlusClass::equals_n_minus_1);
    CHECK(classify_thplus(cycle_graph(5)) == ThPlusClass::below);
    CHECK(classify_thplus(star_graph(3)) == ThPlusClass::below);
    CHECK_THROWS_AS(classify_thplus(empty_graph(3)), DomainError);
}

TEST_CASE("th+ trichotomy agrees with brute force") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n)) {
            const int th = oracle::throttling(g, true);
            const auto expected = th == n       ? ThPlusClass::equals_n
                                  : th == n - 1 ? ThPlusClass::equals_n_minus_1
                                                : ThPlusClass::below;
            INFO(emit_graph6(g));
            REQUIRE(classify_thplus(g) == expected);
        }
}

TEST_CASE("accelerator recognition examples") {
    const auto p4 = is_accelerator(path_graph(4), {1});
    REQUIRE(p4);
    const VertexSet s = p4->s_set(0);
    CHECK((s == (bit(0) | bit(3)) || s == (bit(1) | bit(2))));
    CHECK(valid_decomposition(path_graph(4), *p4));

    const auto ladder = is_accelerator(named_graph("K2xP3"), {2});
    REQUIRE(ladder);
    CHECK(valid_decomposition(named_graph("K2xP3"), *ladder));

    CHECK_FALSE(is_accelerator(complete_graph(3), {1}));
    CHECK_FALSE(is_accelerator(complete_graph(4), {1}));
    CHECK(is_accelerator(named_graph("twoK2"), {1}));
    CHECK(is_accelerator(cycle_graph(6), {1, 1}));
    CHECK_THROWS_AS(is_accelerator(path_graph(4), {}), UsageError);
    CHECK_THROWS_AS(is_accelerator(path_graph(4), {0}), UsageError);
}

TEST_CASE("accelerator recognition agrees with the role oracle") {
    for (int total = 1; total <= 3; ++total)
        for (const auto& comp : compositions(total))
            for (int n = 1; n <= 7; ++n)
                for (const auto& g : enumerate_all(n)) {
                    const auto d = is_accelerator(g, comp);
                    INFO(emit_graph6(g));
                    REQUIRE(d.has_value() == oracle::accelerator(g, comp));
                    if (d) REQUIRE(valid_decomposition(g, *d));
                }
}

TEST_CASE("compositions") {
    CHECK(compositions(0) == std::vector<std::vector<int>>{{}});
    CHECK(compositions(3) == std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    CHECK(compositions(5).size() == 16);
}

TEST_CASE("G_0 is 2K2, P4 and C4") {
    const auto cat = generate_Gk(0);
    REQUIRE(cat->size() == 3);
    std::set<std::string> got, want;
    for (const auto& m : *cat) got.insert(canonical_form(m.graph));
    for (const char* name : {"twoK2", "P4", "C4"}) want.insert(canonical_form(named_graph(name)));
    CHECK(got == want);
    CHECK(generate_Gk(0, {true, -1})->size() == 3);
}

TEST_CASE("G_1 members and reduction") {
    const auto full = generate_Gk(1);
    const auto reduced = generate_Gk(1, {true, -1});
    auto has = [](const std::vector<CatalogMember>& cat, const Graph& g) {
        return std::ranges::any_of(cat, [&](const CatalogMember& m) { return isomorphic(m.graph, g); });
    };
    CHECK(has(*full, named_graph("K2xP3")));
    CHECK(has(*full, named_graph("K2xP4")));
    CHECK(has(*reduced, named_graph("K2xP3")));
    CHECK_FALSE(has(*reduced, named_graph("K2xP4")));
    CHECK(reduced->size() < full->size());
    CHECK(generate_Gk(1).get() == full.get());

    for (const auto& m : *full) {
        REQUIRE(m.graph.order() <= 8);
        REQUIRE(valid_decomposition(m.graph, m.decomposition));
        REQUIRE(throttling_number(Rule::Z, m.graph).th <= m.graph.order() - 2);
    }
    for (std::size_t i = 0; i < reduced->size(); ++i)
        for (std::size_t j = 0; j < reduced->size(); ++j)
            if (i != j) REQUIRE_FALSE(contains_induced((*reduced)[i].graph, (*reduced)[j].graph));
}

TEST_CASE("G_2 members up to eight vertices") {
    const auto cat = generate_Gk(2, {false, 8});
    REQUIRE_FALSE(cat->empty());
    for (const auto& m : *cat) {
        REQUIRE(m.graph.order() == 8);
        REQUIRE(throttling_number(Rule::Z, m.graph).th <= m.graph.order() - 3);
        REQUIRE(is_accelerator(m.graph, m.decomposition.composition));
    }
    CHECK(generate_Gk(2, {false, 7})->empty());
    CHECK_THROWS_AS(generate_Gk(2), CapacityError);
    CHECK_THROWS_AS(generate_Gk(3), CapacityError);
    CHECK_THROWS_AS(generate_Gk(-1), DomainError);
}

TEST_CASE("catalog membership examples") {
    const auto ladder = contains_Gk_member(named_graph("K2xP4"), 1);
    REQUIRE(ladder);
    CHECK(ladder->member.graph.order() <= 8);
    CHECK_FALSE(contains_Gk_member(complete_graph(6), 0));
    const auto c4 = contains_Gk_member(cycle_graph(4), 0);
    REQUIRE(c4);
    CHECK(isomorphic(c4->member.graph, cycle_graph(4)));
}

TEST_CASE("catalog membership matches brute-force throttling") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n)) {
            const int th = oracle::throttling(g, false);
            for (int k = 0; k <= 2; ++k) {
                INFO(emit_graph6(g) << " k=" << k);
                const bool free = !contains_Gk_member(g, k);
                REQUIRE(free == (th >= n - k));
                if (k >= 1) {
                    const bool exact = free && contains_Gk_member(g, k - 1).has_value();
                    REQUIRE(exact == (th == n - k));
                }
            }
        }
}
