#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "zft/canonical.hpp"
#include "zft/enumerate.hpp"
#include "zft/families.hpp"
#include "zft/graph6.hpp"
#include "zft/induced.hpp"
#include "zft/product.hpp"

using namespace zft;

namespace {

// Smallest adjacency string over all n! relabelings; only for tiny n.
std::string brute_canonical(const Graph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j) s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

} // namespace

TEST_CASE("graph6 decoding of hand-computed strings") {
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("?") == Graph(0));
    // P3 as 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 -> 40+63 = 'g'
    CHECK(parse_graph6("Bg") == path_graph(3));
}

TEST_CASE("graph6 round trip") {
    for (const char* s : {"D?{", "A_", "C~", "Bg", "E?~o", "F?~vw"}) {
        CHECK(emit_graph6(parse_graph6(s)) == s);
    }
    CHECK(parse_graph6("D?{").order() == 5);
    CHECK(emit_graph6(parse_graph6(">>graph6<<C~\n")) == "C~");
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_all(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
    // a 32-vertex graph exercises the multi-byte path when n > 62 is impossible,
    // but the byte packing across many chunks is still covered
    const Graph big = cycle_graph(32);
    CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("graph6 errors carry the byte offset") {
    try {
        parse_graph6("C~~");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    try {
        parse_graph6("C");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    try {
        parse_graph6("C\x20");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    // A_ has one padding-free bit; Aa sets a padding bit
    CHECK_THROWS_AS(parse_graph6("Aa"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?AA"), CapacityError);
}

TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g == path_graph(4));
    CHECK(parse_edge_list(emit_edge_list(cycle_graph(5))) == cycle_graph(5));
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\nx"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("40 0\n"), CapacityError);
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(33), CapacityError);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidEdgeError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidEdgeError);
    const VertexSet bad[] = {0b010, 0b000, 0};
    CHECK_THROWS_AS(Graph::from_adjacency(3, bad), DomainError);
}

TEST_CASE("edge contraction") {
    CHECK(contract_edge(complete_graph(3), 0, 1) == complete_graph(2));
    CHECK(contract_edge(path_graph(4), 1, 2) == path_graph(3));
    // K2 x P2 template: tree edges are (0,1) and (2,3)
    const auto c4 = cartesian_product_template(2, 1, 1);
    const Graph k3 = contract_edge(c4.graph, 0, 1);
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK_THROWS_AS(contract_edge(path_graph(4), 0, 2), InvalidEdgeError);

    SECTION("labels follow the first endpoint") {
        const Graph g = path_graph(3).with_labels({"a", "b", "c"});
        const Graph h = contract_edge(g, 2, 1);
        CHECK(h.labels() == std::vector<std::string>{"a", "c"});
        CHECK(contract_edge(g, 1, 2).labels() == std::vector<std::string>{"a", "b"});
    }
}

TEST_CASE("contraction yields the simple quotient") {
    std::mt19937 rng(7);
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_all(n))
            for (const auto& e : g.edges()) {
                const Graph h = contract_edge(g, e.u, e.v);
                REQUIRE(h.order() == n - 1);
                auto image = [&](int x) { return x == e.v ? e.u : (x > e.v ? x - 1 : x); };
                std::set<std::pair<int, int>> expect;
                for (const auto& f : g.edges()) {
                    int a = image(f.u), b = image(f.v);
                    if (a != b) expect.insert({std::min(a, b), std::max(a, b)});
                }
                std::set<std::pair<int, int>> got;
                for (const auto& f : h.edges()) got.insert({f.u, f.v});
                CHECK(got == expect);
            }
}

TEST_CASE("product templates") {
    const auto k1 = cartesian_product_template(1, 2, 0);
    CHECK(k1.graph.order() == 1);
    CHECK(k1.graph.size() == 0);

    const auto c4 = cartesian_product_template(2, 1, 1);
    CHECK(isomorphic(c4.graph, cycle_graph(4)));
    CHECK(c4.count(EdgeClass::tree) == 2);
    CHECK(c4.count(EdgeClass::complete) == 2);

    const auto bin = cartesian_product_template(1, 2, 2);
    CHECK(bin.graph.order() == 7);
    CHECK(bin.graph.size() == 6);
    CHECK(bin.count(EdgeClass::tree) == 6);

    CHECK_THROWS_AS(cartesian_product_template(3, 2, 3), CapacityError);
    CHECK_THROWS_AS(cartesian_product_template(0, 2, 1), DomainError);

    for (int a = 1; a <= 4; ++a)
        for (int k = 1; k <= 3; ++k)
            for (int b = 0; b <= 3; ++b) {
                const int tree = k == 1 ? b + 1 : (static_cast<int>(std::pow(k, b + 1)) - 1) / (k - 1);
                if (a * tree > 32) continue;
                const auto p = cartesian_product_template(a, k, b);
                CHECK(p.graph.order() == a * tree);
                CHECK(p.count(EdgeClass::tree) == a * (tree - 1));
                CHECK(p.count(EdgeClass::complete) == tree * a * (a - 1) / 2);
                CHECK(p.count(EdgeClass::tree) + p.count(EdgeClass::complete) == p.graph.size());
            }
}

TEST_CASE("product shape paths") {
    const ProductShape s(2, 3, 2);
    CHECK(s.tree_size() == 13);
    for (int x = 0; x < s.tree_size(); ++x) CHECK(s.node_from_path(s.tree_path(x)) == x);
    CHECK(s.tree_path(0).empty());
    CHECK(s.tree_path(s.tree_child(s.tree_child(0, 2), 1)) == "21");
    CHECK_THROWS_AS(s.node_from_path("3"), ScriptError);
    CHECK_THROWS_AS(s.node_from_path("000"), ScriptError);
}

TEST_CASE("induced subgraph search") {
    const auto e = induced_subgraph_search(path_graph(4), cycle_graph(5));
    REQUIRE(e);
    CHECK(*e == Embedding{0, 1, 2, 3});
    CHECK_FALSE(induced_subgraph_search(cycle_graph(4), path_graph(5)));
    const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK_FALSE(induced_subgraph_search(bowtie, complete_graph(5)));
    CHECK_FALSE(induced_subgraph_search(complete_graph(4), complete_graph(3)));
}

TEST_CASE("every induced subgraph embeds back") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_all(n))
            for (VertexSet s = 1; s <= g.vertices(); ++s) {
                const Graph h = induced_subgraph(g, s);
                const auto emb = induced_subgraph_search(h, g);
                REQUIRE(emb);
                for (int i = 0; i < h.order(); ++i)
                    for (int j = 0; j < h.order(); ++j)
                        if (i != j) REQUIRE(h.adjacent(i, j) == g.adjacent((*emb)[i], (*emb)[j]));
            }
}

TEST_CASE("canonical forms") {
    const Graph c4a = cycle_graph(4);
    const Graph c4b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_form(c4a) == canonical_form(c4b));
    CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));

    std::vector<int> perm{0, 1, 2, 3};
    std::set<std::string> forms;
    do {
        forms.insert(canonical_form(permute(paw(), perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(forms.size() == 1);
    CHECK_THROWS_AS(canonical_form(path_graph(17)), CapacityError);
}

TEST_CASE("canonical forms are permutation invariant") {
    std::mt19937 rng(12345);
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_all(n)) {
            const std::string form = canonical_form(g);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = 0; i < 100; ++i) {
                std::shuffle(perm.begin(), perm.end(), rng);
                REQUIRE(canonical_form(permute(g, perm)) == form);
            }
        }
}

TEST_CASE("canonical forms separate non-isomorphic graphs") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> brute;
        std::set<std::string> fast;
        for (VertexSet mask = 0; mask < (VertexSet{1} << (n * (n - 1) / 2)); ++mask) {
            std::vector<Edge> e;
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if ((mask >> k) & 1u) e.push_back({u, v});
            const Graph g(n, e);
            if (n <= 5) brute.insert(brute_canonical(g));
            fast.insert(canonical_form(g));
        }
        const std::size_t expect[] = {1, 1, 2, 4, 11, 34, 156};
        CHECK(fast.size() == expect[n]);
        if (n <= 5) CHECK(brute.size() == fast.size());
    }
}

TEST_CASE("enumeration counts") {
    const std::size_t connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == connected[n]);
    const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) CHECK(enumerate_all(n).size() == all[n]);
    CHECK(connected_corpus(2, 7).size() == 995);
    CHECK(connected_corpus(1, 7).size() == 996);
    CHECK(connected_corpus(2, 6).size() == 142);
    CHECK_THROWS_AS(enumerate_connected(8), CapacityError);
}

TEST_CASE("enumeration is one representative per class") {
    for (int n = 4; n <= 5; ++n) {
        std::set<std::string> brute;
        for (const auto& g : enumerate_connected(n)) brute.insert(brute_canonical(g));
        CHECK(brute.size() == enumerate_connected(n).size());
    }
}

TEST_CASE("components and complements") {
    const Graph g = disjoint_union(path_graph(3), complete_graph(2));
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == 0b00111);
    CHECK(comps[1] == 0b11000);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(complete_graph(4)).size() == 0);
    CHECK(connected_components(g, 0b10101).size() == 3);
    CHECK_THROWS_AS(disjoint_union(Graph(20), Graph(13)), CapacityError);
    CHECK(delete_edge(add_edge(path_graph(3), 0, 2), 0, 2) == path_graph(3));
    CHECK_THROWS_AS(delete_edge(path_graph(3), 0, 2), InvalidEdgeError);
}
