#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zft/graph.hpp"

namespace zft {

enum class EdgeClass { tree, complete };

inline const char* to_string(EdgeClass c) { return c == EdgeClass::tree ? "tree" : "complete"; }

/// Index arithmetic for K_a □ T_{k,b} without materializing the graph.
///
/// Tree nodes are numbered in heap order: root 0, children of x are
/// k*x+1 .. k*x+k. Product vertex (i, x) has id i * tree_size() + x.
class ProductShape {
public:
    static constexpr long kMaxVertices = 1L << 16;

    ProductShape(int a, int k, int b) : a_(a), k_(k), b_(b) {
        if (a < 1 || k < 1 || b < 0) throw DomainError("product needs a >= 1, k >= 1, b >= 0");
        if (k > 36) throw CapacityError("tree branching above 36 is not supported");
        long level = 1;
        long total = 0;
        for (int d = 0; d <= b; ++d) {
            total += level;
            if (total * a > kMaxVertices) throw CapacityError("K_a x T_{k,b} is too large");
            level *= k;
        }
        tree_size_ = static_cast<int>(total);
    }

    int a() const noexcept { return a_; }
    int k() const noexcept { return k_; }
    int b() const noexcept { return b_; }
    int tree_size() const noexcept { return tree_size_; }
    int vertex_count() const noexcept { return a_ * tree_size_; }

    int vertex(int clique, int node) const noexcept { return clique * tree_size_ + node; }
    int clique_of(int v) const noexcept { return v / tree_size_; }
    int node_of(int v) const noexcept { return v % tree_size_; }

    int tree_parent(int x) const noexcept { return x == 0 ? -1 : (x - 1) / k_; }
    int tree_child(int x, int index) const noexcept { return k_ * x + 1 + index; }
    bool has_children(int x) const noexcept { return tree_child(x, 0) < tree_size_; }
    int tree_depth(int x) const noexcept {
        int d = 0;
        for (; x != 0; x = tree_parent(x)) ++d;
        return d;
    }

    /// Child indices from the root, one character each ("" is the root, "01" the
    /// second child of the first child).
    std::string tree_path(int x) const {
        std::string out;
        for (; x != 0; x = tree_parent(x)) out.insert(out.begin(), digit((x - 1) % k_));
        return out;
    }

    int node_from_path(std::string_view path) const {
        int x = 0;
        for (char c : path) {
            const int index = undigit(c);
            if (index < 0 || index >= k_) throw ScriptError("bad tree path '" + std::string(path) + "'");
            x = tree_child(x, index);
            if (x >= tree_size_) throw ScriptError("tree path '" + std::string(path) + "' is deeper than the template");
        }
        return x;
    }

    bool is_tree_edge(int u, int v) const noexcept {
        if (clique_of(u) != clique_of(v)) return false;
        const int x = node_of(u);
        const int y = node_of(v);
        return tree_parent(x) == y || tree_parent(y) == x;
    }

    bool is_complete_edge(int u, int v) const noexcept {
        return u != v && node_of(u) == node_of(v) && clique_of(u) != clique_of(v);
    }

    bool is_edge(int u, int v) const noexcept { return is_tree_edge(u, v) || is_complete_edge(u, v); }

    /// Every edge with its class; tree edges are (parent, child) pairs.
    std::vector<std::pair<Edge, EdgeClass>> classified_edges() const {
        std::vector<std::pair<Edge, EdgeClass>> out;
        for (int i = 0; i < a_; ++i)
            for (int x = 1; x < tree_size_; ++x) out.push_back({{vertex(i, tree_parent(x)), vertex(i, x)}, EdgeClass::tree});
        for (int x = 0; x < tree_size_; ++x)
            for (int i = 0; i < a_; ++i)
                for (int j = i + 1; j < a_; ++j) out.push_back({{vertex(i, x), vertex(j, x)}, EdgeClass::complete});
        return out;
    }

private:
    static char digit(int i) { return static_cast<char>(i < 10 ? '0' + i : 'a' + (i - 10)); }
    static int undigit(char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'z') return c - 'a' + 10;
        return -1;
    }

    int a_;
    int k_;
    int b_;
    int tree_size_ = 0;
};

/// K_a □ T_{k,b} as a concrete graph with every edge tagged.
struct ProductTemplate {
    int a = 1;
    int k = 1;
    int b = 0;
    Graph graph;
    std::vector<std::pair<Edge, EdgeClass>> edge_classes;

    ProductShape shape() const { return ProductShape(a, k, b); }

    int count(EdgeClass c) const {
        int total = 0;
        for (const auto& [e, cls] : edge_classes) total += cls == c;
        return total;
    }
};

inline ProductTemplate cartesian_product_template(int a, int k, int b) {
    const ProductShape shape(a, k, b);
    if (shape.vertex_count() > Graph::kMaxVertices)
        throw CapacityError("K_" + std::to_string(a) + " x T_{" + std::to_string(k) + "," + std::to_string(b) + "} has " +
                            std::to_string(shape.vertex_count()) + " vertices; graphs hold at most 32");
    auto classes = shape.classified_edges();
    std::vector<Edge> edges;
    for (const auto& [e, c] : classes) edges.push_back(e);
    std::vector<std::string> labels;
    for (int v = 0; v < shape.vertex_count(); ++v)
        labels.push_back(std::to_string(shape.clique_of(v)) + ":" + shape.tree_path(shape.node_of(v)));
    Graph g = Graph(shape.vertex_count(), edges).with_labels(std::move(labels));
    return {a, k, b, std::move(g), std::move(classes)};
}

} // namespace zft
