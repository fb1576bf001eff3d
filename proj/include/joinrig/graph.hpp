#ifndef JOINRIG_GRAPH_HPP
#define JOINRIG_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace joinrig {

using Vertex = std::size_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically; rigidity matrix rows, stress
/// coordinates and serialized output all follow that order. Equality compares
/// labels, not isomorphism classes.
class Graph {
public:
    Graph() = default;

    /// Self-loops and out-of-range endpoints throw; duplicate edges collapse.
    explicit Graph(std::size_t n, std::vector<Edge> edges = {}, std::string name = {})
        : n_(n), name_(std::move(name)), adj_(n, boost::dynamic_bitset<>(n)) {
        for (const auto& e : edges) {
            if (e.u == e.v)
                throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
            if (e.v >= n)
                throw std::out_of_range("edge endpoint " + std::to_string(e.v) + " >= n = " + std::to_string(n));
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        for (const auto& e : edges_) {
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
        }
    }

    [[nodiscard]] std::size_t vertex_count() const { return n_; }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    [[nodiscard]] bool adjacent(Vertex a, Vertex b) const { return a != b && adj_[a].test(b); }
    [[nodiscard]] std::size_t degree(Vertex a) const { return adj_[a].count(); }
    [[nodiscard]] const boost::dynamic_bitset<>& neighbours(Vertex a) const { return adj_[a]; }

    [[nodiscard]] bool is_complete() const { return edges_.size() == n_ * (n_ == 0 ? 0 : n_ - 1) / 2; }

    /// Position of `e` in the sorted edge list, or nullopt.
    [[nodiscard]] std::optional<std::size_t> edge_index(Edge e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    [[nodiscard]] Graph with_edge(Edge e) const {
        auto es = edges_;
        es.push_back(e);
        return Graph(n_, std::move(es), name_);
    }

    [[nodiscard]] Graph without_edge(Edge e) const {
        auto es = edges_;
        es.erase(std::remove(es.begin(), es.end(), e), es.end());
        return Graph(n_, std::move(es), name_);
    }

    /// Same edges with vertex v relabelled to perm[v].
    [[nodiscard]] Graph relabelled(const std::vector<Vertex>& perm) const {
        if (perm.size() != n_)
            throw std::invalid_argument("relabelled: permutation size mismatch");
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (const auto& e : edges_)
            es.emplace_back(perm[e.u], perm[e.v]);
        return Graph(n_, std::move(es), name_);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::string name_;
    std::vector<boost::dynamic_bitset<>> adj_;
};

/// Witness that a graph is a join S + T: every S-T pair is an edge, and the
/// extraneous edges are exactly the edges inside S or inside T.
struct JoinStructure {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    std::vector<Edge> extraneous;

    [[nodiscard]] bool is_balanced(std::size_t d) const { return left.size() >= d + 1 && right.size() >= d + 1; }
    [[nodiscard]] std::size_t vertex_count() const { return left.size() + right.size(); }

    friend bool operator==(const JoinStructure&, const JoinStructure&) = default;
};

/// Checks every JoinStructure invariant against `g`; returns a reason on failure.
inline std::optional<std::string> join_structure_violation(const Graph& g, const JoinStructure& js) {
    const auto n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (auto v : js.left) {
        if (v >= n || side[v] != -1)
            return "left class has an invalid or repeated vertex";
        side[v] = 0;
    }
    for (auto v : js.right) {
        if (v >= n || side[v] != -1)
            return "right class has an invalid or repeated vertex";
        side[v] = 1;
    }
    if (std::count(side.begin(), side.end(), -1) != 0)
        return "classes do not cover every vertex";
    for (auto s : js.left)
        for (auto t : js.right)
            if (!g.adjacent(s, t))
                return "missing cross edge " + std::to_string(std::min(s, t)) + "-" + std::to_string(std::max(s, t));
    std::vector<Edge> inside;
    for (const auto& e : g.edges())
        if (side[e.u] == side[e.v])
            inside.push_back(e);
    auto ext = js.extraneous;
    std::sort(ext.begin(), ext.end());
    if (ext != inside)
        return "extraneous edges differ from the edges inside the classes";
    return std::nullopt;
}

struct Joined {
    Graph graph;
    JoinStructure structure;
};

// ---------------------------------------------------------------- constructors

inline Graph empty_graph(std::size_t n) { return Graph(n, {}, "E" + std::to_string(n)); }

inline Graph complete(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            es.emplace_back(i, j);
    return Graph(n, std::move(es), "K" + std::to_string(n));
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> es;
    const auto n = g.vertex_count();
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j))
                es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

/// G's vertices keep their labels; H's are shifted by |V_G|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    const auto off = g.vertex_count();
    auto es = g.edges();
    for (const auto& e : h.edges())
        es.emplace_back(e.u + off, e.v + off);
    return Graph(off + h.vertex_count(), std::move(es));
}

inline Joined join(const Graph& g, const Graph& h) {
    const auto off = g.vertex_count();
    Graph u = disjoint_union(g, h);
    JoinStructure js;
    js.extraneous = u.edges();
    auto es = u.edges();
    for (Vertex i = 0; i < off; ++i) {
        js.left.push_back(i);
        for (Vertex j = 0; j < h.vertex_count(); ++j)
            es.emplace_back(i, off + j);
    }
    for (Vertex j = 0; j < h.vertex_count(); ++j)
        js.right.push_back(off + j);
    return {Graph(u.vertex_count(), std::move(es)), std::move(js)};
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    auto g = join(empty_graph(a), empty_graph(b)).graph;
    g.set_name("K" + std::to_string(a) + "," + std::to_string(b));
    return g;
}

/// New vertex n adjacent to exactly `subset`.
inline Graph partial_cone(const Graph& g, const std::vector<Vertex>& subset) {
    const auto n = g.vertex_count();
    auto es = g.edges();
    for (auto v : subset) {
        if (v >= n)
            throw std::out_of_range("partial_cone: vertex outside graph");
        es.emplace_back(v, n);
    }
    return Graph(n + 1, std::move(es));
}

inline Graph cone(const Graph& g) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v)
        all[v] = v;
    return partial_cone(g, all);
}

/// Layered graph E_{x1} + E_{x2} + E_{x3} + E_{x4} with joins only between
/// consecutive layers. Layer k occupies [offset[k], offset[k] + sizes[k]).
struct FourChain {
    Graph graph;
    std::array<std::size_t, 4> sizes{};
    std::array<std::size_t, 4> offsets{};

    [[nodiscard]] std::vector<Vertex> layer(std::size_t k) const {
        std::vector<Vertex> vs(sizes[k]);
        for (std::size_t i = 0; i < sizes[k]; ++i)
            vs[i] = offsets[k] + i;
        return vs;
    }
};

inline FourChain four_chain(std::size_t x1, std::size_t x2, std::size_t x3, std::size_t x4) {
    FourChain c;
    c.sizes = {x1, x2, x3, x4};
    for (auto x : c.sizes)
        if (x < 1)
            throw std::invalid_argument("four_chain: every layer needs at least one vertex");
    std::size_t off = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        c.offsets[k] = off;
        off += c.sizes[k];
    }
    std::vector<Edge> es;
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < c.sizes[k]; ++i)
            for (std::size_t j = 0; j < c.sizes[k + 1]; ++j)
                es.emplace_back(c.offsets[k] + i, c.offsets[k + 1] + j);
    c.graph = Graph(off, std::move(es),
                    "C" + std::to_string(x1) + "," + std::to_string(x2) + "," + std::to_string(x3) + "," +
                        std::to_string(x4));
    return c;
}

/// Vertex amalgamation (G; us) * (H; vs): H's vertex vs[k] is identified with
/// G's us[k]. G keeps its labels; the remaining H vertices follow in order.
inline Graph amalgamate(const Graph& g, const std::vector<Vertex>& us, const Graph& h,
                        const std::vector<Vertex>& vs) {
    if (us.size() != vs.size())
        throw std::invalid_argument("amalgamate: vertex lists differ in length");
    const auto ng = g.vertex_count();
    const auto nh = h.vertex_count();
    constexpr auto unset = static_cast<Vertex>(-1);
    std::vector<Vertex> map(nh, unset);
    std::vector<bool> used_g(ng, false);
    for (std::size_t k = 0; k < us.size(); ++k) {
        if (us[k] >= ng || vs[k] >= nh)
            throw std::out_of_range("amalgamate: vertex outside graph");
        if (used_g[us[k]] || map[vs[k]] != unset)
            throw std::invalid_argument("amalgamate: repeated vertex in identification list");
        used_g[us[k]] = true;
        map[vs[k]] = us[k];
    }
    Vertex next = ng;
    for (Vertex v = 0; v < nh; ++v)
        if (map[v] == unset)
            map[v] = next++;
    auto es = g.edges();
    for (const auto& e : h.edges())
        es.emplace_back(map[e.u], map[e.v]);
    return Graph(next, std::move(es));
}

/// C ⋈ G: glues layers 1 and 4 of the chain onto `host_vertices` of G
/// (default: G's first x1 + x4 vertices). Chain vertices keep their labels.
inline Graph attach_chain(const FourChain& chain, const Graph& host,
                          std::optional<std::vector<Vertex>> host_vertices = std::nullopt) {
    const auto need = chain.sizes[0] + chain.sizes[3];
    if (host.vertex_count() < need)
        throw std::invalid_argument("attach_chain: host has " + std::to_string(host.vertex_count()) +
                                    " vertices, chain ends need " + std::to_string(need));
    std::vector<Vertex> ends = chain.layer(0);
    auto l4 = chain.layer(3);
    ends.insert(ends.end(), l4.begin(), l4.end());
    std::vector<Vertex> targets;
    if (host_vertices) {
        if (host_vertices->size() != need)
            throw std::invalid_argument("attach_chain: explicit host vertex list has wrong length");
        targets = *host_vertices;
    } else {
        targets.resize(need);
        for (Vertex i = 0; i < need; ++i)
            targets[i] = i;
    }
    auto g = amalgamate(chain.graph, ends, host, targets);
    g.set_name(chain.graph.name() + "@" + host.name());
    return g;
}

// ---------------------------------------------------------------- traversal

/// Connected components by iterative depth-first search, each sorted, ordered
/// by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const auto n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp;
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            const auto& nb = g.neighbours(v);
            for (auto w = nb.find_first(); w != boost::dynamic_bitset<>::npos; w = nb.find_next(w))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

} // namespace joinrig

#endif
