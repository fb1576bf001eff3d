#ifndef JOINRIG_CONNECTIVITY_HPP
#define JOINRIG_CONNECTIVITY_HPP

#include "joinrig/graph.hpp"

#include <deque>
#include <limits>

namespace joinrig {

namespace detail {

// Unit-capacity flow network on the vertex-split digraph: vertex v becomes
// in(v) = 2v -> out(v) = 2v+1 with capacity 1, and each undirected edge uv
// becomes out(u) -> in(v) and out(v) -> in(u).
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) : head_(2 * g.vertex_count(), -1) {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            add_arc(2 * v, 2 * v + 1);
        for (const auto& e : g.edges()) {
            add_arc(2 * e.u + 1, 2 * e.v);
            add_arc(2 * e.v + 1, 2 * e.u);
        }
    }

    /// Number of internally vertex-disjoint s-t paths, capped at `limit`.
    std::size_t disjoint_paths(Vertex s, Vertex t, std::size_t limit) {
        for (auto& a : arcs_)
            a.flow = 0;
        const int source = static_cast<int>(2 * s + 1);
        const int sink = static_cast<int>(2 * t);
        std::size_t found = 0;
        std::vector<int> parent_arc(head_.size());
        while (found < limit) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::deque<int> queue{source};
            bool reached = false;
            while (!queue.empty() && !reached) {
                int x = queue.front();
                queue.pop_front();
                for (int a = head_[x]; a != -1; a = arcs_[a].next) {
                    int y = arcs_[a].to;
                    if (arcs_[a].cap - arcs_[a].flow <= 0 || y == source || parent_arc[y] != -1)
                        continue;
                    parent_arc[y] = a;
                    if (y == sink) {
                        reached = true;
                        break;
                    }
                    queue.push_back(y);
                }
            }
            if (!reached)
                break;
            for (int y = sink; y != source;) {
                int a = parent_arc[y];
                arcs_[a].flow += 1;
                arcs_[a ^ 1].flow -= 1;
                y = arcs_[a ^ 1].to;
            }
            ++found;
        }
        return found;
    }

private:
    struct Arc {
        int to;
        int next;
        int cap;
        int flow;
    };

    void add_arc(std::size_t from, std::size_t to) {
        arcs_.push_back({static_cast<int>(to), head_[from], 1, 0});
        head_[from] = static_cast<int>(arcs_.size() - 1);
        arcs_.push_back({static_cast<int>(from), head_[to], 0, 0});
        head_[to] = static_cast<int>(arcs_.size() - 1);
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

} // namespace detail

/// True iff removing any k-1 vertices leaves G connected. Complete graphs
/// count as (n-1)-connected. Uses Menger's theorem: a non-complete graph is
/// k-connected iff every non-adjacent pair has k vertex-disjoint paths.
inline bool vertex_connectivity_at_least(const Graph& g, std::size_t k) {
    if (k == 0)
        return true;
    const auto n = g.vertex_count();
    if (g.is_complete())
        return k <= (n == 0 ? 0 : n - 1);
    if (n <= k)
        return false;
    detail::SplitNetwork net(g);
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t) && net.disjoint_paths(s, t, k) < k)
                return false;
    return true;
}

inline std::size_t vertex_connectivity(const Graph& g) {
    const auto n = g.vertex_count();
    if (g.is_complete())
        return n == 0 ? 0 : n - 1;
    detail::SplitNetwork net(g);
    auto best = std::numeric_limits<std::size_t>::max();
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t))
                best = std::min(best, net.disjoint_paths(s, t, best));
    return best;
}

} // namespace joinrig

#endif
