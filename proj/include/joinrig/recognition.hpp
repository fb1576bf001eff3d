#ifndef JOINRIG_RECOGNITION_HPP
#define JOINRIG_RECOGNITION_HPP

// Join recognition from the components of the edge complement. A graph is a
// join S + T exactly when S and T are unions of complement components.

#include "joinrig/graph.hpp"

namespace joinrig {

namespace detail {

inline JoinStructure structure_from_components(const Graph& g, const std::vector<std::vector<Vertex>>& comps,
                                               const std::vector<std::size_t>& chosen) {
    std::vector<bool> in_left(g.vertex_count(), false);
    for (auto c : chosen)
        for (auto v : comps[c])
            in_left[v] = true;
    JoinStructure js;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        (in_left[v] ? js.left : js.right).push_back(v);
    for (const auto& e : g.edges())
        if (in_left[e.u] == in_left[e.v])
            js.extraneous.push_back(e);
    return js;
}

} // namespace detail

/// Any join decomposition of G (unbalanced allowed): the first complement
/// component against the rest.
inline std::optional<JoinStructure> recognize_join(const Graph& g) {
    auto comps = connected_components(complement(g));
    if (comps.size() < 2)
        return std::nullopt;
    return detail::structure_from_components(g, comps, {0});
}

/// Finds S + T with d+1 <= |S| <= |V| - (d+1), or nullopt. O(|V|^2).
///
/// Subset-sum over complement component sizes; each cell keeps the first
/// witness found. Updates for a component read a snapshot of the table taken
/// before that component, so no component is counted twice.
inline std::optional<JoinStructure> recognize_balanced_join(const Graph& g, std::size_t d) {
    const auto n = g.vertex_count();
    if (n < 2 * d + 2)
        return std::nullopt;
    auto comps = connected_components(complement(g));
    if (comps.size() < 2)
        return std::nullopt;

    std::vector<std::optional<std::vector<std::size_t>>> witness(n + 1);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto size = comps[i].size();
        auto snapshot = witness;
        if (!witness[size])
            witness[size] = std::vector<std::size_t>{i};
        for (std::size_t j = 1; j + size <= n; ++j) {
            if (!snapshot[j] || witness[j + size])
                continue;
            auto w = *snapshot[j];
            w.push_back(i);
            witness[j + size] = std::move(w);
        }
    }
    for (std::size_t s = d + 1; s + d + 1 <= n; ++s)
        if (witness[s])
            return detail::structure_from_components(g, comps, *witness[s]);
    return std::nullopt;
}

} // namespace joinrig

#endif
