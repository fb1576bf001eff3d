#ifndef JOINRIG_FAMILIES_HPP
#define JOINRIG_FAMILIES_HPP

// Generators for the known counterexample families to Hendrickson's
// conjecture, plus a verification pipeline that re-derives their claimed
// rigidity properties numerically.

#include "joinrig/quadric.hpp"

#include <map>

namespace joinrig {

enum class FamilyKind {
    connelly,
    partial_coning,
    chain_attachment,
    chain_attachment_general,
    h_graph,
    chain_custom, // explicit 4-chain sizes; used by the C_{3,3,5,5} preset
};

inline std::string to_string(FamilyKind k) {
    switch (k) {
    case FamilyKind::connelly: return "connelly";
    case FamilyKind::partial_coning: return "partial_coning";
    case FamilyKind::chain_attachment: return "chain_attachment";
    case FamilyKind::chain_attachment_general: return "chain_attachment_general";
    case FamilyKind::h_graph: return "h_graph";
    case FamilyKind::chain_custom: return "chain_custom";
    }
    return "?";
}

inline std::optional<FamilyKind> family_kind_from_string(std::string_view s) {
    for (auto k : {FamilyKind::connelly, FamilyKind::partial_coning, FamilyKind::chain_attachment,
                   FamilyKind::chain_attachment_general, FamilyKind::h_graph, FamilyKind::chain_custom})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

struct FamilySpec {
    FamilyKind kind = FamilyKind::connelly;
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t d = 0;
    std::size_t i = 0;
    std::size_t x = 0;
    std::array<std::size_t, 4> chain{}; // chain_custom only
    std::size_t host_size = 0;          // host is K_{host_size}; 0 means K_{d+1}
};

class InvalidFamily : public std::invalid_argument {
public:
    explicit InvalidFamily(const std::string& what) : std::invalid_argument(what) {}
};

/// v(d,x) = x(d-x+1): the middle-layer total for chains glued to d+1 vertices.
constexpr std::size_t chain_middle_total(std::size_t d, std::size_t x) { return x * (d + 1 - x); }

/// Returns the violated condition, or nullopt when `s` is a valid instance.
inline std::optional<std::string> family_violation(const FamilySpec& s) {
    const auto d = s.d;
    auto fail = [](std::string m) { return std::optional<std::string>(std::move(m)); };
    if (d < 1)
        return fail("d >= 1");
    switch (s.kind) {
    case FamilyKind::connelly:
        if (s.a < d + 2)
            return fail("a >= d+2");
        if (s.b < d + 2)
            return fail("b >= d+2");
        if (s.a + s.b != binomial2(d + 2))
            return fail("a + b = C(d+2,2)");
        return std::nullopt;
    case FamilyKind::partial_coning:
        if (d <= 3)
            return fail("d > 3");
        if (s.a <= s.b)
            return fail("a > b");
        if (s.b < d + 1)
            return fail("b >= d+1");
        if (s.a + s.b != binomial2(d + 1) + 1)
            return fail("a + b = C(d+1,2) + 1");
        return std::nullopt;
    case FamilyKind::chain_attachment:
        if (!(2 < s.i && s.i + 1 < d))
            return fail("2 < i < d-1");
        break;
    case FamilyKind::chain_attachment_general: {
        if (s.x < 1 || s.x > d)
            return fail("1 <= x <= d");
        const auto v = chain_middle_total(d, s.x);
        if (!(s.x < s.i))
            return fail("x < i");
        if (!(s.i + d + 1 < v + s.x))
            return fail("i < v(d,x) + x - d - 1");
        break;
    }
    case FamilyKind::h_graph:
        if (d < 3)
            return fail("d >= 3");
        return std::nullopt;
    case FamilyKind::chain_custom:
        for (auto c : s.chain)
            if (c < 1)
                return fail("every chain layer >= 1");
        if (s.host_size < s.chain[0] + s.chain[3])
            return fail("host size >= x1 + x4");
        return std::nullopt;
    }
    if (s.host_size != 0 && s.host_size < d + 1)
        return fail("host has >= d+1 vertices");
    return std::nullopt;
}

inline void require_valid(const FamilySpec& s) {
    if (auto why = family_violation(s))
        throw InvalidFamily(to_string(s.kind) + ": parameters violate " + *why);
}

/// K_{a,b} with a, b >= d+2 and a + b = C(d+2,2).
inline Graph connelly_graph(std::size_t a, std::size_t b, std::size_t d) {
    require_valid({.kind = FamilyKind::connelly, .a = a, .b = b, .d = d});
    return complete_bipartite(a, b);
}

/// (K_{1,d+1} ∪ E_{a-d-2}) + E_b. Cone vertex 0, its leaves 1..d+1, the
/// remaining left vertices next, right class last.
inline Joined partial_coning_graph(std::size_t a, std::size_t b, std::size_t d) {
    require_valid({.kind = FamilyKind::partial_coning, .a = a, .b = b, .d = d});
    std::vector<Edge> star;
    for (Vertex leaf = 1; leaf <= d + 1; ++leaf)
        star.emplace_back(0, leaf);
    auto joined = join(Graph(a, star), empty_graph(b));
    joined.graph.set_name("PC" + std::to_string(a) + "," + std::to_string(b) + "/" + std::to_string(d));
    return joined;
}

/// H_d = (K_2 ∪ E_{2d-4}) + (K_{d-1} ∪ E_2); 3d-1 vertices and exactly C(d+2,2) QRM rows.
inline Joined h_graph(std::size_t d) {
    require_valid({.kind = FamilyKind::h_graph, .d = d});
    auto left = disjoint_union(complete(2), empty_graph(2 * d - 4));
    auto right = disjoint_union(complete(d - 1), empty_graph(2));
    auto joined = join(left, right);
    joined.graph.set_name("H" + std::to_string(d));
    return joined;
}

/// C_{2,i,2d-2-i,d-1} ⋈ host.
inline Graph chain_attachment(std::size_t d, std::size_t i, const Graph& host) {
    FamilySpec s{.kind = FamilyKind::chain_attachment, .d = d, .i = i, .host_size = host.vertex_count()};
    require_valid(s);
    return attach_chain(four_chain(2, i, 2 * d - 2 - i, d - 1), host);
}

/// C_{x,i,v(d,x)-i,d+1-x} ⋈ host.
inline Graph chain_attachment_general(std::size_t d, std::size_t x, std::size_t i, const Graph& host) {
    FamilySpec s{.kind = FamilyKind::chain_attachment_general, .d = d, .i = i, .x = x,
                 .host_size = host.vertex_count()};
    require_valid(s);
    const auto v = chain_middle_total(d, x);
    return attach_chain(four_chain(x, i, v - i, d + 1 - x), host);
}

inline std::array<std::size_t, 4> chain_sizes(const FamilySpec& s) {
    switch (s.kind) {
    case FamilyKind::chain_attachment: return {2, s.i, 2 * s.d - 2 - s.i, s.d - 1};
    case FamilyKind::chain_attachment_general: {
        const auto v = chain_middle_total(s.d, s.x);
        return {s.x, s.i, v - s.i, s.d + 1 - s.x};
    }
    case FamilyKind::chain_custom: return s.chain;
    default: throw std::invalid_argument("chain_sizes: not a chain family");
    }
}

inline std::size_t host_size_of(const FamilySpec& s) { return s.host_size == 0 ? s.d + 1 : s.host_size; }

inline Graph build_family(const FamilySpec& s) {
    require_valid(s);
    switch (s.kind) {
    case FamilyKind::connelly: return connelly_graph(s.a, s.b, s.d);
    case FamilyKind::partial_coning: return partial_coning_graph(s.a, s.b, s.d).graph;
    case FamilyKind::h_graph: return h_graph(s.d).graph;
    case FamilyKind::chain_attachment: return chain_attachment(s.d, s.i, complete(host_size_of(s)));
    case FamilyKind::chain_attachment_general:
        return chain_attachment_general(s.d, s.x, s.i, complete(host_size_of(s)));
    case FamilyKind::chain_custom: {
        auto c = s.chain;
        return attach_chain(four_chain(c[0], c[1], c[2], c[3]), complete(s.host_size));
    }
    }
    throw std::logic_error("unreachable");
}

struct Preset {
    std::string name;
    std::string description;
    FamilySpec spec;
};

inline const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = {
        {"connelly-k55", "K_{5,5} in R^3", {.kind = FamilyKind::connelly, .a = 5, .b = 5, .d = 3}},
        {"connelly-k69", "K_{6,9} in R^4", {.kind = FamilyKind::connelly, .a = 6, .b = 9, .d = 4}},
        {"connelly-k78", "K_{7,8} in R^4", {.kind = FamilyKind::connelly, .a = 7, .b = 8, .d = 4}},
        {"partial-coning-10-6", "(K_{1,6} ∪ E_3) + E_6 in R^5",
         {.kind = FamilyKind::partial_coning, .a = 10, .b = 6, .d = 5}},
        {"partial-coning-9-7", "(K_{1,6} ∪ E_2) + E_7 in R^5",
         {.kind = FamilyKind::partial_coning, .a = 9, .b = 7, .d = 5}},
        {"chain-2354-k6", "C_{2,3,5,4} attached to K_6 in R^5",
         {.kind = FamilyKind::chain_attachment, .d = 5, .i = 3, .host_size = 6}},
        {"chain-2354-k7", "C_{2,3,5,4} attached to K_7 in R^5",
         {.kind = FamilyKind::chain_attachment, .d = 5, .i = 3, .host_size = 7}},
        {"h5", "H_5 = (K_2 ∪ E_6) + (K_4 ∪ E_2)", {.kind = FamilyKind::h_graph, .d = 5}},
        {"c3355-outlier", "C_{3,3,5,5} attached to K_8 in R^6 (attaches to d+2 vertices)",
         {.kind = FamilyKind::chain_custom, .d = 6, .chain = {3, 3, 5, 5}, .host_size = 8}},
    };
    return all;
}

inline std::optional<Preset> find_preset(std::string_view name) {
    for (const auto& p : presets())
        if (p.name == name)
            return p;
    return std::nullopt;
}

/// One checked property. Hypothesis lines describe the input and do not
/// count towards the verdict.
struct Claim {
    std::string name;
    bool pass = false;
    std::string detail;
    bool hypothesis = false;
};

struct FamilyVerification {
    FamilySpec spec;
    Graph graph;
    RigidityReport report;
    std::vector<Claim> claims;

    [[nodiscard]] bool all_pass() const {
        return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.hypothesis || c.pass; });
    }
};

namespace detail {

inline std::string eq_detail(std::size_t got, std::size_t want) {
    return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

} // namespace detail

/// Stress dimension of C ⋈ K_{d+1} and the split of its edges into redundant
/// and non-redundant, for the chain families.
template <ExactField F>
struct CanonicalChainFacts {
    std::size_t stress_dim = 0;
    std::vector<Edge> non_redundant;
    std::vector<Edge> extraneous;
};

template <ExactField F>
CanonicalChainFacts<F> canonical_chain_facts(std::size_t d, const std::array<std::size_t, 4>& c, Rng& rng,
                                             std::size_t trials) {
    auto g = attach_chain(four_chain(c[0], c[1], c[2], c[3]), complete(d + 1));
    CanonicalChainFacts<F> facts;
    auto summary = agreed_over_trials<F>(
        g, d, rng, trials,
        [&](const Configuration<F>& p) {
            auto red = redundant_edges(g, p);
            std::vector<Edge> non;
            for (const auto& e : g.edges())
                if (!std::binary_search(red.begin(), red.end(), e))
                    non.push_back(e);
            return std::make_pair(stress_basis(g, p).size(), non);
        },
        "canonical chain stress");
    facts.stress_dim = summary.first;
    facts.non_redundant = summary.second;
    if (auto js = recognize_balanced_join(g, d))
        facts.extraneous = js->extraneous;
    return facts;
}

/// Builds the family graph and checks its Hendrickson status together with
/// the dimension facts each family is known for.
template <ExactField F>
FamilyVerification verify_family(const FamilySpec& spec, const ReportOptions& opts = {}) {
    require_valid(spec);
    FamilyVerification out;
    out.spec = spec;
    out.graph = build_family(spec);
    const auto d = spec.d;
    out.report = hendrickson_report<F>(out.graph, d, opts);
    attach_qrm_summary<F>(out.report, out.graph, d, opts);
    const auto& r = out.report;
    auto& claims = out.claims;
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        claims.push_back({std::move(name), pass, std::move(detail), false});
    };
    auto hypo = [&](std::string name, bool holds, std::string detail = {}) {
        claims.push_back({std::move(name), holds, std::move(detail), true});
    };
    auto hendrickson_claims = [&] {
        add("(d+1)-connected", r.connectivity_ok);
        add("GLR", r.glr, detail::eq_detail(r.rank, r.target_rank));
        add("GRR", r.grr,
            std::to_string(r.redundant_edges.size()) + " of " + std::to_string(r.e) + " edges redundant");
        add("not-ggr-probable", r.ggr.verdict == GgrVerdict::not_ggr_probable,
            "max stress-matrix rank " + std::to_string(r.ggr.max_stress_matrix_rank) + " vs threshold " +
                std::to_string(r.ggr.threshold));
    };
    auto engines_agree = [&] {
        if (r.qrm_glr)
            add("QRM and rigidity-matrix verdicts agree", *r.qrm_glr == r.glr);
    };

    Rng rng(opts.seed + 0x51ed27);
    switch (spec.kind) {
    case FamilyKind::connelly: {
        hendrickson_claims();
        const auto want = (spec.a - d - 1) * (spec.b - d - 1);
        add("stress dim = (a-d-1)(b-d-1)", r.stress_dim == want, detail::eq_detail(r.stress_dim, want));
        engines_agree();
        break;
    }
    case FamilyKind::partial_coning: {
        hendrickson_claims();
        add("QRM rank = C(d+2,2)", r.qrm_rank && *r.qrm_rank == quadric_dimension(d),
            detail::eq_detail(r.qrm_rank.value_or(0), quadric_dimension(d)));
        engines_agree();
        break;
    }
    case FamilyKind::chain_attachment:
    case FamilyKind::chain_attachment_general: {
        const auto host = complete(host_size_of(spec));
        Rng hrng(opts.seed + 7);
        hypo("host (d+1)-connected", vertex_connectivity_at_least(host, d + 1));
        hypo("host GRR", is_grr<F>(host, d, hrng, opts.trials));
        hendrickson_claims();
        if (spec.kind == FamilyKind::chain_attachment) {
            auto facts = canonical_chain_facts<F>(d, chain_sizes(spec), rng, opts.trials);
            const auto want = (spec.i - 2) * (d - spec.i - 1);
            add("stress dim of C ⋈ K_{d+1} = (i-2)(d-i-1)", facts.stress_dim == want,
                detail::eq_detail(facts.stress_dim, want));
            auto ext = facts.extraneous;
            std::sort(ext.begin(), ext.end());
            add("C ⋈ K_{d+1}: non-redundant edges = extraneous edges", facts.non_redundant == ext,
                std::to_string(facts.non_redundant.size()) + " non-redundant, " + std::to_string(ext.size()) +
                    " extraneous");
        }
        engines_agree();
        break;
    }
    case FamilyKind::h_graph: {
        const auto joined = h_graph(d);
        const auto rows = joined.graph.vertex_count() + joined.structure.extraneous.size();
        add("QRM rows = C(d+2,2)", rows == quadric_dimension(d), detail::eq_detail(rows, quadric_dimension(d)));
        add("QRM rank = C(d+2,2)", r.qrm_rank && *r.qrm_rank == quadric_dimension(d),
            detail::eq_detail(r.qrm_rank.value_or(0), quadric_dimension(d)));
        add("GLR (rigidity matrix)", r.glr, detail::eq_detail(r.rank, r.target_rank));
        break;
    }
    case FamilyKind::chain_custom: {
        const auto glued = spec.chain[0] + spec.chain[3];
        add("chain ends glued to x1 + x4 host vertices", glued <= spec.host_size,
            std::to_string(glued) + " of " + std::to_string(spec.host_size));
        const auto c = spec.chain;
        const auto expected_n = c[0] + c[1] + c[2] + c[3] + spec.host_size - glued;
        add("vertex count", r.n == expected_n, detail::eq_detail(r.n, expected_n));
        // no rigidity verdict is asserted for this family; the report records it
        break;
    }
    }
    return out;
}

} // namespace joinrig

#endif
