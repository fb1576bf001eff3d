#ifndef JOINRIG_IO_HPP
#define JOINRIG_IO_HPP

// JSON and DOT encodings for graphs, join structures, reports, matrices and
// family specs.

#include "joinrig/families.hpp"

#include "json.hpp"

#include <sstream>

namespace joinrig {

using json = nlohmann::json;

/// Malformed external input (bad JSON shape, out-of-range values).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

inline json edges_to_json(const std::vector<Edge>& es) {
    json arr = json::array();
    for (const auto& e : es)
        arr.push_back({e.u, e.v});
    return arr;
}

inline std::vector<Edge> edges_from_json(const json& j) {
    if (!j.is_array())
        throw InputError("edges must be an array");
    std::vector<Edge> es;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned())
            throw InputError("each edge must be a pair of non-negative integers");
        es.emplace_back(pair[0].get<Vertex>(), pair[1].get<Vertex>());
    }
    return es;
}

/// {"name": str?, "n": int, "edges": [[i,j],...]} with i < j, sorted.
inline json graph_to_json(const Graph& g) {
    json j;
    if (!g.name().empty())
        j["name"] = g.name();
    j["n"] = g.vertex_count();
    j["edges"] = edges_to_json(g.edges());
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object())
        throw InputError("graph JSON must be an object");
    if (!j.contains("n") || !j["n"].is_number_unsigned())
        throw InputError("graph JSON needs a non-negative integer \"n\"");
    const auto n = j["n"].get<std::size_t>();
    std::vector<Edge> es;
    if (j.contains("edges"))
        es = edges_from_json(j["edges"]);
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw InputError("\"name\" must be a string");
        name = j["name"].get<std::string>();
    }
    try {
        return Graph(n, std::move(es), std::move(name));
    } catch (const std::logic_error& ex) {
        throw InputError(ex.what());
    }
}

inline json join_to_json(const JoinStructure& js) {
    return {{"left", js.left}, {"right", js.right}, {"extraneous", edges_to_json(js.extraneous)}};
}

inline JoinStructure join_from_json(const json& j) {
    if (!j.is_object() || !j.contains("left") || !j.contains("right"))
        throw InputError("join structure JSON needs \"left\" and \"right\"");
    JoinStructure js;
    try {
        js.left = j["left"].get<std::vector<Vertex>>();
        js.right = j["right"].get<std::vector<Vertex>>();
    } catch (const json::exception& ex) {
        throw InputError(std::string("join structure classes: ") + ex.what());
    }
    if (j.contains("extraneous"))
        js.extraneous = edges_from_json(j["extraneous"]);
    std::sort(js.extraneous.begin(), js.extraneous.end());
    return js;
}

/// Extraneous edges are drawn dashed and the two classes are clustered.
inline std::string to_dot(const Graph& g, const std::optional<JoinStructure>& js = std::nullopt) {
    std::ostringstream out;
    out << "graph \"" << (g.name().empty() ? "G" : g.name()) << "\" {\n";
    if (js) {
        auto cluster = [&](const char* label, const std::vector<Vertex>& vs) {
            out << "  subgraph cluster_" << label << " {\n    label=\"" << label << "\";\n";
            for (auto v : vs)
                out << "    " << v << ";\n";
            out << "  }\n";
        };
        cluster("left", js->left);
        cluster("right", js->right);
    } else {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            out << "  " << v << ";\n";
    }
    for (const auto& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (js && std::binary_search(js->extraneous.begin(), js->extraneous.end(), e))
            out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

/// Residues serialize as JSON integers, rationals as "num/den" strings.
template <ExactField F>
json scalar_to_json(const F& x) {
    if constexpr (std::is_same_v<F, Rational>)
        return x.to_string();
    else
        return x.residue();
}

template <ExactField F>
json field_header() {
    json j;
    j["field"] = std::string(F::name());
    if constexpr (!std::is_same_v<F, Rational>)
        j["modulus"] = F::modulus;
    return j;
}

template <ExactField F>
json matrix_to_json(const Matrix<F>& m, const std::vector<std::string>& columns = {}) {
    json j = field_header<F>();
    if (!columns.empty())
        j["columns"] = columns;
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (const auto& x : m.row(r))
            row.push_back(scalar_to_json(x));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

/// Residues above p/2 print as negatives so small integers read naturally.
template <ExactField F>
std::string scalar_to_text(const F& x) {
    if constexpr (std::is_same_v<F, Rational>) {
        const auto& v = x.value();
        if (boost::multiprecision::denominator(v) == 1)
            return boost::multiprecision::numerator(v).str();
        return x.to_string();
    } else {
        auto r = x.residue();
        if (r > F::modulus / 2)
            return "-" + std::to_string(F::modulus - r);
        return std::to_string(r);
    }
}

template <ExactField F>
std::string matrix_to_text(const Matrix<F>& m, const std::vector<std::string>& columns = {},
                           const std::vector<std::string>& row_labels = {}) {
    std::vector<std::vector<std::string>> cells;
    if (!columns.empty()) {
        std::vector<std::string> head;
        if (!row_labels.empty())
            head.emplace_back("");
        head.insert(head.end(), columns.begin(), columns.end());
        cells.push_back(std::move(head));
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::string> row;
        if (!row_labels.empty())
            row.push_back(r < row_labels.size() ? row_labels[r] : "");
        for (const auto& x : m.row(r))
            row.push_back(scalar_to_text(x));
        cells.push_back(std::move(row));
    }
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "  " : "") << std::string(width[c] - row[c].size(), ' ') << row[c];
        out << '\n';
    }
    return out.str();
}

template <ExactField F>
json flexes_to_json(const std::vector<FlexVector<F>>& flexes) {
    json j = field_header<F>();
    json all = json::array();
    for (const auto& f : flexes) {
        json per_vertex = json::array();
        for (Vertex v = 0; f.d > 0 && v < f.velocities.size() / f.d; ++v) {
            json vel = json::array();
            for (const auto& x : f.velocity(v))
                vel.push_back(scalar_to_json(x));
            per_vertex.push_back(std::move(vel));
        }
        all.push_back(std::move(per_vertex));
    }
    j["flexes"] = std::move(all);
    return j;
}

/// Coordinates file: {"d": int, "points": [[c, ...], ...]} where each c is an
/// integer or a "num/den" string.
template <ExactField F>
Configuration<F> configuration_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw InputError("coordinates JSON needs a \"points\" array");
    std::vector<std::vector<F>> pts;
    std::size_t d = j.contains("d") ? j["d"].get<std::size_t>() : 0;
    for (const auto& pt : j["points"]) {
        if (!pt.is_array())
            throw InputError("each point must be an array");
        std::vector<F> coords;
        for (const auto& c : pt) {
            std::int64_t num = 0, den = 1;
            if (c.is_number_integer()) {
                num = c.get<std::int64_t>();
            } else if (c.is_string()) {
                const auto s = c.get<std::string>();
                const auto slash = s.find('/');
                try {
                    num = std::stoll(s.substr(0, slash));
                    if (slash != std::string::npos)
                        den = std::stoll(s.substr(slash + 1));
                } catch (const std::exception&) {
                    throw InputError("bad coordinate \"" + s + "\"");
                }
            } else {
                throw InputError("coordinates must be integers or \"num/den\" strings");
            }
            if (den == 0)
                throw InputError("zero denominator in coordinate");
            coords.push_back(from_fraction<F>(num, den));
        }
        if (d == 0)
            d = coords.size();
        if (coords.size() != d)
            throw InputError("point dimension does not match d = " + std::to_string(d));
        pts.push_back(std::move(coords));
    }
    return Configuration<F>(d, pts);
}

inline json ggr_to_json(const GgrCertificate& c) {
    return {{"max_stress_matrix_rank", c.max_stress_matrix_rank},
            {"threshold", c.threshold},
            {"verdict", to_string(c.verdict)}};
}

inline json report_to_json(const RigidityReport& r) {
    json j;
    j["graph"] = r.graph_name;
    j["field"] = r.field;
    j["d"] = r.d;
    j["n"] = r.n;
    j["e"] = r.e;
    j["rank"] = r.rank;
    j["target_rank"] = r.target_rank;
    j["glr"] = r.glr;
    j["flex_dim_mod_trivial"] = r.flex_dim_mod_trivial;
    j["stress_dim"] = r.stress_dim;
    j["redundant_edges"] = edges_to_json(r.redundant_edges);
    j["grr"] = r.grr;
    j["connectivity_required"] = r.connectivity_required;
    j["connectivity_ok"] = r.connectivity_ok;
    j["ggr_certificate"] = ggr_to_json(r.ggr);
    j["hendrickson_pass"] = r.hendrickson_pass;
    j["counterexample_consistent"] = r.counterexample_consistent;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    if (r.qrm_rank) {
        j["qrm"] = {{"rank", *r.qrm_rank}, {"columns", r.qrm_columns.value_or(0)}, {"glr", r.qrm_glr.value_or(false)}};
    }
    if (!r.stress_witnesses.empty() || !r.flex_witnesses.empty())
        j["witnesses"] = {{"stresses", r.stress_witnesses}, {"flexes", r.flex_witnesses}};
    return j;
}

inline std::string report_to_text(const RigidityReport& r) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "graph: " << (r.graph_name.empty() ? "(unnamed)" : r.graph_name) << "  n=" << r.n << " e=" << r.e
        << " d=" << r.d << "  field=" << r.field << " seed=" << r.seed << " trials=" << r.trials << '\n';
    out << "rigidity matrix rank: " << r.rank << " (target " << r.target_rank << ")\n";
    out << "GLR: " << yn(r.glr) << "  flexes mod trivial: " << r.flex_dim_mod_trivial
        << "  stress dim: " << r.stress_dim << '\n';
    out << "GRR: " << yn(r.grr) << "  redundant edges: " << r.redundant_edges.size() << "/" << r.e << '\n';
    out << r.connectivity_required << "-connected: " << yn(r.connectivity_ok) << '\n';
    out << "GGR certificate: " << to_string(r.ggr.verdict) << " (max stress-matrix rank "
        << r.ggr.max_stress_matrix_rank << ", threshold " << r.ggr.threshold << ")\n";
    if (r.qrm_rank)
        out << "QRM rank: " << *r.qrm_rank << "/" << r.qrm_columns.value_or(0) << " (GLR " << yn(*r.qrm_glr) << ")\n";
    out << "Hendrickson conditions: " << yn(r.hendrickson_pass);
    if (r.counterexample_consistent)
        out << "  [counterexample-consistent]";
    out << '\n';
    return out.str();
}

inline json family_spec_to_json(const FamilySpec& s) {
    json params = {{"d", s.d}};
    switch (s.kind) {
    case FamilyKind::connelly:
    case FamilyKind::partial_coning:
        params["a"] = s.a;
        params["b"] = s.b;
        break;
    case FamilyKind::chain_attachment:
        params["i"] = s.i;
        params["host"] = "K" + std::to_string(host_size_of(s));
        break;
    case FamilyKind::chain_attachment_general:
        params["i"] = s.i;
        params["x"] = s.x;
        params["host"] = "K" + std::to_string(host_size_of(s));
        break;
    case FamilyKind::h_graph: break;
    case FamilyKind::chain_custom:
        params["chain"] = s.chain;
        params["host"] = "K" + std::to_string(s.host_size);
        break;
    }
    return {{"kind", to_string(s.kind)}, {"params", params}};
}

/// Host given as "K<n>" or "K_<n>"; only complete hosts are named this way.
inline std::size_t parse_complete_host(const std::string& s) {
    std::string digits = s;
    if (!digits.empty() && (digits[0] == 'K' || digits[0] == 'k'))
        digits.erase(0, 1);
    if (!digits.empty() && digits[0] == '_')
        digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw InputError("host must look like K6, got \"" + s + "\"");
    return std::stoul(digits);
}

inline FamilySpec family_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError("family spec needs a string \"kind\"");
    auto kind = family_kind_from_string(j["kind"].get<std::string>());
    if (!kind)
        throw InputError("unknown family kind \"" + j["kind"].get<std::string>() + "\"");
    FamilySpec s;
    s.kind = *kind;
    const json params = j.value("params", json::object());
    auto get = [&](const char* key) -> std::size_t {
        if (!params.contains(key))
            return 0;
        if (!params[key].is_number_unsigned())
            throw InputError(std::string("parameter \"") + key + "\" must be a non-negative integer");
        return params[key].get<std::size_t>();
    };
    s.a = get("a");
    s.b = get("b");
    s.d = get("d");
    s.i = get("i");
    s.x = get("x");
    if (params.contains("chain")) {
        auto c = params["chain"].get<std::vector<std::size_t>>();
        if (c.size() != 4)
            throw InputError("\"chain\" must have four layer sizes");
        std::copy(c.begin(), c.end(), s.chain.begin());
    }
    if (params.contains("host")) {
        if (params["host"].is_string())
            s.host_size = parse_complete_host(params["host"].get<std::string>());
        else
            s.host_size = get("host");
    }
    return s;
}

inline json verification_to_json(const FamilyVerification& v) {
    json claims = json::array();
    for (const auto& c : v.claims)
        claims.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"hypothesis", c.hypothesis}});
    return {{"spec", family_spec_to_json(v.spec)},
            {"graph", graph_to_json(v.graph)},
            {"report", report_to_json(v.report)},
            {"claims", claims},
            {"all_pass", v.all_pass()}};
}

} // namespace joinrig

#endif
