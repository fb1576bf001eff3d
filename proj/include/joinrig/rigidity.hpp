#ifndef JOINRIG_RIGIDITY_HPP
#define JOINRIG_RIGIDITY_HPP

// Bar-joint frameworks: rigidity matrix, trivial motions, equilibrium stresses
// and the generic rigidity tests built from them. Genericity is simulated by
// random field coordinates; each trial draws a fresh configuration.

#include "joinrig/connectivity.hpp"
#include "joinrig/errors.hpp"
#include "joinrig/graph.hpp"
#include "joinrig/matrix.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace joinrig {

constexpr std::size_t binomial2(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

/// Assignment of a point in F^d to each vertex.
template <ExactField F>
class Configuration {
public:
    Configuration() = default;
    Configuration(std::size_t n, std::size_t d) : n_(n), d_(d), coords_(n * d, field_zero<F>()) {}

    Configuration(std::size_t d, const std::vector<std::vector<F>>& points) : n_(points.size()), d_(d) {
        coords_.reserve(n_ * d_);
        for (const auto& pt : points) {
            if (pt.size() != d)
                throw std::invalid_argument("configuration point has wrong dimension");
            coords_.insert(coords_.end(), pt.begin(), pt.end());
        }
    }

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return d_; }

    [[nodiscard]] std::span<const F> point(Vertex i) const { return {coords_.data() + i * d_, d_}; }
    std::span<F> point(Vertex i) { return {coords_.data() + i * d_, d_}; }

    F& operator()(Vertex i, std::size_t k) { return coords_[i * d_ + k]; }
    const F& operator()(Vertex i, std::size_t k) const { return coords_[i * d_ + k]; }

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<F> coords_;
};

/// Per-edge weights in sorted edge order.
template <ExactField F>
struct StressVector {
    std::vector<F> weights;
};

/// Per-vertex velocities, flattened to length n*d in the rigidity matrix column order.
template <ExactField F>
using Motion = std::vector<F>;

template <ExactField F>
void check_sizes(const Graph& g, const Configuration<F>& p) {
    if (g.vertex_count() != p.size())
        throw std::invalid_argument("configuration has " + std::to_string(p.size()) + " points but graph has " +
                                    std::to_string(g.vertex_count()) + " vertices");
}

/// d translations then C(d,2) rotations. Rotation for axes (a,b) sends
/// coordinate a to p_b and coordinate b to -p_a at every vertex.
template <ExactField F>
std::vector<Motion<F>> trivial_motion_basis(const Configuration<F>& p) {
    const auto n = p.size();
    const auto d = p.dim();
    std::vector<Motion<F>> basis;
    for (std::size_t a = 0; a < d; ++a) {
        Motion<F> m(n * d, field_zero<F>());
        for (Vertex i = 0; i < n; ++i)
            m[i * d + a] = field_one<F>();
        basis.push_back(std::move(m));
    }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            Motion<F> m(n * d, field_zero<F>());
            for (Vertex i = 0; i < n; ++i) {
                m[i * d + a] = p(i, b);
                m[i * d + b] = -p(i, a);
            }
            basis.push_back(std::move(m));
        }
    return basis;
}

template <ExactField F>
std::size_t trivial_motion_rank(const Configuration<F>& p) {
    return rank(Matrix<F>::from_rows(trivial_motion_basis(p), p.size() * p.dim()));
}

/// n iid random points; when n >= d+1 the points must affinely span F^d,
/// checked through the rank of the trivial motions. Resamples up to 3 times.
template <ExactField F>
Configuration<F> random_configuration(std::size_t n, std::size_t d, Rng& rng) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("random_configuration needs n >= 1 and d >= 1");
    for (int attempt = 0; attempt < 4; ++attempt) {
        Configuration<F> p(n, d);
        for (Vertex i = 0; i < n; ++i)
            for (std::size_t k = 0; k < d; ++k)
                p(i, k) = random_scalar<F>(rng);
        if (n < d + 1 || trivial_motion_rank(p) == binomial2(d + 1))
            return p;
    }
    throw std::runtime_error("random_configuration: sampled points repeatedly failed to span");
}

/// e x nd Jacobian of the squared edge lengths, without the global factor 2.
template <ExactField F>
Matrix<F> rigidity_matrix(const Graph& g, const Configuration<F>& p) {
    check_sizes(g, p);
    const auto d = p.dim();
    Matrix<F> m(g.edge_count(), g.vertex_count() * d);
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        const auto [i, j] = g.edges()[r];
        for (std::size_t k = 0; k < d; ++k) {
            const F diff = p(i, k) - p(j, k);
            m(r, i * d + k) = diff;
            m(r, j * d + k) = -diff;
        }
    }
    return m;
}

/// Rank of the rigidity matrix of a generic infinitesimally rigid framework:
/// C(n,2) while the points form a simplex (n <= d+1), else nd - C(d+1,2).
constexpr std::size_t target_rank(std::size_t n, std::size_t d) {
    if (n <= d + 1)
        return binomial2(n);
    return n * d - binomial2(d + 1);
}

template <ExactField F>
bool infinitesimally_rigid(const Graph& g, const Configuration<F>& p) {
    return rank(rigidity_matrix(g, p)) == target_rank(g.vertex_count(), p.dim());
}

/// Runs `fn` once per trial on a fresh random configuration drawn from its own
/// stream (seeded from `rng`) and insists that every trial returns the same value.
template <ExactField F, class Fn>
auto agreed_over_trials(const Graph& g, std::size_t d, Rng& rng, std::size_t trials, Fn&& fn,
                        const char* what) {
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    using R = std::invoke_result_t<Fn&, const Configuration<F>&>;
    std::optional<R> first;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng stream(rng());
        auto p = random_configuration<F>(g.vertex_count(), d, stream);
        R r = fn(p);
        if (!first)
            first = std::move(r);
        else if (!(r == *first))
            throw TrialDisagreement(std::string(what) + " differs between trial 0 and trial " + std::to_string(t));
    }
    return *first;
}

template <ExactField F>
bool is_glr(const Graph& g, std::size_t d, Rng& rng, std::size_t trials = 2) {
    return agreed_over_trials<F>(
        g, d, rng, trials, [&](const Configuration<F>& p) { return infinitesimally_rigid(g, p); }, "GLR verdict");
}

template <ExactField F>
std::vector<StressVector<F>> stress_basis(const Graph& g, const Configuration<F>& p) {
    std::vector<StressVector<F>> out;
    for (auto& w : cokernel_basis(rigidity_matrix(g, p)))
        out.push_back({std::move(w)});
    return out;
}

template <ExactField F>
bool is_equilibrium(const Graph& g, const Configuration<F>& p, const StressVector<F>& w) {
    if (w.weights.size() != g.edge_count())
        return false;
    const auto d = p.dim();
    std::vector<F> force(g.vertex_count() * d, field_zero<F>());
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        if (w.weights[r].is_zero())
            continue;
        const auto [i, j] = g.edges()[r];
        for (std::size_t k = 0; k < d; ++k) {
            const F f = w.weights[r] * (p(i, k) - p(j, k));
            force[i * d + k] += f;
            force[j * d + k] -= f;
        }
    }
    return std::all_of(force.begin(), force.end(), [](const F& x) { return x.is_zero(); });
}

/// Edges carrying a nonzero weight in some equilibrium stress. For a rigid
/// framework these are exactly the edges whose removal keeps it rigid.
template <ExactField F>
std::vector<Edge> redundant_edges(const Graph& g, const Configuration<F>& p) {
    if (!infinitesimally_rigid(g, p))
        throw NotRigidError("redundant_edges: framework is not infinitesimally rigid");
    auto basis = stress_basis(g, p);
    std::vector<Edge> out;
    for (std::size_t r = 0; r < g.edge_count(); ++r)
        for (const auto& w : basis)
            if (!w.weights[r].is_zero()) {
                out.push_back(g.edges()[r]);
                break;
            }
    return out;
}

/// Same set as redundant_edges, found by deleting each edge and re-ranking.
template <ExactField F>
std::vector<Edge> redundant_edges_by_deletion(const Graph& g, const Configuration<F>& p) {
    if (!infinitesimally_rigid(g, p))
        throw NotRigidError("redundant_edges_by_deletion: framework is not infinitesimally rigid");
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (infinitesimally_rigid(g.without_edge(e), p))
            out.push_back(e);
    return out;
}

template <ExactField F>
bool is_grr(const Graph& g, std::size_t d, Rng& rng, std::size_t trials = 2) {
    return agreed_over_trials<F>(
        g, d, rng, trials,
        [&](const Configuration<F>& p) {
            return infinitesimally_rigid(g, p) && redundant_edges(g, p).size() == g.edge_count();
        },
        "GRR verdict");
}

/// n x n matrix with -w_ij off the diagonal on edges and zero row sums.
template <ExactField F>
Matrix<F> stress_matrix(const Graph& g, const Configuration<F>& p, const StressVector<F>& w) {
    check_sizes(g, p);
    if (!is_equilibrium(g, p, w))
        throw ConstraintViolation("stress_matrix: weights are not an equilibrium stress");
    const auto n = g.vertex_count();
    Matrix<F> m(n, n);
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        const auto [i, j] = g.edges()[r];
        m(i, j) -= w.weights[r];
        m(j, i) -= w.weights[r];
        m(i, i) += w.weights[r];
        m(j, j) += w.weights[r];
    }
    return m;
}

enum class GgrVerdict { ggr_probable, not_ggr_probable, inapplicable };

inline std::string to_string(GgrVerdict v) {
    switch (v) {
    case GgrVerdict::ggr_probable: return "ggr-probable";
    case GgrVerdict::not_ggr_probable: return "not-ggr-probable";
    case GgrVerdict::inapplicable: return "inapplicable";
    }
    return "?";
}

struct GgrCertificate {
    std::size_t max_stress_matrix_rank = 0;
    std::size_t threshold = 0;
    GgrVerdict verdict = GgrVerdict::inapplicable;
};

namespace detail {

template <ExactField F>
std::size_t max_random_stress_rank(const Graph& g, const Configuration<F>& p,
                                   const std::vector<StressVector<F>>& basis, Rng& rng, std::size_t samples) {
    std::size_t best = 0;
    if (basis.empty())
        return 0;
    std::vector<Vector<F>> raw;
    for (const auto& w : basis)
        raw.push_back(w.weights);
    for (std::size_t s = 0; s < samples; ++s) {
        Vector<F> coeffs(basis.size());
        for (auto& c : coeffs)
            c = random_scalar<F>(rng);
        StressVector<F> w{linear_combination(raw, std::span<const F>(coeffs), g.edge_count())};
        best = std::max(best, rank(stress_matrix(g, p, w)));
    }
    return best;
}

} // namespace detail

/// Randomized generic global rigidity test: a generic framework with n >= d+2
/// is globally rigid iff some equilibrium stress matrix has rank n-d-1.
/// Each sampled combination can only under-report the rank, so the verdict is
/// probabilistic in both directions with failure probability <= deg/p per sample.
template <ExactField F>
GgrCertificate ggr_certificate(const Graph& g, std::size_t d, Rng& rng, std::size_t trials = 2,
                               std::size_t samples = 3) {
    const auto n = g.vertex_count();
    GgrCertificate cert;
    if (n < d + 2)
        return cert;
    cert.threshold = n - d - 1;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng stream(rng());
        auto p = random_configuration<F>(n, d, stream);
        if (!infinitesimally_rigid(g, p))
            return {0, cert.threshold, GgrVerdict::inapplicable};
        auto basis = stress_basis(g, p);
        cert.max_stress_matrix_rank =
            std::max(cert.max_stress_matrix_rank, detail::max_random_stress_rank(g, p, basis, stream, samples));
    }
    cert.verdict =
        cert.max_stress_matrix_rank == cert.threshold ? GgrVerdict::ggr_probable : GgrVerdict::not_ggr_probable;
    return cert;
}

/// Everything needed to test Hendrickson's necessary conditions on one graph.
struct RigidityReport {
    std::string graph_name;
    std::string field;
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t e = 0;
    std::size_t rank = 0;
    std::size_t target_rank = 0;
    bool glr = false;
    std::size_t flex_dim_mod_trivial = 0;
    std::size_t stress_dim = 0;
    std::vector<Edge> redundant_edges;
    bool grr = false;
    std::size_t connectivity_required = 0;
    bool connectivity_ok = false;
    GgrCertificate ggr;
    bool hendrickson_pass = false;
    bool counterexample_consistent = false;
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    // filled in by the quadric engine when the graph is a balanced join
    std::optional<std::size_t> qrm_rank;
    std::optional<std::size_t> qrm_columns;
    std::optional<bool> qrm_glr;

    // exact witness vectors as field strings ("num/den" or residues)
    std::vector<std::vector<std::string>> stress_witnesses;
    std::vector<std::vector<std::string>> flex_witnesses;
};

struct ReportOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 2;
    std::size_t stress_samples = 3;
    bool witnesses = false;
};

namespace detail {

struct FrameworkSummary {
    std::size_t rank;
    std::size_t nullity;
    std::size_t trivial_rank;
    std::size_t stress_dim;
    std::vector<Edge> redundant;
    friend bool operator==(const FrameworkSummary&, const FrameworkSummary&) = default;
};

} // namespace detail

/// Builds the full RigidityReport from one RNG stream seeded by `opts.seed`.
template <ExactField F>
RigidityReport hendrickson_report(const Graph& g, std::size_t d, const ReportOptions& opts = {}) {
    if (d < 1)
        throw std::invalid_argument("dimension must be >= 1");
    if (g.vertex_count() < 1)
        throw std::invalid_argument("graph has no vertices");
    RigidityReport rep;
    rep.graph_name = g.name();
    rep.field = std::string(F::name());
    rep.d = d;
    rep.n = g.vertex_count();
    rep.e = g.edge_count();
    rep.target_rank = target_rank(rep.n, d);
    rep.trials = opts.trials;
    rep.seed = opts.seed;

    Rng rng(opts.seed);
    std::vector<StressVector<F>> first_stresses;
    Configuration<F> first_p;
    auto summary = agreed_over_trials<F>(
        g, d, rng, opts.trials,
        [&](const Configuration<F>& p) {
            auto m = rigidity_matrix(g, p);
            auto r = rank(m);
            auto stresses = stress_basis(g, p);
            detail::FrameworkSummary s{r, m.cols() - r, trivial_motion_rank(p), stresses.size(), {}};
            if (r == target_rank(g.vertex_count(), d))
                s.redundant = redundant_edges(g, p);
            if (first_stresses.empty() && first_p.size() == 0) {
                first_stresses = std::move(stresses);
                first_p = p;
            }
            return s;
        },
        "rigidity matrix summary");

    rep.rank = summary.rank;
    rep.glr = summary.rank == rep.target_rank;
    rep.flex_dim_mod_trivial = summary.nullity - summary.trivial_rank;
    rep.stress_dim = summary.stress_dim;
    rep.redundant_edges = summary.redundant;
    rep.grr = rep.glr && summary.redundant.size() == rep.e;
    rep.connectivity_required = d + 1;
    rep.connectivity_ok = vertex_connectivity_at_least(g, d + 1);
    rep.ggr = ggr_certificate<F>(g, d, rng, opts.trials, opts.stress_samples);
    rep.hendrickson_pass = rep.connectivity_ok && rep.grr;
    rep.counterexample_consistent = rep.hendrickson_pass && rep.ggr.verdict == GgrVerdict::not_ggr_probable;

    if (opts.witnesses)
        for (const auto& w : first_stresses) {
            std::vector<std::string> row;
            for (const auto& x : w.weights)
                row.push_back(x.to_string());
            rep.stress_witnesses.push_back(std::move(row));
        }
    return rep;
}

} // namespace joinrig

#endif
