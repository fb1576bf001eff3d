#ifndef JOINRIG_QUADRIC_HPP
#define JOINRIG_QUADRIC_HPP

// Quadric rigidity matrix (QRM) for joined frameworks.
//
// A quadric through the points of both join classes yields an infinitesimal
// flex: one class moves along Q(p,1), the other along -Q(p,1). Cross edges are
// preserved automatically by the symmetry of Q; an extraneous edge ij is
// preserved iff (p_i,1)^T Q (p_j,1) = 0. For a balanced join the framework is
// infinitesimally rigid iff no such quadric exists, i.e. iff the QRM has full
// column rank C(d+2,2).

#include "joinrig/recognition.hpp"
#include "joinrig/rigidity.hpp"

namespace joinrig {

/// Number of monomials of degree <= 2 in d variables.
constexpr std::size_t quadric_dimension(std::size_t d) { return binomial2(d + 2); }

/// Column labels in constraint-map order: squares, cross terms, linears, constant.
inline std::vector<std::string> qrm_column_names(std::size_t d) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= d; ++i)
        names.push_back("x" + std::to_string(i) + "^2");
    for (std::size_t j = 1; j <= d; ++j)
        for (std::size_t k = j + 1; k <= d; ++k)
            names.push_back("x" + std::to_string(j) + "x" + std::to_string(k));
    for (std::size_t l = 1; l <= d; ++l)
        names.push_back("x" + std::to_string(l));
    names.emplace_back("1");
    return names;
}

/// (p1q1..pdqd, pjqk+pkqj for j<k, p1+q1..pd+qd, 1).
template <ExactField F>
Vector<F> constraint_map(std::span<const F> p, std::span<const F> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("constraint_map: points have different dimensions");
    const auto d = p.size();
    Vector<F> m;
    m.reserve(quadric_dimension(d));
    for (std::size_t i = 0; i < d; ++i)
        m.push_back(p[i] * q[i]);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k)
            m.push_back(p[j] * q[k] + p[k] * q[j]);
    for (std::size_t l = 0; l < d; ++l)
        m.push_back(p[l] + q[l]);
    m.push_back(field_one<F>());
    return m;
}

/// Polynomial sum A_i x_i^2 + sum_{j<k} B_jk x_j x_k + sum C_l x_l + D.
///
/// The symmetric homogeneous matrix has Q_ii = A_i, Q_jk = B_jk / 2,
/// Q_{d+1,l} = C_l / 2 and Q_{d+1,d+1} = D, so the field must invert 2.
template <ExactField F>
struct QuadricCoefficients {
    std::vector<F> A;
    std::vector<F> B;
    std::vector<F> C;
    F D = field_zero<F>();

    [[nodiscard]] std::size_t dim() const { return A.size(); }

    /// From a vector k in the QRM kernel: k . m(p,q) = (p,1)^T Q (q,1), so the
    /// cross and linear entries of k are already the halved coefficients.
    static QuadricCoefficients from_kernel_vector(std::span<const F> k, std::size_t d) {
        if (k.size() != quadric_dimension(d))
            throw std::invalid_argument("kernel vector length does not match dimension");
        const F two = F::from_int(2);
        QuadricCoefficients q;
        std::size_t at = 0;
        for (std::size_t i = 0; i < d; ++i)
            q.A.push_back(k[at++]);
        for (std::size_t i = 0; i < binomial2(d); ++i)
            q.B.push_back(two * k[at++]);
        for (std::size_t i = 0; i < d; ++i)
            q.C.push_back(two * k[at++]);
        q.D = k[at];
        return q;
    }

    [[nodiscard]] Matrix<F> homogeneous_matrix() const {
        const auto d = dim();
        const F half = F::from_int(2).inverse();
        Matrix<F> q(d + 1, d + 1);
        std::size_t at = 0;
        for (std::size_t i = 0; i < d; ++i)
            q(i, i) = A[i];
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                q(j, k) = B[at] * half;
                q(k, j) = q(j, k);
                ++at;
            }
        for (std::size_t l = 0; l < d; ++l) {
            q(d, l) = C[l] * half;
            q(l, d) = q(d, l);
        }
        q(d, d) = D;
        return q;
    }

    /// (p,1)^T Q (q,1).
    [[nodiscard]] F bilinear(std::span<const F> p, std::span<const F> q) const {
        const auto Q = homogeneous_matrix();
        const auto d = dim();
        F acc = field_zero<F>();
        for (std::size_t a = 0; a <= d; ++a) {
            const F pa = a < d ? p[a] : field_one<F>();
            for (std::size_t b = 0; b <= d; ++b) {
                const F qb = b < d ? q[b] : field_one<F>();
                acc += pa * Q(a, b) * qb;
            }
        }
        return acc;
    }

    [[nodiscard]] bool is_zero() const {
        auto zero = [](const std::vector<F>& v) {
            return std::all_of(v.begin(), v.end(), [](const F& x) { return x.is_zero(); });
        };
        return zero(A) && zero(B) && zero(C) && D.is_zero();
    }
};

/// Per-vertex velocities; velocity(i) is the d-vector p'_i.
template <ExactField F>
struct FlexVector {
    std::size_t d = 0;
    Motion<F> velocities;

    [[nodiscard]] std::span<const F> velocity(Vertex i) const { return {velocities.data() + i * d, d}; }
};

template <ExactField F>
void check_join_against(const JoinStructure& js, const Configuration<F>& p) {
    const auto n = p.size();
    std::vector<int> side(n, -1);
    for (auto v : js.left) {
        if (v >= n || side[v] != -1)
            throw std::invalid_argument("join structure: bad left vertex");
        side[v] = 0;
    }
    for (auto v : js.right) {
        if (v >= n || side[v] != -1)
            throw std::invalid_argument("join structure: bad right vertex");
        side[v] = 1;
    }
    if (js.vertex_count() != n)
        throw std::invalid_argument("join structure does not cover the configuration");
    for (const auto& e : js.extraneous)
        if (e.v >= n || side[e.u] != side[e.v] || e.u == e.v)
            throw std::invalid_argument("join structure: extraneous edge crosses the classes");
}

/// (n + e') x C(d+2,2): rows m(p_v,p_v) for v = 0..n-1, then m(p_i,p_j) per
/// extraneous edge in sorted order.
template <ExactField F>
Matrix<F> qrm(const JoinStructure& js, const Configuration<F>& p) {
    check_join_against(js, p);
    auto ext = js.extraneous;
    std::sort(ext.begin(), ext.end());
    std::vector<Vector<F>> rows;
    rows.reserve(p.size() + ext.size());
    for (Vertex v = 0; v < p.size(); ++v)
        rows.push_back(constraint_map(p.point(v), p.point(v)));
    for (const auto& e : ext)
        rows.push_back(constraint_map(p.point(e.u), p.point(e.v)));
    return Matrix<F>::from_rows(rows, quadric_dimension(p.dim()));
}

template <ExactField F>
std::vector<QuadricCoefficients<F>> quadric_basis(const JoinStructure& js, const Configuration<F>& p) {
    std::vector<QuadricCoefficients<F>> out;
    for (const auto& k : kernel_basis(qrm(js, p)))
        out.push_back(QuadricCoefficients<F>::from_kernel_vector(k, p.dim()));
    return out;
}

/// Left class moves by the affine part of Q(p,1), the right class by its negation.
template <ExactField F>
FlexVector<F> quadric_flex(const QuadricCoefficients<F>& qc, const JoinStructure& js, const Configuration<F>& p) {
    check_join_against(js, p);
    const auto d = p.dim();
    if (qc.dim() != d)
        throw std::invalid_argument("quadric_flex: coefficient dimension mismatch");
    for (Vertex v = 0; v < p.size(); ++v)
        if (!qc.bilinear(p.point(v), p.point(v)).is_zero())
            throw ConstraintViolation("quadric does not pass through vertex " + std::to_string(v));
    for (const auto& e : js.extraneous)
        if (!qc.bilinear(p.point(e.u), p.point(e.v)).is_zero())
            throw ConstraintViolation("quadric violates extraneous edge " + std::to_string(e.u) + "-" +
                                      std::to_string(e.v));
    const auto Q = qc.homogeneous_matrix();
    FlexVector<F> flex{d, Motion<F>(p.size() * d, field_zero<F>())};
    auto push = [&](Vertex v, bool negate) {
        for (std::size_t a = 0; a < d; ++a) {
            F acc = Q(a, d);
            for (std::size_t b = 0; b < d; ++b)
                acc += Q(a, b) * p(v, b);
            flex.velocities[v * d + a] = negate ? -acc : acc;
        }
    };
    for (auto v : js.left)
        push(v, false);
    for (auto v : js.right)
        push(v, true);
    return flex;
}

template <ExactField F>
bool preserves_edge_lengths(const Graph& g, const Configuration<F>& p, const FlexVector<F>& f) {
    const auto d = p.dim();
    for (const auto& [i, j] : g.edges()) {
        F dot = field_zero<F>();
        for (std::size_t k = 0; k < d; ++k)
            dot += (p(i, k) - p(j, k)) * (f.velocities[i * d + k] - f.velocities[j * d + k]);
        if (!dot.is_zero())
            return false;
    }
    return true;
}

inline JoinStructure require_balanced_join(const Graph& g, std::size_t d) {
    auto js = recognize_balanced_join(g, d);
    if (!js)
        throw NotBalancedJoin("graph is not a balanced join in dimension " + std::to_string(d));
    return *js;
}

template <ExactField F>
std::size_t qrm_rank(const JoinStructure& js, std::size_t d, Rng& rng, std::size_t trials = 2) {
    Graph shell(js.vertex_count());
    return agreed_over_trials<F>(
        shell, d, rng, trials, [&](const Configuration<F>& p) { return rank(qrm(js, p)); }, "QRM rank");
}

/// GLR decided on the quadric rigidity matrix. Refuses graphs that are not
/// balanced joins.
template <ExactField F>
bool is_glr_via_qrm(const Graph& g, std::size_t d, Rng& rng, std::size_t trials = 2) {
    const auto js = require_balanced_join(g, d);
    return qrm_rank<F>(js, d, rng, trials) == quadric_dimension(d);
}

/// nullity(rigidity matrix) - rank(trivial motions), agreed over trials.
template <ExactField F>
std::size_t flex_dim_mod_trivial(const Graph& g, std::size_t d, Rng& rng, std::size_t trials = 2) {
    return agreed_over_trials<F>(
        g, d, rng, trials,
        [&](const Configuration<F>& p) {
            auto m = rigidity_matrix(g, p);
            return m.cols() - rank(m) - trivial_motion_rank(p);
        },
        "flex dimension");
}

/// Adds QRM rank and verdict to a report when g is a balanced join. Returns
/// false when the quadric engine does not apply.
template <ExactField F>
bool attach_qrm_summary(RigidityReport& rep, const Graph& g, std::size_t d, const ReportOptions& opts) {
    auto js = recognize_balanced_join(g, d);
    if (!js)
        return false;
    Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    rep.qrm_rank = qrm_rank<F>(*js, d, rng, opts.trials);
    rep.qrm_columns = quadric_dimension(d);
    rep.qrm_glr = *rep.qrm_rank == quadric_dimension(d);
    if (opts.witnesses) {
        Rng wrng(opts.seed);
        auto p = random_configuration<F>(g.vertex_count(), d, wrng);
        for (const auto& qc : quadric_basis(*js, p)) {
            std::vector<std::string> row;
            for (const auto& x : quadric_flex(qc, *js, p).velocities)
                row.push_back(x.to_string());
            rep.flex_witnesses.push_back(std::move(row));
        }
    }
    return true;
}

} // namespace joinrig

#endif
