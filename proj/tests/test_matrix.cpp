#include "joinrig/matrix.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace joinrig;

namespace {

template <class F>
Matrix<F> random_int_matrix(std::size_t r, std::size_t c, int lo, int hi, Rng& rng) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix<F> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = F::from_int(dist(rng));
    return m;
}

/// Product of random r x k and k x c integer matrices; rank <= k.
template <class F>
Matrix<F> low_rank_matrix(std::size_t r, std::size_t c, std::size_t k, Rng& rng) {
    auto a = random_int_matrix<F>(r, k, -3, 3, rng);
    auto b = random_int_matrix<F>(k, c, -3, 3, rng);
    Matrix<F> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t t = 0; t < k; ++t)
                m(i, j) += a(i, t) * b(t, j);
    return m;
}

Matrix<Rational> qrm_example() {
    return Matrix<Rational>{
        {16, 25, -40, 8, -10, 1}, {4, 16, 16, 4, 8, 1},  {1, 9, -6, -2, 6, 1}, {16, 1, 8, -8, -2, 1},
        {81, 0, 0, -18, 0, 1},    {25, 49, 24, 10, 14, 1}, {8, -20, 6, 6, -1, 1},
    };
}

} // namespace

TEST(Rank, DegenerateShapes) {
    EXPECT_EQ(rank(Matrix<Fp>(0, 5)), 0u);
    EXPECT_EQ(rank(Matrix<Fp>(4, 0)), 0u);
    EXPECT_EQ(rank(Matrix<Fp>(3, 3)), 0u);
    EXPECT_EQ(rank(Matrix<Fp>::identity(3)), 3u);
    EXPECT_EQ(kernel_basis(Matrix<Fp>(0, 4)).size(), 4u);
    EXPECT_TRUE(kernel_basis(Matrix<Fp>::identity(3)).empty());
}

TEST(Rank, PrintedQuadricMatrixHasFullColumnRank) {
    const auto m = qrm_example();
    EXPECT_EQ(oracle::rank_by_minors(m), 6u);
    EXPECT_EQ(rank(m), 6u);
}

TEST(Kernel, SimpleVectors) {
    Matrix<Rational> m{{1, 1}};
    auto k = kernel_basis(m);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0][0], -k[0][1]);
    EXPECT_FALSE(k[0][0].is_zero());

    Matrix<Rational> twice{{1, -1, 2}, {1, -1, 2}};
    auto c = cokernel_basis(twice);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0][0], -c[0][1]);
}

TEST(RowReduce, PivotsAndReducedForm) {
    Matrix<Rational> m{{0, 2, 4}, {1, 1, 1}, {2, 4, 6}};
    auto [reduced, pivots] = row_reduce(m);
    EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
    Matrix<Rational> want{{1, 0, -1}, {0, 1, 2}, {0, 0, 0}};
    EXPECT_EQ(reduced, want);
}

TEST(MatrixOps, ApplyTransposeFromRows) {
    Matrix<Fp> m{{1, 2}, {3, 4}, {5, 6}};
    auto t = m.transpose();
    EXPECT_EQ(t.rows(), 2u);
    EXPECT_EQ(t(1, 2), Fp::from_int(6));
    std::vector<Fp> v{Fp::from_int(1), Fp::from_int(-1)};
    auto out = m.apply(v);
    EXPECT_EQ(out, (std::vector<Fp>(3, Fp::from_int(-1))));
    EXPECT_THROW(m.apply(out), std::invalid_argument);
    EXPECT_THROW((Matrix<Fp>::from_rows({{Fp::from_int(1)}, {}})), std::invalid_argument);
    EXPECT_EQ(Matrix<Fp>::from_rows({}, 4).cols(), 4u);
}

// rank-nullity, kernel correctness and transpose invariance on random inputs
template <class F>
void check_invariants(const Matrix<F>& m) {
    const auto r = rank(m);
    const auto ker = kernel_basis(m);
    const auto coker = cokernel_basis(m);
    EXPECT_EQ(r + ker.size(), m.cols());
    EXPECT_EQ(r + coker.size(), m.rows());
    EXPECT_EQ(rank(m.transpose()), r);
    EXPECT_EQ(row_reduce(m).pivots.size(), r);
    for (const auto& v : ker)
        for (const auto& x : m.apply(v))
            EXPECT_TRUE(x.is_zero());
    for (const auto& w : coker)
        for (const auto& x : m.transpose().apply(w))
            EXPECT_TRUE(x.is_zero());
    if (!ker.empty()) {
        EXPECT_EQ(rank(Matrix<F>::from_rows(ker)), ker.size());
    }
}

TEST(RankProperty, InvariantsOverBothFields) {
    Rng rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    for (int t = 0; t < 60; ++t) {
        const auto r = dim(rng), c = dim(rng);
        const auto k = std::uniform_int_distribution<std::size_t>(0, std::min(r, c))(rng);
        check_invariants(low_rank_matrix<Fp>(r, c, k, rng));
        check_invariants(low_rank_matrix<Rational>(r, c, k, rng));
    }
}

TEST(RankProperty, ModularRankEqualsRationalRank) {
    Rng rng(77);
    for (int t = 0; t < 20; ++t) {
        std::uniform_int_distribution<std::size_t> dim(2, 8);
        const auto r = dim(rng), c = dim(rng);
        const auto k = std::uniform_int_distribution<std::size_t>(1, std::min(r, c))(rng);
        auto q = low_rank_matrix<Rational>(r, c, k, rng);
        Matrix<Fp> f(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                f(i, j) = Fp::from_int(static_cast<std::int64_t>(q(i, j).value()));
        EXPECT_EQ(rank(f), rank(q));
    }
}

TEST(RankProperty, MatchesMinorOracle) {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        const auto r = dim(rng), c = dim(rng);
        const auto k = std::uniform_int_distribution<std::size_t>(0, std::min(r, c))(rng);
        auto m = low_rank_matrix<Rational>(r, c, k, rng);
        EXPECT_EQ(rank(m), oracle::rank_by_minors(m));
    }
}
