#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wsa/matrix.hpp"

using wsa::Matrix;
using wsa::Rational;
using wsa::Subspace;
using wsa::Zp;

namespace {

template <class F>
Matrix<F> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi, double zero_rate) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::uniform_real_distribution<double> z(0.0, 1.0);
    Matrix<F> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) < zero_rate ? F(0) : F(d(rng));
    return m;
}

// Leibniz determinant; independent of elimination.
template <class F>
F leibniz_det(const Matrix<F>& m) {
    std::vector<int> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    F total(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        F term(1);
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Largest k with a nonzero k x k minor.
template <class F>
std::size_t minor_rank(const Matrix<F>& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        combinations(static_cast<int>(m.rows()), static_cast<int>(k), 0, cur, rs);
        combinations(static_cast<int>(m.cols()), static_cast<int>(k), 0, cur, cs);
        for (const auto& r : rs)
            for (const auto& c : cs)
                if (!leibniz_det(m.select_rows(r).select_cols(c)).is_zero()) return k;
    }
    return 0;
}

} // namespace

TEST(Linalg, RankMatchesMinorOracleOverQ) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto m = random_matrix<Rational>(rng, 5, 7, -2, 2, trial % 3 == 0 ? 0.7 : 0.3);
        if (trial % 5 == 0) m.set_row(4, m.row(1));
        ASSERT_EQ(wsa::rank(m), minor_rank(m)) << m.to_string();
        ASSERT_EQ(wsa::rank(m.transpose()), minor_rank(m));
    }
}

TEST(Linalg, RankMatchesMinorOracleOverGF) {
    Zp::Context ctx(5);
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        auto m = random_matrix<Zp>(rng, 5, 6, 0, 4, 0.3);
        ASSERT_EQ(wsa::rank(m), minor_rank(m));
    }
}

TEST(Linalg, RankNullity) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + trial % 7, c = 1 + (trial * 3) % 9;
        auto m = random_matrix<Rational>(rng, r, c, -3, 3, 0.5);
        auto k = wsa::null_space(m);
        EXPECT_EQ(wsa::rank(m) + k.rows(), c);
        if (k.rows() > 0) {
            EXPECT_TRUE((m * k.transpose()).is_zero());
        }
        auto lk = wsa::left_null_space(m);
        EXPECT_EQ(wsa::rank(m) + lk.rows(), r);
        if (lk.rows() > 0) {
            EXPECT_TRUE((lk * m).is_zero());
        }
    }
}

TEST(Linalg, ReducedEchelonIsReduced) {
    std::mt19937_64 rng(14);
    auto m = random_matrix<Rational>(rng, 6, 8, -4, 4, 0.4);
    auto e = wsa::echelon(m);
    for (std::size_t r = 0; r < e.rank(); ++r)
        for (std::size_t s = 0; s < e.rank(); ++s)
            EXPECT_EQ(e.rows(s, e.pivots[r]), Rational(r == s ? 1 : 0));
    EXPECT_EQ(Subspace<Rational>::span(m), Subspace<Rational>::span(e.rows));
}

TEST(Linalg, SolveFindsSolutionOrReportsNone) {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_matrix<Rational>(rng, 4, 6, -3, 3, 0.3);
        std::vector<Rational> x(6);
        for (auto& v : x) v = Rational(static_cast<int>(rng() % 7) - 3);
        auto b = wsa::row_times(x, a.transpose());
        auto sol = wsa::solve(a, b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(wsa::row_times(*sol, a.transpose()), b);
    }
    Matrix<Rational> a(2, 1);
    a(0, 0) = 1;
    a(1, 0) = 1;
    EXPECT_FALSE(wsa::solve(a, {Rational(1), Rational(2)}).has_value());
}

TEST(Linalg, SubspaceDimensionFormula) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_matrix<Rational>(rng, 1 + trial % 5, 7, -2, 2, 0.5);
        auto b = random_matrix<Rational>(rng, 1 + (trial * 2) % 5, 7, -2, 2, 0.5);
        if (trial % 4 == 0) b.set_row(0, a.row(0));
        auto U = Subspace<Rational>::span(a), W = Subspace<Rational>::span(b);
        auto S = wsa::sum_subspaces(U, W);
        auto I = wsa::intersect_subspaces(U, W);
        EXPECT_EQ(S.dim() + I.dim(), U.dim() + W.dim());
        EXPECT_TRUE(U.contains(I));
        EXPECT_TRUE(W.contains(I));
        EXPECT_TRUE(S.contains(U));
        EXPECT_TRUE(S.contains(W));
    }
}

TEST(Linalg, IncrementalAddMatchesSpan) {
    std::mt19937_64 rng(17);
    auto m = random_matrix<Rational>(rng, 9, 6, -2, 2, 0.6);
    Subspace<Rational> s(6);
    for (std::size_t i = 0; i < m.rows(); ++i) s.add(m.row(i));
    EXPECT_EQ(s, Subspace<Rational>::span(m));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto c = s.coordinates(m.row(i));
        EXPECT_EQ(wsa::row_times(c, s.basis()), m.row(i));
    }
}

TEST(Linalg, QuotientProjectionKillsSubspace) {
    std::mt19937_64 rng(18);
    auto m = random_matrix<Rational>(rng, 3, 7, -2, 2, 0.3);
    auto W = Subspace<Rational>::span(m);
    auto q = wsa::quotient_basis(W);
    EXPECT_EQ(q.columns.size(), 7 - W.dim());
    EXPECT_TRUE((W.basis() * q.projection).is_zero());
    EXPECT_EQ(wsa::rank(q.projection), 7 - W.dim());
}

TEST(Linalg, SparseEchelonAgreesWithDense) {
    std::mt19937_64 rng(19);
    auto m = random_matrix<Rational>(rng, 8, 10, -2, 2, 0.6);
    wsa::SparseEchelon<Rational> se(10);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        wsa::SparseVec<Rational> v;
        for (std::size_t j = 0; j < 10; ++j)
            if (!m(i, j).is_zero()) v.emplace_back(static_cast<int>(j), m(i, j));
        se.insert(v);
    }
    se.finalize();
    auto e = wsa::echelon(m);
    ASSERT_EQ(se.rank(), e.rank());
    for (std::size_t r = 0; r < e.rank(); ++r) {
        const auto& row = se.pivot_row(e.pivots[r]);
        std::vector<Rational> dense(10);
        for (const auto& [c, x] : row) dense[c] = x;
        EXPECT_EQ(dense, e.rows.row(r));
    }
}

TEST(Linalg, DimensionMismatchThrows) {
    Matrix<Rational> a(2, 3), b(2, 3);
    try {
        (void)(a * b);
        FAIL();
    } catch (const wsa::Error& e) {
        EXPECT_EQ(e.code(), wsa::ErrorCode::DimensionMismatch);
    }
}
