#include "apolar/linalg.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace apolar;

namespace {

bool is_null_vector(const RationalMatrix& m, const RationalVector& v) { return is_zero(m * v); }

}  // namespace

TEST_CASE("reduced echelon form of a known matrix") {
    auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    auto e = reduced_echelon(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced.row(0) == RationalVector{1, 0, 1});
    CHECK(e.reduced.row(1) == RationalVector{0, 1, 1});
    CHECK(rank(m) == 2);
    auto ker = kernel(m);
    REQUIRE(ker.dim() == 1);
    CHECK(primitive_normalize(ker.vectors()[0]) == RationalVector{1, 1, -1});
}

TEST_CASE("Gaussian and fraction-free elimination agree") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        auto rows = static_cast<std::size_t>(rng.uniform(1, 8));
        auto cols = static_cast<std::size_t>(rng.uniform(1, 8));
        auto r = static_cast<std::size_t>(rng.uniform(0, 8));
        auto m = testing::random_low_rank(rng, rows, cols, r);
        const auto gr = rank(m);
        CHECK(gr == bareiss::rank(m));
        CHECK(gr <= std::min({rows, cols, r}));
        auto ker = kernel(m);
        auto oracle = bareiss::kernel_vectors(m);
        CHECK(ker.dim() == cols - gr);
        CHECK(oracle.size() == cols - gr);
        for (const auto& v : ker.vectors()) CHECK(is_null_vector(m, v));
        for (const auto& v : oracle) CHECK(is_null_vector(m, v));
        CHECK(testing::same_span(ker.vectors(), oracle, cols));
    }
}

TEST_CASE("subspace basis canonical form") {
    auto a = SubspaceBasis::span(3, {{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
    auto b = SubspaceBasis::span(3, {{1, 2, 1}, {1, 0, -1}});
    CHECK(a.dim() == 2);
    CHECK(a == b);
    CHECK(a.contains({3, 4, 1}));
    CHECK_FALSE(a.contains({1, 0, 0}));
    CHECK(a.vectors()[0] == RationalVector{1, 0, -1});
    CHECK(a.vectors()[1] == RationalVector{0, 1, 1});
    CHECK(a.combine({2, 3}) == RationalVector{2, 3, 1});
    CHECK_THROWS_AS(SubspaceBasis::from_independent(3, {{1, 0, 0}, {2, 0, 0}}), InvalidInput);
    CHECK(SubspaceBasis::full(4).dim() == 4);
    CHECK(SubspaceBasis::span(2, {{0, 0}}).is_zero());
}

TEST_CASE("subspace intersection") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 7));
        std::vector<SubspaceBasis> spaces;
        const int count = static_cast<int>(rng.uniform(1, 3));
        for (int s = 0; s < count; ++s) {
            std::vector<RationalVector> vs;
            const auto m = rng.uniform(0, static_cast<std::int64_t>(n));
            for (std::int64_t i = 0; i < m; ++i) {
                RationalVector v(n);
                for (auto& x : v) x = testing::rnd(rng, 3);
                vs.push_back(v);
            }
            spaces.push_back(SubspaceBasis::span(n, vs));
        }
        auto cap = intersect_subspaces(spaces);
        for (const auto& v : cap.vectors())
            for (const auto& s : spaces) CHECK(s.contains(v));
        if (spaces.size() == 2) {
            // dim(U cap V) = dim U + dim V - dim(U + V)
            std::vector<RationalVector> sum = spaces[0].vectors();
            sum.insert(sum.end(), spaces[1].vectors().begin(), spaces[1].vectors().end());
            const auto sum_dim = sum.empty() ? 0 : bareiss::rank(RationalMatrix::from_rows(sum, n));
            CHECK(cap.dim() == spaces[0].dim() + spaces[1].dim() - sum_dim);
        } else if (spaces.size() == 1) {
            CHECK(cap == spaces[0]);
        }
    }
    std::vector<SubspaceBasis> none;
    CHECK_THROWS_AS(intersect_subspaces(none), InvalidInput);
    std::vector<SubspaceBasis> mismatch{SubspaceBasis::full(2), SubspaceBasis::full(3)};
    CHECK_THROWS_AS(intersect_subspaces(mismatch), InvalidInput);
}

TEST_CASE("linear solve") {
    auto a = RationalMatrix::from_rows({{1, 1}, {1, -1}, {2, 0}}, 2);
    auto x = solve_linear(a, {3, 1, 4});
    REQUIRE(x.has_value());
    CHECK(*x == RationalVector{2, 1});
    CHECK_FALSE(solve_linear(a, {3, 1, 5}).has_value());

    SplitMix64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
        auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
        auto m = testing::random_low_rank(rng, rows, cols, static_cast<std::size_t>(rng.uniform(1, 6)));
        RationalVector x0(cols);
        for (auto& v : x0) v = testing::rnd(rng, 5);
        auto b = m * x0;
        auto sol = solve_linear(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
}
