#include "apolar/curves.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace apolar;
namespace t = apolar::testing;

namespace {

BinaryForm quintic(const std::vector<std::pair<std::pair<int, int>, int>>& terms) {
    RationalVector c(6);
    for (const auto& [l, coef] : terms) {
        auto pw = t::power_of_linear(l.first, l.second, 5);
        for (unsigned i = 0; i <= 5; ++i) c[i] += coef * pw[i];
    }
    return {5, c};
}

CurveSpec quintic_curve() {
    return make_curve(5, 3, {quintic({{{1, 0}, -2}, {{0, 1}, 2}, {{1, -1}, 1}}), quintic({{{1, 0}, -6}, {{0, 1}, 3}, {{1, -1}, 2}})});
}

}  // namespace

TEST_CASE("generic tables") {
    auto small = generic_secant_table(5, 3);
    REQUIRE(small.size() == 3);
    CHECK_FALSE(small[0].projective_dim.has_value());
    CHECK(small[1].projective_dim == 0);
    CHECK(small[2].projective_dim == 3);
    CHECK(small[0].note == "C has no triple points");
    CHECK(small[1].note == "a unique 4-secant line when C is smooth");

    auto big = generic_secant_table(19, 16);
    for (const auto& row : big) {
        CHECK(row.b == row.a + 4);
        // independent closed form: empty below k_min(19, 3) = 15, else b(r + 1) - r(d + 1)
        if (row.b < 15) CHECK_FALSE(row.projective_dim.has_value());
        else CHECK(row.projective_dim == static_cast<int>(row.b * 4 - 60));
    }
    CHECK(big[11].projective_dim == 0);
    CHECK(big[12].projective_dim == 4);
    CHECK(big[13].projective_dim == 8);
    CHECK(big[14].projective_dim == 12);
    CHECK_THROWS_AS(generic_secant_table(3, 3), InvalidInput);
}

TEST_CASE("emptiness bound") {
    CHECK(emptiness_bound_check(5, 3, 0, 4));
    CHECK_FALSE(emptiness_bound_check(5, 3, 0, 3));
    CHECK_FALSE(emptiness_bound_check(5, 3, 1, 3));
}

TEST_CASE("worked quintic curve") {
    auto curve = quintic_curve();
    auto s03 = secant_space(curve, 0, 3);
    CHECK(s03.projective_dim == 0);
    CHECK(s03.smooth_part_nonempty);
    CHECK(s03.note == "C has a unique triple point");
    CHECK(secant_space(curve, 1, 4).projective_dim == 1);
    CHECK(secant_space(curve, 2, 5).projective_dim == 3);
    CHECK_THROWS_AS(secant_space(curve, 0, 4), InvalidInput);
    CHECK_THROWS_AS(secant_space(curve, 0, 2), InvalidInput);

    auto probe = genericity_probe(curve);
    CHECK(probe.non_generic_certified);
    CHECK(probe.verdict == "non-generic (certified)");
    REQUIRE_FALSE(probe.rows[0].mismatch.empty());
    CHECK(probe.rows[0].mismatch.find("a unique triple point") != std::string::npos);
}

TEST_CASE("random centers look generic") {
    SplitMix64 rng(8);
    int consistent = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto center = t::random_independent(rng, 6, 2, 9);
        CurveSpec curve;
        try {
            curve = make_curve(6, 4, center);
        } catch (const InvalidInput&) {
            continue;
        }
        WitnessOptions w;
        w.seed = static_cast<std::uint64_t>(trial);
        auto probe = genericity_probe(curve, w);
        if (probe.verdict == "consistent with generic") ++consistent;
    }
    CHECK(consistent >= 8);
}

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(make_curve(5, 3, {BinaryForm::monomial(5, 1)}), InvalidInput);
    CHECK_THROWS_AS(make_curve(5, 5, {}), InvalidInput);
    // a center containing x0^5 meets the rational normal curve
    CHECK_THROWS_AS(make_curve(5, 3, {BinaryForm::monomial(5, 0), BinaryForm::monomial(5, 2)}), InvalidInput);
    CHECK(multiplicity_name(3) == "triple");
    CHECK(multiplicity_name(9) == "9-fold");
}
