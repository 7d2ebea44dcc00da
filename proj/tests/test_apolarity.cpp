#include "apolar/apolarity.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace apolar;
namespace t = apolar::testing;

namespace {

BinaryForm quintic_from(const std::vector<std::pair<std::pair<int, int>, int>>& terms) {
    RationalVector c(6);
    for (const auto& [l, coef] : terms) {
        auto pw = t::power_of_linear(l.first, l.second, 5);
        for (unsigned i = 0; i <= 5; ++i) c[i] += coef * pw[i];
    }
    return {5, c};
}

BinaryForm f1() { return quintic_from({{{1, 0}, -2}, {{0, 1}, 2}, {{1, -1}, 1}}); }
BinaryForm f2() { return quintic_from({{{1, 0}, -6}, {{0, 1}, 3}, {{1, -1}, 2}}); }

}  // namespace

TEST_CASE("catalecticant matches the oracle action") {
    SplitMix64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned d = static_cast<unsigned>(rng.uniform(1, 10));
        unsigned k = static_cast<unsigned>(rng.uniform(0, d));
        auto f = t::random_form(rng, d);
        CHECK(catalecticant_matrix(f, k) == t::oracle_catalecticant(f, k));
        auto perp = orthogonal_component(f, k);
        CHECK(perp.dim() == t::oracle_perp_dim(f, k));
        for (const auto& D : perp.dual_basis()) CHECK(apolar_apply(D, f).is_zero());
    }
}

TEST_CASE("orthogonal ideal of x0^2 + x1^2 in degree 2") {
    auto perp = orthogonal_component(BinaryForm(2, {1, 0, 1}), 2);
    REQUIRE(perp.dim() == 2);
    CHECK(perp.contains(DualForm(2, {0, 1, 0})));
    CHECK(perp.contains(DualForm(2, {1, 0, -1})));
    CHECK_FALSE(perp.contains(DualForm(2, {1, 0, 1})));
}

TEST_CASE("inverse system components") {
    auto inv = inverse_system_component(DualForm::monomial(1, 1), 3);
    REQUIRE(inv.dim() == 1);
    CHECK(inv.contains(BinaryForm::monomial(3, 0)));
    auto inv2 = inverse_system_component(DualForm(2, {1, 0, 1}), 4);
    CHECK(inv2.dim() == 2);
    for (std::size_t i = 0; i < inv2.dim(); ++i) CHECK(apolar_apply(DualForm(2, {1, 0, 1}), inv2.primal_element(i)).is_zero());
    CHECK_THROWS_AS(inverse_system_component(DualForm::monomial(4, 0), 3), InvalidInput);
    CHECK_THROWS_AS(inverse_system_component(DualForm::zero(2), 3), InvalidInput);
}

TEST_CASE("worked quintic pair") {
    std::vector<BinaryForm> forms{f1(), f2()};
    CHECK(graded_intersection(forms, 1).dim() == 0);
    CHECK(graded_intersection(forms, 2).dim() == 0);
    CHECK(graded_intersection(forms, 3).dim() == 1);
    CHECK(graded_intersection(forms, 4).dim() == 2);
    CHECK(graded_intersection(forms, 5).dim() == 4);

    DualForm y0 = DualForm::monomial(1, 0), y1 = DualForm::monomial(1, 1);
    DualForm g = y0 * y1 * DualForm(1, {1, 1});
    auto i3 = graded_intersection(forms, 3);
    CHECK(i3.dual_element(0) == g.normalized());
    CHECK(squarefree_test(i3.dual_element(0)));

    CHECK(orthogonal_component(f1(), 4).contains(DualForm(4, {1, 0, 0, 0, 1})));
    CHECK(orthogonal_component(f2(), 4).contains(DualForm(4, {1, 0, 0, 0, 2})));
    // in degrees 3 and 4 the intersection is g times everything; degree 5 has no common root
    CHECK(form_gcd(graded_intersection(forms, 4).dual_basis()) == g.normalized());
    CHECK(form_gcd(graded_intersection(forms, 5).dual_basis()).degree() == 0);

    auto v = vsps(forms, 3);
    CHECK(v.projective_dim == 0);
    CHECK(v.vssp_nonempty);
    auto km = compute_kmin(forms);
    CHECK(km.k == 3);
    CHECK(km.lower_degrees_certified);
}

TEST_CASE("dimension of inverse systems equals the degree of D") {
    SplitMix64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned d = static_cast<unsigned>(rng.uniform(1, 10));
        unsigned k = static_cast<unsigned>(rng.uniform(0, d));
        DualForm D = t::random_dual(rng, k, 3);
        if (trial % 4 == 0 && k >= 2) {
            // force a repeated factor
            DualForm l = t::random_dual(rng, 1, 3);
            DualForm rest = k > 2 ? t::random_dual(rng, k - 2, 3) : DualForm(0, {1});
            D = l * l * rest;
        }
        auto inv = inverse_system_component(D, d);
        CHECK(inv.dim() == k);
        CHECK(t::oracle_inverse_dim(D, d) == k);
    }
}

TEST_CASE("inverse systems separate non-proportional forms") {
    SplitMix64 rng(3);
    int tested = 0;
    while (tested < 200) {
        unsigned d = static_cast<unsigned>(rng.uniform(2, 10));
        unsigned k = static_cast<unsigned>(rng.uniform(1, d));
        DualForm D = t::random_dual(rng, k, 4), G = t::random_dual(rng, k, 4);
        if (D.normalized() == G.normalized() || D.normalized() == (Rational(-1) * G).normalized()) continue;
        ++tested;
        auto a = inverse_system_component(D, d), b = inverse_system_component(G, d);
        CHECK_FALSE(a.basis == b.basis);
        bool separated = false;
        for (std::size_t i = 0; i < a.dim() && !separated; ++i)
            separated = !t::act(G, a.primal_element(i)).empty();
        CHECK(separated);
    }
}

TEST_CASE("membership in VSPS matches containment of the span") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned d = static_cast<unsigned>(rng.uniform(2, 8));
        unsigned r = static_cast<unsigned>(rng.uniform(1, std::min(3u, d)));
        auto forms = t::random_independent(rng, d, r, 6);
        unsigned k = std::min(d, t::expected_kmin(d, r) + static_cast<unsigned>(rng.uniform(0, 1)));
        auto space = graded_intersection(forms, k);
        auto in_inverse = [&](const DualForm& D) {
            auto inv = inverse_system_component(D, d);
            return std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return inv.contains(f); });
        };
        if (space.dim() > 0) {
            RationalVector w(space.dim());
            for (auto& x : w) x = t::rnd(rng, 5);
            if (is_zero(w)) w[0] = 1;
            DualForm D(k, space.basis.combine(w));
            CHECK(space.contains(D));
            CHECK(in_inverse(D));
        }
        DualForm G = t::random_dual(rng, k, 5);
        CHECK(space.contains(G) == in_inverse(G));
    }
}

TEST_CASE("Hilbert function of the orthogonal ideal is symmetric") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned d = static_cast<unsigned>(rng.uniform(0, 10));
        BinaryForm f = t::random_form(rng, d, 5);
        if (trial % 3 == 0) {
            // sparse forms exercise degenerate Hilbert functions
            RationalVector c(d + 1);
            c[static_cast<std::size_t>(rng.uniform(0, d))] = 1;
            f = BinaryForm(d, c);
        }
        for (unsigned k = 0; k <= d; ++k) {
            long lhs = static_cast<long>(k + 1) - static_cast<long>(orthogonal_component(f, k).dim());
            long rhs = static_cast<long>(d - k + 1) - static_cast<long>(orthogonal_component(f, d - k).dim());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("closed forms") {
    CHECK(kmin_formula(5, 2) == 4);
    CHECK(kmin_formula(19, 3) == 15);
    for (unsigned d = 1; d <= 30; ++d)
        for (unsigned r = 1; r <= d + 1; ++r) {
            CHECK(kmin_formula(d, r) == t::expected_kmin(d, r));
            const unsigned eps = (r * (d + 1)) % (r + 1);
            CHECK(epsilon_class(d, r) == eps);
            auto at = vssp_dim_formula(d, r, kmin_formula(d, r));
            REQUIRE(at.has_value());
            CHECK(*at == (eps != 0 ? static_cast<int>(r + 1 - eps) : 0));
            if (kmin_formula(d, r) > 1) CHECK_FALSE(vssp_dim_formula(d, r, kmin_formula(d, r) - 1).has_value());
        }
    for (unsigned d = 2; d <= 20; ++d) CHECK(kmin_formula(d, 1) == d / 2 + 1);
    CHECK_THROWS_AS(kmin_formula(3, 0), InvalidInput);
    CHECK_THROWS_AS(kmin_formula(3, 5), InvalidInput);
}

TEST_CASE("squarefree witness search") {
    // a one-dimensional space spanned by a square has no squarefree element
    GradedSubspace sq{Side::T, 2, SubspaceBasis::span(3, {{1, 2, 1}})};
    auto w = find_squarefree_witness(sq);
    CHECK_FALSE(w.witness.has_value());
    CHECK(w.proven_absent);

    // all multiples of y0^2 in degree 3: every element has a repeated root
    GradedSubspace multiples{Side::T, 3, SubspaceBasis::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}})};
    auto m = find_squarefree_witness(multiples);
    CHECK_FALSE(m.witness.has_value());
    CHECK(m.proven_absent);

    // a pencil whose generators are both non-squarefree but whose general member is
    GradedSubspace pencil{Side::T, 2, SubspaceBasis::span(3, {{1, 0, 0}, {0, 0, 1}})};
    auto p = find_squarefree_witness(pencil);
    REQUIRE(p.witness.has_value());
    CHECK(squarefree_test(*p.witness));
    CHECK(pencil.contains(*p.witness));
}

TEST_CASE("vsps edge cases") {
    std::vector<BinaryForm> dependent{BinaryForm(2, {1, 0, 1}), BinaryForm(2, {2, 0, 2})};
    CHECK_THROWS_AS(vsps(dependent, 2), InvalidInput);
    std::vector<BinaryForm> mixed{BinaryForm(2, {1, 0, 1}), BinaryForm(3, {1, 0, 0, 1})};
    CHECK_THROWS_AS(vsps(mixed, 2), InvalidInput);
    std::vector<BinaryForm> one{BinaryForm(2, {1, 0, 1})};
    CHECK_THROWS_AS(vsps(one, 0), InvalidInput);
    CHECK_THROWS_AS(vsps(one, 4), InvalidInput);
    auto top = vsps(one, 3);
    CHECK(top.space.dim() == 4 - 0);
    CHECK(top.vssp_nonempty);
}

TEST_CASE("binary forms of low rank have small k_min") {
    // x0^d alone has rank one
    for (unsigned d = 1; d <= 8; ++d) {
        auto km = compute_kmin({BinaryForm::monomial(d, 0)});
        CHECK(km.k == 1);
    }
    // x0^2 x1 has rank three although the generic cubic has rank two
    auto km = compute_kmin({BinaryForm(3, {0, 1, 0, 0})});
    CHECK(km.k == 3);
    CHECK(km.lower_degrees_certified);
}
