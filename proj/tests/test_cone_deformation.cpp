#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conedef/cone_deformation.hpp"
#include "conedef/errors.hpp"
#include "conedef/rnc_presentation.hpp"

#include <algorithm>

using namespace conedef::cone;

namespace {

// Line bundles on P^1, written out directly.
std::int64_t h0(int k) { return k >= 0 ? k + 1 : 0; }
std::int64_t h1(int k) { return k <= -2 ? -k - 1 : 0; }

std::int64_t kunneth(int a, int b, int q) {
    if (q == 0) return h0(a) * h0(b);
    if (q == 1) return h0(a) * h1(b) + h1(a) * h0(b);
    return h1(a) * h1(b);
}

std::int64_t product_oracle(int a, int b, int k, int q) {
    return kunneth(2 + k * a, k * b, q) + kunneth(k * a, 2 + k * b, q);
}

// Bott's formula on P^2 for p = 1.
std::int64_t bott_omega1_p2(int k, int q) {
    if (q == 0) return k > 1 ? (k + 1) * (k - 1) : 0;  // C(k+1, k) C(k-1, 1)
    if (q == 1) return k == 0 ? 1 : 0;
    return k < -1 ? (-k - 1) * (-k + 1) : 0;  // C(-k+1, -k) C(-k-1, 1)
}

// T_P2(k) = Omega^1(k+3).
std::int64_t bott_tangent_p2(int k, int q) { return bott_omega1_p2(k + 3, q); }

}  // namespace

TEST_CASE("descriptors and validation") {
    CHECK(descriptor(RationalNormalCurve{4}) == "rnc:4");
    CHECK(descriptor(VeroneseProjectiveSpace{2, 3}) == "veronese:2:3");
    CHECK(descriptor(SegreProduct{1}) == "segre:1");
    CHECK(descriptor(ProductBundle{1, 2}) == "product:1:2");
    CHECK(descriptor(DelPezzo{6}) == "delpezzo:6");
    CHECK(dimension(VeroneseProjectiveSpace{3, 1}) == 3);
    CHECK(dimension(DelPezzo{6}) == 2);
    CHECK_THROWS_AS(validate(RationalNormalCurve{0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(DelPezzo{9}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ProductBundle{1, 0}), std::invalid_argument);
}

TEST_CASE("rational normal curve pieces") {
    CHECK(t1_weight(RationalNormalCurve{4}, -1) == 1);
    CHECK(t1_weight(RationalNormalCurve{4}, 0) == 0);
    CHECK(t1_weight(RationalNormalCurve{3}, -2) == 3);
    for (int d = 1; d <= 12; ++d)
        for (int m = -6; m <= 3; ++m) {
            CAPTURE(d);
            CAPTURE(m);
            CHECK(t1_weight(RationalNormalCurve{d}, m) == std::max(0, -3 - d * m));
            CHECK(t1_weight(RationalNormalCurve{d}, m) == h1(2 + d * m));
            CHECK(t1_weight(VeroneseProjectiveSpace{1, d}, m) == t1_weight(RationalNormalCurve{d}, m));
            CHECK(t2_weight(RationalNormalCurve{d}, m) == 0);
            if (m >= 0) CHECK(t1_weight(RationalNormalCurve{d}, m) == 0);
        }
}

TEST_CASE("weight -1 agrees with the normal bundle route") {
    for (int d = 2; d <= 10; ++d) {
        CAPTURE(d);
        const auto route = conedef::rnc::t1_via_normal(d, -1);
        REQUIRE(route.exact);
        CHECK(t1_weight(RationalNormalCurve{d}, -1) == route.t1);
    }
}

TEST_CASE("tables") {
    const auto t = t1_table(RationalNormalCurve{4}, -3, 1);
    const std::map<int, std::int64_t> expected{{-3, 9}, {-2, 5}, {-1, 1}, {0, 0}, {1, 0}};
    CHECK(t.entries == expected);
    CHECK(t.order == 1);
    CHECK(t1_table(RationalNormalCurve{5}, -1, -1).entries == std::map<int, std::int64_t>{{-1, 2}});
    // Kunneth puts h^1(O(0,-2)) + h^1(O(-2,0)) = 2 at weight -1 for O(2,2).
    const auto s2 = t1_table(SegreProduct{2}, -4, 1);
    CHECK(s2.entries.size() == 6);
    for (const auto& [m, v] : s2.entries) CHECK(v == (m == -1 ? 2 : 0));
    CHECK_THROWS_AS(t1_table(RationalNormalCurve{4}, 3, -3), std::invalid_argument);
    CHECK_THROWS_AS(graded_table(RationalNormalCurve{4}, 0, 1, 3), std::invalid_argument);
    CHECK(graded_table(VeroneseProjectiveSpace{2, 2}, -3, -3, 2).entries.at(-3) == 8);
}

TEST_CASE("P1 x P1 pieces follow Kunneth") {
    CHECK(t1_weight(SegreProduct{1}, -2) == 2);
    for (int d = 1; d <= 6; ++d)
        for (int k = -6; k <= 2; ++k) {
            CAPTURE(d);
            CAPTURE(k);
            CHECK((t1_weight(SegreProduct{d}, k) != 0) == (k * d == -2));
        }
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int k = -6; k <= 3; ++k) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(k);
                CHECK(t1_weight(ProductBundle{a, b}, k) == product_oracle(a, b, k, 1));
                CHECK(t2_weight(ProductBundle{a, b}, k) == product_oracle(a, b, k, 2));
                if (a == b) CHECK(t1_weight(SegreProduct{a}, k) == t1_weight(ProductBundle{a, a}, k));
            }
}

TEST_CASE("Veronese planes against Bott") {
    for (int d = 1; d <= 8; ++d)
        for (int m = -4; m <= 2; ++m) {
            CAPTURE(d);
            CAPTURE(m);
            CHECK(t1_weight(VeroneseProjectiveSpace{2, d}, m) == bott_tangent_p2(d * m, 1));
            CHECK(t2_weight(VeroneseProjectiveSpace{2, d}, m) == bott_tangent_p2(d * m, 2));
        }
    CHECK(t1_weight(VeroneseProjectiveSpace{2, 3}, -1) == 1);
    CHECK(t2_weight(VeroneseProjectiveSpace{2, 1}, -2) == 0);
    CHECK(t2_weight(VeroneseProjectiveSpace{2, 2}, -3) == 8);
    CHECK(t1_weight(VeroneseProjectiveSpace{3, 1}, -4) == 0);
}

TEST_CASE("scope limits") {
    CHECK_THROWS_AS(t1_weight(DelPezzo{6}, -1), conedef::OutOfScopeError);
    CHECK_THROWS_AS(t2_weight(DelPezzo{6}, 0), conedef::OutOfScopeError);
    CHECK_THROWS_AS(t2_weight(VeroneseProjectiveSpace{3, 1}, 0), conedef::OutOfScopeError);
    CHECK_THROWS_AS(pinkham_assembly(DelPezzo{3}, -1, 1), conedef::OutOfScopeError);
}

TEST_CASE("rigidity verdicts") {
    const auto s1 = rigidity_verdict(SegreProduct{1});
    REQUIRE(s1.rigid.has_value());
    CHECK_FALSE(*s1.rigid);
    CHECK(s1.witness == std::pair<int, std::int64_t>{-2, 2});
    CHECK(s1.window_independent);
    const auto s2 = rigidity_verdict(SegreProduct{2});
    CHECK_FALSE(*s2.rigid);
    CHECK(s2.witness == std::pair<int, std::int64_t>{-1, 2});
    for (int d = 3; d <= 6; ++d) {
        CHECK(*rigidity_verdict(SegreProduct{d}).rigid);
        CHECK(rigidity_verdict(SegreProduct{d}).certificate.verdict == Verdict::Pass);
    }

    const auto r3 = rigidity_verdict(RationalNormalCurve{3});
    CHECK_FALSE(*r3.rigid);
    CHECK(r3.witness == std::pair<int, std::int64_t>{-2, 3});
    CHECK(rigidity_verdict(RationalNormalCurve{2}).witness == std::pair<int, std::int64_t>{-2, 1});
    // Window-independent verdicts agree with a brute-force scan on a wide window.
    for (int d = 1; d <= 12; ++d) {
        CAPTURE(d);
        std::optional<std::pair<int, std::int64_t>> scan;
        for (int m = 0; m >= -20 && !scan; --m)
            if (h1(2 + d * m) != 0) scan = std::pair<int, std::int64_t>{m, h1(2 + d * m)};
        const auto v = rigidity_verdict(RationalNormalCurve{d}, 0, 0);
        CHECK(v.window_independent);
        CHECK(v.witness == scan);
        CHECK(v.certificate.verdict == Verdict::Pass);
    }
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            bool nonzero = false;
            for (int k = -20; k <= 5; ++k) nonzero = nonzero || product_oracle(a, b, k, 1) != 0;
            CHECK(*rigidity_verdict(ProductBundle{a, b}, 0, 0).rigid == !nonzero);
        }

    const auto v3 = rigidity_verdict(VeroneseProjectiveSpace{2, 3});
    CHECK_FALSE(*v3.rigid);
    CHECK(v3.witness == std::pair<int, std::int64_t>{-1, 1});
    CHECK_FALSE(v3.window_independent);
    CHECK(*rigidity_verdict(VeroneseProjectiveSpace{2, 2}).rigid);
    CHECK(rigidity_verdict(VeroneseProjectiveSpace{2, 1}).witness == std::pair<int, std::int64_t>{-3, 1});

    const auto dp = rigidity_verdict(DelPezzo{6});
    CHECK_FALSE(dp.rigid.has_value());
    CHECK(dp.certificate.claim.find("delpezzo:6") != std::string::npos);
    CHECK(dp.certificate.counts().contradicted > 0);
    CHECK_THROWS_AS(rigidity_verdict(SegreProduct{1}, 2, 1), std::invalid_argument);
}

TEST_CASE("weight-zero criterion") {
    for (const PolarizedVariety& v : std::vector<PolarizedVariety>{RationalNormalCurve{4}, SegreProduct{3},
                                                                   VeroneseProjectiveSpace{2, 5}, ProductBundle{1, 3},
                                                                   VeroneseProjectiveSpace{3, 2}}) {
        const auto w = weight_zero_criterion(v);
        CHECK(w.h1_O == 0);
        CHECK(w.h2_O == 0);
        CHECK(w.criterion_holds);
        CHECK(w.t1_0 == std::optional<std::int64_t>(0));
    }
    const auto dp = weight_zero_criterion(DelPezzo{5});
    CHECK(dp.criterion_holds);
    CHECK_FALSE(dp.t1_0.has_value());
}

TEST_CASE("corollary hypothesis") {
    auto flags = [](const PolarizedVariety& v, int m) {
        const auto f = corollary_flags(v, m);
        return std::tuple{f.h1_Lm, f.h2_Lm, f.hypothesis_holds};
    };
    CHECK(flags(RationalNormalCurve{4}, 1) == std::tuple{0, 0, true});
    CHECK(flags(RationalNormalCurve{4}, -1) == std::tuple{3, 0, false});
    CHECK(flags(VeroneseProjectiveSpace{2, 3}, -1) == std::tuple{0, 1, false});
    for (int a = 1; a <= 3; ++a)
        for (int m = -4; m <= 2; ++m) {
            const auto f = corollary_flags(ProductBundle{a, a + 1}, m);
            CHECK(f.h1_Lm == kunneth(a * m, (a + 1) * m, 1));
            CHECK(f.h2_Lm == kunneth(a * m, (a + 1) * m, 2));
        }
    // O(jK) with j = -m > 0: h^0 = 0, so h^2 - h^1 = chi = 1 + jK.(jK - K)/2.
    for (int r = 1; r <= 8; ++r)
        for (int m = -5; m <= 3; ++m) {
            CAPTURE(r);
            CAPTURE(m);
            const auto f = corollary_flags(DelPezzo{r}, m);
            const auto k = conedef::proj::SurfaceDivisor::canonical(static_cast<std::size_t>(r));
            const auto d = (-m) * k;
            const std::int64_t chi = 1 + conedef::proj::intersection(d, d + (-1) * k) / 2;
            if (m < 0) CHECK(f.h2_Lm - f.h1_Lm == chi);
            else CHECK(f.hypothesis_holds);
        }
}

TEST_CASE("Pinkham assembly") {
    const auto s = pinkham_assembly(SegreProduct{1}, -3, 1);
    CHECK(s.negative == std::map<int, std::int64_t>{{-3, 0}, {-2, 2}, {-1, 0}});
    CHECK(s.degree_zero == 0);
    CHECK(s.positive == std::map<int, std::int64_t>{{1, 0}});
    CHECK(s.degree_zero_automorphisms == 6);

    const auto r4 = pinkham_assembly(RationalNormalCurve{4}, -2, 2);
    CHECK(r4.negative == std::map<int, std::int64_t>{{-2, 5}, {-1, 1}});
    CHECK(r4.positive == std::map<int, std::int64_t>{{1, 0}, {2, 0}});
    CHECK(r4.degree_zero_automorphisms == 3);

    // max(0, -3-2m) is 1 at m = -2
    CHECK(pinkham_assembly(RationalNormalCurve{2}, -2, 2).negative == std::map<int, std::int64_t>{{-2, 1}, {-1, 0}});
    CHECK(pinkham_assembly(VeroneseProjectiveSpace{2, 1}, 0, 0).degree_zero_automorphisms == 8);
    CHECK_THROWS_AS(pinkham_assembly(RationalNormalCurve{2}, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(pinkham_assembly(RationalNormalCurve{2}, -2, -1), std::invalid_argument);
}
