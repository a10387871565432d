#include "conedef/certificate.hpp"

#include "conedef/errors.hpp"
#include "conedef/p1_cech.hpp"

#include <algorithm>
#include <stdexcept>

namespace conedef::cone {

namespace {

using proj::SurfaceDivisor;

const char* const kSetup = "anticanonical setup";
const char* const kTangentLemma = "blow-up tangent sequence lemma, twists m >= 0, r <= 6";
const char* const kCotangentLemma = "blow-up cotangent sequence lemma, twists m <= -2, r <= 6";
const char* const kHighLemma = "blow-up cotangent sequence lemma, twists m <= -2, r = 7 or 8";
const char* const kQuotientLemma = "graded Euler-quotient sequence";
const char* const kTheorem = "anticanonical cone rigidity theorem, r <= 6";

const char* const kRuleRR = "Riemann-Roch lower bound h^1 >= -chi";
const char* const kRuleLaurent = "Laurent Cech basis count on P^1";
const char* const kRuleIntersection = "intersection form on Pic(Y_r)";

std::string num(std::int64_t v) { return std::to_string(v); }

std::string twist_name(int m) { return "O(" + num(m) + "K)"; }

StepStatus check(bool ok) { return ok ? StepStatus::Verified : StepStatus::Contradicted; }

std::int64_t laurent_h(int i, std::int64_t k) {
    return static_cast<std::int64_t>(cech::basis(i, static_cast<int>(k)).size());
}

// D.E_i when it is the same for every i.
std::optional<std::int64_t> uniform_exceptional_degree(const SurfaceDivisor& d) {
    std::optional<std::int64_t> deg;
    for (std::size_t i = 1; i <= d.r(); ++i) {
        const auto v = proj::restrict_to_exceptional(d, i);
        if (deg && *deg != v) return std::nullopt;
        deg = v;
    }
    return deg;
}

StepValue degree_value(const std::optional<std::int64_t>& deg) {
    if (deg) return *deg;
    return std::string("not uniform");
}

struct Builder {
    std::vector<CertificateStep>& out;
    std::string lemma;
    std::optional<int> m;

    void add(std::string term, StepValue value, std::string claimed, std::string rule, std::string anchor,
             StepStatus status) {
        CertificateStep s;
        s.lemma = lemma;
        if (m) {
            s.k_exponent = *m;
            s.weight = -*m;
        }
        s.term = std::move(term);
        s.value = std::move(value);
        s.claimed = std::move(claimed);
        s.rule = std::move(rule);
        s.anchor = std::move(anchor);
        s.status = status;
        out.push_back(std::move(s));
    }

    // h^1(V) >= -chi(V) because h^1 = h^0 + h^2 - chi.
    void rr_vanishing(const std::string& term, const Rank2Bundle& v, const std::string& anchor) {
        const std::int64_t chi = euler_characteristic(v);
        const std::int64_t bound = std::max<std::int64_t>(0, -chi);
        add(term, bound, "0", std::string(kRuleRR) + ", chi = " + num(chi), anchor,
            bound > 0 ? StepStatus::Contradicted : StepStatus::Asserted);
    }
};

void setup_steps(std::vector<CertificateStep>& out, int r) {
    Builder b{out, kSetup, std::nullopt};
    const auto k = SurfaceDivisor::canonical(static_cast<std::size_t>(r));
    const std::int64_t k2 = proj::intersection(k, k);
    b.add("K^2", k2, "9 - r > 0", kRuleIntersection, "canonical class -3H + sum E_i", check(k2 == 9 - r && k2 > 0));
    const auto ke = uniform_exceptional_degree(k);
    b.add("K.E_i for every i", degree_value(ke), "-1", kRuleIntersection, "restriction of K to an exceptional curve",
          check(ke == -1));
    b.add("-K ample", "K^2 = " + num(k2) + ", -K.E_i = 1", "ample", "Nakai-Moishezon; general position assumed",
          "anticanonical ampleness for points in general position", StepStatus::Asserted);
}

void tangent_lemma_steps(std::vector<CertificateStep>& out, int r, int m) {
    Builder b{out, kTangentLemma, m};
    const std::size_t rr = static_cast<std::size_t>(r);
    const auto d = m * SurfaceDivisor::canonical(rr);

    const auto deg = uniform_exceptional_degree(d);
    const std::optional<std::int64_t> quotient_deg = deg ? std::optional<std::int64_t>(1 + *deg) : std::nullopt;
    b.add("deg of O_E(1) (x) " + twist_name(m) + " on each E_i", degree_value(quotient_deg), num(1 - m),
          kRuleIntersection, "exceptional quotient O_P1(1-m)", check(quotient_deg == 1 - m));

    const std::int64_t h1 = laurent_h(1, 1 - m);
    b.add("h^1(P^1, O(" + num(1 - m) + "))", h1, "0", kRuleLaurent, "exceptional-term vanishing, degree 1-m",
          check(h1 == 0));

    if (m == 0) {
        b.add("h^1(Y, pi^*T_P2) = h^1(P^2, T_P2)", std::monostate{}, "equal", "projection formula with pi_* O_Y = O_P2",
              "projection formula with anti-ample mK", StepStatus::Asserted);
        const std::int64_t t = proj::h1_tangent_pn_twist(2, 0);
        b.add("h^1(P^2, T_P2)", t, "0", "Euler sequence chase on P^2", "projection formula with anti-ample mK",
              check(t == 0));
    } else {
        b.rr_vanishing("h^1(Y, pi^*T_P2 (x) " + twist_name(m) + ")", twist(pulled_back_tangent(rr), d),
                       "projection formula with anti-ample mK");
    }

    // The long exact sequence reads H^0(pi^*T_P2(mK)) -> H^0(quotient) -> H^1(T_Y(mK)) -> H^1(pi^*T_P2(mK)).
    const std::int64_t h0q = r * laurent_h(0, 1 - m);
    b.add("h^0 of the exceptional quotient, to be covered by H^0(pi^*T_P2 (x) " + twist_name(m) + ")", h0q,
          "not addressed", "long exact sequence: H^1(T_Y (x) O(mK)) receives the cokernel of the H^0 map",
          "long exact sequence conclusion", h0q == 0 ? StepStatus::Verified : StepStatus::Asserted);

    b.rr_vanishing("h^1(Y, T_Y (x) " + twist_name(m) + ")", twist(tangent_bundle(rr), d),
                   "tangent-twist vanishing for m >= 0");
}

void cotangent_lemma_steps(std::vector<CertificateStep>& out, int r, int m) {
    Builder b{out, kCotangentLemma, m};
    const std::size_t rr = static_cast<std::size_t>(r);
    const auto k = SurfaceDivisor::canonical(rr);
    const auto claimed_l = -(m + 1) * k;
    const auto dual = k + (-m) * k;

    b.add("Serre-dual twist of T_Y (x) " + twist_name(m), to_string(dual), to_string(claimed_l),
          "Serre duality: H^1(T(D))^v = H^1(Omega^1(K - D))", "Serre duality reduction to Omega^1 (x) L",
          check(dual == claimed_l));

    const std::int64_t le = proj::restrict_to_exceptional(claimed_l, 1);
    b.add("L.E_1 for L = -(m+1)K", le, "> 0", "an ample class meets every curve positively", "ampleness of L",
          check(le > 0));

    const auto ldeg = uniform_exceptional_degree(claimed_l);
    const std::optional<std::int64_t> qdeg = ldeg ? std::optional<std::int64_t>(*ldeg - 1) : std::nullopt;
    b.add("deg of O_E(-1) (x) L on each E_i", degree_value(qdeg), num(m), kRuleIntersection,
          "exceptional quotient O_P1(m)", check(qdeg == m));

    const std::int64_t h0 = laurent_h(0, m);
    b.add("h^0(P^1, O(" + num(m) + "))", h0, "0", kRuleLaurent, "exceptional-term vanishing, j = 0", check(h0 == 0));
    const std::int64_t h1 = laurent_h(1, m);
    b.add("h^1(P^1, O(" + num(m) + "))", h1, "0", kRuleLaurent, "exceptional-term vanishing, j = 1", check(h1 == 0));

    std::int64_t worst = 0;
    for (int t = 2; t <= 14; ++t) worst = std::max(worst, proj::hq_pn_omega1(2, t, 1));
    b.add("max of h^1(P^2, Omega^1(t)) for t in [2, 14]", worst, "0", "Euler sequence chase on P^2, finite window",
          "Bott vanishing for Omega^1(t), t >= 2", check(worst == 0));

    b.add("L.E_1, which must vanish for L to be pulled back from P^2", le, "0", "projection formula needs L = pi^*M",
          "projection formula reduction to P^2", check(le == 0));

    b.rr_vanishing("h^1(Y, T_Y (x) " + twist_name(m) + ")", twist(tangent_bundle(rr), m * k),
                   "tangent-twist vanishing for m <= -2");
}

void high_lemma_steps(std::vector<CertificateStep>& out, int r, int m) {
    Builder b{out, kHighLemma, m};
    const std::size_t rr = static_cast<std::size_t>(r);
    const auto k = SurfaceDivisor::canonical(rr);
    const auto l = (1 - m) * k;
    const auto dual = k + (-m) * k;

    b.add("Serre-dual twist of T_Y (x) " + twist_name(m), to_string(dual), to_string(l),
          "Serre duality: H^1(T(D))^v = H^1(Omega^1(K - D))", "Serre duality reduction to Omega^1((1-m)K)",
          check(dual == l));

    const auto ldeg = uniform_exceptional_degree(l);
    const std::optional<std::int64_t> qdeg = ldeg ? std::optional<std::int64_t>(*ldeg - 1) : std::nullopt;
    b.add("deg of O_E(-1) (x) O((1-m)K) on each E_i", degree_value(qdeg), num(m - 2), kRuleIntersection,
          "exceptional quotient O_P1(-(2-m))", check(qdeg == m - 2));
    b.add("deg of the exceptional quotient", static_cast<std::int64_t>(m - 2), "<= -4", "integer comparison",
          "exceptional-term degree bound", check(m - 2 <= -4));

    const std::int64_t h1 = laurent_h(1, m - 2);
    b.add("h^1(P^1, O(" + num(m - 2) + "))", h1, "0", kRuleLaurent, "exceptional-term vanishing, degree <= -4",
          check(h1 == 0));

    const std::int64_t le = proj::restrict_to_exceptional(l, 1);
    b.add("(1-m)K.E_1, which must vanish for the twist to be pulled back from P^2", le, "0",
          "projection formula needs L = pi^*M", "projection formula reduction to P^2", check(le == 0));

    const int t = -3 * (1 - m);
    const std::int64_t bott = proj::hq_pn_omega1(2, t, 1);
    b.add("h^1(P^2, Omega^1(" + num(t) + "))", bott, "0", "Euler sequence chase on P^2",
          "Bott vanishing for Omega^1(t), t <= -9", check(bott == 0));

    b.rr_vanishing("h^1(Y, T_Y (x) " + twist_name(m) + ")", twist(tangent_bundle(rr), m * k),
                   "tangent-twist vanishing for m <= -2, r = 7 or 8");
}

void theorem_steps(std::vector<CertificateStep>& out, int r, int m) {
    Builder b{out, kTheorem, m};
    const std::size_t rr = static_cast<std::size_t>(r);
    const auto k = SurfaceDivisor::canonical(rr);
    const auto claimed_l = -(m + 1) * k;
    const auto dual = k + (-m) * k;

    b.add("Serre-dual twist of T_Y (x) " + twist_name(m), to_string(dual), to_string(claimed_l),
          "Serre duality: H^1(T(D))^v = H^1(Omega^1(K - D))", "Serre duality for nonnegative weights",
          check(dual == claimed_l));
    b.add("-(m+1)K ample",
          "L^2 = " + num(proj::intersection(claimed_l, claimed_l)) + ", L.E_i = " +
              num(proj::restrict_to_exceptional(claimed_l, 1)),
          "ample", "positive multiple of -K; -K ample assumed", "ampleness of -(m+1)K", StepStatus::Asserted);
    b.rr_vanishing("h^1(Y, Omega^1 (x) O(" + num(-(m + 1)) + "K))", twist(cotangent_bundle(rr), claimed_l),
                   "vanishing of H^1(Omega^1 (x) ample)");
}

void quotient_steps(std::vector<CertificateStep>& out, int r) {
    Builder b{out, kQuotientLemma, -1};
    const std::size_t rr = static_cast<std::size_t>(r);
    const auto k = SurfaceDivisor::canonical(rr);
    const std::int64_t chi0 = euler_characteristic(tangent_bundle(rr));
    const std::int64_t chi1 = euler_characteristic(twist(tangent_bundle(rr), -k));
    b.add("H^1(Y, T_Y) identified with H^1(Y, T_Y (x) O(-K))",
          "chi(T_Y) = " + num(chi0) + ", chi(T_Y (x) O(-K)) = " + num(chi1), "isomorphic",
          "not decidable from Riemann-Roch", "weight-zero identification in the Euler-quotient sequence",
          StepStatus::Asserted);
    const std::int64_t bound = std::max<std::int64_t>(0, -chi0);
    b.add("h^1(Y, T_Y), which must be <= 1 for the Euler derivation to span it", bound, "<= 1",
          std::string(kRuleRR) + ", chi = " + num(chi0), "Euler derivation spans the weight-one piece",
          bound > 1 ? StepStatus::Contradicted : StepStatus::Asserted);
}

}  // namespace

std::string to_string(StepStatus s) {
    switch (s) {
        case StepStatus::Verified: return "VERIFIED";
        case StepStatus::Asserted: return "ASSERTED";
        case StepStatus::Contradicted: return "CONTRADICTED";
    }
    throw std::logic_error("unknown step status");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::PassWithAssertions: return "PASS_WITH_ASSERTIONS";
        case Verdict::Fail: return "FAIL";
    }
    throw std::logic_error("unknown verdict");
}

StatusCounts Certificate::counts() const {
    StatusCounts c;
    for (const auto& s : steps) {
        switch (s.status) {
            case StepStatus::Verified: ++c.verified; break;
            case StepStatus::Asserted: ++c.asserted; break;
            case StepStatus::Contradicted: ++c.contradicted; break;
        }
    }
    return c;
}

Verdict aggregate(const std::vector<CertificateStep>& steps) {
    bool all_verified = true;
    for (const auto& s : steps) {
        if (s.status == StepStatus::Contradicted) return Verdict::Fail;
        if (s.status != StepStatus::Verified) all_verified = false;
    }
    return all_verified ? Verdict::Pass : Verdict::PassWithAssertions;
}

Rank2Bundle tangent_bundle(std::size_t r) {
    return {-SurfaceDivisor::canonical(r), 3 + static_cast<std::int64_t>(r)};
}

Rank2Bundle cotangent_bundle(std::size_t r) {
    return {SurfaceDivisor::canonical(r), 3 + static_cast<std::int64_t>(r)};
}

Rank2Bundle pulled_back_tangent(std::size_t r) { return {3 * SurfaceDivisor::hyperplane(r), 3}; }

Rank2Bundle twist(const Rank2Bundle& v, const SurfaceDivisor& d) {
    return {v.c1 + 2 * d, v.c2 + proj::intersection(v.c1, d) + proj::intersection(d, d)};
}

std::int64_t euler_characteristic(const Rank2Bundle& v) {
    const auto k = SurfaceDivisor::canonical(v.c1.r());
    const std::int64_t twice = proj::intersection(v.c1, v.c1) - 2 * v.c2 - proj::intersection(v.c1, k);
    if (twice % 2 != 0) throw ConsistencyError("Riemann-Roch numerator is odd");
    return 2 + twice / 2;
}

Certificate delpezzo_certificate(int r, int m_lo, int m_hi) {
    if (r < 1 || r > 8) throw std::invalid_argument("del Pezzo r must lie in [1, 8], got " + std::to_string(r));
    if (m_lo > m_hi) throw std::invalid_argument("empty twist range");

    Certificate cert;
    cert.claim = "h1_T_twists_vanish:delpezzo:" + num(r) + ":m=" + num(m_lo) + ".." + num(m_hi);
    setup_steps(cert.steps, r);
    for (int m = m_lo; m <= m_hi; ++m) {
        if (r <= 6) {
            if (m >= 0) {
                tangent_lemma_steps(cert.steps, r, m);
                theorem_steps(cert.steps, r, m);
            } else if (m == -1) {
                quotient_steps(cert.steps, r);
            } else {
                cotangent_lemma_steps(cert.steps, r, m);
            }
        } else if (m <= -2) {
            high_lemma_steps(cert.steps, r, m);
        } else {
            cert.uncovered.push_back(m);
        }
    }
    cert.verdict = aggregate(cert.steps);
    return cert;
}

}  // namespace conedef::cone
