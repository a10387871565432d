#pragma once

#include "conedef/projective_cohomology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conedef::cone {

enum class StepStatus { Verified, Asserted, Contradicted };
enum class Verdict { Pass, PassWithAssertions, Fail };

std::string to_string(StepStatus s);
std::string to_string(Verdict v);

using StepValue = std::variant<std::monostate, std::int64_t, std::string>;

struct CertificateStep {
    std::string lemma;
    /// Grading weight on the cone.
    std::optional<int> weight;
    /// Exponent m of the twist O(mK); only set for del Pezzo steps, where weight = -m.
    std::optional<int> k_exponent;
    std::string term;
    StepValue value;
    std::string claimed;
    std::string rule;
    std::string anchor;
    StepStatus status = StepStatus::Asserted;
};

struct StatusCounts {
    std::size_t verified = 0;
    std::size_t asserted = 0;
    std::size_t contradicted = 0;
};

struct Certificate {
    std::string claim;
    std::vector<CertificateStep> steps;
    /// Values of the twist exponent (or weight) in the requested range that no replayed argument covers.
    std::vector<int> uncovered;
    Verdict verdict = Verdict::Pass;

    StatusCounts counts() const;
};

/// PASS iff every step is VERIFIED, FAIL if any is CONTRADICTED, PASS_WITH_ASSERTIONS otherwise.
Verdict aggregate(const std::vector<CertificateStep>& steps);

/// Rank-2 bundle on a blow-up of P^2 described by its Chern classes.
struct Rank2Bundle {
    proj::SurfaceDivisor c1;
    std::int64_t c2 = 0;
};

Rank2Bundle tangent_bundle(std::size_t r);
Rank2Bundle cotangent_bundle(std::size_t r);
/// pi^* T_{P^2}: c1 = 3H, c2 = 3.
Rank2Bundle pulled_back_tangent(std::size_t r);
/// V (x) O(D): c1 + 2D, c2 + c1.D + D^2.
Rank2Bundle twist(const Rank2Bundle& v, const proj::SurfaceDivisor& d);

/// Riemann-Roch on a rational surface: chi(V) = 2 + (c1^2 - 2 c2 - c1.K) / 2.
std::int64_t euler_characteristic(const Rank2Bundle& v);

/// Replays the vanishing arguments for h^1(Y_r, T (x) O(mK)) for m in [m_lo, m_hi], m the exponent of K.
/// Throws std::invalid_argument unless 1 <= r <= 8 and m_lo <= m_hi.
Certificate delpezzo_certificate(int r, int m_lo, int m_hi);

}  // namespace conedef::cone
