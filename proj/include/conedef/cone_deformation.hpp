#pragma once

#include "conedef/certificate.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace conedef::cone {

/// P^1 embedded by O(d).
struct RationalNormalCurve {
    int d = 1;
};

/// P^n embedded by O(d).
struct VeroneseProjectiveSpace {
    int n = 1;
    int d = 1;
};

/// P^1 x P^1 with O(d, d).
struct SegreProduct {
    int d = 1;
};

/// P^1 x P^1 with O(a, b).
struct ProductBundle {
    int a = 1;
    int b = 1;
};

/// Blow-up of P^2 in r general points, polarized by -K.
struct DelPezzo {
    int r = 1;
};

using PolarizedVariety = std::variant<RationalNormalCurve, VeroneseProjectiveSpace, SegreProduct, ProductBundle, DelPezzo>;

/// Throws std::invalid_argument when a parameter is out of bounds.
void validate(const PolarizedVariety& v);

/// "rnc:4", "veronese:2:3", "segre:1", "product:1:2", "delpezzo:6".
std::string descriptor(const PolarizedVariety& v);

int dimension(const PolarizedVariety& v);

struct GradedTable {
    PolarizedVariety variety;
    int m_lo = 0;
    int m_hi = 0;
    int order = 1;
    std::map<int, std::int64_t> entries;
};

/// h^1(Y, T_Y (x) L^m). Del Pezzo values are only produced inside certificates, so DelPezzo throws
/// OutOfScopeError. For the rational normal curve the Laurent-basis count is checked against
/// max(0, -3-dm) and a mismatch throws ConsistencyError.
std::int64_t t1_weight(const PolarizedVariety& v, int m);

/// h^2(Y, T_Y (x) L^m) for curves and surfaces other than del Pezzo; OutOfScopeError otherwise.
std::int64_t t2_weight(const PolarizedVariety& v, int m);

/// order 1 or 2; throws std::invalid_argument when m_lo > m_hi.
GradedTable graded_table(const PolarizedVariety& v, int m_lo, int m_hi, int order);
GradedTable t1_table(const PolarizedVariety& v, int m_lo, int m_hi);

/// How a weight is computed, for traces.
struct WeightRule {
    std::string rule;
    std::string anchor;
};

WeightRule weight_rule(const PolarizedVariety& v, int order);

inline constexpr int default_window_lo = -6;
inline constexpr int default_window_hi = 3;

struct RigidityVerdict {
    /// Empty for del Pezzo, where the answer is a certificate rather than a computed value.
    std::optional<bool> rigid;
    std::optional<std::pair<int, std::int64_t>> witness;
    /// True when the verdict holds for every weight, not only the scanned window.
    bool window_independent = false;
    std::string basis;
    int m_lo = 0;
    int m_hi = 0;
    Certificate certificate;
};

/// The witness is the nonzero weight closest to 0.
RigidityVerdict rigidity_verdict(const PolarizedVariety& v, int m_lo = default_window_lo, int m_hi = default_window_hi);

struct WeightZeroReport {
    std::int64_t h1_O = 0;
    std::int64_t h2_O = 0;
    bool criterion_holds = false;
    std::optional<std::int64_t> t1_0;
};

WeightZeroReport weight_zero_criterion(const PolarizedVariety& v);

struct CorollaryFlags {
    std::int64_t h1_Lm = 0;
    std::int64_t h2_Lm = 0;
    bool hypothesis_holds = false;
};

/// h^1 and h^2 of L^m. For del Pezzo surfaces L = -K and the values come from Riemann-Roch with
/// Kodaira vanishing.
CorollaryFlags corollary_flags(const PolarizedVariety& v, int m);

struct PinkhamReport {
    PolarizedVariety variety;
    int m_lo = 0;
    int m_hi = 0;
    std::map<int, std::int64_t> negative;
    /// h^1(Y, T_Y), the weight-0 cohomological piece.
    std::int64_t degree_zero = 0;
    /// h^0(Y, T_Y), the part of the weight-0 deformations coming from automorphisms of Y.
    std::int64_t degree_zero_automorphisms = 0;
    std::map<int, std::int64_t> positive;
    std::string negative_role;
    std::string degree_zero_note;
    std::string positive_role;
};

/// Requires m_lo <= 0 <= m_hi.
PinkhamReport pinkham_assembly(const PolarizedVariety& v, int m_lo, int m_hi);

}  // namespace conedef::cone
