#pragma once

#include <optional>

#include "oometrix/context.hpp"

namespace oometrix {

/// The six system-level MOOD ratios. Empty optionals mark values whose
/// denominator vanished (`undefined`, distinct from 0).
struct MoodResult {
    std::optional<double> mhf;
    std::optional<double> ahf;
    std::optional<double> mif;
    std::optional<double> aif;
    std::optional<double> cf;
    std::optional<double> pf;
};

/// Method/attribute hiding: sum of (1 - V) over declared members divided
/// by the member count, with V the fraction of other classes that can see
/// the member (public -> TC-1, private -> 0, protected -> descendants,
/// package -> same-package peers). Undefined when no members or TC <= 1.
std::optional<double> mhf(const AnalysisContext& ctx);
std::optional<double> ahf(const AnalysisContext& ctx);

/// Inheritance factors: inherited-and-not-overridden members over
/// available members (declared + inherited). Undefined when the system
/// has no members at all.
std::optional<double> mif(const AnalysisContext& ctx);
std::optional<double> aif(const AnalysisContext& ctx);

/// Coupling factor over non-inheritance client pairs, denominator
/// TC^2 - TC. Undefined when TC <= 1.
std::optional<double> cf(const AnalysisContext& ctx);

/// Polymorphism factor: overriding methods over (new methods x
/// descendant count). Undefined when the denominator is 0 (flat system).
std::optional<double> pf(const AnalysisContext& ctx);

MoodResult compute_mood(const AnalysisContext& ctx);

/// Complement of MHF's numerator: average visibility. Defined exactly
/// when mhf is; mhf + mhf_complement == 1.
std::optional<double> mhf_complement(const AnalysisContext& ctx);

}  // namespace oometrix
