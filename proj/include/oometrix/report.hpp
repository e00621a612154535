#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oometrix/ck.hpp"
#include "oometrix/parser.hpp"
#include "oometrix/quality.hpp"

namespace oometrix {

inline constexpr int kReportSchemaVersion = 1;

/// Everything the renderers need for one analysis run.
struct ReportInputs {
    const AnalysisContext* ctx = nullptr;
    const ThresholdConfig* thresholds = nullptr;
    const CodeModel* baseline = nullptr;  // optional QMOOD normalization base
    std::vector<ParseDiagnostic> diagnostics;
};

/// Ids of every metric the report carries, in reporting order. The
/// per-class CSV columns follow the class-level portion of this catalog.
const std::vector<std::string>& metric_catalog();

/// Full analysis report. Deterministic: classes and packages sorted by
/// name, metrics in catalog order, undefined values as JSON null (the
/// string "null" in CSV), percentages as 0-100 with 3 decimals.
std::string render_report_json(const ReportInputs& in);
std::string render_report_csv(const ReportInputs& in);

/// True when any class in the model classifies as poor.
bool any_class_poor(const AnalysisContext& ctx, const ThresholdConfig& t);

/// Plot-ready radar data for one class: per operand the value, its
/// configured range, and status 0 (in range) or -1 (violated).
struct KiviatEntry {
    std::string metric_id;
    double value = 0;
    double min = 0;
    double max = 0;
    int status = 0;
};
std::vector<KiviatEntry> kiviat_data(const AnalysisContext& ctx, const ClassInfo& cls,
                                     const ThresholdConfig& t);
std::string render_kiviat_json(const AnalysisContext& ctx, const ClassInfo& cls,
                               const ThresholdConfig& t);

/// Closest class names to an unknown one, for error messages.
std::vector<std::string> suggest_class_names(const CodeModel& model, const std::string& name,
                                             std::size_t limit = 3);

struct Recommendation {
    std::string class_ref;
    std::string rule_id;
    std::string message;
    std::string triggering_operand;
    double value = 0;
    double bound = 0;
};
std::vector<Recommendation> recommend(const AnalysisContext& ctx, const ThresholdConfig& t);
std::string render_recommendations_json(const std::vector<Recommendation>& recs);

std::string render_trend_json(const TrendReport& report);

}  // namespace oometrix
