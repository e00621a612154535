#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oometrix/context.hpp"

namespace oometrix {

/// The eleven design-property averages. Ratio properties (dam, cam, mfa)
/// skip classes on which they are undefined; when every class is skipped
/// the system value itself is undefined.
struct PropertySet {
    std::optional<double> dsc;  // design size: class count
    std::optional<double> noh;  // hierarchies: roots with descendants
    std::optional<double> ana;  // abstraction: mean inheritance depth
    std::optional<double> dam;  // encapsulation: non-public attribute ratio
    std::optional<double> dcc;  // coupling: mean directly-coupled classes
    std::optional<double> cam;  // cohesion among methods (parameter overlap)
    std::optional<double> moa;  // composition: class-typed attributes
    std::optional<double> mfa;  // functional abstraction: inherited ratio
    std::optional<double> nop;  // polymorphism: abstract methods
    std::optional<double> cis;  // messaging: public methods
    std::optional<double> nom;  // complexity: method count

    std::optional<double> get(const std::string& id) const;
};

/// Fixed catalog of property ids, in reporting order.
const std::vector<std::string>& property_ids();

struct DesignProperties {
    PropertySet raw;
    /// Present when a baseline model was supplied: each raw value divided
    /// by the baseline's raw value; undefined where the baseline is 0 or
    /// itself undefined.
    std::optional<PropertySet> normalized;

    const PropertySet& effective() const { return normalized ? *normalized : raw; }
};

DesignProperties design_properties(const AnalysisContext& ctx,
                                   const CodeModel* baseline = nullptr);

/// The six linear quality factors and their sum. A factor is undefined
/// when any contributing property is; tqi when any factor is.
struct QualityFactors {
    std::optional<double> reusability;
    std::optional<double> flexibility;
    std::optional<double> understandability;
    std::optional<double> functionality;
    std::optional<double> extendibility;
    std::optional<double> effectiveness;
    std::optional<double> tqi;
};

QualityFactors quality_factors(const DesignProperties& p);

/// Per-class operand vector feeding the maintainability criteria.
/// cl_comf is a percentage in [0,100]; everything else is a count.
struct OperandVector {
    double cl_wmc = 0;
    double cl_comf = 0;
    double in_bases = 0;
    double cu_cdused = 0;
    double cl_stat = 0;
    double cl_func = 0;
    double cl_data = 0;
    double cl_data_publ = 0;
    double cu_cdusers = 0;
    double in_noc = 0;
    double cl_func_publ = 0;

    double get(const std::string& id) const;
};

/// Fixed catalog of operand ids, in reporting order.
const std::vector<std::string>& operand_ids();

OperandVector operand_vector(const AnalysisContext& ctx, const ClassInfo& cls);

struct CriteriaScores {
    double analyzability = 0;
    double changeability = 0;
    double stability = 0;
    double testability = 0;
    double maintainability = 0;  // sum of the four

    double get(const std::string& id) const;
};

const std::vector<std::string>& criterion_ids();

CriteriaScores criteria_scores(const OperandVector& v);

struct ThresholdRange {
    double min = 0;
    double max = 0;
};

/// Acceptable ranges per operand plus the violation-count category rule:
/// <= excellent_max violations -> excellent, <= good_max -> good,
/// <= fair_max -> fair, anything above -> poor.
struct ThresholdConfig {
    std::map<std::string, ThresholdRange> ranges;
    std::size_t excellent_max = 0;
    std::size_t good_max = 1;
    std::size_t fair_max = 3;

    static ThresholdConfig defaults();
    /// Reads a JSON config; keys absent from the file keep their default.
    /// Throws ModelParseError on malformed JSON, ValidationError when a
    /// range has min > max or an unknown operand id appears.
    static ThresholdConfig load(const std::string& path);
};

enum class QualityCategory { Excellent, Good, Fair, Poor };

const char* to_string(QualityCategory c);

struct Violation {
    std::string operand_id;
    double value = 0;
    double min = 0;
    double max = 0;
};

struct ClassificationResult {
    QualityCategory category = QualityCategory::Excellent;
    std::vector<Violation> violations;  // in operand catalog order
};

ClassificationResult classify(const OperandVector& v, const ThresholdConfig& t);

/// System design instability between two versions, as a percentage:
/// renamed% + added% + deleted%. Renamed and deleted are relative to the
/// old class count, added to the new one. A rename is a deleted-name /
/// added-name pair with identical member-signature multisets.
struct SdiResult {
    std::optional<double> sdi;  // undefined when the old model is empty
    std::size_t renamed = 0;
    std::size_t added = 0;    // additions not explained by renames
    std::size_t deleted = 0;  // deletions not explained by renames
    std::vector<std::pair<std::string, std::string>> renames;  // old -> new
};

SdiResult sdi(const CodeModel& old_model, const CodeModel& new_model);

/// Version trend: per-class operand/criteria deltas, aggregate factor
/// movement, SDI, and the tracking check (operands all non-increasing
/// must imply criteria all non-increasing).
struct ClassTrendRow {
    std::string class_name;
    OperandVector old_operands;
    OperandVector new_operands;
    CriteriaScores old_criteria;
    CriteriaScores new_criteria;
    bool operands_non_increasing = false;  // all <=, at least one <
    bool tracking_holds = true;  // vacuously true unless the premise fires
};

struct TrendReport {
    std::vector<ClassTrendRow> classes;  // common classes, sorted by name
    std::vector<std::string> added_classes;
    std::vector<std::string> deleted_classes;
    CriteriaScores old_totals;
    CriteriaScores new_totals;
    double maintainability_delta = 0;    // new - old
    std::string direction;               // decreased | increased | unchanged
    QualityFactors old_factors;
    QualityFactors new_factors;
    SdiResult sdi;
    bool tracking_consistent = true;     // conjunction over class rows
};

TrendReport compare_versions(const AnalysisContext& old_ctx, const AnalysisContext& new_ctx);

}  // namespace oometrix
