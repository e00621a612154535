#include "oometrix/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "oometrix/mood.hpp"

namespace oometrix {
namespace {

using ordered_json = nlohmann::ordered_json;

// Percentages carry 3 decimal places.
double percent3(double v) { return std::round(v * 1000.0) / 1000.0; }

ordered_json opt_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

// MOOD ratios and COF are reported as percentages.
ordered_json ratio_percent_json(const std::optional<double>& v) {
    if (!v) return nullptr;
    return percent3(100.0 * *v);
}

ordered_json thresholds_json(const ThresholdConfig& t) {
    ordered_json ranges = ordered_json::object();
    for (const auto& id : operand_ids()) {
        const auto& r = t.ranges.at(id);
        ranges[id] = {{"min", r.min}, {"max", r.max}};
    }
    return ordered_json{{"operands", ranges},
                        {"categories",
                         {{"excellentMax", t.excellent_max},
                          {"goodMax", t.good_max},
                          {"fairMax", t.fair_max}}}};
}

ordered_json properties_json(const PropertySet& p) {
    ordered_json j = ordered_json::object();
    for (const auto& id : property_ids()) j[id] = opt_json(p.get(id));
    return j;
}

ordered_json factors_json(const QualityFactors& f) {
    return ordered_json{{"reusability", opt_json(f.reusability)},
                        {"flexibility", opt_json(f.flexibility)},
                        {"understandability", opt_json(f.understandability)},
                        {"functionality", opt_json(f.functionality)},
                        {"extendibility", opt_json(f.extendibility)},
                        {"effectiveness", opt_json(f.effectiveness)},
                        {"tqi", opt_json(f.tqi)}};
}

ordered_json operands_json(const OperandVector& v) {
    ordered_json j = ordered_json::object();
    for (const auto& id : operand_ids()) {
        double value = v.get(id);
        if (id == "cl_comf") value = percent3(value);
        j[id] = value;
    }
    return j;
}

ordered_json criteria_json(const CriteriaScores& c) {
    ordered_json j = ordered_json::object();
    for (const auto& id : criterion_ids()) j[id] = c.get(id);
    return j;
}

ordered_json violations_json(const std::vector<Violation>& vs) {
    ordered_json j = ordered_json::array();
    for (const auto& v : vs)
        j.push_back({{"operand", v.operand_id}, {"value", v.value}, {"min", v.min}, {"max", v.max}});
    return j;
}

// Class-level scalar metrics, in CSV column order.
const std::vector<std::string>& class_metric_ids() {
    static const std::vector<std::string> ids = {
        "dit",  "noc",   "rfc",   "wmc",   "cbo",   "cbo_prime", "mpc",
        "dac",  "dac_prime", "icp", "lcom1", "lcom2", "lcom3",   "lcom4",
        "lcom5", "tcc",  "lcc"};
    return ids;
}

ordered_json class_metrics_json(const ClassMetricRow& r) {
    ordered_json j = ordered_json::object();
    j["dit"] = r.dit;
    j["noc"] = r.noc;
    j["rfc"] = r.rfc;
    j["wmc"] = r.wmc;
    j["cbo"] = r.cbo.cbo;
    j["cbo_prime"] = r.cbo.cbo_prime;
    j["mpc"] = r.mpc;
    j["dac"] = r.dac.dac;
    j["dac_prime"] = r.dac.dac_prime;
    j["icp"] = r.icp;
    j["lcom1"] = r.lcom.lcom1;
    j["lcom2"] = r.lcom.lcom2;
    j["lcom3"] = r.lcom.lcom3;
    j["lcom4"] = r.lcom.lcom4;
    j["lcom5"] = opt_json(r.lcom.lcom5);
    j["tcc"] = opt_json(r.tcc.tcc);
    j["lcc"] = opt_json(r.tcc.lcc);
    return j;
}

std::vector<const ClassInfo*> sorted_classes(const CodeModel& model) {
    std::vector<const ClassInfo*> out;
    for (const auto& c : model.classes) out.push_back(&c);
    std::sort(out.begin(), out.end(),
              [](const ClassInfo* a, const ClassInfo* b) { return a->qualified_name < b->qualified_name; });
    return out;
}

ordered_json build_report(const ReportInputs& in) {
    const AnalysisContext& ctx = *in.ctx;
    const ThresholdConfig& t = *in.thresholds;
    const CodeModel& model = ctx.model();

    ordered_json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["modelName"] = model.name;
    j["modelVersion"] = model.version;
    j["config"] = {{"includeConstructors", ctx.config().include_constructors},
                   {"moodIncludeConstructors", ctx.config().mood_include_constructors},
                   {"includeAccessors", ctx.config().include_accessors},
                   {"rfcAlpha", ctx.config().rfc_alpha},
                   {"thresholds", thresholds_json(t)}};

    const MoodResult mood = compute_mood(ctx);
    const DesignProperties props = design_properties(ctx, in.baseline);
    ordered_json qmood = {{"properties", properties_json(props.raw)}};
    if (props.normalized) qmood["normalizedProperties"] = properties_json(*props.normalized);
    qmood["factors"] = factors_json(quality_factors(props));

    ordered_json system;
    system["totalClasses"] = model.total_classes();
    system["mood"] = ordered_json{{"mhf", ratio_percent_json(mood.mhf)},
                                  {"ahf", ratio_percent_json(mood.ahf)},
                                  {"mif", ratio_percent_json(mood.mif)},
                                  {"aif", ratio_percent_json(mood.aif)},
                                  {"cf", ratio_percent_json(mood.cf)},
                                  {"pf", ratio_percent_json(mood.pf)}};
    system["cof"] = ratio_percent_json(cof(ctx));
    system["qmood"] = qmood;
    system["conventions"] = ordered_json::array(
        {"changeability is the literal operand sum cl_stat + cl_func + cl_data; "
         "vendor reports have been observed printing a different total for the "
         "same operands",
         "ratios (mood, cof) are percentages in [0,100] with 3 decimals",
         "undefined values are null, never 0"});
    j["system"] = std::move(system);

    ordered_json classes = ordered_json::array();
    for (const ClassInfo* c : sorted_classes(model)) {
        const ClassMetricRow row = class_metrics(ctx, *c);
        const OperandVector v = operand_vector(ctx, *c);
        const ClassificationResult cls = classify(v, t);
        ordered_json cj;
        cj["name"] = c->qualified_name;
        cj["package"] = c->package;
        cj["metrics"] = class_metrics_json(row);
        if (ctx.config().rfc_alpha > 1) {
            ordered_json levels = ordered_json::object();
            for (const auto& [a, value] : row.rfc_alpha) levels[std::to_string(a)] = value;
            cj["rfcAlpha"] = levels;
        }
        cj["operands"] = operands_json(v);
        cj["criteria"] = criteria_json(criteria_scores(v));
        cj["category"] = to_string(cls.category);
        cj["violations"] = violations_json(cls.violations);
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);

    ordered_json packages = ordered_json::array();
    for (const auto& row : package_coupling(ctx))
        packages.push_back({{"name", row.package}, {"ca", row.ca}, {"ce", row.ce}});
    j["packages"] = std::move(packages);

    ordered_json diags = ordered_json::array();
    for (const auto& d : in.diagnostics)
        diags.push_back({{"path", d.path},
                         {"line", d.line},
                         {"column", d.column},
                         {"severity", d.severity == ParseDiagnostic::Severity::Error ? "error" : "warning"},
                         {"message", d.message}});
    j["diagnostics"] = std::move(diags);
    return j;
}

// One string per value, shared verbatim between CSV and JSON.
std::string csv_value(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

const std::vector<std::string>& metric_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out = {"mhf", "ahf", "mif", "aif", "cf", "pf", "cof"};
        for (const auto& id : property_ids()) out.push_back(id);
        for (const auto& id : {"reusability", "flexibility", "understandability", "functionality",
                               "extendibility", "effectiveness", "tqi"})
            out.push_back(id);
        for (const auto& id : class_metric_ids()) out.push_back(id);
        for (const auto& id : operand_ids()) out.push_back(id);
        for (const auto& id : criterion_ids()) out.push_back(id);
        out.push_back("ca");
        out.push_back("ce");
        return out;
    }();
    return ids;
}

std::string render_report_json(const ReportInputs& in) { return build_report(in).dump(2) + "\n"; }

std::string render_report_csv(const ReportInputs& in) {
    const ordered_json j = build_report(in);
    std::string out = "class";
    for (const auto& id : class_metric_ids()) out += "," + id;
    for (const auto& id : operand_ids()) out += "," + id;
    for (const auto& id : criterion_ids()) out += "," + id;
    out += ",category\n";
    for (const auto& cj : j.at("classes")) {
        out += csv_value(cj.at("name"));
        for (const auto& id : class_metric_ids()) out += "," + csv_value(cj.at("metrics").at(id));
        for (const auto& id : operand_ids()) out += "," + csv_value(cj.at("operands").at(id));
        for (const auto& id : criterion_ids()) out += "," + csv_value(cj.at("criteria").at(id));
        out += "," + csv_value(cj.at("category")) + "\n";
    }
    return out;
}

bool any_class_poor(const AnalysisContext& ctx, const ThresholdConfig& t) {
    for (const auto& c : ctx.model().classes)
        if (classify(operand_vector(ctx, c), t).category == QualityCategory::Poor) return true;
    return false;
}

std::vector<KiviatEntry> kiviat_data(const AnalysisContext& ctx, const ClassInfo& cls,
                                     const ThresholdConfig& t) {
    const OperandVector v = operand_vector(ctx, cls);
    std::vector<KiviatEntry> out;
    for (const auto& id : operand_ids()) {
        const auto& r = t.ranges.at(id);
        KiviatEntry e;
        e.metric_id = id;
        e.value = id == "cl_comf" ? percent3(v.get(id)) : v.get(id);
        e.min = r.min;
        e.max = r.max;
        e.status = (e.value < r.min || e.value > r.max) ? -1 : 0;
        out.push_back(std::move(e));
    }
    return out;
}

std::string render_kiviat_json(const AnalysisContext& ctx, const ClassInfo& cls,
                               const ThresholdConfig& t) {
    ordered_json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["class"] = cls.qualified_name;
    ordered_json entries = ordered_json::array();
    for (const auto& e : kiviat_data(ctx, cls, t))
        entries.push_back({{"metricId", e.metric_id},
                           {"value", e.value},
                           {"min", e.min},
                           {"max", e.max},
                           {"status", e.status}});
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

std::vector<std::string> suggest_class_names(const CodeModel& model, const std::string& name,
                                             std::size_t limit) {
    auto distance = [](const std::string& a, const std::string& b) {
        std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
        for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            cur[0] = i;
            for (std::size_t j = 1; j <= b.size(); ++j) {
                const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
                cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
            }
            std::swap(prev, cur);
        }
        return prev[b.size()];
    };
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& c : model.classes)
        scored.emplace_back(distance(name, c.qualified_name), c.qualified_name);
    std::sort(scored.begin(), scored.end());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scored.size() && i < limit; ++i) out.push_back(scored[i].second);
    return out;
}

std::vector<Recommendation> recommend(const AnalysisContext& ctx, const ThresholdConfig& t) {
    std::vector<Recommendation> out;
    auto emit = [&](const std::string& cls, const std::string& rule, const std::string& msg,
                    const Violation& v) {
        out.push_back({cls, rule, msg, v.operand_id, v.value, v.value > v.max ? v.max : v.min});
    };
    for (const ClassInfo* c : sorted_classes(ctx.model())) {
        const ClassificationResult r = classify(operand_vector(ctx, *c), t);
        for (const auto& v : r.violations) {
            if (v.operand_id == "cu_cdused")
                emit(c->qualified_name, "reduce-used-classes",
                     "decrease the number of direct used classes", v);
            else if (v.operand_id == "cu_cdusers")
                emit(c->qualified_name, "reduce-user-classes",
                     "decrease the number of direct user classes, e.g. by introducing subclasses",
                     v);
            else if (v.operand_id == "cl_data" || v.operand_id == "cl_func")
                emit(c->qualified_name, "split-class",
                     "decrease the total number of attributes and methods declared, or split "
                     "the class into two or more classes",
                     v);
            else if (v.operand_id == "cl_data_publ")
                emit(c->qualified_name, "privatize-attributes",
                     "make public attributes private and expose them through accessors", v);
            else if (v.operand_id == "cl_func_publ")
                emit(c->qualified_name, "reduce-public-interface",
                     "reduce the number of public methods offered as services", v);
            else if (v.operand_id == "cl_comf" && v.value < v.min)
                emit(c->qualified_name, "add-comments",
                     "increase the ratio of comment lines to total lines", v);
        }
    }
    return out;
}

std::string render_recommendations_json(const std::vector<Recommendation>& recs) {
    ordered_json j;
    j["schemaVersion"] = kReportSchemaVersion;
    ordered_json arr = ordered_json::array();
    for (const auto& r : recs)
        arr.push_back({{"class", r.class_ref},
                       {"ruleId", r.rule_id},
                       {"message", r.message},
                       {"triggeringOperand", r.triggering_operand},
                       {"value", r.value},
                       {"bound", r.bound}});
    j["recommendations"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string render_trend_json(const TrendReport& report) {
    ordered_json j;
    j["schemaVersion"] = kReportSchemaVersion;
    ordered_json sdi_j = {{"value", opt_json(report.sdi.sdi ? std::optional<double>(percent3(*report.sdi.sdi))
                                                            : std::nullopt)},
                          {"renamed", report.sdi.renamed},
                          {"added", report.sdi.added},
                          {"deleted", report.sdi.deleted}};
    ordered_json renames = ordered_json::array();
    for (const auto& [from, to] : report.sdi.renames) renames.push_back({{"from", from}, {"to", to}});
    sdi_j["renames"] = std::move(renames);
    j["sdi"] = std::move(sdi_j);

    j["totals"] = {{"old", criteria_json(report.old_totals)},
                   {"new", criteria_json(report.new_totals)},
                   {"maintainabilityDelta", report.maintainability_delta},
                   {"direction", report.direction}};
    j["factors"] = {{"old", factors_json(report.old_factors)},
                    {"new", factors_json(report.new_factors)}};
    j["trackingConsistent"] = report.tracking_consistent;
    j["addedClasses"] = report.added_classes;
    j["deletedClasses"] = report.deleted_classes;

    ordered_json rows = ordered_json::array();
    for (const auto& row : report.classes) {
        ordered_json deltas = ordered_json::object();
        for (const auto& id : operand_ids())
            deltas[id] = row.new_operands.get(id) - row.old_operands.get(id);
        ordered_json cdeltas = ordered_json::object();
        for (const auto& id : criterion_ids())
            cdeltas[id] = row.new_criteria.get(id) - row.old_criteria.get(id);
        rows.push_back({{"name", row.class_name},
                        {"oldOperands", operands_json(row.old_operands)},
                        {"newOperands", operands_json(row.new_operands)},
                        {"operandDeltas", std::move(deltas)},
                        {"oldCriteria", criteria_json(row.old_criteria)},
                        {"newCriteria", criteria_json(row.new_criteria)},
                        {"criteriaDeltas", std::move(cdeltas)},
                        {"operandsNonIncreasing", row.operands_non_increasing},
                        {"trackingHolds", row.tracking_holds}});
    }
    j["classes"] = std::move(rows);
    return j.dump(2) + "\n";
}

}  // namespace oometrix
