#include "oometrix/quality.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace oometrix {
namespace {

using Opt = std::optional<double>;

// Mean of defined per-class values; undefined when every class was skipped.
class Mean {
public:
    void add(double v) {
        sum_ += v;
        ++n_;
    }
    Opt value() const {
        if (n_ == 0) return std::nullopt;
        return sum_ / static_cast<double>(n_);
    }

private:
    double sum_ = 0;
    std::size_t n_ = 0;
};

bool counted_method(const MethodInfo& m, const MetricsConfig& cfg) {
    return !m.is_constructor || cfg.include_constructors;
}

Opt class_cam(const ClassInfo& cls, const MetricsConfig& cfg) {
    std::set<std::string> universe;
    std::size_t methods = 0;
    for (const auto& m : cls.methods) {
        if (!counted_method(m, cfg)) continue;
        ++methods;
        universe.insert(m.param_type_names.begin(), m.param_type_names.end());
    }
    if (methods == 0 || universe.empty()) return std::nullopt;
    std::size_t overlap = 0;
    for (const auto& m : cls.methods) {
        if (!counted_method(m, cfg)) continue;
        std::set<std::string> params(m.param_type_names.begin(), m.param_type_names.end());
        for (const auto& p : params)
            if (universe.count(p)) ++overlap;
    }
    return static_cast<double>(overlap) / static_cast<double>(methods * universe.size());
}

Opt normalize_one(Opt raw, Opt base) {
    if (!raw || !base || *base == 0.0) return std::nullopt;
    return *raw / *base;
}

PropertySet normalize(const PropertySet& raw, const PropertySet& base) {
    PropertySet n;
    n.dsc = normalize_one(raw.dsc, base.dsc);
    n.noh = normalize_one(raw.noh, base.noh);
    n.ana = normalize_one(raw.ana, base.ana);
    n.dam = normalize_one(raw.dam, base.dam);
    n.dcc = normalize_one(raw.dcc, base.dcc);
    n.cam = normalize_one(raw.cam, base.cam);
    n.moa = normalize_one(raw.moa, base.moa);
    n.mfa = normalize_one(raw.mfa, base.mfa);
    n.nop = normalize_one(raw.nop, base.nop);
    n.cis = normalize_one(raw.cis, base.cis);
    n.nom = normalize_one(raw.nom, base.nom);
    return n;
}

PropertySet raw_properties(const AnalysisContext& ctx) {
    const CodeModel& model = ctx.model();
    const MetricsConfig& cfg = ctx.config();
    PropertySet p;
    p.dsc = static_cast<double>(model.total_classes());

    std::size_t hierarchies = 0;
    Mean ana, dam, dcc, cam, moa, mfa, nop, cis, nom;
    for (const auto& c : model.classes) {
        const auto& h = ctx.hierarchy().of(c.qualified_name);
        if (h.ancestors.empty() && !h.descendants.empty()) ++hierarchies;
        ana.add(static_cast<double>(h.depth));

        if (!c.attributes.empty()) {
            std::size_t hidden = 0;
            for (const auto& a : c.attributes)
                if (a.visibility == Visibility::Private || a.visibility == Visibility::Protected)
                    ++hidden;
            dam.add(static_cast<double>(hidden) / static_cast<double>(c.attributes.size()));
        }

        dcc.add(static_cast<double>(ctx.client_targets(c.qualified_name).size()));
        if (auto v = class_cam(c, cfg)) cam.add(*v);

        std::size_t aggregates = 0;
        for (const auto& a : c.attributes)
            if (model.find_class(a.type_name)) ++aggregates;
        moa.add(static_cast<double>(aggregates));

        const std::size_t inherited = ctx.inherited_methods(c.qualified_name).size();
        const std::size_t total = inherited + ctx.declared_method_count(c.qualified_name);
        if (total > 0) mfa.add(static_cast<double>(inherited) / static_cast<double>(total));

        std::size_t abstract_methods = 0, public_methods = 0, methods = 0;
        for (const auto& m : c.methods) {
            if (!counted_method(m, cfg)) continue;
            ++methods;
            if (m.is_abstract) ++abstract_methods;
            if (m.visibility == Visibility::Public) ++public_methods;
        }
        nop.add(static_cast<double>(abstract_methods));
        cis.add(static_cast<double>(public_methods));
        nom.add(static_cast<double>(methods));
    }
    p.noh = static_cast<double>(hierarchies);
    p.ana = ana.value().value_or(0.0);
    p.dam = dam.value();
    p.dcc = dcc.value().value_or(0.0);
    p.cam = cam.value();
    p.moa = moa.value().value_or(0.0);
    p.mfa = mfa.value();
    p.nop = nop.value().value_or(0.0);
    p.cis = cis.value().value_or(0.0);
    p.nom = nom.value().value_or(0.0);
    return p;
}

// Linear form over defined properties; undefined if any term's input is.
Opt linear(std::initializer_list<std::pair<double, Opt>> terms) {
    double sum = 0;
    for (const auto& [w, v] : terms) {
        if (!v) return std::nullopt;
        sum += w * *v;
    }
    return sum;
}

// Member identity key for rename detection; constructor names follow the
// class name, so they are canonicalized away.
std::multiset<std::string> member_keys(const ClassInfo& cls) {
    std::multiset<std::string> keys;
    for (const auto& m : cls.methods) {
        std::string sig = m.signature();
        if (m.is_constructor) sig = "<init>" + sig.substr(m.name.size());
        keys.insert("m:" + sig);
    }
    for (const auto& a : cls.attributes) keys.insert("a:" + a.name + ":" + a.type_name);
    return keys;
}

}  // namespace

const std::vector<std::string>& property_ids() {
    static const std::vector<std::string> ids = {"dsc", "noh", "ana", "dam", "dcc", "cam",
                                                 "moa", "mfa", "nop", "cis", "nom"};
    return ids;
}

std::optional<double> PropertySet::get(const std::string& id) const {
    if (id == "dsc") return dsc;
    if (id == "noh") return noh;
    if (id == "ana") return ana;
    if (id == "dam") return dam;
    if (id == "dcc") return dcc;
    if (id == "cam") return cam;
    if (id == "moa") return moa;
    if (id == "mfa") return mfa;
    if (id == "nop") return nop;
    if (id == "cis") return cis;
    if (id == "nom") return nom;
    throw std::out_of_range("unknown design property: " + id);
}

DesignProperties design_properties(const AnalysisContext& ctx, const CodeModel* baseline) {
    DesignProperties p;
    p.raw = raw_properties(ctx);
    if (baseline) {
        AnalysisContext base_ctx(*baseline, ctx.config());
        p.normalized = normalize(p.raw, raw_properties(base_ctx));
    }
    return p;
}

QualityFactors quality_factors(const DesignProperties& props) {
    const PropertySet& p = props.effective();
    QualityFactors f;
    f.reusability = linear({{-0.25, p.dcc}, {0.25, p.cam}, {0.5, p.cis}, {0.5, p.dsc}});
    f.flexibility = linear({{0.25, p.dam}, {-0.25, p.dcc}, {0.5, p.moa}, {0.5, p.nop}});
    f.understandability = linear({{-0.33, p.ana},
                                  {0.33, p.dam},
                                  {-0.33, p.dcc},
                                  {0.33, p.cam},
                                  {-0.33, p.nop},
                                  {-0.33, p.nom},
                                  {-0.33, p.dsc}});
    f.functionality =
        linear({{0.12, p.cam}, {0.22, p.nop}, {0.22, p.cis}, {0.22, p.dsc}, {0.22, p.noh}});
    f.extendibility = linear({{0.5, p.ana}, {-0.5, p.dcc}, {0.5, p.mfa}, {0.5, p.nop}});
    f.effectiveness =
        linear({{0.2, p.ana}, {0.2, p.dam}, {0.2, p.moa}, {0.2, p.mfa}, {0.2, p.nop}});
    f.tqi = linear({{1.0, f.reusability},
                    {1.0, f.flexibility},
                    {1.0, f.understandability},
                    {1.0, f.functionality},
                    {1.0, f.extendibility},
                    {1.0, f.effectiveness}});
    return f;
}

const std::vector<std::string>& operand_ids() {
    static const std::vector<std::string> ids = {
        "cl_wmc",       "cl_comf",    "in_bases", "cu_cdused",    "cl_stat",     "cl_func",
        "cl_data",      "cl_data_publ", "cu_cdusers", "in_noc",   "cl_func_publ"};
    return ids;
}

double OperandVector::get(const std::string& id) const {
    if (id == "cl_wmc") return cl_wmc;
    if (id == "cl_comf") return cl_comf;
    if (id == "in_bases") return in_bases;
    if (id == "cu_cdused") return cu_cdused;
    if (id == "cl_stat") return cl_stat;
    if (id == "cl_func") return cl_func;
    if (id == "cl_data") return cl_data;
    if (id == "cl_data_publ") return cl_data_publ;
    if (id == "cu_cdusers") return cu_cdusers;
    if (id == "in_noc") return in_noc;
    if (id == "cl_func_publ") return cl_func_publ;
    throw std::out_of_range("unknown operand: " + id);
}

OperandVector operand_vector(const AnalysisContext& ctx, const ClassInfo& cls) {
    OperandVector v;
    for (const auto& m : cls.methods) {
        if (!m.is_abstract) v.cl_wmc += m.cyclomatic;
        v.cl_stat += m.statements;
        if (!counted_method(m, ctx.config())) continue;
        v.cl_func += 1;
        if (m.visibility == Visibility::Public) v.cl_func_publ += 1;
    }
    v.cl_comf = 100.0 * static_cast<double>(cls.comment_lines) /
                static_cast<double>(std::max<std::uint32_t>(cls.total_lines, 1));
    const auto& h = ctx.hierarchy().of(cls.qualified_name);
    v.in_bases = static_cast<double>(h.ancestor_count());
    v.in_noc = static_cast<double>(h.children.size());
    v.cu_cdused = static_cast<double>(ctx.client_targets(cls.qualified_name).size());
    v.cu_cdusers = static_cast<double>(ctx.client_sources(cls.qualified_name).size());
    v.cl_data = static_cast<double>(cls.attributes.size());
    for (const auto& a : cls.attributes)
        if (a.visibility == Visibility::Public) v.cl_data_publ += 1;
    return v;
}

const std::vector<std::string>& criterion_ids() {
    static const std::vector<std::string> ids = {"analyzability", "changeability", "stability",
                                                 "testability", "maintainability"};
    return ids;
}

double CriteriaScores::get(const std::string& id) const {
    if (id == "analyzability") return analyzability;
    if (id == "changeability") return changeability;
    if (id == "stability") return stability;
    if (id == "testability") return testability;
    if (id == "maintainability") return maintainability;
    throw std::out_of_range("unknown criterion: " + id);
}

CriteriaScores criteria_scores(const OperandVector& v) {
    CriteriaScores c;
    c.analyzability = v.cl_wmc + v.cl_comf + v.in_bases + v.cu_cdused;
    c.changeability = v.cl_stat + v.cl_func + v.cl_data;
    c.stability = v.cl_data_publ + v.cu_cdusers + v.in_noc + v.cl_func_publ;
    c.testability = v.cl_wmc + v.cl_func + v.cu_cdused;
    c.maintainability = c.analyzability + c.changeability + c.stability + c.testability;
    return c;
}

ThresholdConfig ThresholdConfig::defaults() {
    ThresholdConfig t;
    t.ranges = {
        {"cl_wmc", {0, 60}},   {"cl_comf", {0, 100}},     {"in_bases", {0, 3}},
        {"cu_cdused", {0, 10}}, {"cl_stat", {0, 100}},    {"cl_func", {0, 25}},
        {"cl_data", {0, 7}},   {"cl_data_publ", {0, 0}},  {"cu_cdusers", {0, 5}},
        {"in_noc", {0, 5}},    {"cl_func_publ", {0, 15}},
    };
    return t;
}

ThresholdConfig ThresholdConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelParseError("cannot open thresholds file: " + path, 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ModelParseError(e.what(), 0, 0);
    }

    ThresholdConfig t = defaults();
    const auto& known = operand_ids();
    if (j.contains("operands")) {
        for (const auto& [id, range] : j.at("operands").items()) {
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw ValidationError("known-operand", id, "unknown operand id in thresholds file");
            ThresholdRange r = t.ranges.at(id);
            if (range.contains("min")) r.min = range.at("min").get<double>();
            if (range.contains("max")) r.max = range.at("max").get<double>();
            if (r.min > r.max)
                throw ValidationError("min<=max", id, "threshold range has min > max");
            t.ranges[id] = r;
        }
    }
    if (j.contains("categories")) {
        const auto& c = j.at("categories");
        if (c.contains("excellentMax")) t.excellent_max = c.at("excellentMax").get<std::size_t>();
        if (c.contains("goodMax")) t.good_max = c.at("goodMax").get<std::size_t>();
        if (c.contains("fairMax")) t.fair_max = c.at("fairMax").get<std::size_t>();
        if (t.excellent_max > t.good_max || t.good_max > t.fair_max)
            throw ValidationError("category-rule", "categories",
                                  "category cutoffs must be non-decreasing");
    }
    return t;
}

const char* to_string(QualityCategory c) {
    switch (c) {
        case QualityCategory::Excellent: return "excellent";
        case QualityCategory::Good: return "good";
        case QualityCategory::Fair: return "fair";
        case QualityCategory::Poor: return "poor";
    }
    return "?";
}

ClassificationResult classify(const OperandVector& v, const ThresholdConfig& t) {
    ClassificationResult r;
    for (const auto& id : operand_ids()) {
        auto it = t.ranges.find(id);
        if (it == t.ranges.end()) continue;
        const double value = v.get(id);
        if (value < it->second.min || value > it->second.max)
            r.violations.push_back({id, value, it->second.min, it->second.max});
    }
    const std::size_t n = r.violations.size();
    if (n <= t.excellent_max)
        r.category = QualityCategory::Excellent;
    else if (n <= t.good_max)
        r.category = QualityCategory::Good;
    else if (n <= t.fair_max)
        r.category = QualityCategory::Fair;
    else
        r.category = QualityCategory::Poor;
    return r;
}

SdiResult sdi(const CodeModel& old_model, const CodeModel& new_model) {
    SdiResult r;
    std::set<std::string> old_names, new_names;
    for (const auto& c : old_model.classes) old_names.insert(c.qualified_name);
    for (const auto& c : new_model.classes) new_names.insert(c.qualified_name);

    std::vector<std::string> deleted, added;
    for (const auto& n : old_names)
        if (!new_names.count(n)) deleted.push_back(n);
    for (const auto& n : new_names)
        if (!old_names.count(n)) added.push_back(n);

    // Pair off identical-member classes as renames; both lists are sorted,
    // so the greedy match is deterministic.
    std::vector<bool> consumed(added.size(), false);
    for (const auto& d : deleted) {
        const auto keys = member_keys(*old_model.find_class(d));
        bool matched = false;
        for (std::size_t i = 0; i < added.size(); ++i) {
            if (consumed[i]) continue;
            if (member_keys(*new_model.find_class(added[i])) == keys) {
                consumed[i] = true;
                r.renames.emplace_back(d, added[i]);
                matched = true;
                break;
            }
        }
        if (!matched) ++r.deleted;
    }
    r.renamed = r.renames.size();
    for (std::size_t i = 0; i < added.size(); ++i)
        if (!consumed[i]) ++r.added;

    const double old_tc = static_cast<double>(old_model.total_classes());
    const double new_tc = static_cast<double>(new_model.total_classes());
    if (old_tc == 0) return r;
    double pct = 100.0 * (static_cast<double>(r.renamed) + static_cast<double>(r.deleted)) / old_tc;
    if (new_tc > 0) pct += 100.0 * static_cast<double>(r.added) / new_tc;
    r.sdi = pct;
    return r;
}

TrendReport compare_versions(const AnalysisContext& old_ctx, const AnalysisContext& new_ctx) {
    TrendReport report;
    const CodeModel& old_model = old_ctx.model();
    const CodeModel& new_model = new_ctx.model();

    std::vector<std::string> common;
    for (const auto& c : old_model.classes) {
        if (new_model.find_class(c.qualified_name))
            common.push_back(c.qualified_name);
        else
            report.deleted_classes.push_back(c.qualified_name);
    }
    for (const auto& c : new_model.classes)
        if (!old_model.find_class(c.qualified_name))
            report.added_classes.push_back(c.qualified_name);
    std::sort(common.begin(), common.end());
    std::sort(report.added_classes.begin(), report.added_classes.end());
    std::sort(report.deleted_classes.begin(), report.deleted_classes.end());

    auto accumulate = [](CriteriaScores& total, const CriteriaScores& c) {
        total.analyzability += c.analyzability;
        total.changeability += c.changeability;
        total.stability += c.stability;
        total.testability += c.testability;
        total.maintainability += c.maintainability;
    };
    for (const auto& c : old_model.classes)
        accumulate(report.old_totals, criteria_scores(operand_vector(old_ctx, c)));
    for (const auto& c : new_model.classes)
        accumulate(report.new_totals, criteria_scores(operand_vector(new_ctx, c)));

    for (const auto& name : common) {
        ClassTrendRow row;
        row.class_name = name;
        row.old_operands = operand_vector(old_ctx, *old_model.find_class(name));
        row.new_operands = operand_vector(new_ctx, *new_model.find_class(name));
        row.old_criteria = criteria_scores(row.old_operands);
        row.new_criteria = criteria_scores(row.new_operands);

        bool all_le = true, any_lt = false;
        for (const auto& id : operand_ids()) {
            const double o = row.old_operands.get(id);
            const double n = row.new_operands.get(id);
            if (n > o) all_le = false;
            if (n < o) any_lt = true;
        }
        row.operands_non_increasing = all_le && any_lt;
        if (row.operands_non_increasing) {
            for (const auto& id : criterion_ids())
                if (row.new_criteria.get(id) > row.old_criteria.get(id)) row.tracking_holds = false;
        }
        if (!row.tracking_holds) report.tracking_consistent = false;
        report.classes.push_back(std::move(row));
    }

    report.maintainability_delta =
        report.new_totals.maintainability - report.old_totals.maintainability;
    if (report.maintainability_delta < 0)
        report.direction = "decreased";
    else if (report.maintainability_delta > 0)
        report.direction = "increased";
    else
        report.direction = "unchanged";

    report.old_factors = quality_factors(design_properties(old_ctx));
    report.new_factors = quality_factors(design_properties(new_ctx));
    report.sdi = sdi(old_model, new_model);
    return report;
}

}  // namespace oometrix
