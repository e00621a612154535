#pragma once

#include <map>
#include <set>
#include <string>

#include "oometrix/model.hpp"

namespace oometrix {

/// Knobs shared by the metric modules.
struct MetricsConfig {
    /// Count constructors in declared-method universes (MOOD member
    /// resolution excludes them regardless: they cannot be inherited
    /// or overridden).
    bool include_constructors = true;
    /// Count constructors in the MOOD method universe. Off by default:
    /// constructors cannot be inherited or overridden.
    bool mood_include_constructors = false;
    /// Count accessor-looking methods (get*/set*/is*) in cohesion measures.
    bool include_accessors = true;
    /// RFC nesting level.
    int rfc_alpha = 1;
};

/// Precomputed relation tables shared across the metric suites.
/// Built once per immutable model; read-only afterwards.
class AnalysisContext {
public:
    explicit AnalysisContext(const CodeModel& model, MetricsConfig config = {});

    const CodeModel& model() const { return *model_; }
    const MetricsConfig& config() const { return config_; }
    const HierarchyIndex& hierarchy() const { return hierarchy_; }

    /// uses(c,d): c invokes a method of d or references an attribute of d.
    bool uses(const std::string& c, const std::string& d) const;
    /// is-client(c,d): uses(c,d) or c declares an attribute or method
    /// parameter of type d. Inheritance pairs are NOT excluded here;
    /// callers apply their own exclusion rule.
    bool is_client(const std::string& c, const std::string& d) const;

    const std::set<std::string>& client_targets(const std::string& c) const;
    const std::set<std::string>& client_sources(const std::string& c) const;

    bool related_by_inheritance(const std::string& a, const std::string& b) const;

    /// Methods a class inherits from in-model ancestors and does not
    /// override: keys are "name/arity". Constructors never participate.
    /// Visible-to-subclass = public/protected, or package within the
    /// same package.
    const std::set<std::string>& inherited_methods(const std::string& c) const;
    const std::set<std::string>& inherited_attributes(const std::string& c) const;
    /// Methods of c that override a visible in-model ancestor declaration.
    std::size_t overriding_method_count(const std::string& c) const;
    /// Non-constructor declared method count.
    std::size_t declared_method_count(const std::string& c) const;

    bool counts_as_cohesion_method(const MethodInfo& m) const;

private:
    const CodeModel* model_;
    MetricsConfig config_;
    HierarchyIndex hierarchy_;
    std::map<std::string, std::set<std::string>> uses_out_;
    std::map<std::string, std::set<std::string>> client_out_;
    std::map<std::string, std::set<std::string>> client_in_;
    std::map<std::string, std::set<std::string>> inherited_methods_;
    std::map<std::string, std::set<std::string>> inherited_attributes_;
    std::map<std::string, std::size_t> overriding_counts_;
};

/// True for get*/set*/is* method names (the accessor convention the
/// cohesion config switch filters on).
bool looks_like_accessor(const MethodInfo& m);

}  // namespace oometrix
