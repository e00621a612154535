#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oometrix {

enum class Visibility { Public, Protected, Package, Private };

const char* to_string(Visibility v);
std::optional<Visibility> visibility_from_string(const std::string& s);

/// One static call site group: a method of `target_class` invoked
/// `site_count` times from the owning method.
struct Invocation {
    std::string target_class;
    std::string target_signature;  // canonical "name(T1,T2)"
    std::uint32_t site_count = 1;

    bool operator==(const Invocation&) const = default;
};

/// A reference to an attribute owned by `owner_class`.
struct AttributeRef {
    std::string owner_class;
    std::string attribute_name;

    bool operator==(const AttributeRef&) const = default;
    auto operator<=>(const AttributeRef&) const = default;
};

struct AttributeInfo {
    std::string name;
    std::string type_name;
    Visibility visibility = Visibility::Private;
    bool is_static = false;

    bool operator==(const AttributeInfo&) const = default;
};

struct MethodInfo {
    std::string name;
    std::vector<std::string> param_type_names;
    Visibility visibility = Visibility::Public;
    bool is_abstract = false;
    bool is_constructor = false;
    std::uint32_t cyclomatic = 1;  // 0 for abstract methods
    std::uint32_t statements = 0;
    std::vector<Invocation> invocations;
    std::vector<AttributeRef> referenced_attributes;

    /// Canonical signature, e.g. "move(int,int)".
    std::string signature() const;
    std::size_t arity() const { return param_type_names.size(); }

    bool operator==(const MethodInfo&) const = default;
};

/// Name + arity of a canonical signature string.
std::string signature_name(const std::string& signature);
std::size_t signature_arity(const std::string& signature);

struct ClassInfo {
    std::string qualified_name;
    std::string package;  // empty means default package
    std::vector<std::string> parents;
    bool is_abstract = false;
    std::vector<AttributeInfo> attributes;
    std::vector<MethodInfo> methods;
    std::uint32_t comment_lines = 0;
    std::uint32_t total_lines = 0;

    const MethodInfo* find_method(const std::string& name, std::size_t arity) const;
    const AttributeInfo* find_attribute(const std::string& name) const;

    bool operator==(const ClassInfo&) const = default;
};

struct PackageInfo {
    std::string name;
    std::vector<std::string> class_names;

    bool operator==(const PackageInfo&) const = default;
};

/// Use-case / scenario facts for the scenario-level cohesion ratios.
struct ScenarioModel {
    struct UseCase {
        std::string name;
        std::vector<std::string> scenarios;
        bool operator==(const UseCase&) const = default;
    };
    std::vector<UseCase> use_cases;
    // normalized: first < second
    std::set<std::pair<std::string, std::string>> similar_pairs;

    bool operator==(const ScenarioModel&) const = default;
};

/// Normalized representation of one analyzed system. Immutable after
/// load/validation; all metric modules read only this.
struct CodeModel {
    std::string name;
    std::string version;
    std::vector<PackageInfo> packages;
    std::vector<ClassInfo> classes;
    std::optional<ScenarioModel> scenario_model;

    std::size_t total_classes() const { return classes.size(); }
    const ClassInfo* find_class(const std::string& qualified_name) const;
    /// Classes of one package, by the classes' own package field.
    std::vector<const ClassInfo*> classes_in_package(const std::string& pkg) const;

    bool operator==(const CodeModel&) const = default;
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string invariant, std::string entity, const std::string& detail);
    const std::string& invariant() const { return invariant_; }
    const std::string& entity() const { return entity_; }

private:
    std::string invariant_;
    std::string entity_;
};

class ModelParseError : public std::runtime_error {
public:
    ModelParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Checks every structural invariant; throws ValidationError on the first
/// violation. Also synthesizes package entries for classes whose package
/// is not declared explicitly.
void validate_model(CodeModel& model);

/// Per-class hierarchy facts. External (unresolved) parents are retained
/// as opaque ancestor names: they count toward ancestor totals but carry
/// no members and no depth.
struct ClassHierarchy {
    std::set<std::string> ancestors;           // in-model, transitive
    std::set<std::string> external_ancestors;  // unresolved names, transitive
    std::set<std::string> descendants;         // in-model, transitive
    std::vector<std::string> children;         // in-model, direct
    std::uint32_t depth = 0;                   // root depth = 0, in-model edges only

    std::size_t ancestor_count() const { return ancestors.size() + external_ancestors.size(); }
};

struct HierarchyIndex {
    std::map<std::string, ClassHierarchy> by_class;

    const ClassHierarchy& of(const std::string& qualified_name) const;
    bool is_ancestor(const std::string& ancestor, const std::string& of_class) const;
};

/// Requires a validated (acyclic) model.
HierarchyIndex resolve_hierarchy(const CodeModel& model);

inline constexpr int kModelSchemaVersion = 1;

/// Load + validate a code-model JSON file. Throws ModelParseError with
/// line/column on malformed JSON, ValidationError on invariant violations.
CodeModel load_model(const std::string& path);
CodeModel model_from_json_text(const std::string& text);

/// Canonical serialization: classes and packages sorted by name, fixed
/// key order, 2-space indent. load(save(m)) is structurally equal to m.
void save_model(const CodeModel& model, const std::string& path);
std::string model_to_json_text(const CodeModel& model);

}  // namespace oometrix
