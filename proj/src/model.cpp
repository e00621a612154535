#include "oometrix/model.hpp"

#include <algorithm>
#include <functional>

namespace oometrix {

const char* to_string(Visibility v) {
    switch (v) {
        case Visibility::Public: return "public";
        case Visibility::Protected: return "protected";
        case Visibility::Package: return "package";
        case Visibility::Private: return "private";
    }
    return "private";
}

std::optional<Visibility> visibility_from_string(const std::string& s) {
    if (s == "public") return Visibility::Public;
    if (s == "protected") return Visibility::Protected;
    if (s == "package") return Visibility::Package;
    if (s == "private") return Visibility::Private;
    return std::nullopt;
}

std::string MethodInfo::signature() const {
    std::string sig = name + "(";
    for (std::size_t i = 0; i < param_type_names.size(); ++i) {
        if (i) sig += ",";
        sig += param_type_names[i];
    }
    sig += ")";
    return sig;
}

std::string signature_name(const std::string& signature) {
    auto pos = signature.find('(');
    return pos == std::string::npos ? signature : signature.substr(0, pos);
}

std::size_t signature_arity(const std::string& signature) {
    auto open = signature.find('(');
    auto close = signature.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close <= open + 1) return 0;
    return static_cast<std::size_t>(
               std::count(signature.begin() + static_cast<long>(open), signature.begin() + static_cast<long>(close), ',')) +
           1;
}

const MethodInfo* ClassInfo::find_method(const std::string& name, std::size_t arity) const {
    for (const auto& m : methods)
        if (m.name == name && m.arity() == arity) return &m;
    return nullptr;
}

const AttributeInfo* ClassInfo::find_attribute(const std::string& name) const {
    for (const auto& a : attributes)
        if (a.name == name) return &a;
    return nullptr;
}

const ClassInfo* CodeModel::find_class(const std::string& qualified_name) const {
    for (const auto& c : classes)
        if (c.qualified_name == qualified_name) return &c;
    return nullptr;
}

std::vector<const ClassInfo*> CodeModel::classes_in_package(const std::string& pkg) const {
    std::vector<const ClassInfo*> out;
    for (const auto& c : classes)
        if (c.package == pkg) out.push_back(&c);
    return out;
}

ValidationError::ValidationError(std::string invariant, std::string entity, const std::string& detail)
    : std::runtime_error("validation error [" + invariant + "] at " + entity + ": " + detail),
      invariant_(std::move(invariant)),
      entity_(std::move(entity)) {}

ModelParseError::ModelParseError(const std::string& message, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

void validate_model(CodeModel& model) {
    // Unique fully-qualified class names.
    std::set<std::string> names;
    for (const auto& c : model.classes) {
        if (!names.insert(c.qualified_name).second)
            throw ValidationError("unique class names", c.qualified_name, "duplicate class");
    }

    for (const auto& c : model.classes) {
        if (c.comment_lines > c.total_lines)
            throw ValidationError("commentLines <= totalLines", c.qualified_name,
                                  std::to_string(c.comment_lines) + " > " + std::to_string(c.total_lines));
        std::set<std::string> sigs;
        for (const auto& m : c.methods) {
            if (!sigs.insert(m.signature()).second)
                throw ValidationError("unique method signatures", c.qualified_name + "::" + m.signature(),
                                      "duplicate signature");
            if (m.is_abstract) {
                if (m.cyclomatic != 0 || m.statements != 0)
                    throw ValidationError("abstract method has cyclomatic 0 and statements 0",
                                          c.qualified_name + "::" + m.signature(), "nonzero counts");
            } else if (m.cyclomatic < 1) {
                throw ValidationError("cyclomatic >= 1 for concrete methods",
                                      c.qualified_name + "::" + m.signature(), "cyclomatic 0");
            }
            for (const auto& inv : m.invocations) {
                if (inv.site_count < 1)
                    throw ValidationError("siteCount >= 1", c.qualified_name + "::" + m.signature(),
                                          "invocation of " + inv.target_class + "::" + inv.target_signature);
            }
        }
    }

    // Inheritance acyclicity over in-model parents (parents that do not
    // resolve are external by definition and break no cycles).
    std::map<std::string, int> state;  // 0 unseen, 1 in progress, 2 done
    std::function<void(const ClassInfo&)> visit = [&](const ClassInfo& c) {
        int& s = state[c.qualified_name];
        if (s == 2) return;
        if (s == 1)
            throw ValidationError("inheritance cycle", c.qualified_name, "class participates in a parent cycle");
        s = 1;
        for (const auto& p : c.parents) {
            if (const ClassInfo* pc = model.find_class(p)) visit(*pc);
        }
        s = 2;
    };
    for (const auto& c : model.classes) visit(c);

    // Package lists: every listed class exists and belongs to exactly one
    // declared package matching its own package field.
    std::map<std::string, std::string> assigned;  // class -> package
    for (const auto& p : model.packages) {
        for (const auto& cn : p.class_names) {
            const ClassInfo* c = model.find_class(cn);
            if (!c) throw ValidationError("package lists existing classes", p.name, "unknown class " + cn);
            auto [it, inserted] = assigned.emplace(cn, p.name);
            if (!inserted)
                throw ValidationError("class belongs to exactly one package", cn,
                                      "listed in " + it->second + " and " + p.name);
            if (c->package != p.name)
                throw ValidationError("class package matches its package entry", cn,
                                      "class says " + c->package + ", listed under " + p.name);
        }
    }
    // Synthesize package entries for classes not explicitly listed.
    for (const auto& c : model.classes) {
        if (assigned.count(c.qualified_name)) continue;
        auto it = std::find_if(model.packages.begin(), model.packages.end(),
                               [&](const PackageInfo& p) { return p.name == c.package; });
        if (it == model.packages.end()) {
            model.packages.push_back(PackageInfo{c.package, {c.qualified_name}});
        } else {
            it->class_names.push_back(c.qualified_name);
        }
    }
    // Canonical package order, so validated models serialize byte-stably.
    std::sort(model.packages.begin(), model.packages.end(),
              [](const PackageInfo& a, const PackageInfo& b) { return a.name < b.name; });
    for (auto& p : model.packages) std::sort(p.class_names.begin(), p.class_names.end());

    if (model.scenario_model) {
        const auto& sm = *model.scenario_model;
        std::set<std::string> scenarios;
        for (const auto& uc : sm.use_cases)
            for (const auto& s : uc.scenarios) scenarios.insert(s);
        for (const auto& [a, b] : sm.similar_pairs) {
            if (a == b)
                throw ValidationError("similar pairs are irreflexive", a, "pair with itself");
            if (!scenarios.count(a) || !scenarios.count(b))
                throw ValidationError("similar pair scenarios belong to a use case", a + "/" + b,
                                      "unknown scenario");
        }
    }
}

const ClassHierarchy& HierarchyIndex::of(const std::string& qualified_name) const {
    auto it = by_class.find(qualified_name);
    if (it == by_class.end()) throw std::out_of_range("unknown class: " + qualified_name);
    return it->second;
}

bool HierarchyIndex::is_ancestor(const std::string& ancestor, const std::string& of_class) const {
    auto it = by_class.find(of_class);
    return it != by_class.end() && it->second.ancestors.count(ancestor) > 0;
}

HierarchyIndex resolve_hierarchy(const CodeModel& model) {
    HierarchyIndex index;
    for (const auto& c : model.classes) index.by_class[c.qualified_name];

    std::function<void(const ClassInfo&)> resolve = [&](const ClassInfo& c) {
        ClassHierarchy& h = index.by_class[c.qualified_name];
        if (h.depth != 0 || !h.ancestors.empty() || !h.external_ancestors.empty()) return;
        std::uint32_t depth = 0;
        for (const auto& p : c.parents) {
            const ClassInfo* pc = model.find_class(p);
            if (!pc) {
                h.external_ancestors.insert(p);
                continue;
            }
            resolve(*pc);
            const ClassHierarchy& ph = index.by_class[p];
            h.ancestors.insert(p);
            h.ancestors.insert(ph.ancestors.begin(), ph.ancestors.end());
            h.external_ancestors.insert(ph.external_ancestors.begin(), ph.external_ancestors.end());
            depth = std::max(depth, ph.depth + 1);
        }
        h.depth = depth;
    };
    for (const auto& c : model.classes) resolve(c);

    for (const auto& c : model.classes) {
        const ClassHierarchy& h = index.by_class[c.qualified_name];
        for (const auto& a : h.ancestors) index.by_class[a].descendants.insert(c.qualified_name);
        for (const auto& p : c.parents)
            if (model.find_class(p)) index.by_class[p].children.push_back(c.qualified_name);
    }
    for (auto& [name, h] : index.by_class) std::sort(h.children.begin(), h.children.end());
    return index;
}

}  // namespace oometrix
