#include "oometrix/context.hpp"

#include <algorithm>

namespace oometrix {
namespace {

bool visible_to_subclass(const MethodInfo& m, const ClassInfo& declaring, const ClassInfo& sub) {
    switch (m.visibility) {
        case Visibility::Public:
        case Visibility::Protected: return true;
        case Visibility::Package: return declaring.package == sub.package;
        case Visibility::Private: return false;
    }
    return false;
}

bool visible_to_subclass(const AttributeInfo& a, const ClassInfo& declaring, const ClassInfo& sub) {
    switch (a.visibility) {
        case Visibility::Public:
        case Visibility::Protected: return true;
        case Visibility::Package: return declaring.package == sub.package;
        case Visibility::Private: return false;
    }
    return false;
}

std::string method_key(const MethodInfo& m) {
    return m.name + "/" + std::to_string(m.arity());
}

}  // namespace

bool looks_like_accessor(const MethodInfo& m) {
    auto has_prefix = [&](const char* p) {
        std::string s(p);
        return m.name.size() > s.size() && m.name.rfind(s, 0) == 0 &&
               std::isupper(static_cast<unsigned char>(m.name[s.size()]));
    };
    return has_prefix("get") || has_prefix("set") || has_prefix("is");
}

AnalysisContext::AnalysisContext(const CodeModel& model, MetricsConfig config)
    : model_(&model), config_(config), hierarchy_(resolve_hierarchy(model)) {
    // Relation tables.
    for (const auto& c : model.classes) {
        std::set<std::string>& u = uses_out_[c.qualified_name];
        std::set<std::string>& cl = client_out_[c.qualified_name];
        for (const auto& m : c.methods) {
            for (const auto& inv : m.invocations)
                if (inv.target_class != c.qualified_name && model.find_class(inv.target_class))
                    u.insert(inv.target_class);
            for (const auto& ar : m.referenced_attributes)
                if (ar.owner_class != c.qualified_name && model.find_class(ar.owner_class))
                    u.insert(ar.owner_class);
            for (const auto& p : m.param_type_names)
                if (p != c.qualified_name && model.find_class(p)) cl.insert(p);
        }
        for (const auto& a : c.attributes)
            if (a.type_name != c.qualified_name && model.find_class(a.type_name)) cl.insert(a.type_name);
        cl.insert(u.begin(), u.end());
    }
    for (const auto& [c, targets] : client_out_)
        for (const auto& d : targets) client_in_[d].insert(c);

    // Member resolution across in-model ancestors.
    for (const auto& c : model.classes) {
        const auto& h = hierarchy_.of(c.qualified_name);
        std::set<std::string> own_methods;
        std::set<std::string> own_attrs;
        for (const auto& m : c.methods)
            if (!m.is_constructor) own_methods.insert(method_key(m));
        for (const auto& a : c.attributes) own_attrs.insert(a.name);

        std::set<std::string>& im = inherited_methods_[c.qualified_name];
        std::set<std::string>& ia = inherited_attributes_[c.qualified_name];
        std::set<std::string> visible_ancestor_methods;
        for (const auto& an : h.ancestors) {
            const ClassInfo* a = model.find_class(an);
            for (const auto& m : a->methods) {
                if (m.is_constructor || !visible_to_subclass(m, *a, c)) continue;
                visible_ancestor_methods.insert(method_key(m));
                if (!own_methods.count(method_key(m))) im.insert(method_key(m));
            }
            for (const auto& attr : a->attributes) {
                if (!visible_to_subclass(attr, *a, c)) continue;
                if (!own_attrs.count(attr.name)) ia.insert(attr.name);
            }
        }
        std::size_t overriding = 0;
        for (const auto& m : c.methods)
            if (!m.is_constructor && visible_ancestor_methods.count(method_key(m))) ++overriding;
        overriding_counts_[c.qualified_name] = overriding;
    }
}

bool AnalysisContext::uses(const std::string& c, const std::string& d) const {
    auto it = uses_out_.find(c);
    return it != uses_out_.end() && it->second.count(d) > 0;
}

bool AnalysisContext::is_client(const std::string& c, const std::string& d) const {
    auto it = client_out_.find(c);
    return it != client_out_.end() && it->second.count(d) > 0;
}

const std::set<std::string>& AnalysisContext::client_targets(const std::string& c) const {
    static const std::set<std::string> empty;
    auto it = client_out_.find(c);
    return it == client_out_.end() ? empty : it->second;
}

const std::set<std::string>& AnalysisContext::client_sources(const std::string& c) const {
    static const std::set<std::string> empty;
    auto it = client_in_.find(c);
    return it == client_in_.end() ? empty : it->second;
}

bool AnalysisContext::related_by_inheritance(const std::string& a, const std::string& b) const {
    return hierarchy_.is_ancestor(a, b) || hierarchy_.is_ancestor(b, a);
}

const std::set<std::string>& AnalysisContext::inherited_methods(const std::string& c) const {
    return inherited_methods_.at(c);
}

const std::set<std::string>& AnalysisContext::inherited_attributes(const std::string& c) const {
    return inherited_attributes_.at(c);
}

std::size_t AnalysisContext::overriding_method_count(const std::string& c) const {
    return overriding_counts_.at(c);
}

std::size_t AnalysisContext::declared_method_count(const std::string& c) const {
    const ClassInfo* cls = model_->find_class(c);
    std::size_t n = 0;
    for (const auto& m : cls->methods)
        if (!m.is_constructor) ++n;
    return n;
}

bool AnalysisContext::counts_as_cohesion_method(const MethodInfo& m) const {
    if (m.is_abstract) return false;
    if (m.is_constructor && !config_.include_constructors) return false;
    if (!config_.include_accessors && looks_like_accessor(m)) return false;
    return true;
}

}  // namespace oometrix
