#pragma once

// Shared test utilities: model builders, a deterministic random model
// generator, and independent brute-force oracles coded straight from the
// metric definitions (kept free of the production relation tables).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oometrix/model.hpp"

namespace testutil {

inline std::string source_dir() {
    const char* env = std::getenv("OOMETRIX_SOURCE_DIR");
    return env ? env : ".";
}

// ---- builders ------------------------------------------------------------

inline oometrix::AttributeInfo attr(std::string name, std::string type,
                                    oometrix::Visibility v = oometrix::Visibility::Private) {
    oometrix::AttributeInfo a;
    a.name = std::move(name);
    a.type_name = std::move(type);
    a.visibility = v;
    return a;
}

inline oometrix::MethodInfo method(std::string name, std::vector<std::string> params = {},
                                   oometrix::Visibility v = oometrix::Visibility::Public) {
    oometrix::MethodInfo m;
    m.name = std::move(name);
    m.param_type_names = std::move(params);
    m.visibility = v;
    return m;
}

inline oometrix::ClassInfo cls(std::string name, std::vector<std::string> parents = {}) {
    oometrix::ClassInfo c;
    c.qualified_name = std::move(name);
    c.parents = std::move(parents);
    c.total_lines = 10;
    return c;
}

inline oometrix::CodeModel model_of(std::vector<oometrix::ClassInfo> classes,
                                    std::string name = "test") {
    oometrix::CodeModel m;
    m.name = std::move(name);
    m.classes = std::move(classes);
    oometrix::validate_model(m);
    return m;
}

// ---- random models -------------------------------------------------------

// Valid-by-construction random model: parents point only at earlier
// classes (acyclic), invocations and attribute references target members
// that exist.
inline oometrix::CodeModel random_model(std::mt19937& rng, std::size_t max_classes,
                                        std::size_t max_members = 5) {
    using namespace oometrix;
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto chance = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
    static const Visibility kVis[] = {Visibility::Public, Visibility::Protected,
                                      Visibility::Package, Visibility::Private};

    CodeModel m;
    m.name = "random";
    const std::size_t n = 1 + pick(max_classes);
    for (std::size_t i = 0; i < n; ++i) {
        ClassInfo c;
        c.qualified_name = "C" + std::to_string(i);
        c.package = chance(0.5) ? "p0" : "p1";
        if (i > 0 && chance(0.4)) c.parents.push_back("C" + std::to_string(pick(i)));
        const std::size_t na = pick(max_members + 1);
        for (std::size_t a = 0; a < na; ++a) {
            AttributeInfo attr;
            attr.name = "a" + std::to_string(a);
            attr.type_name = chance(0.3) ? "C" + std::to_string(pick(n)) : "int";
            attr.visibility = kVis[pick(4)];
            c.attributes.push_back(std::move(attr));
        }
        const std::size_t nm = pick(max_members + 1);
        for (std::size_t k = 0; k < nm; ++k) {
            MethodInfo mm;
            mm.name = "m" + std::to_string(k);
            if (chance(0.3)) mm.param_type_names.push_back(chance(0.5) ? "int" : "C0");
            mm.visibility = kVis[pick(4)];
            mm.cyclomatic = 1 + static_cast<std::uint32_t>(pick(4));
            mm.statements = static_cast<std::uint32_t>(pick(8));
            c.methods.push_back(std::move(mm));
        }
        c.comment_lines = static_cast<std::uint32_t>(pick(6));
        c.total_lines = c.comment_lines + 4 + static_cast<std::uint32_t>(pick(40));
        m.classes.push_back(std::move(c));
    }
    // Second pass: wire invocations and attribute references at members
    // that exist somewhere in the model.
    for (auto& c : m.classes) {
        for (auto& mm : c.methods) {
            while (chance(0.4)) {
                const ClassInfo& target = m.classes[pick(n)];
                if (target.methods.empty()) break;
                const MethodInfo& tm = target.methods[pick(target.methods.size())];
                Invocation inv;
                inv.target_class = target.qualified_name;
                inv.target_signature = tm.signature();
                inv.site_count = 1 + static_cast<std::uint32_t>(pick(3));
                bool merged = false;
                for (auto& existing : mm.invocations)
                    if (existing.target_class == inv.target_class &&
                        existing.target_signature == inv.target_signature) {
                        existing.site_count += inv.site_count;
                        merged = true;
                    }
                if (!merged) mm.invocations.push_back(std::move(inv));
            }
            while (chance(0.4)) {
                const ClassInfo& target = chance(0.6) ? c : m.classes[pick(n)];
                if (target.attributes.empty()) break;
                AttributeRef ref;
                ref.owner_class = target.qualified_name;
                ref.attribute_name = target.attributes[pick(target.attributes.size())].name;
                if (std::find(mm.referenced_attributes.begin(), mm.referenced_attributes.end(),
                              ref) == mm.referenced_attributes.end())
                    mm.referenced_attributes.push_back(std::move(ref));
            }
        }
    }
    validate_model(m);
    return m;
}

// ---- brute-force oracles ---------------------------------------------------

namespace oracle {

inline bool in_model(const oometrix::CodeModel& m, const std::string& name) {
    return m.find_class(name) != nullptr;
}

inline bool uses(const oometrix::CodeModel& m, const std::string& c, const std::string& d) {
    if (c == d || !in_model(m, d)) return false;
    const auto* cc = m.find_class(c);
    for (const auto& mm : cc->methods) {
        for (const auto& inv : mm.invocations)
            if (inv.target_class == d) return true;
        for (const auto& ref : mm.referenced_attributes)
            if (ref.owner_class == d) return true;
    }
    return false;
}

inline bool is_client(const oometrix::CodeModel& m, const std::string& c, const std::string& d) {
    if (c == d || !in_model(m, d)) return false;
    if (uses(m, c, d)) return true;
    const auto* cc = m.find_class(c);
    for (const auto& a : cc->attributes)
        if (a.type_name == d) return true;
    for (const auto& mm : cc->methods)
        for (const auto& p : mm.param_type_names)
            if (p == d) return true;
    return false;
}

inline std::set<std::string> ancestors(const oometrix::CodeModel& m, const std::string& c) {
    std::set<std::string> out;
    std::vector<std::string> stack = {c};
    while (!stack.empty()) {
        const auto* cur = m.find_class(stack.back());
        stack.pop_back();
        if (!cur) continue;
        for (const auto& p : cur->parents)
            if (in_model(m, p) && out.insert(p).second) stack.push_back(p);
    }
    return out;
}

inline std::optional<double> cf(const oometrix::CodeModel& m) {
    const std::size_t tc = m.total_classes();
    if (tc < 2) return std::nullopt;
    std::size_t pairs = 0;
    for (const auto& ci : m.classes)
        for (const auto& cj : m.classes) {
            if (ci.qualified_name == cj.qualified_name) continue;
            const auto anc_i = ancestors(m, ci.qualified_name);
            const auto anc_j = ancestors(m, cj.qualified_name);
            if (anc_i.count(cj.qualified_name) || anc_j.count(ci.qualified_name)) continue;
            if (is_client(m, ci.qualified_name, cj.qualified_name)) ++pairs;
        }
    return static_cast<double>(pairs) / static_cast<double>(tc * tc - tc);
}

inline std::optional<double> cof(const oometrix::CodeModel& m) {
    const std::size_t tc = m.total_classes();
    if (tc < 2) return std::nullopt;
    std::size_t desc_pairs = 0;
    for (const auto& c : m.classes) desc_pairs += ancestors(m, c.qualified_name).size();
    const long long denom =
        static_cast<long long>(tc * tc - tc) - 2ll * static_cast<long long>(desc_pairs);
    if (denom <= 0) return std::nullopt;
    std::size_t pairs = 0;
    for (const auto& ci : m.classes)
        for (const auto& cj : m.classes) {
            if (ci.qualified_name == cj.qualified_name) continue;
            if (ancestors(m, ci.qualified_name).count(cj.qualified_name)) continue;
            if (is_client(m, ci.qualified_name, cj.qualified_name)) ++pairs;
        }
    return static_cast<double>(pairs) / static_cast<double>(denom);
}

inline std::size_t cbo(const oometrix::CodeModel& m, const std::string& c) {
    std::size_t count = 0;
    for (const auto& d : m.classes) {
        if (d.qualified_name == c) continue;
        if (uses(m, c, d.qualified_name) || uses(m, d.qualified_name, c)) ++count;
    }
    return count;
}

// Attribute names of `cls` referenced by method index i.
inline std::set<std::string> own_refs(const oometrix::ClassInfo& cls, std::size_t i) {
    std::set<std::string> out;
    for (const auto& ref : cls.methods[i].referenced_attributes)
        if (ref.owner_class == cls.qualified_name && cls.find_attribute(ref.attribute_name))
            out.insert(ref.attribute_name);
    return out;
}

inline std::pair<std::size_t, std::size_t> lcom12(const oometrix::ClassInfo& cls) {
    std::size_t p = 0, q = 0;
    const std::size_t n = cls.methods.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto a = own_refs(cls, i);
            const auto b = own_refs(cls, j);
            bool shared = false;
            for (const auto& x : a)
                if (b.count(x)) shared = true;
            (shared ? q : p) += 1;
        }
    return {p, q > p ? 0 : p - q};
}

// TCC/LCC over public methods; indirection via same-class call chains,
// closure via Floyd-Warshall.
inline std::pair<std::optional<double>, std::optional<double>> tcc_lcc(
    const oometrix::ClassInfo& cls) {
    const std::size_t n = cls.methods.size();
    // attribute sets closed over same-class calls (fixed-point iteration)
    std::vector<std::set<std::string>> used(n);
    for (std::size_t i = 0; i < n; ++i) used[i] = own_refs(cls, i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& inv : cls.methods[i].invocations) {
                if (inv.target_class != cls.qualified_name) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (cls.methods[j].signature() != inv.target_signature) continue;
                    for (const auto& a : used[j])
                        if (used[i].insert(a).second) changed = true;
                }
            }
    }
    std::vector<std::size_t> pub;
    for (std::size_t i = 0; i < n; ++i)
        if (cls.methods[i].visibility == oometrix::Visibility::Public) pub.push_back(i);
    if (pub.size() < 2) return {std::nullopt, std::nullopt};
    const std::size_t k = pub.size();
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    std::size_t direct = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool shared = false;
            for (const auto& a : used[pub[i]])
                if (used[pub[j]].count(a)) shared = true;
            if (shared) {
                ++direct;
                adj[i][j] = adj[j][i] = true;
            }
        }
    for (std::size_t v = 0; v < k; ++v)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (adj[i][v] && adj[v][j]) adj[i][j] = true;
    std::size_t closed = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (adj[i][j]) ++closed;
    const double total = static_cast<double>(k * (k - 1)) / 2.0;
    return {direct / total, closed / total};
}

}  // namespace oracle
}  // namespace testutil
