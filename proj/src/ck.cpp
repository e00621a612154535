#include "oometrix/ck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "oometrix/mood.hpp"

namespace oometrix {
namespace {

using MethodId = std::pair<std::string, std::string>;  // (class, signature)

// Resolves an invocation target to a concrete method in the model, if any.
const MethodInfo* lookup_method(const CodeModel& model, const Invocation& inv) {
    const ClassInfo* cls = model.find_class(inv.target_class);
    if (!cls) return nullptr;
    for (const auto& m : cls->methods)
        if (m.signature() == inv.target_signature) return &m;
    return cls->find_method(signature_name(inv.target_signature), signature_arity(inv.target_signature));
}

// Union-find over method indices.
struct DisjointSet {
    std::vector<std::size_t> parent;
    explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::size_t components() {
        std::set<std::size_t> roots;
        for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
        return roots.size();
    }
};

// Attributes of `cls` referenced by m, own-class only.
std::set<std::string> own_attr_refs(const ClassInfo& cls, const MethodInfo& m) {
    std::set<std::string> out;
    for (const auto& ar : m.referenced_attributes)
        if (ar.owner_class == cls.qualified_name && cls.find_attribute(ar.attribute_name))
            out.insert(ar.attribute_name);
    return out;
}

bool invokes_same_class(const ClassInfo& cls, const MethodInfo& caller, const MethodInfo& callee) {
    for (const auto& inv : caller.invocations)
        if (inv.target_class == cls.qualified_name && inv.target_signature == callee.signature()) return true;
    return false;
}

}  // namespace

std::uint32_t dit(const AnalysisContext& ctx, const ClassInfo& cls) {
    return ctx.hierarchy().of(cls.qualified_name).depth;
}

std::size_t noc(const AnalysisContext& ctx, const ClassInfo& cls) {
    return ctx.hierarchy().of(cls.qualified_name).children.size();
}

std::size_t rfc(const AnalysisContext& ctx, const ClassInfo& cls, int alpha) {
    const CodeModel& model = ctx.model();
    std::set<MethodId> response;
    std::vector<const MethodInfo*> frontier;

    for (const auto& m : cls.methods) {
        response.insert({cls.qualified_name, m.signature()});
        frontier.push_back(&m);
    }

    for (int level = 0; level < alpha && !frontier.empty(); ++level) {
        std::vector<const MethodInfo*> next;
        for (const MethodInfo* m : frontier) {
            for (const auto& inv : m->invocations) {
                MethodId id{inv.target_class, inv.target_signature};
                const MethodInfo* target = lookup_method(model, inv);
                if (target) id.second = target->signature();
                if (!response.insert(id).second) continue;
                if (target) next.push_back(target);
            }
        }
        frontier = std::move(next);
    }
    return response.size();
}

std::uint64_t wmc(const ClassInfo& cls) {
    std::uint64_t sum = 0;
    for (const auto& m : cls.methods)
        if (!m.is_abstract) sum += m.cyclomatic;
    return sum;
}

CboResult cbo(const AnalysisContext& ctx, const ClassInfo& cls) {
    CboResult r;
    const auto& h = ctx.hierarchy().of(cls.qualified_name);
    for (const auto& d : ctx.model().classes) {
        if (d.qualified_name == cls.qualified_name) continue;
        if (!ctx.uses(cls.qualified_name, d.qualified_name) &&
            !ctx.uses(d.qualified_name, cls.qualified_name))
            continue;
        ++r.cbo;
        if (!h.ancestors.count(d.qualified_name)) ++r.cbo_prime;
    }
    return r;
}

std::uint64_t mpc(const AnalysisContext& ctx, const ClassInfo& cls) {
    std::uint64_t sites = 0;
    for (const auto& m : cls.methods)
        for (const auto& inv : m.invocations)
            if (inv.target_class != cls.qualified_name) sites += inv.site_count;
    (void)ctx;
    return sites;
}

DacResult dac(const AnalysisContext& ctx, const ClassInfo& cls) {
    DacResult r;
    std::set<std::string> types;
    for (const auto& a : cls.attributes) {
        if (!ctx.model().find_class(a.type_name)) continue;
        ++r.dac;
        types.insert(a.type_name);
    }
    r.dac_prime = types.size();
    return r;
}

PackageCouplingRow ca_ce(const AnalysisContext& ctx, const PackageInfo& package) {
    PackageCouplingRow row;
    row.package = package.name;
    std::set<std::string> inside(package.class_names.begin(), package.class_names.end());
    std::set<std::string> afferent, efferent;
    for (const auto& c : ctx.model().classes) {
        bool is_inside = inside.count(c.qualified_name) > 0;
        for (const auto& target : ctx.client_targets(c.qualified_name)) {
            bool target_inside = inside.count(target) > 0;
            if (!is_inside && target_inside) afferent.insert(c.qualified_name);
            if (is_inside && !target_inside) efferent.insert(c.qualified_name);
        }
    }
    row.ca = afferent.size();
    row.ce = efferent.size();
    return row;
}

std::vector<PackageCouplingRow> package_coupling(const AnalysisContext& ctx) {
    std::vector<PackageCouplingRow> rows;
    for (const auto& p : ctx.model().packages) rows.push_back(ca_ce(ctx, p));
    std::sort(rows.begin(), rows.end(),
              [](const PackageCouplingRow& a, const PackageCouplingRow& b) { return a.package < b.package; });
    return rows;
}

std::optional<double> cof(const AnalysisContext& ctx) {
    const std::size_t tc = ctx.model().total_classes();
    if (tc < 2) return std::nullopt;
    std::size_t descendant_pairs = 0;
    for (const auto& c : ctx.model().classes)
        descendant_pairs += ctx.hierarchy().of(c.qualified_name).descendants.size();
    const long long denom = static_cast<long long>(tc * tc - tc) - 2ll * static_cast<long long>(descendant_pairs);
    if (denom <= 0) return std::nullopt;

    std::size_t client_pairs = 0;
    for (const auto& cc : ctx.model().classes) {
        for (const auto& cs : ctx.model().classes) {
            if (cc.qualified_name == cs.qualified_name) continue;
            // isclient excludes pairs where the source descends from the target
            if (ctx.hierarchy().is_ancestor(cs.qualified_name, cc.qualified_name)) continue;
            if (ctx.is_client(cc.qualified_name, cs.qualified_name)) ++client_pairs;
        }
    }
    return static_cast<double>(client_pairs) / static_cast<double>(denom);
}

std::uint64_t icp_method(const AnalysisContext& ctx, const ClassInfo& cls, const MethodInfo& m) {
    const CodeModel& model = ctx.model();
    std::uint64_t total = 0;
    for (const auto& inv : m.invocations) {
        if (inv.target_class == cls.qualified_name) continue;  // M_NEW u M_OVR of cls
        const std::string name = signature_name(inv.target_signature);
        const std::size_t arity = signature_arity(inv.target_signature);
        const std::uint64_t weight = static_cast<std::uint64_t>(1 + arity) * inv.site_count;
        const ClassInfo* target_cls = model.find_class(inv.target_class);
        if (!target_cls) {
            total += weight;  // external declaration, no override expansion
            continue;
        }
        // PIM: the static declaration plus every override in its descendants.
        total += weight;
        for (const auto& dn : ctx.hierarchy().of(target_cls->qualified_name).descendants) {
            if (dn == cls.qualified_name) continue;  // own override is in M_OVR(cls)
            const ClassInfo* d = model.find_class(dn);
            if (d->find_method(name, arity)) total += weight;
        }
    }
    return total;
}

std::uint64_t icp_class(const AnalysisContext& ctx, const ClassInfo& cls) {
    std::uint64_t total = 0;
    for (const auto& m : cls.methods) total += icp_method(ctx, cls, m);
    return total;
}

std::uint64_t icp_system(const AnalysisContext& ctx) {
    std::uint64_t total = 0;
    for (const auto& c : ctx.model().classes) total += icp_class(ctx, c);
    return total;
}

LcomResult lcom_suite(const AnalysisContext& ctx, const ClassInfo& cls) {
    LcomResult r;
    std::vector<const MethodInfo*> methods;
    for (const auto& m : cls.methods)
        if (ctx.counts_as_cohesion_method(m)) methods.push_back(&m);
    const std::size_t n = methods.size();

    std::vector<std::set<std::string>> refs;
    refs.reserve(n);
    for (const MethodInfo* m : methods) refs.push_back(own_attr_refs(cls, *m));

    std::size_t sharing = 0, non_sharing = 0;
    DisjointSet attr_graph(n), call_graph(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::string> common;
            std::set_intersection(refs[i].begin(), refs[i].end(), refs[j].begin(), refs[j].end(),
                                  std::back_inserter(common));
            if (!common.empty()) {
                ++sharing;
                attr_graph.unite(i, j);
                call_graph.unite(i, j);
            } else {
                ++non_sharing;
            }
            if (invokes_same_class(cls, *methods[i], *methods[j]) ||
                invokes_same_class(cls, *methods[j], *methods[i]))
                call_graph.unite(i, j);
        }
    }
    r.lcom1 = non_sharing;
    r.lcom2 = non_sharing > sharing ? non_sharing - sharing : 0;
    r.lcom3 = n == 0 ? 0 : attr_graph.components();
    r.lcom4 = n == 0 ? 0 : call_graph.components();

    const std::size_t attrs = cls.attributes.size();
    if (n > 1 && attrs > 0) {
        double sum = 0;
        for (const auto& a : cls.attributes) {
            std::size_t users = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (refs[i].count(a.name)) ++users;
            sum += static_cast<double>(users);
        }
        const double nm = static_cast<double>(n);
        r.lcom5 = (nm - sum / static_cast<double>(attrs)) / (nm - 1.0);
    }
    return r;
}

TccResult tcc_lcc(const AnalysisContext& ctx, const ClassInfo& cls) {
    TccResult r;
    std::vector<const MethodInfo*> pub;
    std::vector<const MethodInfo*> all;
    for (const auto& m : cls.methods) {
        if (!ctx.counts_as_cohesion_method(m)) continue;
        all.push_back(&m);
        if (m.visibility == Visibility::Public) pub.push_back(&m);
    }
    if (pub.size() < 2) return r;

    // Attribute usage closed over same-class invocation chains ("indirect"
    // use in the Bieman-Kang sense).
    std::map<const MethodInfo*, std::set<std::string>> used;
    std::function<void(const MethodInfo*, std::set<const MethodInfo*>&, std::set<std::string>&)> collect =
        [&](const MethodInfo* m, std::set<const MethodInfo*>& seen, std::set<std::string>& acc) {
            if (!seen.insert(m).second) return;
            auto direct = own_attr_refs(cls, *m);
            acc.insert(direct.begin(), direct.end());
            for (const auto& inv : m->invocations) {
                if (inv.target_class != cls.qualified_name) continue;
                for (const MethodInfo* callee : all)
                    if (callee->signature() == inv.target_signature) collect(callee, seen, acc);
            }
        };
    for (const MethodInfo* m : all) {
        std::set<const MethodInfo*> seen;
        std::set<std::string> acc;
        collect(m, seen, acc);
        used[m] = std::move(acc);
    }

    const std::size_t n = pub.size();
    std::size_t connected_pairs = 0;
    DisjointSet closure(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::string> common;
            std::set_intersection(used[pub[i]].begin(), used[pub[i]].end(), used[pub[j]].begin(),
                                  used[pub[j]].end(), std::back_inserter(common));
            if (!common.empty()) {
                ++connected_pairs;
                closure.unite(i, j);
            }
        }
    }
    const double total_pairs = static_cast<double>(n * (n - 1)) / 2.0;
    r.tcc = static_cast<double>(connected_pairs) / total_pairs;

    std::size_t closed_pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (closure.find(i) == closure.find(j)) ++closed_pairs;
    r.lcc = static_cast<double>(closed_pairs) / total_pairs;
    return r;
}

ClassMetricRow class_metrics(const AnalysisContext& ctx, const ClassInfo& cls) {
    ClassMetricRow row;
    row.class_name = cls.qualified_name;
    row.dit = dit(ctx, cls);
    row.noc = noc(ctx, cls);
    row.rfc = rfc(ctx, cls, 1);
    const int alpha = std::max(1, ctx.config().rfc_alpha);
    for (int a = 1; a <= alpha; ++a) row.rfc_alpha[a] = rfc(ctx, cls, a);
    row.wmc = wmc(cls);
    row.cbo = cbo(ctx, cls);
    row.mpc = mpc(ctx, cls);
    row.dac = dac(ctx, cls);
    row.icp = icp_class(ctx, cls);
    row.lcom = lcom_suite(ctx, cls);
    row.tcc = tcc_lcc(ctx, cls);
    return row;
}

std::vector<MeasureClassification> classify_measures() {
    auto row = [](const char* id, const char* conn, const char* domain, const char* direct,
                  const char* inh, const char* acc, bool impl) {
        return MeasureClassification{id, conn, domain, direct, inh, acc, impl};
    };
    return {
        row("LCOM1", "methods directly sharing an attribute", "class", "direct",
            "own members only", "configurable", true),
        row("LCOM2", "methods directly sharing an attribute", "class", "direct",
            "own members only", "configurable", true),
        row("LCOM3", "methods directly sharing an attribute", "class", "indirect",
            "own members only", "configurable", true),
        row("LCOM4", "attribute sharing or method invocation", "class", "indirect",
            "own members only", "configurable", true),
        row("LCOM5", "method references attribute", "class", "direct",
            "own members only", "configurable", true),
        row("Co", "attribute sharing or method invocation", "class", "direct",
            "own members only", "n/a", false),
        row("TCC", "methods directly or indirectly sharing an attribute", "class", "direct",
            "own members only", "configurable", true),
        row("LCC", "methods directly or indirectly sharing an attribute", "class", "indirect",
            "own members only", "configurable", true),
        row("ICH", "method invocation with parameter weighting", "method", "direct",
            "includes inherited", "n/a", false),
        row("RCI", "data-data and data-method interaction", "class", "indirect",
            "own members only", "n/a", false),
        row("NRCI", "data-data and data-method interaction", "class", "indirect",
            "own members only", "n/a", false),
        row("PRCI", "data-data and data-method interaction", "class", "indirect",
            "own members only", "n/a", false),
        row("ORCI", "data-data and data-method interaction", "class", "indirect",
            "own members only", "n/a", false),
        row("CL_UC", "similar scenario pairs within a use case", "set-of-classes", "direct",
            "n/a", "n/a", true),
        row("CL_UCM", "similar scenario pairs across the model", "system", "direct",
            "n/a", "n/a", true),
    };
}

UseCaseCohesion usecase_cohesion(const ScenarioModel& sm, const AnalysisContext& ctx) {
    UseCaseCohesion out;
    auto similar = [&](const std::string& a, const std::string& b) {
        auto p = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        return sm.similar_pairs.count(p) > 0;
    };

    std::vector<std::string> all_scenarios;
    for (const auto& uc : sm.use_cases) {
        const auto& s = uc.scenarios;
        all_scenarios.insert(all_scenarios.end(), s.begin(), s.end());
        if (s.size() < 2) {
            out.cl_uc[uc.name] = std::nullopt;
            continue;
        }
        std::size_t q = 0, p = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                ++p;
                if (similar(s[i], s[j])) ++q;
            }
        out.cl_uc[uc.name] = static_cast<double>(q) / static_cast<double>(p);
    }

    const std::size_t n = all_scenarios.size();
    if (n >= 2) {
        std::size_t qm = 0, pm = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                ++pm;
                if (similar(all_scenarios[i], all_scenarios[j])) ++qm;
            }
        out.cl_ucm = 1.0 - static_cast<double>(qm) / static_cast<double>(pm);
    }
    out.fc = cf(ctx);
    return out;
}

}  // namespace oometrix
