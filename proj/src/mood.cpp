#include "oometrix/mood.hpp"

namespace oometrix {
namespace {

// Fraction of the other TC-1 classes that can see a member of `cls`.
double visibility_fraction(Visibility v, const ClassInfo& cls, const AnalysisContext& ctx) {
    const std::size_t tc = ctx.model().total_classes();
    const double others = static_cast<double>(tc - 1);
    switch (v) {
        case Visibility::Public: return 1.0;
        case Visibility::Private: return 0.0;
        case Visibility::Protected:
            return static_cast<double>(ctx.hierarchy().of(cls.qualified_name).descendants.size()) / others;
        case Visibility::Package: {
            const auto peers = ctx.model().classes_in_package(cls.package);
            return static_cast<double>(peers.size() - 1) / others;
        }
    }
    return 0.0;
}

bool in_mood_universe(const MethodInfo& m, const AnalysisContext& ctx) {
    return !m.is_constructor || ctx.config().mood_include_constructors;
}

std::optional<double> hiding_factor(const AnalysisContext& ctx, bool attributes) {
    if (ctx.model().total_classes() <= 1) return std::nullopt;
    double hidden = 0.0;
    std::size_t members = 0;
    for (const auto& c : ctx.model().classes) {
        if (attributes) {
            for (const auto& a : c.attributes) {
                hidden += 1.0 - visibility_fraction(a.visibility, c, ctx);
                ++members;
            }
        } else {
            for (const auto& m : c.methods) {
                if (!in_mood_universe(m, ctx)) continue;
                hidden += 1.0 - visibility_fraction(m.visibility, c, ctx);
                ++members;
            }
        }
    }
    if (members == 0) return std::nullopt;
    return hidden / static_cast<double>(members);
}

std::optional<double> inheritance_factor(const AnalysisContext& ctx, bool attributes) {
    std::size_t inherited = 0, available = 0;
    for (const auto& c : ctx.model().classes) {
        if (attributes) {
            std::size_t mi = ctx.inherited_attributes(c.qualified_name).size();
            inherited += mi;
            available += mi + c.attributes.size();
        } else {
            std::size_t mi = ctx.inherited_methods(c.qualified_name).size();
            inherited += mi;
            available += mi + ctx.declared_method_count(c.qualified_name);
        }
    }
    if (available == 0) return std::nullopt;
    return static_cast<double>(inherited) / static_cast<double>(available);
}

}  // namespace

std::optional<double> mhf(const AnalysisContext& ctx) { return hiding_factor(ctx, false); }
std::optional<double> ahf(const AnalysisContext& ctx) { return hiding_factor(ctx, true); }
std::optional<double> mif(const AnalysisContext& ctx) { return inheritance_factor(ctx, false); }
std::optional<double> aif(const AnalysisContext& ctx) { return inheritance_factor(ctx, true); }

std::optional<double> mhf_complement(const AnalysisContext& ctx) {
    auto h = mhf(ctx);
    if (!h) return std::nullopt;
    return 1.0 - *h;
}

std::optional<double> cf(const AnalysisContext& ctx) {
    const std::size_t tc = ctx.model().total_classes();
    if (tc < 2) return std::nullopt;
    std::size_t client_pairs = 0;
    for (const auto& ci : ctx.model().classes) {
        for (const auto& cj : ctx.model().classes) {
            if (ci.qualified_name == cj.qualified_name) continue;
            if (ctx.related_by_inheritance(ci.qualified_name, cj.qualified_name)) continue;
            if (ctx.is_client(ci.qualified_name, cj.qualified_name)) ++client_pairs;
        }
    }
    return static_cast<double>(client_pairs) / static_cast<double>(tc * tc - tc);
}

std::optional<double> pf(const AnalysisContext& ctx) {
    std::size_t overriding = 0;
    std::size_t potential = 0;
    for (const auto& c : ctx.model().classes) {
        std::size_t mo = ctx.overriding_method_count(c.qualified_name);
        std::size_t mn = ctx.declared_method_count(c.qualified_name) - mo;
        overriding += mo;
        potential += mn * ctx.hierarchy().of(c.qualified_name).descendants.size();
    }
    if (potential == 0) return std::nullopt;
    return static_cast<double>(overriding) / static_cast<double>(potential);
}

MoodResult compute_mood(const AnalysisContext& ctx) {
    return MoodResult{mhf(ctx), ahf(ctx), mif(ctx), aif(ctx), cf(ctx), pf(ctx)};
}

}  // namespace oometrix
