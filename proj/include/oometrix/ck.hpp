#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oometrix/context.hpp"

namespace oometrix {

struct CboResult {
    std::size_t cbo = 0;
    std::size_t cbo_prime = 0;  // ancestors of the class excluded
};

struct DacResult {
    std::size_t dac = 0;        // class-typed attributes (multiset)
    std::size_t dac_prime = 0;  // distinct class types among them
};

struct LcomResult {
    std::size_t lcom1 = 0;  // |P|: pairs sharing no attribute
    std::size_t lcom2 = 0;  // max(|P| - |Q|, 0)
    std::size_t lcom3 = 0;  // components, attribute-sharing edges
    std::size_t lcom4 = 0;  // components, attribute-sharing + invocation edges
    std::optional<double> lcom5;
};

struct TccResult {
    std::optional<double> tcc;
    std::optional<double> lcc;
};

struct PackageCouplingRow {
    std::string package;
    std::size_t ca = 0;  // afferent: outside classes depending on inside ones
    std::size_t ce = 0;  // efferent: inside classes depending on outside ones
};

struct ClassMetricRow {
    std::string class_name;
    std::uint32_t dit = 0;
    std::size_t noc = 0;
    std::size_t rfc = 0;
    std::map<int, std::size_t> rfc_alpha;  // level -> |response set|
    std::uint64_t wmc = 0;
    CboResult cbo;
    std::uint64_t mpc = 0;
    DacResult dac;
    std::uint64_t icp = 0;
    LcomResult lcom;
    TccResult tcc;
};

std::uint32_t dit(const AnalysisContext& ctx, const ClassInfo& cls);
std::size_t noc(const AnalysisContext& ctx, const ClassInfo& cls);

/// Response set closed to `alpha` nesting levels; R_0 is the class's own
/// method set, each level adds the methods invoked by the previous one.
std::size_t rfc(const AnalysisContext& ctx, const ClassInfo& cls, int alpha = 1);

/// Sum of cyclomatic numbers over declared concrete methods.
std::uint64_t wmc(const ClassInfo& cls);

CboResult cbo(const AnalysisContext& ctx, const ClassInfo& cls);

/// Invocation sites into methods of other classes (own-class calls excluded).
std::uint64_t mpc(const AnalysisContext& ctx, const ClassInfo& cls);

DacResult dac(const AnalysisContext& ctx, const ClassInfo& cls);

PackageCouplingRow ca_ce(const AnalysisContext& ctx, const PackageInfo& package);
std::vector<PackageCouplingRow> package_coupling(const AnalysisContext& ctx);

/// Coupling factor with the descendant-corrected denominator
/// TC^2 - TC - 2 * sum(|descendants|); client pairs where the source
/// descends from the target are excluded. Undefined when the denominator
/// is not positive.
std::optional<double> cof(const AnalysisContext& ctx);

/// Parameter-weighted polymorphic invocation counts: per method, each
/// invoked outside declaration expands to itself plus its overrides in
/// descendants, each contributing (1 + arity) * sites.
std::uint64_t icp_method(const AnalysisContext& ctx, const ClassInfo& cls, const MethodInfo& m);
std::uint64_t icp_class(const AnalysisContext& ctx, const ClassInfo& cls);
std::uint64_t icp_system(const AnalysisContext& ctx);

LcomResult lcom_suite(const AnalysisContext& ctx, const ClassInfo& cls);

/// TCC over public implemented methods with direct-or-indirect common
/// attribute use (indirect = through invoked methods of the same class);
/// LCC closes the relation transitively. Undefined with < 2 public methods.
TccResult tcc_lcc(const AnalysisContext& ctx, const ClassInfo& cls);

ClassMetricRow class_metrics(const AnalysisContext& ctx, const ClassInfo& cls);

/// The static classification of every measure under the unified coupling
/// and cohesion frameworks. Measures the tool does not compute are still
/// listed, flagged not-implemented.
struct MeasureClassification {
    std::string measure_id;
    std::string connection_type;
    std::string domain;       // attribute | method | class | set-of-classes | system
    std::string directness;   // direct | indirect
    std::string inheritance_handling;
    std::string accessor_policy;
    bool implemented = true;
};
std::vector<MeasureClassification> classify_measures();

/// Scenario-level cohesion: CL_UC = |Q|/|P| per use case (undefined with
/// < 2 scenarios), CL_UCM = 1 - |QM|/|PM| over the whole model, FC = the
/// MOOD coupling factor of the accompanying code model.
struct UseCaseCohesion {
    std::map<std::string, std::optional<double>> cl_uc;
    std::optional<double> cl_ucm;
    std::optional<double> fc;
};
UseCaseCohesion usecase_cohesion(const ScenarioModel& sm, const AnalysisContext& ctx);

}  // namespace oometrix
