#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oometrix/ck.hpp"
#include "oometrix/mood.hpp"

using namespace oometrix;
using namespace testutil;

namespace {

Invocation call(std::string target, std::string signature, std::uint32_t sites = 1) {
    Invocation inv;
    inv.target_class = std::move(target);
    inv.target_signature = std::move(signature);
    inv.site_count = sites;
    return inv;
}

AttributeRef ref(std::string owner, std::string name) {
    AttributeRef r;
    r.owner_class = std::move(owner);
    r.attribute_name = std::move(name);
    return r;
}

const ClassInfo& named(const AnalysisContext& ctx, const std::string& name) {
    const ClassInfo* c = ctx.model().find_class(name);
    REQUIRE(c);
    return *c;
}

}  // namespace

TEST_CASE("dit and noc over the hierarchy") {
    CodeModel m = model_of({cls("A"), cls("B", {"A"}), cls("C", {"B"}), cls("D", {"A"})});
    AnalysisContext ctx(m);
    CHECK(dit(ctx, named(ctx, "A")) == 0);
    CHECK(dit(ctx, named(ctx, "C")) == 2);
    CHECK(noc(ctx, named(ctx, "A")) == 2);
    CHECK(noc(ctx, named(ctx, "B")) == 1);
    CHECK(noc(ctx, named(ctx, "C")) == 0);
}

TEST_CASE("rfc: own methods plus invoked closure per alpha") {
    ClassInfo a = cls("A");
    a.methods = {method("m1"), method("m2"), method("m3")};
    CodeModel quiet = model_of({a});
    AnalysisContext qctx(quiet);
    CHECK(rfc(qctx, named(qctx, "A")) == 3);

    ClassInfo b = cls("B");
    b.methods = {method("n1"), method("n2")};
    b.methods[0].invocations = {call("C", "k1()")};
    ClassInfo c = cls("C");
    c.methods = {method("k1"), method("k2")};
    c.methods[0].invocations = {call("C", "k2()")};
    ClassInfo caller = cls("A");
    caller.methods = {method("m1"), method("m2")};
    caller.methods[0].invocations = {call("B", "n1()")};
    caller.methods[1].invocations = {call("B", "n2()")};
    CodeModel m = model_of({caller, b, c});
    AnalysisContext ctx(m);
    // alpha 1: {m1, m2, B.n1, B.n2}; alpha 2 pulls in C.k1; alpha 3 C.k2.
    CHECK(rfc(ctx, named(ctx, "A"), 1) == 4);
    CHECK(rfc(ctx, named(ctx, "A"), 2) == 5);
    CHECK(rfc(ctx, named(ctx, "A"), 3) == 6);
    CHECK(rfc(ctx, named(ctx, "A"), 4) == 6);
}

TEST_CASE("wmc sums cyclomatic over concrete methods") {
    ClassInfo a = cls("A");
    a.methods = {method("m1"), method("m2"), method("f")};
    a.methods[0].cyclomatic = 3;
    a.methods[1].cyclomatic = 2;
    a.methods[2].is_abstract = true;
    a.methods[2].cyclomatic = 0;
    a.is_abstract = true;
    CodeModel m = model_of({a});
    AnalysisContext ctx(m);
    CHECK(wmc(named(ctx, "A")) == 5);
}

TEST_CASE("cbo counts both directions, prime drops ancestors") {
    ClassInfo a = cls("A");
    a.methods = {method("m")};
    a.methods[0].invocations = {call("B", "n()")};
    ClassInfo b = cls("B");
    b.methods = {method("n")};
    ClassInfo c = cls("C");
    c.methods = {method("k")};
    c.methods[0].invocations = {call("A", "m()")};
    CodeModel m = model_of({a, b, c});
    AnalysisContext ctx(m);
    CHECK(cbo(ctx, named(ctx, "A")).cbo == 2);
    CHECK(cbo(ctx, named(ctx, "B")).cbo == 1);

    ClassInfo base = cls("Base");
    base.methods = {method("n")};
    ClassInfo sub = cls("Sub", {"Base"});
    sub.methods = {method("m")};
    sub.methods[0].invocations = {call("Base", "n()")};
    CodeModel h = model_of({base, sub});
    AnalysisContext hctx(h);
    CboResult r = cbo(hctx, named(hctx, "Sub"));
    CHECK(r.cbo == 1);
    CHECK(r.cbo_prime == 0);
}

TEST_CASE("mpc sums external call sites only") {
    ClassInfo a = cls("A");
    a.methods = {method("m"), method("own")};
    a.methods[0].invocations = {call("B", "n()", 3), call("A", "own()", 5)};
    ClassInfo b = cls("B");
    b.methods = {method("n")};
    CodeModel m = model_of({a, b});
    AnalysisContext ctx(m);
    CHECK(mpc(ctx, named(ctx, "A")) == 3);
    CHECK(mpc(ctx, named(ctx, "B")) == 0);
}

TEST_CASE("dac multiset vs distinct type counts") {
    ClassInfo a = cls("A");
    a.attributes = {attr("x", "B"), attr("y", "B"), attr("z", "int")};
    ClassInfo b = cls("B");
    CodeModel m = model_of({a, b});
    AnalysisContext ctx(m);
    DacResult r = dac(ctx, named(ctx, "A"));
    CHECK(r.dac == 2);
    CHECK(r.dac_prime == 1);

    ClassInfo a2 = cls("A");
    a2.attributes = {attr("x", "B"), attr("y", "C")};
    CodeModel m2 = model_of({a2, cls("B"), cls("C")});
    AnalysisContext ctx2(m2);
    DacResult r2 = dac(ctx2, named(ctx2, "A"));
    CHECK(r2.dac == 2);
    CHECK(r2.dac_prime == 2);
}

TEST_CASE("package ca/ce at class granularity") {
    ClassInfo a = cls("A");
    a.package = "p";
    a.attributes = {attr("x", "B"), attr("y", "C")};
    ClassInfo b = cls("B");
    b.package = "q";
    ClassInfo c = cls("C");
    c.package = "r";
    ClassInfo user = cls("U");
    user.package = "q";
    user.attributes = {attr("a", "A")};
    CodeModel m = model_of({a, b, c, user});
    AnalysisContext ctx(m);
    for (const auto& row : package_coupling(ctx)) {
        if (row.package == "p") {
            CHECK(row.ca == 1);  // U uses A
            CHECK(row.ce == 1);  // A reaches outside, counted once
        }
        if (row.package == "r") {
            CHECK(row.ca == 1);
            CHECK(row.ce == 0);
        }
    }
}

TEST_CASE("cof: flat-model equality with cf and degenerate denominator") {
    ClassInfo a = cls("A");
    a.attributes = {attr("b", "B")};
    CodeModel flat = model_of({a, cls("B"), cls("C")});
    AnalysisContext ctx(flat);
    CHECK(*cof(ctx) == doctest::Approx(1.0 / 6.0));
    CHECK(*cof(ctx) == doctest::Approx(*cf(ctx)));

    CodeModel pair = model_of({cls("P"), cls("Q", {"P"})});
    CHECK_FALSE(cof(AnalysisContext(pair)));
}

TEST_CASE("icp weights calls by 1 + arity and expands overrides") {
    ClassInfo a = cls("A");
    a.methods = {method("m")};
    a.methods[0].invocations = {call("B", "n(int)", 2)};
    ClassInfo b = cls("B");
    b.methods = {method("n", {"int"})};
    CodeModel m = model_of({a, b});
    AnalysisContext ctx(m);
    CHECK(icp_class(ctx, named(ctx, "A")) == 4);
    CHECK(icp_system(ctx) == 4);

    // Declaration plus 2 descendant overrides: 3 targets, each (1+0)*1.
    ClassInfo base = cls("Base");
    base.methods = {method("f")};
    ClassInfo s1 = cls("S1", {"Base"});
    s1.methods = {method("f")};
    ClassInfo s2 = cls("S2", {"S1"});
    s2.methods = {method("f")};
    ClassInfo caller = cls("A");
    caller.methods = {method("m")};
    caller.methods[0].invocations = {call("Base", "f()", 1)};
    CodeModel poly = model_of({base, s1, s2, caller});
    AnalysisContext pctx(poly);
    CHECK(icp_class(pctx, named(pctx, "A")) == 3);
}

TEST_CASE("lcom suite spec examples") {
    ClassInfo share = cls("A");
    share.attributes = {attr("a", "int")};
    share.methods = {method("m1"), method("m2")};
    share.methods[0].referenced_attributes = {ref("A", "a")};
    share.methods[1].referenced_attributes = {ref("A", "a")};
    CodeModel m1 = model_of({share});
    AnalysisContext c1(m1);
    LcomResult r1 = lcom_suite(c1, named(c1, "A"));
    CHECK(r1.lcom1 == 0);
    CHECK(r1.lcom2 == 0);
    CHECK(r1.lcom4 == 1);

    ClassInfo lone = cls("A");
    lone.attributes = {attr("a", "int"), attr("b", "int"), attr("c", "int")};
    lone.methods = {method("m1"), method("m2"), method("m3")};
    lone.methods[0].referenced_attributes = {ref("A", "a")};
    lone.methods[1].referenced_attributes = {ref("A", "b")};
    lone.methods[2].referenced_attributes = {ref("A", "c")};
    CodeModel m2 = model_of({lone});
    AnalysisContext c2(m2);
    LcomResult r2 = lcom_suite(c2, named(c2, "A"));
    CHECK(r2.lcom1 == 3);
    CHECK(r2.lcom2 == 3);
    CHECK(r2.lcom3 == 3);

    ClassInfo bridged = cls("A");
    bridged.attributes = {attr("a", "int")};
    bridged.methods = {method("m1"), method("m2"), method("m3")};
    bridged.methods[0].referenced_attributes = {ref("A", "a")};
    bridged.methods[1].referenced_attributes = {ref("A", "a")};
    bridged.methods[1].invocations = {call("A", "m3()")};
    CodeModel m3 = model_of({bridged});
    AnalysisContext c3(m3);
    LcomResult r3 = lcom_suite(c3, named(c3, "A"));
    CHECK(r3.lcom3 == 2);
    CHECK(r3.lcom4 == 1);
}

TEST_CASE("lcom5 formula and undefined cases") {
    // 2 methods, 2 attributes, 3 uses total: (2 - 3/2) / (2 - 1) = 0.5.
    ClassInfo a = cls("A");
    a.attributes = {attr("x", "int"), attr("y", "int")};
    a.methods = {method("m1"), method("m2")};
    a.methods[0].referenced_attributes = {ref("A", "x"), ref("A", "y")};
    a.methods[1].referenced_attributes = {ref("A", "x")};
    CodeModel m = model_of({a});
    AnalysisContext ctx(m);
    CHECK(*lcom_suite(ctx, named(ctx, "A")).lcom5 == doctest::Approx(0.5));

    ClassInfo single = cls("A");
    single.attributes = {attr("x", "int")};
    single.methods = {method("m1")};
    CodeModel sm = model_of({single});
    AnalysisContext sctx(sm);
    CHECK_FALSE(lcom_suite(sctx, named(sctx, "A")).lcom5);

    ClassInfo bare = cls("A");
    bare.methods = {method("m1"), method("m2")};
    CodeModel bm = model_of({bare});
    AnalysisContext bctx(bm);
    CHECK_FALSE(lcom_suite(bctx, named(bctx, "A")).lcom5);
}

TEST_CASE("tcc and lcc over public pairs with same-class indirection") {
    ClassInfo a = cls("A");
    a.attributes = {attr("x", "int")};
    a.methods = {method("m1"), method("m2"), method("m3")};
    a.methods[0].referenced_attributes = {ref("A", "x")};
    a.methods[1].referenced_attributes = {ref("A", "x")};
    CodeModel m = model_of({a});
    AnalysisContext ctx(m);
    TccResult r = tcc_lcc(ctx, named(ctx, "A"));
    CHECK(*r.tcc == doctest::Approx(1.0 / 3.0));
    CHECK(*r.lcc == doctest::Approx(1.0 / 3.0));

    // Chain m1~m2 (x) and m2~m3 (y): tcc 2/3, closure connects m1~m3.
    ClassInfo chain = cls("A");
    chain.attributes = {attr("x", "int"), attr("y", "int")};
    chain.methods = {method("m1"), method("m2"), method("m3")};
    chain.methods[0].referenced_attributes = {ref("A", "x")};
    chain.methods[1].referenced_attributes = {ref("A", "x"), ref("A", "y")};
    chain.methods[2].referenced_attributes = {ref("A", "y")};
    CodeModel cm = model_of({chain});
    AnalysisContext cctx(cm);
    TccResult cr = tcc_lcc(cctx, named(cctx, "A"));
    CHECK(*cr.tcc == doctest::Approx(2.0 / 3.0));
    CHECK(*cr.lcc == doctest::Approx(1.0));

    // Indirect attribute use through an invoked private helper.
    ClassInfo indirect = cls("A");
    indirect.attributes = {attr("x", "int")};
    indirect.methods = {method("m1"), method("m2"), method("h", {}, Visibility::Private)};
    indirect.methods[0].invocations = {call("A", "h()")};
    indirect.methods[1].referenced_attributes = {ref("A", "x")};
    indirect.methods[2].referenced_attributes = {ref("A", "x")};
    CodeModel im = model_of({indirect});
    AnalysisContext ictx(im);
    CHECK(*tcc_lcc(ictx, named(ictx, "A")).tcc == doctest::Approx(1.0));

    ClassInfo one_pub = cls("A");
    one_pub.methods = {method("m1"), method("p", {}, Visibility::Private)};
    CodeModel om = model_of({one_pub});
    AnalysisContext octx(om);
    CHECK_FALSE(tcc_lcc(octx, named(octx, "A")).tcc);
}

TEST_CASE("classification table entries") {
    const auto table = classify_measures();
    auto find = [&](const std::string& id) -> const MeasureClassification* {
        for (const auto& row : table)
            if (row.measure_id == id) return &row;
        return nullptr;
    };
    REQUIRE(find("LCOM4"));
    CHECK(find("LCOM4")->directness == "indirect");
    REQUIRE(find("TCC"));
    CHECK(find("TCC")->directness == "direct");
    CHECK(find("TCC")->implemented);
    REQUIRE(find("ICH"));
    CHECK(find("ICH")->domain == "method");
    CHECK_FALSE(find("ICH")->implemented);
    REQUIRE(find("RCI"));
    CHECK_FALSE(find("RCI")->implemented);
}

TEST_CASE("use-case cohesion ratios") {
    CodeModel m = model_of({cls("A"), cls("B")});
    ScenarioModel sm;
    sm.use_cases = {{"uc1", {"s1", "s2", "s3", "s4"}}, {"uc2", {"t1"}}};
    sm.similar_pairs = {{"s1", "s2"}, {"s3", "s4"}};
    m.scenario_model = sm;
    AnalysisContext ctx(m);
    UseCaseCohesion r = usecase_cohesion(sm, ctx);
    CHECK(*r.cl_uc.at("uc1") == doctest::Approx(1.0 / 3.0));
    CHECK_FALSE(r.cl_uc.at("uc2"));
    // QM = Q = 2 similar pairs of PM = C(5,2) = 10 model-wide pairs.
    CHECK(*r.cl_ucm == doctest::Approx(1.0 - 2.0 / 10.0));
    CHECK(*r.fc == doctest::Approx(0.0));

    ScenarioModel full;
    full.use_cases = {{"uc", {"a", "b", "c"}}};
    full.similar_pairs = {{"a", "b"}, {"a", "c"}, {"b", "c"}};
    UseCaseCohesion fr = usecase_cohesion(full, ctx);
    CHECK(*fr.cl_uc.at("uc") == doctest::Approx(1.0));
}

TEST_CASE("invariants hold on random models") {
    std::mt19937 rng(77);
    for (int i = 0; i < 200; ++i) {
        CodeModel m = random_model(rng, 12);
        AnalysisContext ctx(m);
        for (const auto& c : m.classes) {
            ClassMetricRow row = class_metrics(ctx, c);
            CHECK(row.lcom.lcom2 <= row.lcom.lcom1);
            CHECK(row.lcom.lcom3 >= row.lcom.lcom4);
            CHECK(row.cbo.cbo_prime <= row.cbo.cbo);
            if (row.tcc.tcc) CHECK(*row.tcc.tcc <= *row.tcc.lcc + 1e-12);
            CHECK(row.rfc >= c.methods.size());
        }
    }
}

TEST_CASE("brute-force oracle equivalence on random models") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 200; ++i) {
        CodeModel m = random_model(rng, 12);
        AnalysisContext ctx(m);
        auto expected_cof = testutil::oracle::cof(m);
        auto actual_cof = cof(ctx);
        CHECK(expected_cof.has_value() == actual_cof.has_value());
        if (expected_cof) CHECK(*actual_cof == doctest::Approx(*expected_cof).epsilon(1e-12));
        for (const auto& c : m.classes) {
            CHECK(cbo(ctx, c).cbo == testutil::oracle::cbo(m, c.qualified_name));
            const auto [l1, l2] = testutil::oracle::lcom12(c);
            LcomResult lr = lcom_suite(ctx, c);
            CHECK(lr.lcom1 == l1);
            CHECK(lr.lcom2 == l2);
            const auto [otcc, olcc] = testutil::oracle::tcc_lcc(c);
            TccResult tr = tcc_lcc(ctx, c);
            CHECK(otcc.has_value() == tr.tcc.has_value());
            if (otcc) {
                CHECK(*tr.tcc == doctest::Approx(*otcc).epsilon(1e-12));
                CHECK(*tr.lcc == doctest::Approx(*olcc).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("flat random models: cof equals cf") {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 50) {
        CodeModel m = random_model(rng, 10);
        bool flat = true;
        for (auto& c : m.classes) flat = flat && c.parents.empty();
        if (!flat || m.total_classes() < 2) continue;
        ++checked;
        AnalysisContext ctx(m);
        auto a = cof(ctx);
        auto b = cf(ctx);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
    }
}
