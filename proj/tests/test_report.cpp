#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "helpers.hpp"
#include "oometrix/report.hpp"

using namespace oometrix;
using namespace testutil;
using nlohmann::json;

namespace {

std::string report_json_for(const AnalysisContext& ctx, const ThresholdConfig& t) {
    ReportInputs in;
    in.ctx = &ctx;
    in.thresholds = &t;
    return render_report_json(in);
}

std::vector<std::string> csv_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(line);
    return rows;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(field);
            field.clear();
        } else {
            field += ch;
        }
    }
    out.push_back(field);
    return out;
}

}  // namespace

TEST_CASE("report json is byte-identical across runs and class orderings") {
    CodeModel m = load_model(source_dir() + "/fixtures/two_classes.json");
    ThresholdConfig t = ThresholdConfig::defaults();
    AnalysisContext ctx(m);
    const std::string first = report_json_for(ctx, t);
    const std::string second = report_json_for(ctx, t);
    CHECK(first == second);

    CodeModel reversed = m;
    std::reverse(reversed.classes.begin(), reversed.classes.end());
    validate_model(reversed);
    AnalysisContext rctx(reversed);
    CHECK(report_json_for(rctx, t) == first);
}

TEST_CASE("report structure: one row per class, catalog-complete metrics") {
    CodeModel m = load_model(source_dir() + "/fixtures/two_classes.json");
    ThresholdConfig t = ThresholdConfig::defaults();
    AnalysisContext ctx(m);
    const json doc = json::parse(report_json_for(ctx, t));

    CHECK(doc["schemaVersion"] == kReportSchemaVersion);
    CHECK(doc["modelName"] == "two-classes");
    REQUIRE(doc["classes"].size() == 2);
    CHECK(doc["classes"][0]["name"] == "demo.Account");
    CHECK(doc["classes"][1]["name"] == "demo.Customer");

    // Every id in the documented catalog appears in the report, and the
    // report carries nothing the catalog does not list.
    std::set<std::string> catalog(metric_catalog().begin(), metric_catalog().end());
    std::set<std::string> emitted;
    for (const auto& [key, value] : doc["system"]["mood"].items()) emitted.insert(key);
    emitted.insert("cof");
    for (const auto& [key, value] : doc["system"]["qmood"]["properties"].items())
        emitted.insert(key);
    for (const auto& [key, value] : doc["system"]["qmood"]["factors"].items()) emitted.insert(key);
    for (const auto& [key, value] : doc["classes"][0]["metrics"].items()) emitted.insert(key);
    for (const auto& [key, value] : doc["classes"][0]["operands"].items()) emitted.insert(key);
    for (const auto& [key, value] : doc["classes"][0]["criteria"].items()) emitted.insert(key);
    for (const auto& [key, value] : doc["packages"][0].items())
        if (key != "name") emitted.insert(key);
    CHECK(emitted == catalog);
}

TEST_CASE("undefined metrics serialize as null and percentages carry 3 decimals") {
    // Single class: MOOD denominators vanish, so every factor is null.
    ClassInfo a = cls("Solo");
    a.methods = {method("m")};
    a.comment_lines = 3;
    a.total_lines = 9;
    CodeModel m = model_of({a}, "solo");
    ThresholdConfig t = ThresholdConfig::defaults();
    AnalysisContext ctx(m);
    const json doc = json::parse(report_json_for(ctx, t));
    CHECK(doc["system"]["mood"]["mhf"].is_null());
    CHECK(doc["system"]["cof"].is_null());
    const std::string text = report_json_for(ctx, t);
    // cl_comf = 3/9 as a percentage, rounded to 3 decimals
    CHECK(doc["classes"][0]["operands"]["cl_comf"].get<double>() == doctest::Approx(33.333));
    CHECK(text.find("33.333") != std::string::npos);
}

TEST_CASE("mood ratios are serialized as 0-100 percentages") {
    ClassInfo a = cls("A");
    a.attributes = {attr("b", "B")};
    CodeModel m = model_of({a, cls("B"), cls("C")}, "pct");
    ThresholdConfig t = ThresholdConfig::defaults();
    AnalysisContext ctx(m);
    const json doc = json::parse(report_json_for(ctx, t));
    // CF = 1/6 -> 16.667%
    CHECK(doc["system"]["mood"]["cf"].get<double>() == doctest::Approx(16.667));
    CHECK(doc["system"]["cof"].get<double>() == doctest::Approx(16.667));
}

TEST_CASE("csv rows mirror the json values field for field") {
    CodeModel m = load_model(source_dir() + "/fixtures/two_classes.json");
    ThresholdConfig t = ThresholdConfig::defaults();
    AnalysisContext ctx(m);
    ReportInputs in;
    in.ctx = &ctx;
    in.thresholds = &t;
    const json doc = json::parse(render_report_json(in));
    const auto rows = csv_rows(render_report_csv(in));
    REQUIRE(rows.size() == 3);  // header + one row per class
    const auto header = split_csv(rows[0]);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto fields = split_csv(rows[r]);
        REQUIRE(fields.size() == header.size());
        const json& cls_row = doc["classes"][r - 1];
        for (std::size_t i = 0; i < header.size(); ++i) {
            const std::string& col = header[i];
            json expected;
            if (col == "class") expected = cls_row["name"];
            else if (col == "category") expected = cls_row["category"];
            else if (cls_row["metrics"].contains(col)) expected = cls_row["metrics"][col];
            else if (cls_row["operands"].contains(col)) expected = cls_row["operands"][col];
            else if (cls_row["criteria"].contains(col)) expected = cls_row["criteria"][col];
            else continue;
            const std::string want =
                expected.is_string() ? expected.get<std::string>() : expected.dump();
            INFO(col);
            CHECK(fields[i] == want);
        }
    }
}

TEST_CASE("csv marks undefined values with the null token") {
    ClassInfo a = cls("Solo");
    a.methods = {method("m")};
    CodeModel m = model_of({a}, "solo");
    ThresholdConfig t = ThresholdConfig::defaults();
    AnalysisContext ctx(m);
    ReportInputs in;
    in.ctx = &ctx;
    in.thresholds = &t;
    const auto rows = csv_rows(render_report_csv(in));
    REQUIRE(rows.size() == 2);
    const auto header = split_csv(rows[0]);
    const auto fields = split_csv(rows[1]);
    // tcc needs >= 2 public methods; the lone-method class leaves it null.
    const auto it = std::find(header.begin(), header.end(), "tcc");
    REQUIRE(it != header.end());
    CHECK(fields[static_cast<std::size_t>(it - header.begin())] == "null");
}

TEST_CASE("kiviat data flags exactly the violated operands") {
    ClassInfo heavy = cls("Heavy");
    for (int i = 0; i < 9; ++i)
        heavy.attributes.push_back(attr("a" + std::to_string(i), "int", Visibility::Private));
    heavy.methods = {method("m")};
    CodeModel m = model_of({heavy, cls("Other")}, "kiviat");
    ThresholdConfig t = ThresholdConfig::defaults();
    AnalysisContext ctx(m);
    const auto data = kiviat_data(ctx, *m.find_class("Heavy"), t);
    CHECK(data.size() == operand_ids().size());
    for (const auto& entry : data) {
        if (entry.metric_id == "cl_data") {
            CHECK(entry.value == doctest::Approx(9));
            CHECK(entry.max == doctest::Approx(7));
            CHECK(entry.status == -1);
        } else {
            INFO(entry.metric_id);
            CHECK(entry.status == 0);
        }
    }

    const auto clean = kiviat_data(ctx, *m.find_class("Other"), t);
    for (const auto& entry : clean) CHECK(entry.status == 0);

    const json doc = json::parse(render_kiviat_json(ctx, *m.find_class("Heavy"), t));
    CHECK(doc["class"] == "Heavy");
    CHECK(doc["entries"].size() == operand_ids().size());
}

TEST_CASE("any_class_poor reflects the classification") {
    CodeModel clean = load_model(source_dir() + "/fixtures/two_classes.json");
    ThresholdConfig t = ThresholdConfig::defaults();
    CHECK_FALSE(any_class_poor(AnalysisContext(clean), t));

    ClassInfo bad = cls("Bad");
    for (int i = 0; i < 30; ++i) {
        bad.attributes.push_back(attr("a" + std::to_string(i), "int", Visibility::Public));
        bad.methods.push_back(method("m" + std::to_string(i)));
    }
    for (auto& mm : bad.methods) mm.cyclomatic = 4;
    CodeModel dirty = model_of({bad}, "dirty");
    CHECK(any_class_poor(AnalysisContext(dirty), t));
}

TEST_CASE("recommendations fire per rule and stay silent on clean classes") {
    ThresholdConfig t = ThresholdConfig::defaults();

    CodeModel clean = load_model(source_dir() + "/fixtures/two_classes.json");
    CHECK(recommend(AnalysisContext(clean), t).empty());

    ClassInfo leaky = cls("Leaky");
    leaky.attributes = {attr("x", "int", Visibility::Public),
                        attr("y", "int", Visibility::Public)};
    CodeModel lm = model_of({leaky}, "leaky");
    const auto leaks = recommend(AnalysisContext(lm), t);
    REQUIRE(leaks.size() == 1);
    CHECK(leaks[0].rule_id == "privatize-attributes");
    CHECK(leaks[0].triggering_operand == "cl_data_publ");
    CHECK(leaks[0].value == doctest::Approx(2));

    ClassInfo fat = cls("Fat");
    for (int i = 0; i < 26; ++i) {
        fat.attributes.push_back(attr("a" + std::to_string(i), "int", Visibility::Private));
        fat.methods.push_back(method("m" + std::to_string(i), {}, Visibility::Private));
    }
    CodeModel fm = model_of({fat}, "fat");
    const auto splits = recommend(AnalysisContext(fm), t);
    bool split = std::any_of(splits.begin(), splits.end(), [](const Recommendation& r) {
        return r.rule_id == "split-class";
    });
    CHECK(split);

    const json doc = json::parse(render_recommendations_json(splits));
    CHECK(doc["recommendations"].size() == splits.size());
}

TEST_CASE("comment-floor recommendation uses the configured minimum") {
    ThresholdConfig t = ThresholdConfig::defaults();
    t.ranges["cl_comf"].min = 10;
    ClassInfo quiet = cls("Quiet");
    quiet.methods = {method("m")};
    quiet.comment_lines = 0;
    quiet.total_lines = 50;
    CodeModel m = model_of({quiet}, "quiet");
    const auto recs = recommend(AnalysisContext(m), t);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].rule_id == "add-comments");
    CHECK(recs[0].triggering_operand == "cl_comf");
}

TEST_CASE("class-name suggestions rank by edit distance") {
    CodeModel m = load_model(source_dir() + "/fixtures/two_classes.json");
    const auto names = suggest_class_names(m, "demo.Acount");
    REQUIRE_FALSE(names.empty());
    CHECK(names[0] == "demo.Account");
}

TEST_CASE("trend json carries deltas, sdi, and the tracking verdict") {
    ClassInfo a = cls("A");
    a.methods = {method("m1"), method("m2")};
    for (auto& mm : a.methods) mm.statements = 6;
    CodeModel old_model = model_of({a}, "old");
    ClassInfo a2 = a;
    a2.methods.pop_back();
    CodeModel new_model = model_of({a2}, "new");

    TrendReport r = compare_versions(AnalysisContext(old_model), AnalysisContext(new_model));
    const json doc = json::parse(render_trend_json(r));
    CHECK(doc["totals"]["direction"] == "decreased");
    CHECK(doc["totals"]["maintainabilityDelta"].get<double>() < 0);
    CHECK(doc["trackingConsistent"].get<bool>());
    CHECK(doc["sdi"]["value"].get<double>() == doctest::Approx(0.0));
    REQUIRE(doc["classes"].size() == 1);
    CHECK(doc["classes"][0]["name"] == "A");
    CHECK(doc["classes"][0]["operandDeltas"]["cl_func"].get<double>() == doctest::Approx(-1));
    CHECK(doc["classes"][0]["criteriaDeltas"]["changeability"].get<double>() ==
          doctest::Approx(-7));
}
