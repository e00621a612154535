#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oometrix/model.hpp"

namespace oometrix {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// nlohmann reports byte offsets; map back to line/column for diagnostics.
std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Visibility require_visibility(const json& j, const std::string& entity) {
    auto v = visibility_from_string(j.get<std::string>());
    if (!v) throw ValidationError("visibility is one of the four levels", entity, j.get<std::string>());
    return *v;
}

MethodInfo method_from_json(const json& j, const std::string& cls) {
    MethodInfo m;
    m.name = j.at("name").get<std::string>();
    const std::string entity = cls + "::" + m.name;
    if (j.contains("paramTypes")) m.param_type_names = j["paramTypes"].get<std::vector<std::string>>();
    if (j.contains("visibility")) m.visibility = require_visibility(j["visibility"], entity);
    m.is_abstract = j.value("abstract", false);
    m.is_constructor = j.value("constructor", false);
    m.cyclomatic = j.value("cyclomatic", m.is_abstract ? 0u : 1u);
    m.statements = j.value("statements", 0u);
    for (const auto& inv : j.value("invocations", json::array())) {
        m.invocations.push_back(Invocation{inv.at("class").get<std::string>(),
                                           inv.at("signature").get<std::string>(),
                                           inv.value("sites", 1u)});
    }
    for (const auto& ar : j.value("referencedAttributes", json::array())) {
        m.referenced_attributes.push_back(
            AttributeRef{ar.at("class").get<std::string>(), ar.at("attribute").get<std::string>()});
    }
    return m;
}

AttributeInfo attribute_from_json(const json& j, const std::string& cls) {
    AttributeInfo a;
    a.name = j.at("name").get<std::string>();
    a.type_name = j.at("type").get<std::string>();
    if (j.contains("visibility")) a.visibility = require_visibility(j["visibility"], cls + "::" + a.name);
    a.is_static = j.value("static", false);
    return a;
}

}  // namespace

CodeModel model_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ModelParseError(e.what(), line, col);
    }

    CodeModel model;
    int schema = j.value("schemaVersion", kModelSchemaVersion);
    if (schema != kModelSchemaVersion)
        throw ValidationError("supported schemaVersion", "model", std::to_string(schema));
    model.name = j.value("name", "");
    model.version = j.value("version", "");
    for (const auto& pj : j.value("packages", json::array())) {
        PackageInfo p;
        p.name = pj.at("name").get<std::string>();
        p.class_names = pj.value("classes", std::vector<std::string>{});
        model.packages.push_back(std::move(p));
    }
    for (const auto& cj : j.value("classes", json::array())) {
        ClassInfo c;
        c.qualified_name = cj.at("name").get<std::string>();
        c.package = cj.value("package", "");
        c.parents = cj.value("parents", std::vector<std::string>{});
        c.is_abstract = cj.value("abstract", false);
        c.comment_lines = cj.value("commentLines", 0u);
        c.total_lines = cj.value("totalLines", 0u);
        for (const auto& aj : cj.value("attributes", json::array()))
            c.attributes.push_back(attribute_from_json(aj, c.qualified_name));
        for (const auto& mj : cj.value("methods", json::array()))
            c.methods.push_back(method_from_json(mj, c.qualified_name));
        model.classes.push_back(std::move(c));
    }
    if (j.contains("scenarios")) {
        ScenarioModel sm;
        const auto& sj = j["scenarios"];
        for (const auto& uj : sj.value("useCases", json::array())) {
            ScenarioModel::UseCase uc;
            uc.name = uj.at("name").get<std::string>();
            uc.scenarios = uj.value("scenarios", std::vector<std::string>{});
            sm.use_cases.push_back(std::move(uc));
        }
        for (const auto& pj : sj.value("similarPairs", json::array())) {
            std::string a = pj.at(0).get<std::string>();
            std::string b = pj.at(1).get<std::string>();
            if (a > b) std::swap(a, b);
            sm.similar_pairs.emplace(a, b);
        }
        model.scenario_model = std::move(sm);
    }
    validate_model(model);
    return model;
}

CodeModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json_text(buf.str());
}

std::string model_to_json_text(const CodeModel& model) {
    ordered_json j;
    j["schemaVersion"] = kModelSchemaVersion;
    j["name"] = model.name;
    j["version"] = model.version;

    auto packages = model.packages;
    std::sort(packages.begin(), packages.end(),
              [](const PackageInfo& a, const PackageInfo& b) { return a.name < b.name; });
    j["packages"] = ordered_json::array();
    for (auto& p : packages) {
        std::sort(p.class_names.begin(), p.class_names.end());
        j["packages"].push_back({{"name", p.name}, {"classes", p.class_names}});
    }

    std::vector<const ClassInfo*> classes;
    for (const auto& c : model.classes) classes.push_back(&c);
    std::sort(classes.begin(), classes.end(),
              [](const ClassInfo* a, const ClassInfo* b) { return a->qualified_name < b->qualified_name; });
    j["classes"] = ordered_json::array();
    for (const ClassInfo* c : classes) {
        ordered_json cj;
        cj["name"] = c->qualified_name;
        cj["package"] = c->package;
        cj["parents"] = c->parents;
        cj["abstract"] = c->is_abstract;
        cj["commentLines"] = c->comment_lines;
        cj["totalLines"] = c->total_lines;
        cj["attributes"] = ordered_json::array();
        for (const auto& a : c->attributes) {
            cj["attributes"].push_back({{"name", a.name},
                                        {"type", a.type_name},
                                        {"visibility", to_string(a.visibility)},
                                        {"static", a.is_static}});
        }
        cj["methods"] = ordered_json::array();
        for (const auto& m : c->methods) {
            ordered_json mj;
            mj["name"] = m.name;
            mj["paramTypes"] = m.param_type_names;
            mj["visibility"] = to_string(m.visibility);
            mj["abstract"] = m.is_abstract;
            mj["constructor"] = m.is_constructor;
            mj["cyclomatic"] = m.cyclomatic;
            mj["statements"] = m.statements;
            mj["invocations"] = ordered_json::array();
            for (const auto& inv : m.invocations)
                mj["invocations"].push_back(
                    {{"class", inv.target_class}, {"signature", inv.target_signature}, {"sites", inv.site_count}});
            mj["referencedAttributes"] = ordered_json::array();
            for (const auto& ar : m.referenced_attributes)
                mj["referencedAttributes"].push_back({{"class", ar.owner_class}, {"attribute", ar.attribute_name}});
            cj["methods"].push_back(std::move(mj));
        }
        j["classes"].push_back(std::move(cj));
    }

    if (model.scenario_model) {
        const auto& sm = *model.scenario_model;
        ordered_json sj;
        sj["useCases"] = ordered_json::array();
        for (const auto& uc : sm.use_cases)
            sj["useCases"].push_back({{"name", uc.name}, {"scenarios", uc.scenarios}});
        sj["similarPairs"] = ordered_json::array();
        for (const auto& [a, b] : sm.similar_pairs) sj["similarPairs"].push_back({a, b});
        j["scenarios"] = std::move(sj);
    }
    return j.dump(2) + "\n";
}

void save_model(const CodeModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << model_to_json_text(model);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace oometrix
