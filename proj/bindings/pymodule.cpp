// Python bindings: thin JSON-string wrappers over the analysis pipeline.
// Models travel as canonical model-JSON text; reports come back as the
// same JSON the CLI writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "oometrix/model.hpp"
#include "oometrix/parser.hpp"
#include "oometrix/quality.hpp"
#include "oometrix/report.hpp"

namespace py = pybind11;
using namespace oometrix;

namespace {

MetricsConfig config_from(bool include_constructors, bool include_accessors, int rfc_alpha) {
    MetricsConfig cfg;
    cfg.include_constructors = include_constructors;
    cfg.include_accessors = include_accessors;
    cfg.rfc_alpha = rfc_alpha;
    return cfg;
}

ThresholdConfig thresholds_from(const std::string& path) {
    return path.empty() ? ThresholdConfig::defaults() : ThresholdConfig::load(path);
}

std::string parse_to_model_json(const std::vector<std::string>& paths) {
    const ParseResult r = parse_files(paths);
    if (r.has_errors()) {
        std::string msg = "parse failed:";
        for (const auto& d : r.diagnostics)
            if (d.severity == ParseDiagnostic::Severity::Error)
                msg += "\n" + d.path + ":" + std::to_string(d.line) + ": " + d.message;
        throw std::runtime_error(msg);
    }
    return model_to_json_text(r.model);
}

std::string analyze_json(const std::string& model_json, const std::string& thresholds_path,
                         const std::string& baseline_json, bool include_constructors,
                         bool include_accessors, int rfc_alpha) {
    const CodeModel model = model_from_json_text(model_json);
    std::optional<CodeModel> baseline;
    if (!baseline_json.empty()) baseline = model_from_json_text(baseline_json);
    const ThresholdConfig t = thresholds_from(thresholds_path);
    const AnalysisContext ctx(model,
                              config_from(include_constructors, include_accessors, rfc_alpha));
    ReportInputs in;
    in.ctx = &ctx;
    in.thresholds = &t;
    in.baseline = baseline ? &*baseline : nullptr;
    return render_report_json(in);
}

std::string analyze_csv(const std::string& model_json, const std::string& thresholds_path) {
    const CodeModel model = model_from_json_text(model_json);
    const ThresholdConfig t = thresholds_from(thresholds_path);
    const AnalysisContext ctx(model);
    ReportInputs in;
    in.ctx = &ctx;
    in.thresholds = &t;
    return render_report_csv(in);
}

std::string kiviat_json(const std::string& model_json, const std::string& class_name,
                        const std::string& thresholds_path) {
    const CodeModel model = model_from_json_text(model_json);
    const ClassInfo* cls = model.find_class(class_name);
    if (!cls) {
        std::string msg = "unknown class '" + class_name + "'";
        const auto suggestions = suggest_class_names(model, class_name);
        if (!suggestions.empty()) {
            msg += "; closest:";
            for (const auto& s : suggestions) msg += " " + s;
        }
        throw std::invalid_argument(msg);
    }
    const ThresholdConfig t = thresholds_from(thresholds_path);
    const AnalysisContext ctx(model);
    return render_kiviat_json(ctx, *cls, t);
}

std::string recommendations_json(const std::string& model_json,
                                 const std::string& thresholds_path) {
    const CodeModel model = model_from_json_text(model_json);
    const ThresholdConfig t = thresholds_from(thresholds_path);
    const AnalysisContext ctx(model);
    return render_recommendations_json(recommend(ctx, t));
}

std::string compare_json(const std::string& old_model_json, const std::string& new_model_json) {
    const CodeModel old_model = model_from_json_text(old_model_json);
    const CodeModel new_model = model_from_json_text(new_model_json);
    return render_trend_json(compare_versions(AnalysisContext(old_model),
                                              AnalysisContext(new_model)));
}

bool has_poor_class(const std::string& model_json, const std::string& thresholds_path) {
    const CodeModel model = model_from_json_text(model_json);
    return any_class_poor(AnalysisContext(model), thresholds_from(thresholds_path));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Object-oriented software quality metrics";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ModelParseError>(m, "ModelParseError", PyExc_ValueError);

    m.def("parse_to_model_json", &parse_to_model_json, py::arg("paths"),
          "Parse MiniOO source files into canonical model JSON.");
    m.def("analyze_json", &analyze_json, py::arg("model_json"), py::arg("thresholds_path") = "",
          py::arg("baseline_json") = "", py::arg("include_constructors") = true,
          py::arg("include_accessors") = true, py::arg("rfc_alpha") = 1,
          "Full metrics report as JSON text.");
    m.def("analyze_csv", &analyze_csv, py::arg("model_json"), py::arg("thresholds_path") = "",
          "Per-class metrics report as CSV text.");
    m.def("kiviat_json", &kiviat_json, py::arg("model_json"), py::arg("class_name"),
          py::arg("thresholds_path") = "", "Radar-chart data for one class as JSON text.");
    m.def("recommendations_json", &recommendations_json, py::arg("model_json"),
          py::arg("thresholds_path") = "", "Threshold-driven recommendations as JSON text.");
    m.def("compare_json", &compare_json, py::arg("old_model_json"), py::arg("new_model_json"),
          "Version trend report (deltas, SDI, tracking verdict) as JSON text.");
    m.def("has_poor_class", &has_poor_class, py::arg("model_json"),
          py::arg("thresholds_path") = "",
          "True when any class classifies as poor under the thresholds.");
}
