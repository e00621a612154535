#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oometrix/report.hpp"

namespace fs = std::filesystem;
using namespace oometrix;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitPoor = 2;

struct CommonOptions {
    std::string format = "json";
    std::string thresholds_path;
    std::string baseline_path;
    int alpha = 1;
    bool exclude_constructors = false;
    bool exclude_accessors = false;
    bool fail_on_poor = false;
    std::string output_path;  // empty -> stdout
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--thresholds", opt.thresholds_path, "Threshold config JSON file");
    cmd->add_option("--alpha", opt.alpha, "RFC nesting levels")->check(CLI::PositiveNumber);
    cmd->add_flag("--exclude-constructors", opt.exclude_constructors,
                  "Exclude constructors from method counts");
    cmd->add_flag("--exclude-accessors", opt.exclude_accessors,
                  "Exclude get*/set*/is* methods from cohesion measures");
    cmd->add_option("-o,--output", opt.output_path, "Write output to a file instead of stdout");
}

MetricsConfig metrics_config(const CommonOptions& opt) {
    MetricsConfig cfg;
    cfg.include_constructors = !opt.exclude_constructors;
    cfg.include_accessors = !opt.exclude_accessors;
    cfg.rfc_alpha = opt.alpha;
    return cfg;
}

// MiniOO source files under a directory, in stable order.
std::vector<std::string> collect_sources(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".minijava" || ext == ".java") paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

void print_diagnostics(const std::vector<ParseDiagnostic>& diags) {
    for (const auto& d : diags)
        std::cerr << d.path << ":" << d.line << ":" << d.column << ": "
                  << (d.severity == ParseDiagnostic::Severity::Error ? "error: " : "warning: ")
                  << d.message << "\n";
}

/// Resolves CLI inputs to one model: a single .json path loads a model
/// file; anything else is treated as MiniOO sources (directories are
/// searched recursively).
CodeModel load_inputs(const std::vector<std::string>& inputs,
                      std::vector<ParseDiagnostic>& diagnostics) {
    if (inputs.size() == 1 && inputs[0].size() > 5 &&
        inputs[0].substr(inputs[0].size() - 5) == ".json")
        return load_model(inputs[0]);

    std::vector<std::string> paths;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            auto found = collect_sources(in);
            paths.insert(paths.end(), found.begin(), found.end());
        } else {
            paths.push_back(in);
        }
    }
    if (paths.empty()) throw std::runtime_error("no source files found");
    ParseResult result = parse_files(paths);
    diagnostics = result.diagnostics;
    if (result.has_errors()) {
        print_diagnostics(result.diagnostics);
        throw std::runtime_error("source parsing failed");
    }
    return result.model;
}

ThresholdConfig load_thresholds(const CommonOptions& opt) {
    if (opt.thresholds_path.empty()) return ThresholdConfig::defaults();
    return ThresholdConfig::load(opt.thresholds_path);
}

void write_output(const CommonOptions& opt, const std::string& text) {
    if (opt.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output_path);
    if (!out) throw std::runtime_error("cannot write " + opt.output_path);
    out << text;
}

int cmd_analyze(const std::vector<std::string>& inputs, const CommonOptions& opt) {
    std::vector<ParseDiagnostic> diagnostics;
    const CodeModel model = load_inputs(inputs, diagnostics);
    const ThresholdConfig thresholds = load_thresholds(opt);
    const AnalysisContext ctx(model, metrics_config(opt));

    std::optional<CodeModel> baseline;
    if (!opt.baseline_path.empty()) baseline = load_model(opt.baseline_path);

    ReportInputs in;
    in.ctx = &ctx;
    in.thresholds = &thresholds;
    in.baseline = baseline ? &*baseline : nullptr;
    in.diagnostics = diagnostics;
    write_output(opt, opt.format == "csv" ? render_report_csv(in) : render_report_json(in));

    if (opt.fail_on_poor && any_class_poor(ctx, thresholds)) return kExitPoor;
    return kExitOk;
}

int cmd_kiviat(const std::vector<std::string>& inputs, const std::string& class_name,
               const CommonOptions& opt) {
    std::vector<ParseDiagnostic> diagnostics;
    const CodeModel model = load_inputs(inputs, diagnostics);
    const ClassInfo* cls = model.find_class(class_name);
    if (!cls) {
        std::cerr << "error: unknown class '" << class_name << "'";
        const auto candidates = suggest_class_names(model, class_name);
        if (!candidates.empty()) {
            std::cerr << "; did you mean";
            for (const auto& c : candidates) std::cerr << " '" << c << "'";
        }
        std::cerr << "\n";
        return kExitError;
    }
    const AnalysisContext ctx(model, metrics_config(opt));
    write_output(opt, render_kiviat_json(ctx, *cls, load_thresholds(opt)));
    return kExitOk;
}

int cmd_recommend(const std::vector<std::string>& inputs, const CommonOptions& opt) {
    std::vector<ParseDiagnostic> diagnostics;
    const CodeModel model = load_inputs(inputs, diagnostics);
    const AnalysisContext ctx(model, metrics_config(opt));
    write_output(opt, render_recommendations_json(recommend(ctx, load_thresholds(opt))));
    return kExitOk;
}

int cmd_compare(const std::string& old_path, const std::string& new_path,
                const CommonOptions& opt) {
    std::vector<ParseDiagnostic> diags_old, diags_new;
    const CodeModel old_model = load_inputs({old_path}, diags_old);
    const CodeModel new_model = load_inputs({new_path}, diags_new);
    const AnalysisContext old_ctx(old_model, metrics_config(opt));
    const AnalysisContext new_ctx(new_model, metrics_config(opt));
    write_output(opt, render_trend_json(compare_versions(old_ctx, new_ctx)));
    return kExitOk;
}

int cmd_parse(const std::vector<std::string>& inputs, const CommonOptions& opt) {
    std::vector<std::string> paths;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            auto found = collect_sources(in);
            paths.insert(paths.end(), found.begin(), found.end());
        } else {
            paths.push_back(in);
        }
    }
    ParseResult result = parse_files(paths);
    print_diagnostics(result.diagnostics);
    if (result.has_errors()) return kExitError;
    write_output(opt, model_to_json_text(result.model));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oometrix: object-oriented design metrics analyzer"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::vector<std::string> inputs;
    std::string class_name, old_path, new_path;

    auto* analyze = app.add_subcommand("analyze", "Compute the full metric report");
    analyze->add_option("inputs", inputs, "Model JSON, source files, or source directories")
        ->required();
    analyze->add_option("--baseline", opt.baseline_path, "Baseline model for QMOOD normalization");
    analyze->add_flag("--fail-on-poor", opt.fail_on_poor,
                      "Exit with status 2 when any class classifies poor");
    add_common_flags(analyze, opt);

    std::string kiviat_input;
    auto* kiviat = app.add_subcommand("kiviat", "Radar-chart data for one class");
    kiviat->add_option("input", kiviat_input, "Model JSON, a source file, or a source directory")
        ->required();
    kiviat->add_option("class", class_name, "Qualified class name")->required();
    add_common_flags(kiviat, opt);

    auto* recommend_cmd = app.add_subcommand("recommend", "Refactoring recommendations");
    recommend_cmd->add_option("inputs", inputs, "Model JSON, source files, or source directories")
        ->required();
    add_common_flags(recommend_cmd, opt);

    auto* compare = app.add_subcommand("compare", "Version trend between two models");
    compare->add_option("old", old_path, "Older model")->required();
    compare->add_option("new", new_path, "Newer model")->required();
    add_common_flags(compare, opt);

    auto* parse = app.add_subcommand("parse", "Parse sources into canonical model JSON");
    parse->add_option("inputs", inputs, "Source files or directories")->required();
    add_common_flags(parse, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(inputs, opt);
        if (app.got_subcommand(kiviat)) return cmd_kiviat({kiviat_input}, class_name, opt);
        if (app.got_subcommand(recommend_cmd)) return cmd_recommend(inputs, opt);
        if (app.got_subcommand(compare)) return cmd_compare(old_path, new_path, opt);
        if (app.got_subcommand(parse)) return cmd_parse(inputs, opt);
    } catch (const ModelParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ", column " << e.column() << ")";
        std::cerr << "\n";
        return kExitError;
    } catch (const ValidationError& e) {
        std::cerr << "error: invariant '" << e.invariant() << "' violated by " << e.entity()
                  << ": " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
