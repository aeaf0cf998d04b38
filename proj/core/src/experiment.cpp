#include "fcmlab/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <semaphore>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "fcmlab/errors.hpp"
#include "fcmlab/svg.hpp"

namespace fcmlab {

namespace {

std::string csv_quote(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += "\"\"";
        } else {
            quoted.push_back(c);
        }
    }
    quoted.push_back('"');
    return quoted;
}

std::string join_candidates(const std::vector<int>& candidates) {
    std::string out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(candidates[i]);
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot write " + path.string());
    }
    file << text;
    if (!file) {
        throw IoError("failed writing " + path.string());
    }
}

std::vector<std::string> report_row(std::size_t id,
                                    const ExperimentReport& report) {
    std::vector<std::string> row;
    row.push_back(std::to_string(id));
    row.push_back(report.dataset_name);
    row.push_back(std::to_string(report.point_count));
    row.push_back(report.true_cluster_count
                      ? std::to_string(*report.true_cluster_count)
                      : "");
    row.push_back(std::to_string(report.verdicts.v_pc));
    row.push_back(std::to_string(report.verdicts.v_cl));
    row.push_back(std::to_string(report.verdicts.fb));
    row.push_back(std::to_string(report.verdicts.v_fch));
    row.push_back(std::to_string(report.verdicts.v_fs));
    row.push_back(std::to_string(report.verdicts.v_xb));
    row.push_back(std::to_string(report.verdicts.psfd));
    row.push_back(report.elbow_tsfd ? std::to_string(*report.elbow_tsfd)
                                    : report.elbow_diagnostic);
    row.push_back(join_candidates(report.visual_candidates));
    return row;
}

const std::vector<std::string>& report_header() {
    static const std::vector<std::string> header = {
        "id",   "dataset", "points", "true_clusters", "v_pc",
        "v_cl", "fb",      "v_fch",  "v_fs",          "v_xb",
        "psfd", "elbow_tsfd", "visual_tsfd"};
    return header;
}

} // namespace

std::string sanitize_name(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
            c == '_' || c == '.') {
            out.push_back(c);
        } else {
            out.push_back('_');
        }
    }
    if (out.empty()) {
        out = "dataset";
    }
    return out;
}

Dataset make_dataset(const GeneratorSpec& spec) {
    if (spec.kind == "gaussian") {
        return gen_gaussian_clusters(spec.gaussian);
    }
    if (spec.kind == "overlapped") {
        return gen_overlapped(spec.gaussian);
    }
    if (spec.kind == "ruspini") {
        return ruspini_fixture();
    }
    if (spec.kind == "ruspini-noised") {
        return add_skewed_noise(ruspini_fixture(), spec.noise);
    }
    throw InvalidArgumentError("make_dataset: unknown generator kind '" +
                               spec.kind + "'");
}

void RunConfig::validate() const {
    if (input_csv.has_value() == generator.has_value()) {
        throw InvalidArgumentError(
            "RunConfig: exactly one of input_csv and generator must be set");
    }
    if (k_min < 2) {
        throw InsufficientRangeError("RunConfig: k_min must be >= 2");
    }
    if (k_max != 0 && k_max < k_min) {
        throw InsufficientRangeError("RunConfig: k_max must be 0 (auto) or >= k_min");
    }
    if (!(fuzziness > 1.0)) {
        throw InvalidArgumentError("RunConfig: fuzziness must be > 1");
    }
    if (!(epsilon > 0.0)) {
        throw InvalidArgumentError("RunConfig: epsilon must be > 0");
    }
    if (max_iterations < 1 || restarts < 1) {
        throw InvalidArgumentError("RunConfig: iteration/restart counts must be >= 1");
    }
    if (!(plateau_threshold >= 0.0)) {
        throw InvalidArgumentError("RunConfig: plateau_threshold must be >= 0");
    }
    if (output_dir.empty()) {
        throw InvalidArgumentError("RunConfig: output_dir is required");
    }
}

ExperimentReport run_experiment(const RunConfig& config) {
    config.validate();
    const Dataset data = config.input_csv
                             ? load_csv(*config.input_csv, config.label_column)
                             : make_dataset(*config.generator);
    const std::string name = !config.dataset_name.empty() ? config.dataset_name
                             : !data.name().empty()       ? data.name()
                                                          : "dataset";

    const int k_max = config.k_max > 0
                          ? config.k_max
                          : std::min(18, static_cast<int>(data.size()) - 1);

    FcmConfig base;
    base.fuzziness = config.fuzziness;
    base.epsilon = config.epsilon;
    base.max_iterations = config.max_iterations;
    base.restarts = config.restarts;
    base.seed = config.seed;

    KSweepResult sweep_result = sweep(data, base, config.k_min, k_max);
    if (sweep_result.records.empty()) {
        throw DegenerateDataError("run_experiment: no K in [" +
                                  std::to_string(config.k_min) + ", " +
                                  std::to_string(k_max) + "] produced a fit (" +
                                  sweep_result.failures.begin()->second + ")");
    }

    ExperimentReport report;
    report.dataset_name = name;
    report.point_count = data.size();
    if (data.has_labels()) {
        report.true_cluster_count =
            static_cast<int>(data.distinct_labels().size());
    }
    report.verdicts = select_by_rule(sweep_result);
    const std::map<int, double> tsfd_values =
        index_series(sweep_result, &IndexReport::tsfd);
    try {
        report.elbow_tsfd = elbow(tsfd_values, Orientation::Maximized);
    } catch (const InsufficientRangeError&) {
        report.elbow_diagnostic = "insufficient range";
    }
    report.visual = visual_tsfd(sweep_result, config.plateau_threshold);
    report.visual_candidates = report.visual.candidates;
    report.sweep = std::move(sweep_result);

    std::filesystem::create_directories(config.output_dir);
    const std::string safe = sanitize_name(name);
    write_metrics_csv(report,
                      config.output_dir / ("metrics_" + safe + ".csv"));
    emit_visual_tsfd_svg(report.sweep,
                         config.output_dir / ("visual_tsfd_" + safe + ".svg"),
                         name);
    emit_elbow_svg(tsfd_values, "TSFD",
                   config.output_dir / ("elbow_tsfd_" + safe + ".svg"), name);
    const std::vector<ExperimentReport> rows = {report};
    write_report_csv(rows, config.output_dir / "report.csv");
    write_report_text(rows, config.output_dir / "report.txt");
    return report;
}

void write_metrics_csv(const ExperimentReport& report,
                       const std::filesystem::path& path) {
    std::ostringstream out;
    out << "k,iterations,converged,fw,fb,fi,v_pc,v_cl,v_fratio,v_fch,v_fs,"
           "v_xb,sfd,tsfd,psfd,angle_deg,status\n";
    for (int k = report.sweep.k_min; k <= report.sweep.k_max; ++k) {
        const auto rec = report.sweep.records.find(k);
        if (rec == report.sweep.records.end()) {
            const auto failure = report.sweep.failures.find(k);
            const std::string diagnostic = failure == report.sweep.failures.end()
                                               ? std::string("missing")
                                               : failure->second;
            out << k << ",,,,,,,,,,,,,,,," << csv_quote(diagnostic) << '\n';
            continue;
        }
        const KFitRecord& r = rec->second;
        const auto angle = report.visual.angles_deg.find(k);
        out << k << ',' << r.iterations << ','
            << (r.converged ? "true" : "false") << ','
            << format_double(r.inertia.fw) << ',' << format_double(r.inertia.fb)
            << ',' << format_double(r.inertia.fi) << ','
            << format_double(r.indices.v_pc) << ','
            << format_double(r.indices.v_cl) << ','
            << format_double(r.indices.v_fratio) << ','
            << format_double(r.indices.v_fch) << ','
            << format_double(r.indices.v_fs) << ','
            << format_double(r.indices.v_xb) << ','
            << format_double(r.indices.sfd) << ','
            << format_double(r.indices.tsfd) << ','
            << format_double(r.indices.psfd) << ','
            << (angle == report.visual.angles_deg.end()
                    ? ""
                    : format_double(angle->second))
            << ",ok\n";
    }
    write_file(path, out.str());
}

void write_report_csv(const std::vector<ExperimentReport>& reports,
                      const std::filesystem::path& path) {
    std::ostringstream out;
    const auto& header = report_header();
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto row = report_row(i + 1, reports[i]);
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << (j ? "," : "") << csv_quote(row[j]);
        }
        out << '\n';
    }
    write_file(path, out.str());
}

void write_report_text(const std::vector<ExperimentReport>& reports,
                       const std::filesystem::path& path) {
    const auto& header = report_header();
    std::vector<std::vector<std::string>> rows;
    rows.push_back(header);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        rows.push_back(report_row(i + 1, reports[i]));
    }
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            widths[j] = std::max(widths[j], row[j].size());
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t j = 0; j < rows[r].size(); ++j) {
            if (j) {
                out << "  ";
            }
            out << rows[r][j]
                << std::string(widths[j] - rows[r][j].size(), ' ');
        }
        out << '\n';
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t w : widths) {
                total += w;
            }
            total += 2 * (widths.size() - 1);
            out << std::string(total, '-') << '\n';
        }
    }
    write_file(path, out.str());
}

namespace {

GeneratorSpec parse_generator(const nlohmann::json& node) {
    GeneratorSpec spec;
    spec.kind = node.at("kind").get<std::string>();
    if (node.contains("clusters")) {
        spec.gaussian.cluster_count = node["clusters"].get<int>();
    }
    if (node.contains("points_per_cluster")) {
        spec.gaussian.points_per_cluster = node["points_per_cluster"].get<int>();
    }
    if (node.contains("sd")) {
        spec.gaussian.sd = node["sd"].get<double>();
    }
    if (node.contains("dimension")) {
        spec.gaussian.dimension = node["dimension"].get<int>();
    }
    if (node.contains("seed")) {
        spec.gaussian.seed = node["seed"].get<std::uint64_t>();
        spec.noise.seed = spec.gaussian.seed;
    }
    if (node.contains("points_per_label")) {
        spec.noise.points_per_label = node["points_per_label"].get<int>();
    }
    if (node.contains("left_probability")) {
        spec.noise.left_probability = node["left_probability"].get<double>();
    }
    if (node.contains("offset_scale") && !node["offset_scale"].is_null()) {
        spec.noise.offset_scale = node["offset_scale"].get<double>();
    }
    return spec;
}

} // namespace

Manifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        Manifest manifest;
        if (doc.contains("defaults")) {
            const auto& d = doc["defaults"];
            if (d.contains("k_min")) manifest.defaults.k_min = d["k_min"].get<int>();
            if (d.contains("k_max")) manifest.defaults.k_max = d["k_max"].get<int>();
            if (d.contains("fuzziness")) manifest.defaults.fuzziness = d["fuzziness"].get<double>();
            if (d.contains("epsilon")) manifest.defaults.epsilon = d["epsilon"].get<double>();
            if (d.contains("max_iterations")) manifest.defaults.max_iterations = d["max_iterations"].get<int>();
            if (d.contains("restarts")) manifest.defaults.restarts = d["restarts"].get<int>();
            if (d.contains("seed")) manifest.defaults.seed = d["seed"].get<std::uint64_t>();
            if (d.contains("plateau_threshold")) manifest.defaults.plateau_threshold = d["plateau_threshold"].get<double>();
        }
        if (!doc.contains("datasets") || !doc["datasets"].is_array() ||
            doc["datasets"].empty()) {
            throw ParseError(path.string() +
                             ": manifest needs a non-empty 'datasets' array");
        }
        for (const auto& node : doc["datasets"]) {
            ManifestEntry entry;
            entry.name = node.at("name").get<std::string>();
            if (node.contains("csv")) {
                std::filesystem::path csv = node["csv"].get<std::string>();
                if (csv.is_relative()) {
                    csv = path.parent_path() / csv;
                }
                entry.csv = csv;
            }
            if (node.contains("label_column")) {
                entry.label_column = node["label_column"].get<std::string>();
            }
            if (node.contains("generator")) {
                entry.generator = parse_generator(node["generator"]);
            }
            if (entry.csv.has_value() == entry.generator.has_value()) {
                throw ParseError(path.string() + ": dataset '" + entry.name +
                                 "' needs exactly one of 'csv' and 'generator'");
            }
            if (node.contains("k_min")) entry.k_min = node["k_min"].get<int>();
            if (node.contains("k_max")) entry.k_max = node["k_max"].get<int>();
            if (node.contains("seed")) entry.seed = node["seed"].get<std::uint64_t>();
            manifest.datasets.push_back(std::move(entry));
        }
        return manifest;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::vector<ExperimentReport> run_table(const Manifest& manifest,
                                        const std::filesystem::path& output_dir,
                                        int jobs) {
    if (manifest.datasets.empty()) {
        throw InvalidArgumentError("run_table: manifest has no datasets");
    }
    std::filesystem::create_directories(output_dir);

    std::vector<RunConfig> configs;
    configs.reserve(manifest.datasets.size());
    for (const auto& entry : manifest.datasets) {
        RunConfig cfg = manifest.defaults;
        cfg.input_csv = entry.csv;
        cfg.label_column = entry.label_column;
        cfg.generator = entry.generator;
        cfg.dataset_name = entry.name;
        if (entry.k_min) cfg.k_min = *entry.k_min;
        if (entry.k_max) cfg.k_max = *entry.k_max;
        if (entry.seed) cfg.seed = *entry.seed;
        cfg.output_dir = output_dir / sanitize_name(entry.name);
        configs.push_back(std::move(cfg));
    }

    std::vector<ExperimentReport> reports;
    reports.reserve(configs.size());
    if (jobs <= 1) {
        for (const auto& cfg : configs) {
            reports.push_back(run_experiment(cfg));
        }
    } else {
        std::counting_semaphore<> slots(jobs);
        std::vector<std::future<ExperimentReport>> futures;
        futures.reserve(configs.size());
        for (const auto& cfg : configs) {
            futures.push_back(std::async(std::launch::async, [&cfg, &slots] {
                slots.acquire();
                try {
                    ExperimentReport report = run_experiment(cfg);
                    slots.release();
                    return report;
                } catch (...) {
                    slots.release();
                    throw;
                }
            }));
        }
        for (auto& future : futures) {
            reports.push_back(future.get());
        }
    }

    write_report_csv(reports, output_dir / "report.csv");
    write_report_text(reports, output_dir / "report.txt");
    return reports;
}

} // namespace fcmlab
