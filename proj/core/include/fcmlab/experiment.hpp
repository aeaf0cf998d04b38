#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fcmlab/csv.hpp"
#include "fcmlab/datagen.hpp"
#include "fcmlab/dataset.hpp"
#include "fcmlab/selection.hpp"

namespace fcmlab {

/// Declarative description of a built-in dataset source.
/// kind: "gaussian" | "overlapped" | "ruspini" | "ruspini-noised".
struct GeneratorSpec {
    std::string kind = "gaussian";
    GaussianSpec gaussian;
    NoiseSpec noise;
};

Dataset make_dataset(const GeneratorSpec& spec);

/// Everything one experiment run needs: where the data comes from, the K
/// range, the clustering parameters and the output directory.
struct RunConfig {
    std::optional<std::filesystem::path> input_csv;
    std::optional<std::string> label_column;
    std::optional<GeneratorSpec> generator;
    std::string dataset_name; ///< optional override; defaults to the source name

    int k_min = 2;
    int k_max = 0; ///< 0 = automatic: min(18, n - 1)
    double fuzziness = 2.0;
    double epsilon = 1e-4;
    int max_iterations = 100;
    int restarts = 10;
    std::uint64_t seed = 1;
    double plateau_threshold = 0.10;

    std::filesystem::path output_dir;

    void validate() const;
};

/// One dataset's verdict row plus the full per-K table behind it.
struct ExperimentReport {
    std::string dataset_name;
    std::size_t point_count = 0;
    std::optional<int> true_cluster_count; ///< label cardinality when labeled
    RuleVerdicts verdicts;
    std::optional<int> elbow_tsfd;
    std::string elbow_diagnostic; ///< set when the elbow rule was not computable
    std::vector<int> visual_candidates;
    KSweepResult sweep;
    VisualTsfd visual;
};

/// Runs the full pipeline for one dataset: sweep, per-index selection, elbow
/// on the tsfd series, visual-tsfd candidates; writes metrics_<name>.csv,
/// report.csv, report.txt, visual_tsfd_<name>.svg and elbow_tsfd_<name>.svg
/// into config.output_dir. Reruns with identical config reproduce
/// byte-identical files.
ExperimentReport run_experiment(const RunConfig& config);

/// Report table serialization (one row per dataset, fixed column order:
/// id, dataset, points, true_clusters, v_pc, v_cl, v_fratio, v_fch, v_fs,
/// v_xb, psfd, elbow_tsfd, visual_tsfd).
void write_report_csv(const std::vector<ExperimentReport>& reports,
                      const std::filesystem::path& path);
void write_report_text(const std::vector<ExperimentReport>& reports,
                       const std::filesystem::path& path);
void write_metrics_csv(const ExperimentReport& report,
                       const std::filesystem::path& path);

/// One dataset entry of a batch manifest: a name, a source (csv or
/// generator) and optional per-dataset overrides of the run defaults.
struct ManifestEntry {
    std::string name;
    std::optional<std::filesystem::path> csv;
    std::optional<std::string> label_column;
    std::optional<GeneratorSpec> generator;
    std::optional<int> k_min;
    std::optional<int> k_max;
    std::optional<std::uint64_t> seed;
};

struct Manifest {
    RunConfig defaults; ///< output_dir and input fields ignored
    std::vector<ManifestEntry> datasets;
};

/// Parses a JSON manifest (see README for the schema).
Manifest load_manifest(const std::filesystem::path& path);

/// Runs every manifest entry (optionally `jobs` datasets in parallel), each
/// into output_dir/<sanitized name>/, then writes the combined report.csv
/// and report.txt into output_dir. Results are in manifest order regardless
/// of parallelism.
std::vector<ExperimentReport> run_table(const Manifest& manifest,
                                        const std::filesystem::path& output_dir,
                                        int jobs = 1);

/// Filesystem-safe dataset name (used for per-dataset files/directories).
std::string sanitize_name(const std::string& name);

} // namespace fcmlab
