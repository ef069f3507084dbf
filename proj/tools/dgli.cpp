#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dgli/analysis.hpp"
#include "dgli/baselines.hpp"
#include "dgli/cloth.hpp"
#include "dgli/datagen.hpp"
#include "dgli/error.hpp"
#include "dgli/io.hpp"
#include "dgli/kernels.hpp"
#include "dgli/representation.hpp"

namespace {

using namespace dgli;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct ReprOptions {
    std::string repr = "dgli";
    std::string metric;
    std::size_t resample = 40;
    double epsilon = 1e-8;
    double clamp = 1e4;
    std::vector<double> direction{0.0, 0.0, 1.0};
};

void add_repr_options(CLI::App* cmd, ReprOptions& opts) {
    cmd->add_option("--repr", opts.repr, "Representation: dgli, edges, corners, boundary")
        ->check(CLI::IsMember({"dgli", "edges", "corners", "boundary"}));
    cmd->add_option("--metric", opts.metric,
                    "Metric: spearman, euclidean, frechet, hausdorff "
                    "(default depends on the representation)");
    cmd->add_option("--resample", opts.resample,
                    "Points for boundary curve resampling");
    cmd->add_option("--epsilon", opts.epsilon, "Perturbation step");
    cmd->add_option("--clamp", opts.clamp, "Derivative clamp magnitude");
}

FeatureParams feature_params(const ReprOptions& opts) {
    FeatureParams params;
    params.resample_points = opts.resample;
    params.perturbation.epsilon = opts.epsilon;
    params.perturbation.clamp_magnitude = opts.clamp;
    if (opts.direction.size() != 3) throw DataError("direction needs 3 components");
    params.perturbation.direction = {opts.direction[0], opts.direction[1],
                                     opts.direction[2]};
    return params;
}

std::pair<ReprKind, MetricKind> repr_metric(const ReprOptions& opts) {
    const ReprKind kind = parse_repr(opts.repr);
    const MetricKind metric =
        opts.metric.empty() ? default_metric(kind) : parse_metric(opts.metric);
    check_compatible(kind, metric);
    return {kind, metric};
}

void sort_by_frame(std::vector<ClothConfiguration>& configs) {
    std::stable_sort(configs.begin(), configs.end(),
                     [](const ClothConfiguration& a, const ClothConfiguration& b) {
                         return a.frame_index.value_or(0) < b.frame_index.value_or(0);
                     });
}

std::map<std::string, std::size_t> parse_rep_counts(
    const std::vector<std::string>& specs) {
    std::map<std::string, std::size_t> counts;
    for (const std::string& spec : specs) {
        const std::size_t eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
            throw DataError("representative count must look like label=count: " + spec);
        }
        try {
            counts[spec.substr(0, eq)] = std::stoul(spec.substr(eq + 1));
        } catch (const std::exception&) {
            throw DataError("bad representative count: " + spec);
        }
    }
    return counts;
}

int run(int argc, char** argv) {
    CLI::App app{"dGLI cloth coordinates toolkit"};
    app.require_subcommand(1);

    std::string backend;
    app.add_option("--backend", backend, "Kernel backend: scalar or avx2")
        ->check(CLI::IsMember({"scalar", "avx2"}));

    // coords
    auto* coords_cmd = app.add_subcommand("coords", "dGLI coordinates of a configuration");
    std::string coords_input;
    bool coords_matrix = false;
    ReprOptions coords_opts;
    coords_cmd->add_option("config", coords_input, "Configuration JSON")->required();
    coords_cmd->add_flag("--matrix", coords_matrix, "Print the upper triangle row by row");
    coords_cmd->add_option("--epsilon", coords_opts.epsilon, "Perturbation step");
    coords_cmd->add_option("--clamp", coords_opts.clamp, "Derivative clamp magnitude");
    coords_cmd
        ->add_option("--direction", coords_opts.direction,
                     "Perturbation direction x,y,z")
        ->delimiter(',')
        ->expected(3);

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "Distance between two configurations");
    std::string dist_a, dist_b;
    ReprOptions dist_opts;
    dist_cmd->add_option("first", dist_a, "Configuration JSON")->required();
    dist_cmd->add_option("second", dist_b, "Configuration JSON")->required();
    add_repr_options(dist_cmd, dist_opts);

    // confusion
    auto* conf_cmd = app.add_subcommand("confusion", "Pairwise distance matrix");
    std::string conf_manifest, conf_csv, conf_svg;
    ReprOptions conf_opts;
    conf_cmd->add_option("manifest", conf_manifest, "Manifest JSON")->required();
    add_repr_options(conf_cmd, conf_opts);
    conf_cmd->add_option("-o,--output", conf_csv, "CSV output path");
    conf_cmd->add_option("--svg", conf_svg, "Heatmap SVG output path");

    // sequence
    auto* seq_cmd = app.add_subcommand("sequence", "Frame-by-frame distance matrix");
    std::string seq_manifest, seq_csv, seq_svg;
    ReprOptions seq_opts;
    seq_cmd->add_option("manifest", seq_manifest, "Manifest JSON")->required();
    add_repr_options(seq_cmd, seq_opts);
    seq_cmd->add_option("-o,--output", seq_csv, "CSV output path");
    seq_cmd->add_option("--svg", seq_svg, "Heatmap SVG output path");

    // db-index
    auto* db_cmd = app.add_subcommand("db-index",
                                      "Davies-Bouldin index per representation");
    std::string db_manifest, db_csv;
    ReprOptions db_opts;
    db_cmd->add_option("manifest", db_manifest, "Manifest JSON")->required();
    db_cmd->add_option("-o,--output", db_csv, "CSV output path");
    db_cmd->add_option("--resample", db_opts.resample, "Boundary resample points");
    db_cmd->add_option("--epsilon", db_opts.epsilon, "Perturbation step");
    db_cmd->add_option("--clamp", db_opts.clamp, "Derivative clamp magnitude");

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "Nearest-representative classification");
    std::string cls_manifest;
    std::vector<std::string> cls_queries, cls_counts;
    std::size_t cls_default_count = 1;
    ReprOptions cls_opts;
    cls_cmd->add_option("manifest", cls_manifest, "Labeled dataset manifest")->required();
    cls_cmd->add_option("query", cls_queries, "Configuration JSON files to classify")
        ->required();
    add_repr_options(cls_cmd, cls_opts);
    cls_cmd->add_option("--reps", cls_counts,
                        "Representatives per class, label=count (repeatable)");
    cls_cmd->add_option("--default-reps", cls_default_count,
                        "Representatives for classes not listed in --reps");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate fold datasets");
    int gen_class = 0, gen_sequence = 0;
    bool gen_database = false;
    std::size_t gen_samples = 10, gen_frames = 30;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen_cmd->add_option("--class", gen_class, "Single class id (1..12)");
    gen_cmd->add_flag("--database", gen_database, "All 12 classes");
    gen_cmd->add_option("--sequence", gen_sequence, "Built-in fold sequence id (1..3)");
    gen_cmd->add_option("--samples", gen_samples, "Samples per class");
    gen_cmd->add_option("--frames", gen_frames, "Frames per fold for sequences");
    gen_cmd->add_option("--seed", gen_seed, "Random seed");
    gen_cmd->add_option("--out", gen_out, "Output directory")->required();

    // backends
    auto* backends_cmd = app.add_subcommand("backends", "List kernel backends");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (!backend.empty()) {
        kernels::set_backend(backend == "avx2" ? kernels::Backend::avx2
                                               : kernels::Backend::scalar);
    }

    if (coords_cmd->parsed()) {
        const ClothConfiguration config = load_configuration(coords_input);
        const FeatureParams params = feature_params(coords_opts);
        const DgliCoordinates coords = compute_coordinates(config, params.perturbation);
        if (coords.all_clamped()) {
            std::cerr << "warning: every coordinate is clamped\n";
        }
        if (coords_matrix) {
            for (std::size_t i = 0; i + 1 < coords.m; ++i) {
                std::string line;
                for (std::size_t j = i + 1; j < coords.m; ++j) {
                    if (!line.empty()) line += ',';
                    line += fmt(coords.values[coords.pair_index(i, j)]);
                }
                std::cout << line << '\n';
            }
        } else {
            std::string line;
            for (double v : coords.values) {
                if (!line.empty()) line += ' ';
                line += fmt(v);
            }
            std::cout << line << '\n';
        }
        return 0;
    }

    if (dist_cmd->parsed()) {
        const auto [kind, metric] = repr_metric(dist_opts);
        const FeatureParams params = feature_params(dist_opts);
        const FeatureVector fa = build_feature(load_configuration(dist_a), kind, metric, params);
        const FeatureVector fb = build_feature(load_configuration(dist_b), kind, metric, params);
        std::cout << fmt(feature_distance(fa, fb)) << '\n';
        return 0;
    }

    if (conf_cmd->parsed() || seq_cmd->parsed()) {
        const bool is_seq = seq_cmd->parsed();
        const ReprOptions& opts = is_seq ? seq_opts : conf_opts;
        const std::string& manifest = is_seq ? seq_manifest : conf_manifest;
        const std::string& csv = is_seq ? seq_csv : conf_csv;
        const std::string& svg = is_seq ? seq_svg : conf_svg;

        std::vector<ClothConfiguration> configs = load_manifest(manifest);
        if (is_seq) sort_by_frame(configs);
        const auto [kind, metric] = repr_metric(opts);
        const std::vector<Sample> samples =
            build_samples(configs, kind, metric, feature_params(opts));
        const ConfusionMatrix matrix = confusion_matrix(samples);
        if (!csv.empty()) {
            write_matrix_csv(csv, matrix);
        } else {
            std::cout << "id";
            for (const std::string& id : matrix.ids) std::cout << ',' << id;
            std::cout << '\n';
            for (std::size_t i = 0; i < matrix.size(); ++i) {
                std::cout << matrix.ids[i];
                for (std::size_t j = 0; j < matrix.size(); ++j) {
                    std::cout << ',' << fmt(matrix.at(i, j));
                }
                std::cout << '\n';
            }
        }
        if (!svg.empty()) write_heatmap_svg(svg, matrix);
        return 0;
    }

    if (db_cmd->parsed()) {
        const std::vector<ClothConfiguration> configs = load_manifest(db_manifest);
        const FeatureParams params = feature_params(db_opts);
        const std::pair<ReprKind, MetricKind> combos[] = {
            {ReprKind::dgli, MetricKind::spearman},
            {ReprKind::edges, MetricKind::spearman},
            {ReprKind::corners, MetricKind::spearman},
            {ReprKind::boundary, MetricKind::frechet},
            {ReprKind::boundary, MetricKind::hausdorff},
        };
        std::vector<NamedValue> values;
        for (const auto& [kind, metric] : combos) {
            const std::vector<Sample> samples = build_samples(configs, kind, metric, params);
            values.push_back({repr_name(kind), metric_name(metric), db_index(samples)});
        }
        for (const NamedValue& v : values) {
            std::cout << v.representation << ' ' << v.metric << ' ' << fmt(v.value)
                      << '\n';
        }
        if (!db_csv.empty()) write_values_csv(db_csv, values);
        return 0;
    }

    if (cls_cmd->parsed()) {
        const auto [kind, metric] = repr_metric(cls_opts);
        const FeatureParams params = feature_params(cls_opts);
        const std::vector<Sample> samples =
            build_samples(load_manifest(cls_manifest), kind, metric, params);
        const auto reps = choose_representatives(samples, parse_rep_counts(cls_counts),
                                                 cls_default_count);
        for (const std::string& query : cls_queries) {
            const FeatureVector feature =
                build_feature(load_configuration(query), kind, metric, params);
            const Classification result = classify_nearest(feature, reps);
            std::cout << query << ' ' << result.class_label << ' '
                      << fmt(result.distance) << ' ' << result.representative_id
                      << '\n';
        }
        return 0;
    }

    if (gen_cmd->parsed()) {
        const int modes = (gen_class > 0 ? 1 : 0) + (gen_database ? 1 : 0) +
                          (gen_sequence > 0 ? 1 : 0);
        if (modes != 1) {
            throw CLI::ValidationError("gen", "pick exactly one of --class, --database, --sequence");
        }
        std::vector<ClothConfiguration> configs;
        if (gen_sequence > 0) {
            configs = generate_sequence(builtin_sequence(gen_sequence), gen_frames);
        } else if (gen_class > 0) {
            configs = generate_class(class_recipe(gen_class), gen_samples, gen_seed);
        } else {
            for (int id = 1; id <= 12; ++id) {
                auto part = generate_class(class_recipe(id), gen_samples,
                                           gen_seed + static_cast<std::uint64_t>(id) * 1000003ULL);
                configs.insert(configs.end(), std::make_move_iterator(part.begin()),
                               std::make_move_iterator(part.end()));
            }
        }
        const std::filesystem::path manifest = save_dataset(gen_out, configs);
        std::cout << manifest.string() << '\n';
        return 0;
    }

    if (backends_cmd->parsed()) {
        for (kernels::Backend b : {kernels::Backend::scalar, kernels::Backend::avx2}) {
            std::cout << kernels::backend_name(b)
                      << (kernels::backend_supported(b) ? " supported" : " unavailable")
                      << (kernels::active_backend() == b ? " active" : "") << '\n';
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
