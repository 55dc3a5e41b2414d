// adsi: frequency-domain augmentation and domain-independence analysis.
//
// Subcommands:
//   augment  mask low frequencies of every image in a corpus
//   di       Domain Independence score of two corpora or feature files
//   sweep    DI versus cutoff curve over a beta grid
//   mask     export a frequency mask as CSV grid and 8-bit raster

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adsi/corpus.hpp"
#include "adsi/di.hpp"
#include "adsi/image_io.hpp"
#include "adsi/run_config.hpp"

namespace {

namespace fs = std::filesystem;

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

void require_directory(const std::string& path, const std::string& flag) {
    if (!fs::is_directory(path)) {
        throw std::invalid_argument(flag + ": '" + path +
                                    "' is not an existing directory");
    }
}

void require_file(const std::string& path, const std::string& flag) {
    if (!fs::is_regular_file(path)) {
        throw std::invalid_argument(flag + ": '" + path +
                                    "' is not an existing file");
    }
}

std::string format_double(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

// ---------------------------------------------------------------- augment

struct AugmentArgs {
    adsi::RunConfig run;
    std::string config_path;
    bool no_clamp = false;
};

void run_augment(const AugmentArgs& args, const CLI::App& cmd) {
    adsi::RunConfig run = args.run;
    if (!args.config_path.empty()) {
        require_file(args.config_path, "--config");
        run = adsi::parse_run_config_file(args.config_path);
        // Explicit flags win over config-file values.
        const adsi::RunConfig& cli = args.run;
        if (cmd.count("--input") > 0) run.input = cli.input;
        if (cmd.count("--output") > 0) run.output = cli.output;
        if (cmd.count("--report") > 0) run.report = cli.report;
        if (cmd.count("--variant") > 0) run.variant = cli.variant;
        if (cmd.count("--alpha-min") > 0) run.alpha_min = cli.alpha_min;
        if (cmd.count("--alpha-max") > 0) run.alpha_max = cli.alpha_max;
        if (cmd.count("--beta-min") > 0) run.beta_min = cli.beta_min;
        if (cmd.count("--beta-max") > 0) run.beta_max = cli.beta_max;
        if (cmd.count("--orders") > 0) run.orders = cli.orders;
        if (cmd.count("--epsilon") > 0) run.epsilon = cli.epsilon;
        if (cmd.count("--seed") > 0) run.seed = cli.seed;
    }
    if (args.no_clamp) run.clamp = false;

    if (run.input.empty() || run.output.empty()) {
        throw std::invalid_argument("augment: --input and --output are required");
    }
    require_directory(run.input, "--input");
    const adsi::AugmentConfig config = run.to_augment_config(); // validates

    const adsi::CorpusReport report =
        adsi::augment_corpus(run.input, run.output, config);
    if (!run.report.empty()) {
        write_text_file(run.report, adsi::corpus_report_csv(report));
    }
    for (const auto& file : report.files) {
        if (!file.ok) {
            std::cerr << "error: " << file.filename << ": " << file.error << "\n";
        }
    }
    std::cout << "augmented " << report.ok_count << " file(s), "
              << report.error_count << " error(s)\n";
    if (report.ok_count == 0) {
        throw std::runtime_error("augment: no file could be processed");
    }
}

// --------------------------------------------------------------------- di

struct DiArgs {
    std::string features_a;
    std::string features_b;
    bool id_column = false;
    std::string corpus_a;
    std::string corpus_b;
    std::string embedder = "builtin";
    std::string table_path;
};

adsi::Embedder resolve_embedder(const std::string& name) {
    if (name == "builtin") return adsi::builtin_embed;
    throw std::invalid_argument("--embedder: unknown embedder '" + name +
                                "' (use feature CSVs for external features)");
}

std::string di_table_csv(const adsi::FeatureSet& features,
                         const adsi::DIReport& report) {
    std::ostringstream out;
    out << "index,id,dataset,neighbor,neighbor_dataset,distance,cross,tie\n";
    for (const auto& item : report.items) {
        out << item.index << ',' << features.vector(item.index).source_id << ','
            << adsi::dataset_label(features.dataset(item.index)) << ','
            << item.neighbor << ','
            << adsi::dataset_label(features.dataset(item.neighbor)) << ','
            << format_double(item.distance) << ',' << (item.cross ? 1 : 0) << ','
            << (item.tie ? 1 : 0) << '\n';
    }
    return out.str();
}

void print_di(const adsi::DIReport& report) {
    char line[64];
    std::snprintf(line, sizeof(line), "DI: %.6f\n", report.di);
    std::cout << line << "M: " << report.cross_count << "\nN: "
              << report.same_count << "\ntotal: " << report.total() << "\n";
    if (report.tie_count > 0) {
        std::cout << "ties: " << report.tie_count
                  << " (duplicate or equidistant vectors; broken by lowest index)\n";
    }
}

void run_di(const DiArgs& args) {
    const bool from_files = !args.features_a.empty() || !args.features_b.empty();
    const bool from_corpora = !args.corpus_a.empty() || !args.corpus_b.empty();
    if (from_files == from_corpora) {
        throw std::invalid_argument(
            "di: give either --features-a/--features-b or --corpus-a/--corpus-b");
    }

    adsi::FeatureSet features = [&] {
        if (from_files) {
            if (args.features_a.empty() || args.features_b.empty()) {
                throw std::invalid_argument("di: both feature files are required");
            }
            require_file(args.features_a, "--features-a");
            require_file(args.features_b, "--features-b");
            return adsi::FeatureSet::from_datasets(
                adsi::load_features(args.features_a, adsi::Dataset::a,
                                    args.id_column),
                adsi::load_features(args.features_b, adsi::Dataset::b,
                                    args.id_column));
        }
        if (args.corpus_a.empty() || args.corpus_b.empty()) {
            throw std::invalid_argument("di: both corpus directories are required");
        }
        require_directory(args.corpus_a, "--corpus-a");
        require_directory(args.corpus_b, "--corpus-b");
        const adsi::Embedder embedder = resolve_embedder(args.embedder);
        auto embed_dir = [&](const std::string& dir, adsi::Dataset dataset) {
            std::vector<adsi::FeatureVector> vectors;
            for (const auto& path : adsi::list_image_files(dir)) {
                adsi::FeatureVector v = embedder(adsi::load_image(path.string()));
                v.source_dataset = dataset;
                v.source_id = path.filename().string();
                vectors.push_back(std::move(v));
            }
            return vectors;
        };
        return adsi::FeatureSet::from_datasets(
            embed_dir(args.corpus_a, adsi::Dataset::a),
            embed_dir(args.corpus_b, adsi::Dataset::b));
    }();

    const adsi::DIReport report = adsi::domain_independence(features);
    print_di(report);
    if (!args.table_path.empty()) {
        write_text_file(args.table_path, di_table_csv(features, report));
    }
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
    std::string corpus_a;
    std::string corpus_b;
    std::string betas = "0:0.4:0.1";
    std::string mask = "box";
    std::string target = "both";
    std::string embedder = "builtin";
    int order = 2;
    double epsilon = adsi::kDefaultEpsilon;
    std::string out_path;
};

std::vector<double> parse_beta_grid(const std::string& spec) {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
    char extra = '\0';
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3) {
        throw std::invalid_argument("--betas: expected lo:hi:step, got '" + spec +
                                    "'");
    }
    if (step <= 0.0 || hi < lo) {
        throw std::invalid_argument(
            "--betas: need ascending grid with positive step");
    }
    std::vector<double> betas;
    for (int i = 0;; ++i) {
        const double beta = lo + i * step;
        if (beta > hi + 1e-9) break;
        betas.push_back(beta);
    }
    return betas;
}

void run_sweep(const SweepArgs& args) {
    if (args.corpus_a.empty() || args.corpus_b.empty() || args.out_path.empty()) {
        throw std::invalid_argument(
            "sweep: --corpus-a, --corpus-b, and --out are required");
    }
    require_directory(args.corpus_a, "--corpus-a");
    require_directory(args.corpus_b, "--corpus-b");
    const std::vector<double> betas = parse_beta_grid(args.betas);
    const adsi::MaskKind kind = adsi::mask_kind_from_string(args.mask);
    const adsi::MaskTarget target = adsi::mask_target_from_string(args.target);
    const adsi::Embedder embedder = resolve_embedder(args.embedder);

    const adsi::SweepCurve curve = adsi::beta_sweep(
        adsi::load_corpus(args.corpus_a), adsi::load_corpus(args.corpus_b), betas,
        kind, target, embedder, args.embedder, args.order, args.epsilon);
    write_text_file(args.out_path, adsi::sweep_curve_csv(curve));
    for (const auto& point : curve.points) {
        std::cout << "beta " << format_double(point.beta) << ": DI "
                  << format_double(point.di) << "\n";
    }
    std::cout << "wrote " << curve.points.size() << " point(s) to "
              << args.out_path << "\n";
}

// ------------------------------------------------------------------- mask

struct MaskArgs {
    std::string kind = "butterworth";
    std::string size = "64x64";
    double beta = 0.2;
    int order = 2;
    double alpha = 1.0;
    double epsilon = adsi::kDefaultEpsilon;
    std::string out_csv;
    std::string out_image;
};

std::pair<int, int> parse_size(const std::string& spec) {
    int h = 0;
    int w = 0;
    char extra = '\0';
    if (std::sscanf(spec.c_str(), "%dx%d%c", &h, &w, &extra) != 2 || h < 2 ||
        w < 2) {
        throw std::invalid_argument("--size: expected HxW with H,W >= 2, got '" +
                                    spec + "'");
    }
    return {h, w};
}

std::string mask_csv(const adsi::FrequencyMask& mask) {
    std::ostringstream out;
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            if (x > 0) out << ',';
            out << format_double(mask.at(y, x));
        }
        out << '\n';
    }
    return out.str();
}

void run_mask(const MaskArgs& args) {
    if (args.out_csv.empty() && args.out_image.empty()) {
        throw std::invalid_argument("mask: give --out-csv and/or --out-image");
    }
    const auto [height, width] = parse_size(args.size);
    const adsi::MaskKind kind = adsi::mask_kind_from_string(args.kind);

    adsi::FrequencyMask mask;
    switch (kind) {
    case adsi::MaskKind::box:
        mask = adsi::box_mask(height, width, args.beta);
        break;
    case adsi::MaskKind::circle:
        mask = adsi::circle_mask(height, width, args.beta);
        break;
    case adsi::MaskKind::butterworth:
        mask = adsi::butterworth_mask(height, width, args.beta, args.order,
                                      args.epsilon);
        break;
    case adsi::MaskKind::adsi_attenuation:
        mask = adsi::adsi_mask(adsi::butterworth_mask(height, width, args.beta,
                                                      args.order, args.epsilon),
                               args.alpha);
        break;
    }

    if (!args.out_csv.empty()) {
        write_text_file(args.out_csv, mask_csv(mask));
        std::cout << "wrote " << args.out_csv << "\n";
    }
    if (!args.out_image.empty()) {
        // Raster export quantizes to round(weight*255); the CSV grid is the
        // exact artifact.
        adsi::Image raster =
            adsi::Image::from_planes(1, height, width, mask.weights);
        adsi::save_image(args.out_image, raster);
        std::cout << "wrote " << args.out_image << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequency-domain augmentation and domain-independence analysis"};
    app.require_subcommand(1);

    AugmentArgs augment_args;
    CLI::App* augment = app.add_subcommand(
        "augment", "Attenuate low-frequency content of every corpus image");
    augment->add_option("--input", augment_args.run.input,
                        "Directory of input images (png/ppm/pgm)");
    augment->add_option("--output", augment_args.run.output,
                        "Directory for augmented images");
    augment->add_option("--report", augment_args.run.report,
                        "Write a per-file CSV report");
    augment->add_option("--variant", augment_args.run.variant,
                        "adsi|box|box-amplitude|circle|color|butterworth-amplitude");
    augment->add_option("--alpha-min", augment_args.run.alpha_min,
                        "Lower attenuation-strength bound (in [0,1])");
    augment->add_option("--alpha-max", augment_args.run.alpha_max,
                        "Upper attenuation-strength bound (in [0,1])");
    augment->add_option("--beta-min", augment_args.run.beta_min,
                        "Lower cutoff bound (fraction of the frequency extent)");
    augment->add_option("--beta-max", augment_args.run.beta_max,
                        "Upper cutoff bound");
    augment->add_option("--orders", augment_args.run.orders,
                        "Butterworth orders to sample, e.g. 1,2,3");
    augment->add_option("--epsilon", augment_args.run.epsilon,
                        "Cutoff regularizer");
    augment->add_option("--seed", augment_args.run.seed,
                        "Seed for all parameter draws");
    augment->add_flag("--no-clamp", augment_args.no_clamp,
                      "Keep reconstructed samples outside [0,1]");
    augment->add_option("--config", augment_args.config_path,
                        "Key=value config file; explicit flags override it");
    augment->callback([&] { run_augment(augment_args, *augment); });

    DiArgs di_args;
    CLI::App* di = app.add_subcommand(
        "di", "Domain Independence of two corpora or feature CSVs");
    di->add_option("--features-a", di_args.features_a, "Feature CSV, dataset A");
    di->add_option("--features-b", di_args.features_b, "Feature CSV, dataset B");
    di->add_flag("--id-column", di_args.id_column,
                 "Feature CSVs carry a leading id column");
    di->add_option("--corpus-a", di_args.corpus_a, "Image directory, dataset A");
    di->add_option("--corpus-b", di_args.corpus_b, "Image directory, dataset B");
    di->add_option("--embedder", di_args.embedder, "Embedder for corpora");
    di->add_option("--table", di_args.table_path,
                   "Write the per-item nearest-neighbor table CSV");
    di->callback([&] { run_di(di_args); });

    SweepArgs sweep_args;
    CLI::App* sweep =
        app.add_subcommand("sweep", "DI versus cutoff over a beta grid");
    sweep->add_option("--corpus-a", sweep_args.corpus_a, "Image directory A");
    sweep->add_option("--corpus-b", sweep_args.corpus_b, "Image directory B");
    sweep->add_option("--betas", sweep_args.betas, "Grid as lo:hi:step");
    sweep->add_option("--mask", sweep_args.mask, "box|circle|butterworth");
    sweep->add_option("--target", sweep_args.target, "both|amplitude|phase");
    sweep->add_option("--order", sweep_args.order, "Butterworth order");
    sweep->add_option("--epsilon", sweep_args.epsilon, "Cutoff regularizer");
    sweep->add_option("--embedder", sweep_args.embedder, "Embedder");
    sweep->add_option("--out", sweep_args.out_path, "Output CSV (beta,di)");
    sweep->callback([&] { run_sweep(sweep_args); });

    MaskArgs mask_args;
    CLI::App* mask = app.add_subcommand(
        "mask", "Export a frequency mask as CSV grid and/or 8-bit raster");
    mask->add_option("--kind", mask_args.kind, "box|circle|butterworth|adsi");
    mask->add_option("--size", mask_args.size, "Grid size HxW");
    mask->add_option("--beta", mask_args.beta, "Cutoff fraction");
    mask->add_option("--order", mask_args.order, "Butterworth order");
    mask->add_option("--alpha", mask_args.alpha, "Attenuation strength (adsi)");
    mask->add_option("--epsilon", mask_args.epsilon, "Cutoff regularizer");
    mask->add_option("--out-csv", mask_args.out_csv, "Exact weight grid CSV");
    mask->add_option("--out-image", mask_args.out_image,
                     "Quantized raster (pgm/png)");
    mask->callback([&] { run_mask(mask_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
