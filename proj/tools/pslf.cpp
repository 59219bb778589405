// Command-line front end: generate synthetic ratings, split them, train a
// model with fixed hyperparameters, tune the hyperparameters with the
// particle swarm, and score a saved model against a rating file.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pslf/pslf.hpp"

namespace {

using nlohmann::json;

// Reads rating files into one shared id space: dense user/item indices are
// assigned in first-seen order across all files, train first. Ids that only
// appear in held-out files still get factor rows; those rows keep their
// random initialization apart from damping, which is the honest cold-start
// answer.
struct Dataset {
    pslf::IdMap users;
    pslf::IdMap items;
    std::vector<pslf::RawRating> raw_train, raw_test, raw_validation;
    pslf::Ratings train, test, validation;
};

Dataset load_dataset(const std::string& train_path, const std::string& test_path,
                     const std::string& validation_path) {
    Dataset data;
    data.raw_train = pslf::read_ratings_file(train_path);
    data.train = pslf::reindex(data.raw_train, data.users, data.items);
    if (!test_path.empty()) {
        data.raw_test = pslf::read_ratings_file(test_path);
        data.test = pslf::reindex(data.raw_test, data.users, data.items);
    }
    if (!validation_path.empty()) {
        data.raw_validation = pslf::read_ratings_file(validation_path);
        data.validation = pslf::reindex(data.raw_validation, data.users, data.items);
    }
    return data;
}

void write_report(const std::string& path, const json& report) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << report.dump(2) << '\n';
}

int run_synth(const pslf::SyntheticOptions& gen, const std::string& output) {
    const pslf::Ratings ratings = pslf::synthetic_ratings(gen);
    std::vector<pslf::RawRating> rows;
    rows.reserve(ratings.size());
    for (const pslf::Rating& r : ratings) rows.push_back({r.user, r.item, r.score});
    pslf::write_ratings_file(output, rows);
    std::printf("wrote %zu ratings (%d users x %d items) to %s\n", rows.size(),
                gen.users, gen.items, output.c_str());
    return 0;
}

int run_split(const std::string& input, const std::string& output_dir,
              const pslf::SplitRatios& ratios, std::uint64_t seed) {
    const std::vector<pslf::RawRating> rows = pslf::read_ratings_file(input);
    const auto split = pslf::three_way_split(rows, ratios, seed);

    const std::filesystem::path dir(output_dir);
    std::filesystem::create_directories(dir);
    pslf::write_ratings_file(dir / "train.tsv", split.train);
    pslf::write_ratings_file(dir / "test.tsv", split.test);
    pslf::write_ratings_file(dir / "validation.tsv", split.validation);
    std::printf("split %zu ratings into train %zu / test %zu / validation %zu under %s\n",
                rows.size(), split.train.size(), split.test.size(),
                split.validation.size(), output_dir.c_str());
    return 0;
}

int run_train(const std::string& train_path, const std::string& probe_path,
              int factors, const pslf::TrainOptions& options, double init_low,
              double init_high, std::uint64_t seed, const std::string& model_path,
              const std::string& report_path) {
    Dataset data = load_dataset(train_path, probe_path, "");
    const pslf::RatingMatrix train(data.users.size(), data.items.size(), data.train);

    pslf::FactorMatrix x = pslf::FactorMatrix::uniform(
        train.num_users(), train.num_items(), factors, init_low, init_high, seed);
    const pslf::HessianFreeTrainer trainer(train, options);
    const std::vector<pslf::EpochRecord> history = trainer.fit(x, data.test);

    json report;
    report["regularization"] = options.regularization;
    report["damping"] = options.damping;
    report["epochs"] = json::array();
    for (const pslf::EpochRecord& rec : history) {
        json row = {{"epoch", rec.epoch},
                    {"objective", rec.objective},
                    {"train_rmse", rec.train_rmse},
                    {"cg_iterations", rec.cg_iterations}};
        if (!data.test.empty()) row["probe_rmse"] = rec.probe_rmse;
        report["epochs"].push_back(row);
        std::printf("epoch %3d  objective %.6g  train rmse %.6g", rec.epoch,
                    rec.objective, rec.train_rmse);
        if (!data.test.empty()) std::printf("  probe rmse %.6g", rec.probe_rmse);
        std::printf("  cg %d\n", rec.cg_iterations);
    }
    if (!history.empty()) {
        report["train_rmse"] = history.back().train_rmse;
        if (!data.test.empty()) report["probe_rmse"] = history.back().probe_rmse;
    }

    if (!model_path.empty()) pslf::save_model(model_path, x, data.users, data.items);
    write_report(report_path, report);
    return 0;
}

int run_tune(const std::string& train_path, const std::string& test_path,
             const std::string& validation_path, const pslf::TuneOptions& options,
             const std::string& model_path, const std::string& report_path) {
    Dataset data = load_dataset(train_path, test_path, validation_path);
    const pslf::RatingMatrix train(data.users.size(), data.items.size(), data.train);

    const pslf::TuneResult result =
        pslf::tune(train, data.test, data.validation, options);

    for (const pslf::TuneRecord& rec : result.history)
        std::printf("epoch %3d  best rmse %.6g  lambda %.6g  gamma %.6g\n",
                    rec.epoch, rec.best_fitness, rec.regularization, rec.damping);
    std::printf("best: lambda %.17g gamma %.17g test rmse %.17g\n",
                result.regularization, result.damping, result.test_rmse);
    if (!data.validation.empty())
        std::printf("validation rmse %.17g\n", result.validation_rmse);

    json report;
    report["regularization"] = result.regularization;
    report["damping"] = result.damping;
    report["test_rmse"] = result.test_rmse;
    if (!data.validation.empty()) report["validation_rmse"] = result.validation_rmse;
    report["history"] = json::array();
    for (const pslf::TuneRecord& rec : result.history)
        report["history"].push_back({{"epoch", rec.epoch},
                                     {"best_fitness", rec.best_fitness},
                                     {"regularization", rec.regularization},
                                     {"damping", rec.damping}});

    if (!model_path.empty())
        pslf::save_model(model_path, result.model, data.users, data.items);
    write_report(report_path, report);
    return 0;
}

int run_evaluate(const std::string& ratings_path, const std::string& model_path) {
    const pslf::SavedModel model = pslf::load_model(model_path);
    const std::vector<pslf::RawRating> rows = pslf::read_ratings_file(ratings_path);
    std::printf("rmse %.17g\n", pslf::rmse(model, rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second-order latent factor models for sparse rating data"};
    app.require_subcommand(1);

    // synth
    pslf::SyntheticOptions gen;
    std::string synth_output;
    CLI::App* synth = app.add_subcommand("synth", "Generate low-rank synthetic ratings");
    synth->add_option("--users", gen.users, "Number of users")->capture_default_str();
    synth->add_option("--items", gen.items, "Number of items")->capture_default_str();
    synth->add_option("--rank", gen.rank, "Ground-truth rank")->capture_default_str();
    synth->add_option("--density", gen.density, "Fraction of observed cells")
        ->capture_default_str();
    synth->add_option("--noise", gen.noise, "Additive noise stddev")->capture_default_str();
    synth->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    synth->add_option("--output", synth_output, "Output ratings file")->required();

    // split
    std::string split_input, split_dir = ".";
    pslf::SplitRatios ratios;
    std::uint64_t split_seed = 0;
    CLI::App* split = app.add_subcommand(
        "split", "Partition a ratings file into train/test/validation");
    split->add_option("--input", split_input, "Ratings file")->required();
    split->add_option("--output-dir", split_dir, "Directory for the three output files")
        ->capture_default_str();
    split->add_option("--train-ratio", ratios.train, "Training fraction")
        ->capture_default_str();
    split->add_option("--test-ratio", ratios.test, "Test fraction")->capture_default_str();
    split->add_option("--validation-ratio", ratios.validation,
                      "Validation fraction (remainder rounds go here)")
        ->capture_default_str();
    split->add_option("--seed", split_seed, "Shuffle seed")->capture_default_str();

    // train
    std::string train_train, train_probe, train_model, train_report;
    int train_factors = 20;
    pslf::TrainOptions train_options;
    double train_init_low = 0.0, train_init_high = 0.1;
    std::uint64_t train_seed = 0;
    CLI::App* train = app.add_subcommand(
        "train", "Train with fixed regularization and damping");
    train->add_option("--train", train_train, "Training ratings file")->required();
    train->add_option("--probe", train_probe, "Held-out ratings tracked per epoch");
    train->add_option("--factors", train_factors, "Latent dimensions")->capture_default_str();
    train->add_option("--regularization", train_options.regularization,
                      "Tikhonov weight (lambda)")
        ->capture_default_str();
    train->add_option("--damping", train_options.damping, "Curvature damping (gamma)")
        ->capture_default_str();
    train->add_option("--epochs", train_options.epochs, "Second-order updates")
        ->capture_default_str();
    train->add_option("--cg-iterations", train_options.cg.max_iterations,
                      "Inner solver iteration cap")
        ->capture_default_str();
    train->add_option("--cg-tolerance", train_options.cg.relative_tolerance,
                      "Inner solver relative residual tolerance")
        ->capture_default_str();
    train->add_option("--init-low", train_init_low, "Factor init lower bound")
        ->capture_default_str();
    train->add_option("--init-high", train_init_high, "Factor init upper bound")
        ->capture_default_str();
    train->add_option("--seed", train_seed, "Factor init seed")->capture_default_str();
    train->add_option("--model", train_model, "Where to save the trained model");
    train->add_option("--report", train_report, "Where to write a JSON report");

    // tune
    std::string tune_train, tune_test, tune_validation, tune_model, tune_report;
    pslf::TuneOptions tune_options;
    CLI::App* tune = app.add_subcommand(
        "tune", "Self-adapt regularization and damping with a particle swarm");
    tune->add_option("--train", tune_train, "Training ratings file")->required();
    tune->add_option("--test", tune_test, "Test ratings file (swarm fitness)")->required();
    tune->add_option("--validation", tune_validation, "Validation ratings file");
    tune->add_option("--factors", tune_options.factors, "Latent dimensions")
        ->capture_default_str();
    tune->add_option("--particles", tune_options.swarm.swarm_size, "Swarm size")
        ->capture_default_str();
    tune->add_option("--epochs", tune_options.swarm_epochs, "Swarm epochs")
        ->capture_default_str();
    tune->add_option("--steps-per-epoch", tune_options.steps_per_epoch,
                     "Second-order updates per particle per epoch")
        ->capture_default_str();
    tune->add_option("--inertia", tune_options.swarm.inertia, "Velocity inertia weight")
        ->capture_default_str();
    tune->add_option("--cognitive", tune_options.swarm.cognitive,
                     "Pull toward each particle's own best")
        ->capture_default_str();
    tune->add_option("--social", tune_options.swarm.social,
                     "Pull toward the population best")
        ->capture_default_str();
    tune->add_option("--max-regularization", tune_options.max_regularization,
                     "Upper bound of the lambda search box")
        ->capture_default_str();
    tune->add_option("--max-damping", tune_options.max_damping,
                     "Upper bound of the gamma search box")
        ->capture_default_str();
    tune->add_option("--cg-iterations", tune_options.cg.max_iterations,
                     "Inner solver iteration cap")
        ->capture_default_str();
    tune->add_option("--cg-tolerance", tune_options.cg.relative_tolerance,
                     "Inner solver relative residual tolerance")
        ->capture_default_str();
    tune->add_option("--init-low", tune_options.init_low, "Factor init lower bound")
        ->capture_default_str();
    tune->add_option("--init-high", tune_options.init_high, "Factor init upper bound")
        ->capture_default_str();
    tune->add_option("--workers", tune_options.workers,
                     "Worker threads (0: all hardware threads)")
        ->capture_default_str();
    tune->add_option("--seed", tune_options.seed, "Factor init seed")->capture_default_str();
    tune->add_option("--swarm-seed", tune_options.swarm.seed, "Swarm RNG seed")
        ->capture_default_str();
    tune->add_option("--model", tune_model, "Where to save the best model");
    tune->add_option("--report", tune_report, "Where to write a JSON report");

    // evaluate
    std::string eval_ratings, eval_model;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "RMSE of a saved model on a ratings file");
    evaluate->add_option("--ratings", eval_ratings, "Ratings file")->required();
    evaluate->add_option("--model", eval_model, "Saved model file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*synth) return run_synth(gen, synth_output);
        if (*split) return run_split(split_input, split_dir, ratios, split_seed);
        if (*train)
            return run_train(train_train, train_probe, train_factors, train_options,
                             train_init_low, train_init_high, train_seed, train_model,
                             train_report);
        if (*tune)
            return run_tune(tune_train, tune_test, tune_validation, tune_options,
                            tune_model, tune_report);
        if (*evaluate) return run_evaluate(eval_ratings, eval_model);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
