// Copyright 2026 The dainrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dainrec/cli/commands.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>

#include "dainrec/cli/checkpoint.hpp"
#include "dainrec/cli/run_config.hpp"
#include "dainrec/data/dataset.hpp"
#include "dainrec/data/errors.hpp"
#include "dainrec/data/split.hpp"
#include "dainrec/eval/evaluate.hpp"
#include "dainrec/eval/metrics.hpp"
#include "dainrec/training/grad_check.hpp"
#include "dainrec/training/trainer.hpp"

namespace dain::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string data;
  std::string format;
  std::string out;
  std::string checkpoint;
  std::size_t k = 10;
  std::size_t negatives = 99;
  std::uint64_t seed = 42;
  std::string user;
  std::size_t n = 10;
  std::optional<int> hour;
  std::optional<int> weekday;
  double inject_grad_scale = 1.0;
};

data::LogFormat resolve_format(const Options& opt, data::LogFormat fallback) {
  if (opt.format.empty()) return fallback;
  try {
    return data::parse_format(opt.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

data::IndexedDataset load_dataset(const Options& opt, data::LogFormat fallback) {
  if (opt.data.empty()) throw UsageError("--data is required");
  return data::build_dataset(data::load_log(opt.data, resolve_format(opt, fallback)));
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

int cmd_stats(const Options& opt, std::ostream& out) {
  const auto indexed = load_dataset(opt, data::LogFormat::movielens);
  out << data::format_stats(data::stats(indexed.dataset)) << '\n';
  return kExitOk;
}

int cmd_train(const Options& opt, std::ostream& out) {
  const RunConfig cfg = opt.config.empty() ? RunConfig{} : load_run_config(opt.config);
  if (opt.out.empty()) throw UsageError("--out is required");
  const auto indexed = load_dataset(opt, cfg.data_format);
  numerics::SeededRng split_rng(cfg.seed, kSplitStream);
  const data::EvalSplit split =
      data::leave_one_out_split(indexed.dataset, cfg.eval_negatives, split_rng);
  numerics::SeededRng init_rng(cfg.seed, kInitStream);
  Checkpoint ckpt{model::init_model(cfg.model_config(), indexed.dataset.num_users,
                                    indexed.dataset.num_items, init_rng),
                  indexed.users, indexed.items, cfg.seed};
  const training::FitResult result = std::visit(
      [&](auto& m) { return training::fit(m, split.train, cfg.train_config()); }, ckpt.model);
  for (const auto& e : result.epochs) {
    out << "epoch=" << e.epoch_index << " loss=" << fmt("%.10f", e.mean_train_loss) << '\n';
  }
  save_checkpoint(ckpt, opt.out);
  return kExitOk;
}

void require_same_ids(const Checkpoint& ckpt, const data::IndexedDataset& indexed) {
  if (ckpt.users == indexed.users && ckpt.items == indexed.items) return;
  throw eval::IdSpaceMismatch(
      "checkpoint id space (" + std::to_string(ckpt.users.size()) + " users, " +
      std::to_string(ckpt.items.size()) + " items) does not match data (" +
      std::to_string(indexed.users.size()) + " users, " + std::to_string(indexed.items.size()) +
      " items)");
}

std::unique_ptr<eval::Scorer> make_scorer(const Checkpoint& ckpt) {
  if (const auto* dain = std::get_if<model::DainModel>(&ckpt.model)) {
    return std::make_unique<eval::DainScorer>(*dain);
  }
  return std::make_unique<eval::MfScorer>(std::get<model::MfModel>(ckpt.model));
}

int cmd_evaluate(const Options& opt, std::ostream& out) {
  if (opt.checkpoint.empty()) throw UsageError("--checkpoint is required");
  const Checkpoint ckpt = load_checkpoint(opt.checkpoint);
  const auto indexed = load_dataset(opt, data::LogFormat::movielens);
  require_same_ids(ckpt, indexed);
  numerics::SeededRng split_rng(opt.seed, kSplitStream);
  const data::EvalSplit split = data::leave_one_out_split(indexed.dataset, opt.negatives, split_rng);
  if (split.test.empty()) throw data::DataError("no evaluable test users in data");
  const auto scorer = make_scorer(ckpt);
  out << eval::to_json(eval::evaluate(*scorer, split, opt.k)) << '\n';
  return kExitOk;
}

int cmd_recommend(const Options& opt, std::ostream& out) {
  if (opt.checkpoint.empty()) throw UsageError("--checkpoint is required");
  if (opt.user.empty()) throw UsageError("--user is required");
  const Checkpoint ckpt = load_checkpoint(opt.checkpoint);
  const auto user = ckpt.users.find(opt.user);
  if (!user) throw data::DataError("unknown user '" + opt.user + "'");

  model::Context ctx;
  const auto* dain = std::get_if<model::DainModel>(&ckpt.model);
  if (dain != nullptr && dain->context().enabled) {
    if (!opt.hour || !opt.weekday) {
      throw UsageError("--hour and --weekday are required for a context-aware model");
    }
    if (*opt.hour < 0 || *opt.hour > 23 || *opt.weekday < 0 || *opt.weekday > 6) {
      throw UsageError("--hour must be 0..23 and --weekday 0..6");
    }
    ctx = {static_cast<std::uint8_t>(*opt.hour), static_cast<std::uint8_t>(*opt.weekday)};
  }

  std::vector<bool> excluded(ckpt.items.size(), false);
  if (!opt.data.empty()) {
    const auto log = data::load_log(opt.data, resolve_format(opt, data::LogFormat::movielens));
    for (const auto& rec : log.records) {
      if (rec.raw_user != opt.user) continue;
      if (const auto item = ckpt.items.find(rec.raw_item)) excluded[*item] = true;
    }
  }
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    if (!excluded[i]) candidates.push_back(i);
  }
  if (opt.n == 0 || candidates.empty()) return kExitOk;
  const auto scorer = make_scorer(ckpt);
  const auto scores = scorer->score(*user, candidates, ctx);
  const auto ranked = eval::RankedList::from_scores(candidates, scores);
  std::vector<double> by_item(ckpt.items.size(), 0.0);
  for (std::size_t j = 0; j < candidates.size(); ++j) by_item[candidates[j]] = scores[j];
  const std::size_t shown = std::min(opt.n, ranked.items.size());
  for (std::size_t r = 0; r < shown; ++r) {
    const std::size_t item = ranked.items[r];
    out << (r + 1) << ' ' << ckpt.items.raw(item) << ' ' << fmt("%.12f", by_item[item]) << '\n';
  }
  return kExitOk;
}

int cmd_gradcheck(const Options& opt, std::ostream& out) {
  const RunConfig cfg = opt.config.empty() ? RunConfig{} : load_run_config(opt.config);
  constexpr std::size_t kUsers = 5, kItems = 7;
  model::ModelConfig mc = cfg.model_config();
  mc.embedding_dim = 4;
  mc.hidden_layers = {8, 4};
  numerics::SeededRng rng(opt.seed, kInitStream);
  const model::AnyModel m = model::init_model(mc, kUsers, kItems, rng);
  training::GradCheckExample ex;
  ex.user = static_cast<std::size_t>(rng.uniform_index(kUsers));
  ex.item = static_cast<std::size_t>(rng.uniform_index(kItems));
  ex.target = rng.uniform01();
  if (mc.kind == model::ModelKind::dain && mc.context_enabled) {
    ex.context = model::Context{static_cast<std::uint8_t>(rng.uniform_index(24)),
                                static_cast<std::uint8_t>(rng.uniform_index(7))};
  }
  training::GradCheckOptions gopt;
  gopt.analytic_scale = opt.inject_grad_scale;
  const double err =
      std::visit([&](const auto& mm) { return training::grad_check(mm, ex, 1e-5, gopt); }, m);
  out << "max_rel_err=" << fmt("%.6e", err) << '\n';
  return err < 1e-4 ? kExitOk : kExitGradCheck;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Context-aware neural recommender: train, evaluate and serve DAIN/MF models",
               "dainrec"};
  app.require_subcommand(1);
  Options opt;

  auto add_data = [&](CLI::App* sub, bool required) {
    auto* d = sub->add_option("--data", opt.data, "Interaction log path");
    if (required) d->required();
    sub->add_option("--format", opt.format, "Data format: movielens or tsv")
        ->check(CLI::IsMember({"movielens", "tsv"}));
  };

  auto* stats = app.add_subcommand("stats", "Print dataset statistics");
  add_data(stats, true);

  auto* train = app.add_subcommand("train", "Train a model and write a checkpoint");
  train->add_option("--config", opt.config, "JSON run configuration");
  add_data(train, true);
  train->add_option("--out", opt.out, "Checkpoint output path")->required();

  auto* evaluate = app.add_subcommand("evaluate", "Leave-one-out ranking evaluation");
  evaluate->add_option("--checkpoint", opt.checkpoint)->required();
  add_data(evaluate, true);
  evaluate->add_option("--k", opt.k, "Cutoff for MAP/NDCG/HR")->check(CLI::PositiveNumber);
  evaluate->add_option("--negatives", opt.negatives, "Sampled negatives per test user")
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--seed", opt.seed, "Seed for negative sampling");

  auto* recommend = app.add_subcommand("recommend", "Top-n items for one user");
  recommend->add_option("--checkpoint", opt.checkpoint)->required();
  recommend->add_option("--user", opt.user, "Raw user id")->required();
  recommend->add_option("--n", opt.n, "Number of items");
  recommend->add_option("--hour", opt.hour, "Hour of day 0..23");
  recommend->add_option("--weekday", opt.weekday, "Day of week 0..6, 0 = Monday");
  add_data(recommend, false);

  auto* gradcheck = app.add_subcommand("gradcheck", "Finite-difference check of backward");
  gradcheck->add_option("--config", opt.config, "JSON run configuration (model kind, context)");
  gradcheck->add_option("--seed", opt.seed);
  gradcheck->add_option("--inject-grad-scale", opt.inject_grad_scale)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (stats->parsed()) return cmd_stats(opt, out);
    if (train->parsed()) return cmd_train(opt, out);
    if (evaluate->parsed()) return cmd_evaluate(opt, out);
    if (recommend->parsed()) return cmd_recommend(opt, out);
    if (gradcheck->parsed()) return cmd_gradcheck(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const data::DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const eval::IdSpaceMismatch& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const CheckpointError& e) {
    err << "checkpoint error: " << e.what() << '\n';
    return kExitCheckpoint;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace dain::cli
