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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dainrec/cli/checkpoint.hpp"
#include "dainrec/cli/commands.hpp"
#include "dainrec/cli/run_config.hpp"
#include "dainrec/model/init.hpp"
#include "synthetic.hpp"

namespace dain::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("dainrec_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

fs::path write_toy_log(const TempDir& dir) {
  const auto log = testing::movielens_like_log(40, 150, 12, 3);
  std::ostringstream s;
  for (const auto& r : log.records) {
    s << r.raw_user << "::" << r.raw_item << "::" << r.rating << "::" << r.timestamp << '\n';
  }
  const fs::path p = dir / "ratings.dat";
  write_file(p, s.str());
  return p;
}

fs::path write_small_config(const TempDir& dir, const std::string& extra = "") {
  const fs::path p = dir / "config.json";
  write_file(p, R"({"embedding_dim": 4, "layers": [8, 4], "epochs": 3, "batch_size": 32,
                   "eval_negatives": 20)" + extra + "}");
  return p;
}

TEST(RunConfig, DefaultsMatchDocumentedValues) {
  const RunConfig c = parse_run_config("{}");
  EXPECT_EQ(c.model, model::ModelKind::dain);
  EXPECT_EQ(c.embedding_dim, 64u);
  EXPECT_EQ(c.layers, (std::vector<std::size_t>{128, 64, 32}));
  EXPECT_EQ(c.activation, "relu");
  EXPECT_EQ(c.learning_rate, 0.001);
  EXPECT_EQ(c.batch_size, 256u);
  EXPECT_EQ(c.epochs, 30u);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_TRUE(c.context_enabled);
  EXPECT_EQ(c.eval_negatives, 99u);
  EXPECT_EQ(c.k, 10u);
  EXPECT_EQ(c.data_format, data::LogFormat::movielens);
}

TEST(RunConfig, RejectsBadInput) {
  try {
    parse_run_config(R"({"epoch": 3})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("'epoch'"), std::string::npos);
  }
  EXPECT_THROW(parse_run_config(R"({"learning_rate": -1})"), ConfigError);
  EXPECT_THROW(parse_run_config(R"({"epochs": 0})"), ConfigError);
  EXPECT_THROW(parse_run_config(R"({"layers": [8, 0]})"), ConfigError);
  EXPECT_THROW(parse_run_config(R"({"activation": "tanh"})"), ConfigError);
  EXPECT_THROW(parse_run_config(R"({"model": "mf", "context_enabled": true})"), ConfigError);
  EXPECT_THROW(parse_run_config(R"({"batch_size": "big"})"), ConfigError);
  EXPECT_THROW(parse_run_config("[1, 2]"), ConfigError);
  EXPECT_THROW(parse_run_config("{"), ConfigError);
  EXPECT_FALSE(parse_run_config(R"({"model": "mf"})").context_enabled);
}

Checkpoint sample_checkpoint(model::ModelKind kind) {
  numerics::SeededRng rng(7, 1);
  model::ModelConfig mc;
  mc.kind = kind;
  mc.embedding_dim = 3;
  mc.hidden_layers = {5, 2};
  Checkpoint c{model::init_model(mc, 4, 6, rng),
               data::IdMap::from_raw_ids({"u1", "u2", "ü3", "u4"}),
               data::IdMap::from_raw_ids({"a", "b", "c", "d", "e", "f"}), 99};
  return c;
}

TEST(Checkpoint, RoundTripIsBitwise) {
  for (auto kind : {model::ModelKind::dain, model::ModelKind::mf}) {
    const Checkpoint c = sample_checkpoint(kind);
    const auto bytes = serialize_checkpoint(c);
    const Checkpoint back = deserialize_checkpoint(bytes);
    EXPECT_EQ(back.model, c.model);
    EXPECT_EQ(back.users, c.users);
    EXPECT_EQ(back.items, c.items);
    EXPECT_EQ(back.seed, 99u);
    EXPECT_EQ(serialize_checkpoint(back), bytes);
  }
}

CheckpointError::Kind load_error(const std::vector<std::uint8_t>& bytes) {
  try {
    deserialize_checkpoint(bytes);
  } catch (const CheckpointError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return CheckpointError::Kind::io;
}

TEST(Checkpoint, DetectsDamage) {
  const auto bytes = serialize_checkpoint(sample_checkpoint(model::ModelKind::dain));
  auto magic = bytes;
  magic[0] = 'X';
  EXPECT_EQ(load_error(magic), CheckpointError::Kind::bad_magic);
  auto version = bytes;
  version[8] = 2;
  EXPECT_EQ(load_error(version), CheckpointError::Kind::unsupported_version);
  auto truncated = bytes;
  truncated.pop_back();
  EXPECT_EQ(load_error(truncated), CheckpointError::Kind::corrupt);
  auto trailing = bytes;
  trailing.push_back(0);
  EXPECT_EQ(load_error(trailing), CheckpointError::Kind::corrupt);
  // Claims an absurd number of users.
  auto huge = bytes;
  huge[16 + 7] = 0x7f;
  EXPECT_EQ(load_error(huge), CheckpointError::Kind::corrupt);
  for (std::size_t cut = 0; cut < bytes.size(); cut += 7) {
    const std::vector<std::uint8_t> prefix(bytes.begin(), bytes.begin() + cut);
    EXPECT_NO_FATAL_FAILURE(load_error(prefix));
  }
}

TEST(Checkpoint, FileErrors) {
  TempDir dir;
  EXPECT_THROW(load_checkpoint(dir / "missing.ckpt"), CheckpointError);
  EXPECT_THROW(save_checkpoint(sample_checkpoint(model::ModelKind::mf), dir / "no/such/dir/x"),
               CheckpointError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"train", "--data", "x"}).code, kExitUsage);  // --out missing
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(Cli, Stats) {
  TempDir dir;
  write_file(dir / "toy.dat", "1::10::5::0\n1::11::3::60\n2::10::4::120\n");
  const Result r = cli({"stats", "--data", (dir / "toy.dat").string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "users=2 items=2 interactions=3 sparsity=75.00%\n");

  write_file(dir / "toy.tsv", "user\titem\trating\ttimestamp\na\tb\t1\t0\n");
  EXPECT_EQ(cli({"stats", "--data", (dir / "toy.tsv").string(), "--format", "tsv"}).out,
            "users=1 items=1 interactions=1 sparsity=100.00%\n");

  const Result missing = cli({"stats", "--data", (dir / "nope.dat").string()});
  EXPECT_EQ(missing.code, kExitData);
  EXPECT_NE(missing.err.find("nope.dat"), std::string::npos);

  write_file(dir / "bad.dat", "1::10::5::0\n1::11::x::60\n");
  const Result bad = cli({"stats", "--data", (dir / "bad.dat").string()});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(cli({"stats", "--data", (dir / "toy.dat").string(), "--format", "xml"}).code,
            kExitUsage);
}

TEST(Cli, TrainIsDeterministic) {
  TempDir dir;
  const auto data = write_toy_log(dir).string();
  const auto config = write_small_config(dir).string();
  const auto a = (dir / "a.ckpt").string(), b = (dir / "b.ckpt").string();
  const Result ra = cli({"train", "--config", config, "--data", data, "--out", a});
  const Result rb = cli({"train", "--config", config, "--data", data, "--out", b});
  ASSERT_EQ(ra.code, kExitOk) << ra.err;
  EXPECT_EQ(ra.out, rb.out);
  EXPECT_EQ(std::count(ra.out.begin(), ra.out.end(), '\n'), 3);
  EXPECT_EQ(ra.out.rfind("epoch=1 loss=", 0), 0u);
  EXPECT_EQ(read_file(a), read_file(b));

  write_file(dir / "bad.json", R"({"learning_rate": -1})");
  EXPECT_EQ(cli({"train", "--config", (dir / "bad.json").string(), "--data", data, "--out", a})
                .code,
            kExitUsage);
  write_file(dir / "typo.json", R"({"lr": 0.1})");
  const Result typo =
      cli({"train", "--config", (dir / "typo.json").string(), "--data", data, "--out", a});
  EXPECT_EQ(typo.code, kExitUsage);
  EXPECT_NE(typo.err.find("'lr'"), std::string::npos);
  EXPECT_NE(cli({"train", "--config", config, "--data", data, "--out",
                 (dir / "missing/dir/c.ckpt").string()})
                .code,
            kExitOk);
}

TEST(Cli, EvaluateReportsJson) {
  TempDir dir;
  const auto data = write_toy_log(dir).string();
  const auto ckpt = (dir / "m.ckpt").string();
  ASSERT_EQ(cli({"train", "--config", write_small_config(dir).string(), "--data", data, "--out",
                 ckpt})
                .code,
            kExitOk);
  const Result a = cli({"evaluate", "--checkpoint", ckpt, "--data", data, "--negatives", "20"});
  const Result b = cli({"evaluate", "--checkpoint", ckpt, "--data", data, "--negatives", "20"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("k"), 10);
  for (const char* key : {"map", "ndcg", "hr"}) {
    EXPECT_GE(j.at(key).get<double>(), 0.0);
    EXPECT_LE(j.at(key).get<double>(), 1.0);
  }

  // A different data file has a different id space.
  write_file(dir / "other.dat", "1::10::5::0\n1::11::3::60\n");
  const Result mismatch =
      cli({"evaluate", "--checkpoint", ckpt, "--data", (dir / "other.dat").string()});
  EXPECT_EQ(mismatch.code, kExitData);
  EXPECT_NE(mismatch.err.find("40 users"), std::string::npos);
  EXPECT_NE(mismatch.err.find("1 users"), std::string::npos);
}

TEST(Cli, EvaluateOracleCheckpointHitsEverything) {
  // Every user's latest interaction is item "star"; an MF model whose only
  // signal is a large bias on "star" ranks it first for everyone.
  TempDir dir;
  std::ostringstream s;
  for (int u = 0; u < 10; ++u) {
    for (int i = 0; i < 3; ++i) s << u << "::" << (u * 3 + i) << "::3::" << (100 + i) << '\n';
    s << u << "::star::5::1000\n";
  }
  write_file(dir / "toy.dat", s.str());
  const auto indexed = data::build_dataset(data::load_log(dir / "toy.dat", data::LogFormat::movielens));
  model::MfModel m;
  m.user_table = model::EmbeddingTable(indexed.users.size(), 2);
  m.item_table = model::EmbeddingTable(indexed.items.size(), 2);
  m.user_bias.assign(indexed.users.size(), 0.0);
  m.item_bias.assign(indexed.items.size(), 0.0);
  m.item_bias[*indexed.items.find("star")] = 10.0;
  save_checkpoint({m, indexed.users, indexed.items, 1}, dir / "oracle.ckpt");
  const Result r = cli({"evaluate", "--checkpoint", (dir / "oracle.ckpt").string(), "--data",
                        (dir / "toy.dat").string(), "--negatives", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("hr"), 1.0);
  EXPECT_EQ(j.at("ndcg"), 1.0);
  EXPECT_EQ(j.at("users_evaluated"), 10);
}

TEST(Cli, Recommend) {
  TempDir dir;
  const auto data = write_toy_log(dir).string();
  const auto ckpt = (dir / "m.ckpt").string();
  ASSERT_EQ(cli({"train", "--config", write_small_config(dir).string(), "--data", data, "--out",
                 ckpt})
                .code,
            kExitOk);
  const Checkpoint loaded = load_checkpoint(ckpt);
  const std::string user = loaded.users.raw(0);

  const Result none = cli({"recommend", "--checkpoint", ckpt, "--user", user, "--n", "0",
                           "--hour", "3", "--weekday", "2"});
  EXPECT_EQ(none.code, kExitOk);
  EXPECT_EQ(none.out, "");

  const Result r = cli({"recommend", "--checkpoint", ckpt, "--user", user, "--n", "5", "--hour",
                        "3", "--weekday", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::size_t rank;
  std::string item;
  double score, prev = 2.0;
  std::vector<std::string> items;
  while (lines >> rank >> item >> score) {
    EXPECT_EQ(rank, items.size() + 1);
    EXPECT_LE(score, prev);
    prev = score;
    items.push_back(item);
  }
  ASSERT_EQ(items.size(), 5u);

  // Top-1 is the argmax of predict_batch over all items.
  const auto& dain = std::get<model::DainModel>(loaded.model);
  std::vector<std::size_t> all(loaded.items.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto scores = model::predict_batch(dain, 0, all, model::Context{3, 2});
  const std::size_t best = static_cast<std::size_t>(
      std::max_element(scores.begin(), scores.end()) - scores.begin());
  EXPECT_EQ(items[0], loaded.items.raw(best));

  // With --data the user's own items are excluded.
  const Result excl = cli({"recommend", "--checkpoint", ckpt, "--user", user, "--n", "200",
                           "--hour", "3", "--weekday", "2", "--data", data});
  ASSERT_EQ(excl.code, kExitOk);
  const auto log = data::load_log(data, data::LogFormat::movielens);
  std::set<std::string> seen;
  for (const auto& rec : log.records) {
    if (rec.raw_user == user) seen.insert(rec.raw_item);
  }
  std::istringstream excl_lines(excl.out);
  std::size_t shown = 0;
  while (excl_lines >> rank >> item >> score) {
    EXPECT_FALSE(seen.count(item)) << item;
    ++shown;
  }
  EXPECT_EQ(shown, loaded.items.size() - seen.size());

  const Result unknown = cli({"recommend", "--checkpoint", ckpt, "--user", "no-such-user",
                              "--hour", "1", "--weekday", "1"});
  EXPECT_EQ(unknown.code, kExitData);
  EXPECT_NE(unknown.err.find("no-such-user"), std::string::npos);
  EXPECT_EQ(cli({"recommend", "--checkpoint", ckpt, "--user", user}).code, kExitUsage);
  EXPECT_EQ(cli({"recommend", "--checkpoint", ckpt, "--user", user, "--hour", "24", "--weekday",
                 "0"})
                .code,
            kExitUsage);
}

TEST(Cli, CheckpointExitCodes) {
  TempDir dir;
  const auto data = write_toy_log(dir).string();
  const auto ckpt = dir / "m.ckpt";
  ASSERT_EQ(cli({"train", "--config", write_small_config(dir).string(), "--data", data, "--out",
                 ckpt.string()})
                .code,
            kExitOk);
  const std::string good = read_file(ckpt);
  auto check = [&](std::string bytes, const std::string& message) {
    write_file(dir / "bad.ckpt", bytes);
    const Result r =
        cli({"evaluate", "--checkpoint", (dir / "bad.ckpt").string(), "--data", data});
    EXPECT_EQ(r.code, kExitCheckpoint);
    EXPECT_NE(r.err.find(message), std::string::npos) << r.err;
  };
  std::string magic = good;
  magic[3] = 'X';
  check(magic, "not a checkpoint");
  std::string version = good;
  version[8] = 7;
  check(version, "unsupported version");
  check(good.substr(0, good.size() - 1), "corrupt checkpoint");
}

TEST(Cli, GradCheck) {
  const Result ok = cli({"gradcheck"});
  EXPECT_EQ(ok.code, kExitOk);
  ASSERT_EQ(ok.out.rfind("max_rel_err=", 0), 0u);
  const double e = std::stod(ok.out.substr(12));
  EXPECT_LT(e, 1e-4);

  for (int seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(cli({"gradcheck", "--seed", std::to_string(seed)}).code, kExitOk) << seed;
  }
  EXPECT_EQ(cli({"gradcheck", "--inject-grad-scale", "2"}).code, kExitGradCheck);

  TempDir dir;
  write_file(dir / "mf.json", R"({"model": "mf"})");
  EXPECT_EQ(cli({"gradcheck", "--config", (dir / "mf.json").string()}).code, kExitOk);
}

}  // namespace
}  // namespace dain::cli
