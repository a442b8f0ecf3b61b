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
#include <ctime>
#include <set>
#include <sstream>

#include "dainrec/data/calendar.hpp"
#include "dainrec/data/dataset.hpp"
#include "dainrec/data/errors.hpp"
#include "dainrec/data/parse.hpp"
#include "dainrec/data/split.hpp"
#include "dainrec/numerics/rng.hpp"
#include "synthetic.hpp"

namespace dain::data {
namespace {

InteractionLog ml(const std::string& text) {
  std::istringstream in(text);
  return parse_movielens(in);
}

InteractionLog log_of(std::vector<InteractionRecord> records) { return {std::move(records)}; }

TEST(ParseMovielens, SingleLine) {
  const auto log = ml("7::42::3::978300000\n");
  ASSERT_EQ(log.records.size(), 1u);
  EXPECT_EQ(log.records[0], (InteractionRecord{"7", "42", 3.0, 978300000}));
}

TEST(ParseMovielens, SkipsBlankLinesAndCarriageReturns) {
  const auto log = ml("1::2::4::10\r\n\n3::4::5::20");
  ASSERT_EQ(log.records.size(), 2u);
  EXPECT_EQ(log.records[1], (InteractionRecord{"3", "4", 5.0, 20}));
}

std::size_t error_line(const std::string& text) {
  try {
    ml(text);
  } catch (const DataError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseMovielens, ErrorsNameTheLine) {
  EXPECT_EQ(error_line("7::42::x::1"), 1u);
  EXPECT_EQ(error_line("1::2::3::4\n1::2::3\n"), 2u);
  EXPECT_EQ(error_line("1::2::3::4\n1::2::3::4::5\n"), 2u);
  EXPECT_EQ(error_line("1::2::3::-4\n"), 1u);
  EXPECT_EQ(error_line("1::2::nan::4\n"), 1u);
  EXPECT_THROW(ml(""), DataError);
  EXPECT_THROW(ml("\n\n"), DataError);
}

TEST(ParseTsv, FieldsAndHeader) {
  std::istringstream plain("a\tb\t4.5\t100\n");
  const auto log = parse_tsv(plain, false);
  ASSERT_EQ(log.records.size(), 1u);
  EXPECT_EQ(log.records[0], (InteractionRecord{"a", "b", 4.5, 100}));

  std::istringstream with_header("user\titem\trating\ttimestamp\na\tb\t4.5\t100\n");
  EXPECT_EQ(parse_tsv(with_header, true).records, log.records);

  std::istringstream bad("a\tb\t4.5\t100\na\tb\t4.5\n");
  try {
    parse_tsv(bad, false);
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseTsv, RoundTripIsIdentity) {
  numerics::SeededRng rng(5, 201);
  InteractionLog log;
  for (int j = 0; j < 500; ++j) {
    log.records.push_back({"u" + std::to_string(rng.uniform_index(50)),
                           "item-" + std::to_string(rng.uniform_index(80)),
                           rng.uniform(-10.0, 10.0),
                           static_cast<std::int64_t>(rng.uniform_index(2'000'000'000))});
  }
  for (bool header : {false, true}) {
    std::stringstream buf;
    write_tsv(log, buf, header);
    EXPECT_EQ(parse_tsv(buf, header).records, log.records);
  }
}

TEST(ParseFormat, Names) {
  EXPECT_EQ(parse_format("movielens"), LogFormat::movielens);
  EXPECT_EQ(parse_format("tsv"), LogFormat::tsv);
  EXPECT_THROW(parse_format("csv"), std::invalid_argument);
}

TEST(BuildDataset, DenseIdsByFirstAppearance) {
  const auto idx = build_dataset(log_of({{"b", "x", 1, 0}, {"a", "y", 2, 0}, {"b", "y", 3, 0}}));
  EXPECT_EQ(idx.users.raw_ids(), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(idx.items.raw_ids(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(idx.dataset.num_users, 2u);
  EXPECT_EQ(idx.dataset.interactions[2].user, 0u);
  EXPECT_EQ(idx.dataset.interactions[2].item, 1u);
  for (std::size_t j = 0; j < idx.users.size(); ++j) {
    EXPECT_EQ(idx.users.find(idx.users.raw(j)), j);
  }
  EXPECT_FALSE(idx.users.find("zzz").has_value());
}

TEST(BuildDataset, Normalization) {
  const auto ds = build_dataset(log_of({{"u", "1", 5, 0},
                                        {"u", "2", 1, 0},
                                        {"u", "3", 3, 0},
                                        {"v", "1", 2, 0}}))
                      .dataset;
  EXPECT_EQ(ds.interactions[0].target, 1.0);
  EXPECT_EQ(ds.interactions[1].target, 0.0);
  EXPECT_EQ(ds.interactions[2].target, 0.5);
  EXPECT_EQ(ds.interactions[3].target, 0.25);
  EXPECT_EQ(ds.rating_min, 1.0);
  EXPECT_EQ(ds.rating_max, 5.0);

  const auto flat = build_dataset(log_of({{"u", "1", 3, 0}, {"v", "2", 3, 0}})).dataset;
  for (const auto& x : flat.interactions) EXPECT_EQ(x.target, 1.0);
}

TEST(BuildDataset, DedupKeepsLatest) {
  auto ds = build_dataset(log_of({{"u", "i", 2, 10}, {"u", "j", 1, 5}, {"u", "i", 4, 20}}))
                .dataset;
  ASSERT_EQ(ds.interactions.size(), 2u);
  EXPECT_EQ(ds.interactions[0].timestamp, 20);
  EXPECT_EQ(ds.interactions[0].target, 1.0);

  // Out-of-order duplicate: the earlier timestamp loses even though it comes later.
  ds = build_dataset(log_of({{"u", "i", 4, 20}, {"u", "i", 2, 10}, {"u", "j", 1, 5}})).dataset;
  EXPECT_EQ(ds.interactions[0].timestamp, 20);

  // Equal timestamps: the later record in file order wins.
  ds = build_dataset(log_of({{"u", "i", 2, 10}, {"u", "i", 5, 10}, {"u", "j", 1, 5}})).dataset;
  EXPECT_EQ(ds.interactions[0].target, 1.0);
}

TEST(BuildDataset, InvariantsOnSyntheticLog) {
  const auto idx = build_dataset(testing::movielens_like_log(300, 200, 25, 4));
  const Dataset& ds = idx.dataset;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  double lo = 1, hi = 0;
  for (const auto& x : ds.interactions) {
    EXPECT_LT(x.user, ds.num_users);
    EXPECT_LT(x.item, ds.num_items);
    EXPECT_TRUE(pairs.emplace(x.user, x.item).second);
    const auto ctx = context_from_timestamp(x.timestamp);
    EXPECT_EQ(x.hour, ctx.hour);
    EXPECT_EQ(x.weekday, ctx.weekday);
    lo = std::min(lo, x.target);
    hi = std::max(hi, x.target);
  }
  EXPECT_EQ(lo, 0.0);
  EXPECT_EQ(hi, 1.0);
}

TEST(BuildDataset, RejectsEmptyLog) { EXPECT_THROW(build_dataset(InteractionLog{}), DataError); }

TEST(IdMap, FromRawIdsRejectsDuplicates) {
  const IdMap m = IdMap::from_raw_ids({"a", "b"});
  EXPECT_EQ(m.find("b"), 1u);
  EXPECT_THROW(IdMap::from_raw_ids({"a", "a"}), DataError);
}

TEST(Calendar, KnownDates) {
  EXPECT_EQ(context_from_timestamp(0), (model::Context{0, 3}));
  EXPECT_EQ(context_from_timestamp(86400), (model::Context{0, 4}));
  // 2001-01-01 00:00:00 UTC was a Monday.
  EXPECT_EQ(context_from_timestamp(978307200), (model::Context{0, 0}));
  EXPECT_EQ(context_from_timestamp(978307200 + 23 * 3600 + 3599), (model::Context{23, 0}));
  EXPECT_THROW(context_from_timestamp(-1), std::invalid_argument);
}

TEST(Calendar, MatchesLibcOracle) {
  numerics::SeededRng rng(9, 202);
  for (int j = 0; j < 1000; ++j) {
    const std::int64_t ts = static_cast<std::int64_t>(rng.uniform_index(4'000'000'000ULL));
    const std::time_t t = static_cast<std::time_t>(ts);
    std::tm tm{};
    ASSERT_NE(gmtime_r(&t, &tm), nullptr);
    const auto ctx = context_from_timestamp(ts);
    EXPECT_EQ(ctx.hour, tm.tm_hour) << ts;
    EXPECT_EQ(ctx.weekday, (tm.tm_wday + 6) % 7) << ts;  // tm_wday: 0 = Sunday
  }
}

TEST(Stats, Sparsity) {
  EXPECT_EQ(format_stats({1, 1, 1, sparsity_percent(1, 1, 1)}),
            "users=1 items=1 interactions=1 sparsity=100.00%");
  EXPECT_EQ(format_stats({2, 5, 3, sparsity_percent(2, 5, 3)}),
            "users=2 items=5 interactions=3 sparsity=30.00%");
  EXPECT_NEAR(sparsity_percent(6040, 3706, 1000209), 4.47, 0.01);
  EXPECT_NEAR(sparsity_percent(45481, 11537, 1567806), 0.30, 0.01);
  EXPECT_NEAR(sparsity_percent(192403, 63001, 1689188), 0.01, 0.01);

  const auto ds = build_dataset(log_of({{"a", "x", 1, 0}, {"a", "y", 2, 0}, {"b", "x", 3, 0}}))
                      .dataset;
  const DatasetStats s = stats(ds);
  EXPECT_EQ(s.users, 2u);
  EXPECT_EQ(s.items, 2u);
  EXPECT_EQ(s.interactions, 3u);
  EXPECT_DOUBLE_EQ(s.sparsity_percent, 75.0);
}

TEST(SampleUsers, KeepsWholeHistoriesInOrder) {
  const auto log = testing::movielens_like_log(50, 40, 10, 2);
  numerics::SeededRng rng(1, 203);
  const auto sub = sample_users(log, 10, rng);
  std::set<std::string> users;
  for (const auto& r : sub.records) users.insert(r.raw_user);
  EXPECT_EQ(users.size(), 10u);
  std::size_t expected = 0;
  for (const auto& r : log.records) expected += users.count(r.raw_user);
  EXPECT_EQ(sub.records.size(), expected);

  numerics::SeededRng again(1, 203);
  EXPECT_EQ(sample_users(log, 10, again).records, sub.records);
  numerics::SeededRng all(1, 203);
  EXPECT_EQ(sample_users(log, 1000, all).records, log.records);
}

Dataset tiny_dataset() {
  // u0: items 0,1,2 at ts 1,5,3; u1: single item; u2: two items with tied ts.
  return build_dataset(log_of({{"u0", "i0", 1, 1},
                               {"u0", "i1", 2, 5},
                               {"u0", "i2", 3, 3},
                               {"u1", "i3", 4, 7},
                               {"u2", "i4", 5, 9},
                               {"u2", "i1", 1, 9},
                               {"u3", "i5", 2, 2},
                               {"u3", "i6", 3, 4},
                               {"u3", "i7", 3, 6},
                               {"u3", "i8", 4, 8}}))
      .dataset;
}

TEST(Split, LatestIsHeldOut) {
  const Dataset ds = tiny_dataset();
  numerics::SeededRng rng(1, 3);
  const EvalSplit s = leave_one_out_split(ds, 2, rng);
  ASSERT_EQ(s.test.size(), 3u);
  EXPECT_EQ(s.test[0].user, 0u);
  EXPECT_EQ(s.test[0].positive, 1u);  // the ts=5 interaction
  EXPECT_EQ(s.test[0].context, context_from_timestamp(5));
  EXPECT_EQ(s.test[1].user, 2u);
  EXPECT_EQ(s.test[1].positive, 4u);  // tie on ts: larger item index
  EXPECT_EQ(s.test[2].positive, 8u);
  for (const auto& tc : s.test) EXPECT_EQ(tc.negatives.size(), 2u);
  // The single-interaction user stays in train only.
  EXPECT_TRUE(std::any_of(s.train.interactions.begin(), s.train.interactions.end(),
                          [](const Interaction& x) { return x.user == 1; }));
  EXPECT_EQ(s.users_skipped, 0u);
  EXPECT_EQ(s.train.interactions.size() + s.test.size(), ds.interactions.size());
}

TEST(Split, SkipsUsersWithoutEnoughNegatives) {
  const Dataset ds = tiny_dataset();  // 9 items; u3 has 5 unseen, u0 has 6, u2 has 7
  numerics::SeededRng rng(1, 3);
  const EvalSplit s = leave_one_out_split(ds, 6, rng);
  ASSERT_EQ(s.test.size(), 2u);
  EXPECT_EQ(s.users_skipped, 1u);
  EXPECT_EQ(s.train.interactions.size() + s.test.size(), ds.interactions.size());
  numerics::SeededRng again(1, 3);
  EXPECT_THROW(leave_one_out_split(ds, 0, again), std::invalid_argument);
}

TEST(Split, NegativesExhaustivelyValid) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Dataset ds = build_dataset(testing::movielens_like_log(120, 300, 30, seed)).dataset;
    numerics::SeededRng rng(seed, 3);
    const EvalSplit s = leave_one_out_split(ds, 99, rng);
    std::vector<std::set<std::size_t>> seen(ds.num_users);
    for (const auto& x : ds.interactions) seen[x.user].insert(x.item);
    std::set<std::pair<std::size_t, std::size_t>> train_pairs;
    for (const auto& x : s.train.interactions) train_pairs.emplace(x.user, x.item);
    std::set<std::size_t> test_users;
    for (const auto& tc : s.test) {
      EXPECT_TRUE(test_users.insert(tc.user).second);
      EXPECT_FALSE(train_pairs.count({tc.user, tc.positive}));
      ASSERT_EQ(tc.negatives.size(), 99u);
      std::set<std::size_t> uniq(tc.negatives.begin(), tc.negatives.end());
      EXPECT_EQ(uniq.size(), 99u);
      for (std::size_t n : tc.negatives) {
        EXPECT_LT(n, ds.num_items);
        EXPECT_FALSE(seen[tc.user].count(n));
      }
    }
    EXPECT_EQ(s.train.interactions.size() + s.test.size(), ds.interactions.size());
    EXPECT_TRUE(std::is_sorted(s.test.begin(), s.test.end(),
                               [](const auto& a, const auto& b) { return a.user < b.user; }));
  }
}

TEST(Split, NegativesCoverPoolUniformly) {
  // One user with 2 seen items out of 12; 5 negatives drawn from 10 each time.
  InteractionLog log;
  for (int j = 0; j < 12; ++j) log.records.push_back({"x", std::to_string(j), 1, j});
  log.records.push_back({"u", "0", 1, 1});
  log.records.push_back({"u", "1", 1, 2});
  const Dataset ds = build_dataset(log).dataset;
  std::vector<int> counts(12, 0);
  numerics::SeededRng rng(3, 3);
  const int trials = 4000;
  for (int t = 0; t < trials; ++t) {
    const EvalSplit s = leave_one_out_split(ds, 5, rng);
    for (const auto& tc : s.test) {
      if (tc.user != 1) continue;
      for (std::size_t n : tc.negatives) ++counts[n];
    }
  }
  EXPECT_EQ(counts[0] + counts[1], 0);
  // Each of the 10 items has inclusion probability 1/2.
  for (int j = 2; j < 12; ++j) EXPECT_NEAR(counts[j] / double(trials), 0.5, 0.04) << j;
}

TEST(Split, Deterministic) {
  const Dataset ds = build_dataset(testing::movielens_like_log(100, 200, 20, 7)).dataset;
  numerics::SeededRng a(11, 3), b(11, 3), c(12, 3);
  const EvalSplit sa = leave_one_out_split(ds, 50, a);
  EXPECT_EQ(sa, leave_one_out_split(ds, 50, b));
  EXPECT_NE(sa.test, leave_one_out_split(ds, 50, c).test);
}

}  // namespace
}  // namespace dain::data
