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

#include "dainrec/eval/evaluate.hpp"

#include <json.hpp>

#include "dainrec/eval/metrics.hpp"

namespace dain::eval {

MetricReport evaluate(const Scorer& scorer, const data::EvalSplit& split, std::size_t k) {
  if (k == 0) throw std::invalid_argument("evaluate: k must be >= 1");
  if (split.test.empty()) throw std::invalid_argument("evaluate: empty test set");
  if (scorer.num_users() != split.train.num_users || scorer.num_items() != split.train.num_items) {
    throw IdSpaceMismatch("model has " + std::to_string(scorer.num_users()) + " users / " +
                          std::to_string(scorer.num_items()) + " items but the data has " +
                          std::to_string(split.train.num_users) + " users / " +
                          std::to_string(split.train.num_items) + " items");
  }
  MetricReport report;
  report.k = k;
  report.users_skipped = split.users_skipped;
  std::vector<std::size_t> candidates;
  double map_sum = 0.0, ndcg_sum = 0.0, hr_sum = 0.0;
  for (const auto& tc : split.test) {
    candidates.clear();
    candidates.push_back(tc.positive);
    candidates.insert(candidates.end(), tc.negatives.begin(), tc.negatives.end());
    const auto scores = scorer.score(tc.user, candidates, tc.context);
    const RankedList ranked = RankedList::from_scores(candidates, scores);
    const std::size_t relevant[1] = {tc.positive};
    hr_sum += hit_rate_at_k(ranked, relevant, k);
    ndcg_sum += ndcg_at_k(ranked, relevant, k);
    map_sum += map_at_k(ranked, relevant, k);
  }
  report.users_evaluated = split.test.size();
  const double n = static_cast<double>(report.users_evaluated);
  report.map_at_k = map_sum / n;
  report.ndcg_at_k = ndcg_sum / n;
  report.hr_at_k = hr_sum / n;
  return report;
}

std::string to_json(const MetricReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["map"] = r.map_at_k;
  j["ndcg"] = r.ndcg_at_k;
  j["hr"] = r.hr_at_k;
  j["users_evaluated"] = r.users_evaluated;
  j["users_skipped"] = r.users_skipped;
  return j.dump();
}

}  // namespace dain::eval
