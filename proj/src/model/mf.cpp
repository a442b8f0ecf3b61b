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

#include "dainrec/model/mf.hpp"

#include <stdexcept>
#include <string>

#include "dainrec/model/fingerprint.hpp"
#include "dainrec/numerics/kernels.hpp"
#include "dainrec/numerics/ops.hpp"

namespace dain::model {

void MfModel::validate() const {
  if (user_table.dim() == 0 || user_table.dim() != item_table.dim()) {
    throw std::invalid_argument("MfModel: user and item embedding dims must match and be >= 1");
  }
  if (user_bias.size() != user_table.num_rows() || item_bias.size() != item_table.num_rows()) {
    throw std::invalid_argument("MfModel: bias lengths must equal table row counts");
  }
}

std::uint64_t MfModel::arch_fingerprint() const noexcept {
  return Fingerprint().add({1, num_users(), num_items(), embedding_dim()}).value();
}

std::vector<ParameterBlock> MfModel::parameter_blocks() {
  return {{user_table.table().values(), true, embedding_dim()},
          {item_table.table().values(), true, embedding_dim()},
          {user_bias, true, 1},
          {item_bias, true, 1},
          {std::span<double>(&global_bias, 1), false, 0}};
}

std::vector<ConstParameterBlock> MfModel::parameter_blocks() const {
  return {{user_table.table().values(), true, embedding_dim()},
          {item_table.table().values(), true, embedding_dim()},
          {user_bias, true, 1},
          {item_bias, true, 1},
          {std::span<const double>(&global_bias, 1), false, 0}};
}

std::size_t MfModel::parameter_count() const noexcept {
  return user_table.table().size() + item_table.table().size() + user_bias.size() +
         item_bias.size() + 1;
}

void MfGradients::clear() {
  users.clear();
  items.clear();
  user_bias.clear();
  item_bias.clear();
  global_bias = 0.0;
}

std::vector<GradientBlock> MfGradients::blocks() const {
  return {{{}, &users},
          {{}, &items},
          {{}, &user_bias},
          {{}, &item_bias},
          {std::span<const double>(&global_bias, 1), nullptr}};
}

namespace {

void check_ids(const MfModel& model, std::size_t user, std::size_t item) {
  if (user >= model.num_users()) {
    throw std::out_of_range("user id " + std::to_string(user) + " out of range for " +
                            std::to_string(model.num_users()) + " users");
  }
  if (item >= model.num_items()) {
    throw std::out_of_range("item id " + std::to_string(item) + " out of range for " +
                            std::to_string(model.num_items()) + " items");
  }
}

double logit(const MfModel& model, std::size_t user, std::size_t item) {
  const auto p = model.user_table.table().row(user);
  const auto q = model.item_table.table().row(item);
  const double interaction = numerics::kernels().dot(p.data(), q.data(), p.size());
  return ((model.global_bias + model.user_bias[user]) + model.item_bias[item]) + interaction;
}

}  // namespace

double mf_forward(const MfModel& model, std::size_t user, std::size_t item) {
  check_ids(model, user, item);
  return numerics::sigmoid(logit(model, user, item));
}

void mf_backward_into(const MfModel& model, std::size_t user, std::size_t item, double score,
                      double dl_dy, MfGradients& acc) {
  check_ids(model, user, item);
  const double d = dl_dy * (score * (1.0 - score));
  const std::size_t k = model.embedding_dim();
  numerics::Vector gp(k, 0.0), gq(k, 0.0);
  const auto p = model.user_table.table().row(user);
  const auto q = model.item_table.table().row(item);
  numerics::kernels().axpy(d, q.data(), gp.data(), k);
  numerics::kernels().axpy(d, p.data(), gq.data(), k);
  accumulate_rows(acc.users, user, gp);
  accumulate_rows(acc.items, item, gq);
  const double one[1] = {d};
  accumulate_rows(acc.user_bias, user, one);
  accumulate_rows(acc.item_bias, item, one);
  acc.global_bias = acc.global_bias + d;
}

MfGradients mf_backward(const MfModel& model, std::size_t user, std::size_t item, double dl_dy) {
  MfGradients g;
  mf_backward_into(model, user, item, mf_forward(model, user, item), dl_dy, g);
  return g;
}

std::vector<double> mf_predict_batch(const MfModel& model, std::size_t user,
                                     std::span<const std::size_t> items) {
  for (std::size_t item : items) check_ids(model, user, item);
  std::vector<double> scores;
  scores.reserve(items.size());
  for (std::size_t item : items) scores.push_back(numerics::sigmoid(logit(model, user, item)));
  return scores;
}

}  // namespace dain::model
