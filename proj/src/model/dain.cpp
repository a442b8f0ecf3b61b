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

#include "dainrec/model/dain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dainrec/model/fingerprint.hpp"
#include "dainrec/numerics/kernels.hpp"
#include "dainrec/numerics/ops.hpp"

namespace dain::model {

using numerics::Matrix;
using numerics::Vector;

void accumulate_rows(RowGradients& into, std::size_t id, std::span<const double> grad) {
  auto [it, inserted] = into.try_emplace(id);
  if (inserted) {
    it->second.assign(grad.begin(), grad.end());
  } else {
    numerics::axpy(1.0, grad, it->second);
  }
}

DainModel::DainModel(EmbeddingTable users, EmbeddingTable items, std::vector<MlpLayer> layers,
                     ContextSpec context)
    : users_(std::move(users)),
      items_(std::move(items)),
      layers_(std::move(layers)),
      context_(context) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("DainModel: " + msg); };
  if (users_.dim() == 0 || users_.dim() != items_.dim()) {
    fail("user and item embedding dims must match and be >= 1 (" + std::to_string(users_.dim()) +
         " vs " + std::to_string(items_.dim()) + ")");
  }
  if (users_.num_rows() == 0 || items_.num_rows() == 0) fail("empty embedding table");
  if (layers_.empty()) fail("at least the scalar output layer is required");
  std::size_t expected_in = input_width();
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const MlpLayer& layer = layers_[l];
    if (layer.in_dim() != expected_in) {
      fail("layer " + std::to_string(l) + " expects input width " + std::to_string(expected_in) +
           " but has " + std::to_string(layer.in_dim()));
    }
    if (layer.bias.size() != layer.out_dim()) {
      fail("layer " + std::to_string(l) + " bias length " + std::to_string(layer.bias.size()) +
           " != out_dim " + std::to_string(layer.out_dim()));
    }
    const bool last = l + 1 == layers_.size();
    if (last && (layer.out_dim() != 1 || layer.activation != Activation::identity)) {
      fail("final layer must be a single identity output");
    }
    if (!last && layer.activation != Activation::relu) fail("hidden layers must use relu");
    expected_in = layer.out_dim();
  }
}

std::uint64_t DainModel::arch_fingerprint() const noexcept {
  Fingerprint fp;
  fp.add({0, num_users(), num_items(), embedding_dim(), layers_.size()});
  for (const auto& layer : layers_) fp.add({layer.in_dim(), layer.out_dim()});
  fp.add({context_.enabled ? 1u : 0u, context_.hour_buckets, context_.weekday_buckets});
  return fp.value();
}

std::vector<ParameterBlock> DainModel::parameter_blocks() {
  std::vector<ParameterBlock> blocks;
  blocks.push_back({users_.table().values(), true, users_.dim()});
  blocks.push_back({items_.table().values(), true, items_.dim()});
  for (auto& layer : layers_) {
    blocks.push_back({layer.weights.values(), false, 0});
    blocks.push_back({layer.bias, false, 0});
  }
  return blocks;
}

std::vector<ConstParameterBlock> DainModel::parameter_blocks() const {
  std::vector<ConstParameterBlock> blocks;
  blocks.push_back({users_.table().values(), true, users_.dim()});
  blocks.push_back({items_.table().values(), true, items_.dim()});
  for (const auto& layer : layers_) {
    blocks.push_back({layer.weights.values(), false, 0});
    blocks.push_back({layer.bias, false, 0});
  }
  return blocks;
}

std::size_t DainModel::parameter_count() const noexcept {
  std::size_t n = users_.table().size() + items_.table().size();
  for (const auto& layer : layers_) n += layer.weights.size() + layer.bias.size();
  return n;
}

DainGradients DainGradients::zeros_like(const DainModel& model) {
  DainGradients g;
  for (const auto& layer : model.layers()) {
    g.weights.emplace_back(layer.out_dim(), layer.in_dim());
    g.biases.emplace_back(layer.out_dim(), 0.0);
  }
  return g;
}

void DainGradients::clear() {
  for (auto& w : weights) w.fill(0.0);
  for (auto& b : biases) std::fill(b.begin(), b.end(), 0.0);
  users.clear();
  items.clear();
}

std::vector<GradientBlock> DainGradients::blocks() const {
  std::vector<GradientBlock> out;
  out.push_back({{}, &users});
  out.push_back({{}, &items});
  for (std::size_t l = 0; l < weights.size(); ++l) {
    out.push_back({weights[l].values(), nullptr});
    out.push_back({biases[l], nullptr});
  }
  return out;
}

namespace {

void check_ids(const DainModel& model, std::size_t user, std::size_t item) {
  if (user >= model.num_users()) {
    throw std::out_of_range("user id " + std::to_string(user) + " out of range for " +
                            std::to_string(model.num_users()) + " users");
  }
  if (item >= model.num_items()) {
    throw std::out_of_range("item id " + std::to_string(item) + " out of range for " +
                            std::to_string(model.num_items()) + " items");
  }
}

void check_context(const DainModel& model, const std::optional<Context>& ctx) {
  if (model.context().enabled && !ctx) {
    throw std::invalid_argument("context-enabled model requires a context");
  }
  if (!model.context().enabled && ctx) {
    throw std::invalid_argument("context-disabled model does not accept a context");
  }
}

void fill_input(const DainModel& model, std::size_t user, std::size_t item,
                const std::optional<Context>& ctx, std::span<double> x) {
  const std::size_t k = model.embedding_dim();
  const auto p = model.user_table().row(user);
  const auto q = model.item_table().row(item);
  std::copy(p.begin(), p.end(), x.begin());
  std::copy(q.begin(), q.end(), x.begin() + static_cast<std::ptrdiff_t>(k));
  if (ctx) encode_context_into(model.context(), *ctx, x.subspan(2 * k));
}

// One layer: pre = W·x + b, out = act(pre). Shared by the traced and batch paths
// so both produce identical bits.
void apply_layer(const MlpLayer& layer, std::span<const double> x, std::span<double> pre,
                 std::span<double> out) {
  numerics::matvec_into(layer.weights, x, pre);
  for (std::size_t r = 0; r < pre.size(); ++r) pre[r] = pre[r] + layer.bias[r];
  if (layer.activation == Activation::relu) {
    numerics::kernels().relu(pre.data(), out.data(), pre.size());
  } else {
    std::copy(pre.begin(), pre.end(), out.begin());
  }
}

}  // namespace

PredictionTrace forward(const DainModel& model, std::size_t user, std::size_t item,
                        std::optional<Context> ctx) {
  check_ids(model, user, item);
  check_context(model, ctx);
  PredictionTrace trace;
  trace.user = user;
  trace.item = item;
  trace.context = ctx;
  const auto& layers = model.layers();
  trace.inputs.resize(layers.size());
  trace.pre_activations.resize(layers.size());
  trace.inputs[0].resize(model.input_width());
  fill_input(model, user, item, ctx, trace.inputs[0]);
  Vector last_out;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    trace.pre_activations[l].resize(layers[l].out_dim());
    Vector& out = l + 1 < layers.size() ? trace.inputs[l + 1] : last_out;
    out.resize(layers[l].out_dim());
    apply_layer(layers[l], trace.inputs[l], trace.pre_activations[l], out);
  }
  trace.logit = trace.pre_activations.back()[0];
  trace.score = numerics::sigmoid(trace.logit);
  return trace;
}

void backward_into(const DainModel& model, const PredictionTrace& trace, double dl_dy,
                   DainGradients& acc) {
  const auto& layers = model.layers();
  if (trace.inputs.size() != layers.size() || trace.pre_activations.size() != layers.size() ||
      trace.inputs[0].size() != model.input_width()) {
    throw std::invalid_argument("backward: trace does not match model architecture");
  }
  if (acc.weights.size() != layers.size()) {
    throw std::invalid_argument("backward: gradient accumulator does not match model");
  }
  const numerics::KernelTable& k = numerics::kernels();
  // d score / d logit = y (1 - y)
  Vector delta{dl_dy * (trace.score * (1.0 - trace.score))};
  Vector upstream;
  for (std::size_t l = layers.size(); l-- > 0;) {
    const MlpLayer& layer = layers[l];
    const Vector& x = trace.inputs[l];
    Matrix& gw = acc.weights[l];
    Vector& gb = acc.biases[l];
    for (std::size_t r = 0; r < delta.size(); ++r) {
      if (delta[r] == 0.0) continue;
      k.axpy(delta[r], x.data(), gw.row(r).data(), x.size());
      gb[r] = gb[r] + delta[r];
    }
    upstream.assign(x.size(), 0.0);
    numerics::add_transposed_matvec(layer.weights, delta, upstream);
    if (l > 0) {
      delta.resize(upstream.size());
      k.relu_backward(trace.pre_activations[l - 1].data(), upstream.data(), delta.data(),
                      upstream.size());
    }
  }
  const std::size_t dim = model.embedding_dim();
  const std::span<const double> dx(upstream);
  accumulate_rows(acc.users, trace.user, dx.subspan(0, dim));
  accumulate_rows(acc.items, trace.item, dx.subspan(dim, dim));
}

DainGradients backward(const DainModel& model, const PredictionTrace& trace, std::size_t user,
                       std::size_t item, std::optional<Context> ctx, double dl_dy) {
  if (trace.user != user || trace.item != item || trace.context != ctx) {
    throw std::invalid_argument("backward: trace was produced for a different example");
  }
  DainGradients g = DainGradients::zeros_like(model);
  backward_into(model, trace, dl_dy, g);
  return g;
}

std::vector<double> predict_batch(const DainModel& model, std::size_t user,
                                  std::span<const std::size_t> items, std::optional<Context> ctx) {
  check_context(model, ctx);
  for (std::size_t item : items) check_ids(model, user, item);
  const auto& layers = model.layers();
  std::size_t widest = model.input_width();
  for (const auto& layer : layers) widest = std::max(widest, layer.out_dim());
  Vector x(widest), pre(widest), out(widest);
  std::vector<double> scores;
  scores.reserve(items.size());
  for (std::size_t item : items) {
    std::size_t width = model.input_width();
    fill_input(model, user, item, ctx, std::span<double>(x).first(width));
    for (const auto& layer : layers) {
      const std::size_t n = layer.out_dim();
      apply_layer(layer, std::span<const double>(x).first(width), std::span<double>(pre).first(n),
                  std::span<double>(out).first(n));
      std::copy_n(out.begin(), n, x.begin());
      width = n;
    }
    scores.push_back(numerics::sigmoid(pre[0]));
  }
  return scores;
}

}  // namespace dain::model
