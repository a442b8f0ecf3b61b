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

#include "dainrec/cli/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

namespace dain::cli {
namespace {

using Kind = CheckpointError::Kind;

class Writer {
 public:
  void bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    out_.insert(out_.end(), b, b + n);
  }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int b = 0; b < 4; ++b) out_.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
  }
  void u64(std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out_.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void id_map(const data::IdMap& map) {
    u64(map.size());
    for (const auto& raw : map.raw_ids()) {
      u32(static_cast<std::uint32_t>(raw.size()));
      bytes(raw.data(), raw.size());
    }
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& in) : in_(in) {}

  const std::uint8_t* take(std::size_t n) {
    if (n > in_.size() - pos_) throw CheckpointError(Kind::corrupt, "corrupt checkpoint: truncated payload");
    const std::uint8_t* p = in_.data() + pos_;
    pos_ += n;
    return p;
  }
  std::uint8_t u8() { return *take(1); }
  std::uint32_t u32() {
    const auto* p = take(4);
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(p[b]) << (8 * b);
    return v;
  }
  std::uint64_t u64() {
    const auto* p = take(8);
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= static_cast<std::uint64_t>(p[b]) << (8 * b);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::size_t remaining() const noexcept { return in_.size() - pos_; }

  // Rejects counts that cannot possibly fit in what is left of the file.
  std::uint64_t count(std::uint64_t min_bytes_each) {
    const std::uint64_t n = u64();
    if (min_bytes_each > 0 && n > remaining() / min_bytes_each) {
      throw CheckpointError(Kind::corrupt, "corrupt checkpoint: truncated payload");
    }
    return n;
  }

  data::IdMap id_map(std::uint64_t expected) {
    const std::uint64_t n = count(4);
    if (n != expected) throw CheckpointError(Kind::corrupt, "corrupt checkpoint: id map size mismatch");
    std::vector<std::string> raw;
    raw.reserve(n);
    for (std::uint64_t j = 0; j < n; ++j) {
      const std::uint32_t len = u32();
      const auto* p = take(len);
      raw.emplace_back(reinterpret_cast<const char*>(p), len);
    }
    try {
      return data::IdMap::from_raw_ids(std::move(raw));
    } catch (const std::exception&) {
      throw CheckpointError(Kind::corrupt, "corrupt checkpoint: duplicate id in id map");
    }
  }

 private:
  const std::vector<std::uint8_t>& in_;
  std::size_t pos_ = 0;
};

constexpr std::uint32_t kKindDain = 0;
constexpr std::uint32_t kKindMf = 1;

}  // namespace

std::vector<std::uint8_t> serialize_checkpoint(const Checkpoint& ckpt) {
  Writer w;
  w.bytes(kCheckpointMagic, sizeof kCheckpointMagic);
  w.u32(kCheckpointVersion);
  std::vector<model::ConstParameterBlock> blocks;
  std::uint64_t fingerprint = 0;
  if (const auto* dain = std::get_if<model::DainModel>(&ckpt.model)) {
    w.u32(kKindDain);
    w.u64(dain->num_users());
    w.u64(dain->num_items());
    w.u64(dain->embedding_dim());
    w.u64(dain->layers().size());
    for (const auto& layer : dain->layers()) w.u64(layer.out_dim());
    w.u8(dain->context().enabled ? 1 : 0);
    w.u8(static_cast<std::uint8_t>(dain->context().hour_buckets));
    w.u8(static_cast<std::uint8_t>(dain->context().weekday_buckets));
    w.u8(0);
    blocks = dain->parameter_blocks();
    fingerprint = dain->arch_fingerprint();
  } else {
    const auto& mf = std::get<model::MfModel>(ckpt.model);
    w.u32(kKindMf);
    w.u64(mf.num_users());
    w.u64(mf.num_items());
    w.u64(mf.embedding_dim());
    w.u64(0);
    w.u8(0);
    w.u8(0);
    w.u8(0);
    w.u8(0);
    blocks = mf.parameter_blocks();
    fingerprint = mf.arch_fingerprint();
  }
  w.u64(ckpt.seed);
  w.u64(fingerprint);
  w.id_map(ckpt.users);
  w.id_map(ckpt.items);
  std::uint64_t total = 0;
  for (const auto& b : blocks) total += b.values.size();
  w.u64(total);
  for (const auto& b : blocks) {
    for (double v : b.values) w.f64(v);
  }
  return w.take();
}

Checkpoint deserialize_checkpoint(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < sizeof kCheckpointMagic ||
      std::memcmp(bytes.data(), kCheckpointMagic, sizeof kCheckpointMagic) != 0) {
    throw CheckpointError(Kind::bad_magic, "not a checkpoint (bad magic bytes)");
  }
  Reader r(bytes);
  r.take(sizeof kCheckpointMagic);
  const std::uint32_t version = r.u32();
  if (version != kCheckpointVersion) {
    throw CheckpointError(Kind::unsupported_version,
                          "unsupported version " + std::to_string(version) + " (expected " +
                              std::to_string(kCheckpointVersion) + ")");
  }
  const std::uint32_t kind = r.u32();
  if (kind != kKindDain && kind != kKindMf) {
    throw CheckpointError(Kind::corrupt, "corrupt checkpoint: unknown model kind");
  }
  const std::uint64_t num_users = r.u64();
  const std::uint64_t num_items = r.u64();
  const std::uint64_t dim = r.u64();
  const std::uint64_t num_layers = r.count(8);
  std::vector<std::uint64_t> widths(num_layers);
  for (auto& wdt : widths) wdt = r.u64();
  const bool context_enabled = r.u8() != 0;
  const std::uint8_t hour_buckets = r.u8();
  const std::uint8_t weekday_buckets = r.u8();
  r.u8();
  Checkpoint ckpt;
  ckpt.seed = r.u64();
  const std::uint64_t fingerprint = r.u64();

  // Reject absurd dimensions before allocating anything sized by them.
  const std::uint64_t limit = bytes.size() / 8;
  auto bounded = [&](std::uint64_t v) {
    if (v == 0 || v > limit) throw CheckpointError(Kind::corrupt, "corrupt checkpoint: bad dimension");
    return static_cast<std::size_t>(v);
  };
  ckpt.users = r.id_map(num_users);
  ckpt.items = r.id_map(num_items);

  model::ContextSpec ctx;
  ctx.enabled = context_enabled;
  if (context_enabled) {
    ctx.hour_buckets = hour_buckets;
    ctx.weekday_buckets = weekday_buckets;
  }
  const std::size_t nu = bounded(num_users), ni = bounded(num_items), k = bounded(dim);
  {
    // Parameter count implied by the header, checked before any allocation.
    unsigned __int128 implied = static_cast<unsigned __int128>(nu + ni) * k;
    if (kind == kKindDain) {
      unsigned __int128 in = 2 * k + ctx.width();
      for (std::uint64_t wdt : widths) {
        implied += (in + 1) * bounded(wdt);
        in = wdt;
      }
    } else {
      implied += nu + ni + 1;
    }
    if (implied * 8 > r.remaining()) {
      throw CheckpointError(Kind::corrupt, "corrupt checkpoint: truncated payload");
    }
  }
  try {
    if (kind == kKindDain) {
      if (num_layers == 0) throw CheckpointError(Kind::corrupt, "corrupt checkpoint: no layers");
      std::vector<model::MlpLayer> layers;
      std::size_t in = 2 * k + ctx.width();
      for (std::size_t l = 0; l < widths.size(); ++l) {
        const std::size_t out = bounded(widths[l]);
        model::MlpLayer layer;
        layer.weights = numerics::Matrix(out, in);
        layer.bias.assign(out, 0.0);
        layer.activation = l + 1 == widths.size() ? model::Activation::identity : model::Activation::relu;
        layers.push_back(std::move(layer));
        in = out;
      }
      ckpt.model = model::DainModel(model::EmbeddingTable(nu, k), model::EmbeddingTable(ni, k),
                                    std::move(layers), ctx);
    } else {
      if (num_layers != 0) throw CheckpointError(Kind::corrupt, "corrupt checkpoint: mf with layers");
      model::MfModel mf;
      mf.user_table = model::EmbeddingTable(nu, k);
      mf.item_table = model::EmbeddingTable(ni, k);
      mf.user_bias.assign(nu, 0.0);
      mf.item_bias.assign(ni, 0.0);
      ckpt.model = std::move(mf);
    }
  } catch (const std::invalid_argument& e) {
    throw CheckpointError(Kind::corrupt, std::string("corrupt checkpoint: ") + e.what());
  }

  std::uint64_t expected_fp = 0;
  std::vector<model::ParameterBlock> blocks;
  std::visit(
      [&](auto& m) {
        expected_fp = m.arch_fingerprint();
        blocks = m.parameter_blocks();
      },
      ckpt.model);
  if (expected_fp != fingerprint) {
    throw CheckpointError(Kind::corrupt, "corrupt checkpoint: architecture fingerprint mismatch");
  }
  std::uint64_t total = 0;
  for (const auto& b : blocks) total += b.values.size();
  if (r.u64() != total) throw CheckpointError(Kind::corrupt, "corrupt checkpoint: parameter count mismatch");
  if (r.remaining() < total * 8) throw CheckpointError(Kind::corrupt, "corrupt checkpoint: truncated payload");
  for (auto& b : blocks) {
    for (double& v : b.values) v = r.f64();
  }
  if (r.remaining() != 0) {
    throw CheckpointError(Kind::corrupt, "corrupt checkpoint: " + std::to_string(r.remaining()) +
                                             " trailing bytes");
  }
  return ckpt;
}

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path) {
  const auto bytes = serialize_checkpoint(ckpt);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CheckpointError(Kind::io, "cannot write checkpoint '" + path.string() + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw CheckpointError(Kind::io, "failed writing checkpoint '" + path.string() + "'");
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError(Kind::io, "cannot read checkpoint '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_checkpoint(bytes);
}

}  // namespace dain::cli
