// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#include "kshv/rng.hpp"

namespace kshv {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t ctr[4], std::uint32_t k0, std::uint32_t k1) {
  const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
  const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t x1 = ctr[1];
  const std::uint32_t x3 = ctr[3];
  ctr[0] = hi1 ^ x1 ^ k0;
  ctr[1] = lo1;
  ctr[2] = hi0 ^ x3 ^ k1;
  ctr[3] = lo0;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed),
      stream_id_(stream_id),
      key0_(static_cast<std::uint32_t>(seed)),
      key1_(static_cast<std::uint32_t>(seed >> 32)) {}

void RngStream::refill(std::uint64_t block) {
  // 128-bit counter: 64 bits of block index, 64 bits of stream id.
  std::uint32_t ctr[4] = {
      static_cast<std::uint32_t>(block),
      static_cast<std::uint32_t>(block >> 32),
      static_cast<std::uint32_t>(stream_id_),
      static_cast<std::uint32_t>(stream_id_ >> 32),
  };
  std::uint32_t k0 = key0_;
  std::uint32_t k1 = key1_;
  philox_round(ctr, k0, k1);
  for (int r = 1; r < 10; ++r) {
    k0 += kWeyl0;
    k1 += kWeyl1;
    philox_round(ctr, k0, k1);
  }
  out_[0] = ctr[0];
  out_[1] = ctr[1];
  out_[2] = ctr[2];
  out_[3] = ctr[3];
  cached_block_ = block;
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t block = drawn_ >> 1;
  if (block != cached_block_) refill(block);
  const int half = static_cast<int>(drawn_ & 1);
  ++drawn_;
  const std::uint32_t lo = out_[2 * half];
  const std::uint32_t hi = out_[2 * half + 1];
  return (std::uint64_t{hi} << 32) | lo;
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace kshv
