// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace kshv {

// Counter-based pseudo-random stream (Philox-4x32, 10 rounds). A stream is
// identified by (seed, stream_id); equal identifiers reproduce the identical
// sample sequence on any platform, since only integer arithmetic is involved.
// Distinct stream ids give statistically independent sequences, so parallel
// workers each own one stream and never share state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Number of 64-bit words drawn so far.
  std::uint64_t counter() const { return drawn_; }

  /// Reposition the stream as if exactly `n` words had been drawn.
  void seek(std::uint64_t n) { drawn_ = n; }

 private:
  void refill(std::uint64_t block);

  std::uint64_t seed_ = 0;
  std::uint64_t stream_id_ = 0;
  std::uint64_t drawn_ = 0;
  std::uint64_t cached_block_ = ~std::uint64_t{0};
  std::uint32_t key0_ = 0;
  std::uint32_t key1_ = 0;
  std::uint32_t out_[4] = {0, 0, 0, 0};
};

}  // namespace kshv
