// Copyright 2026 The bplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BPLAB_RNG_HPP
#define BPLAB_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace bplab {

// Philox4x32-10 block function (Salmon et al., SC'11). Exposed for the
// known-answer tests.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Mixes a parent seed with a tag (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

// A counter-based random stream. The pair (seed, stream_id) fully determines
// the sequence: the seed is the Philox key, the stream id occupies the upper
// half of the counter and the block index the lower half. Copies replay the
// same draws, so a stream must not be shared across concurrent consumers.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1).
  double uniform();

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();

  // Standard complex Gaussian: real and imaginary parts N(0, 1/2), E|z|^2 = 1.
  std::complex<double> complex_normal();

  // Poisson(mean) by chunked inversion; exact for any finite mean >= 0.
  std::uint64_t poisson(double mean);

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bplab

#endif  // BPLAB_RNG_HPP
