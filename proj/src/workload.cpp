/*
 * Copyright 2026 The mcdc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mcdc/workload.hpp"

#include <random>

namespace mcdc::workload {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t absorb(std::uint64_t h, const BitString& bits) {
  h = mix(h ^ bits.size());
  std::uint64_t word = 0;
  int filled = 0;
  for (std::uint8_t b : bits.bytes()) {
    word = word << 8 | b;
    if (++filled == 8) {
      h = mix(h ^ word);
      word = 0;
      filled = 0;
    }
  }
  if (filled > 0) h = mix(h ^ word ^ (static_cast<std::uint64_t>(filled) << 59));
  return h;
}

}  // namespace

BitString file_contents(std::uint64_t seed, long long n, long long F) {
  std::mt19937_64 rng(mix(seed) ^ mix(static_cast<std::uint64_t>(n) + 0x51ed2701ULL));
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>((F + 7) / 8));
  for (auto& b : bytes) b = static_cast<std::uint8_t>(rng() >> 56);
  return BitString(std::move(bytes), static_cast<std::size_t>(F));
}

BitString map_value(long long q, long long n, const BitString& file, long long T) {
  std::uint64_t key = mix(static_cast<std::uint64_t>(q) * 0x100000001b3ULL ^
                          mix(static_cast<std::uint64_t>(n)));
  key = absorb(key, file);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>((T + 7) / 8));
  for (std::size_t i = 0; i < bytes.size(); i += 8) {
    const std::uint64_t block = mix(key ^ mix(i / 8 + 1));
    for (std::size_t j = 0; j < 8 && i + j < bytes.size(); ++j) {
      bytes[i + j] = static_cast<std::uint8_t>(block >> (56 - 8 * j));
    }
  }
  return BitString(std::move(bytes), static_cast<std::size_t>(T));
}

std::uint64_t reduce_value(long long q, std::span<const BitString> values) {
  std::uint64_t h = mix(static_cast<std::uint64_t>(q) ^ 0xa0761d6478bd642fULL);
  for (const BitString& v : values) h = absorb(h, v);
  return h;
}

}  // namespace mcdc::workload
