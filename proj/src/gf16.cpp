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

#include "mcdc/gf16.hpp"

#include <stdexcept>
#include <vector>

namespace mcdc::gf16 {
namespace {

struct Tables {
  // exp_ is doubled so log(a) + log(b) never needs a modulo.
  std::vector<std::uint16_t> exp_;
  std::vector<std::uint32_t> log_;

  Tables() : exp_(2 * kOrder + 2), log_(kOrder + 1) {
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < kOrder; ++i) {
      exp_[i] = static_cast<std::uint16_t>(x);
      log_[x] = i;
      x <<= 1;
      if (x & 0x10000u) x ^= kPolynomial;
    }
    if (x != 1) {
      throw std::logic_error("GF(2^16) polynomial is not primitive");
    }
    for (std::uint32_t i = kOrder; i < exp_.size(); ++i) exp_[i] = exp_[i - kOrder];
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

FieldElem mul(FieldElem a, FieldElem b) {
  if (a.is_zero() || b.is_zero()) return FieldElem();
  const Tables& t = tables();
  return FieldElem(t.exp_[t.log_[a.value] + t.log_[b.value]]);
}

FieldElem inv(FieldElem a) {
  if (a.is_zero()) {
    throw std::domain_error("GF(2^16): zero has no inverse");
  }
  const Tables& t = tables();
  return FieldElem(t.exp_[kOrder - t.log_[a.value]]);
}

FieldElem pow(FieldElem a, unsigned e) {
  if (e == 0) return FieldElem(1);
  if (a.is_zero()) return FieldElem();
  const Tables& t = tables();
  const std::uint64_t l = (static_cast<std::uint64_t>(t.log_[a.value]) * e) % kOrder;
  return FieldElem(t.exp_[l]);
}

void mul_add(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src, FieldElem c) {
  if (dst.size() != src.size()) {
    throw std::invalid_argument("mul_add: length mismatch");
  }
  if (c.is_zero()) return;
  if (c.value == 1) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
    return;
  }
  const Tables& t = tables();
  const std::uint32_t lc = t.log_[c.value];
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (src[i] != 0) dst[i] ^= t.exp_[t.log_[src[i]] + lc];
  }
}

FieldElem mul_slow(FieldElem a, FieldElem b) {
  std::uint32_t x = a.value;
  std::uint32_t y = b.value;
  std::uint32_t acc = 0;
  while (y != 0) {
    if (y & 1u) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & 0x10000u) x ^= kPolynomial;
  }
  return FieldElem(static_cast<std::uint16_t>(acc));
}

}  // namespace mcdc::gf16
