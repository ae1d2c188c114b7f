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

#pragma once

#include <cstdint>
#include <span>

namespace mcdc {

/// Element of GF(2^16) modulo x^16 + x^12 + x^3 + x + 1.
struct FieldElem {
  std::uint16_t value = 0;

  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint16_t v) : value(v) {}

  bool is_zero() const { return value == 0; }
  friend constexpr bool operator==(FieldElem a, FieldElem b) { return a.value == b.value; }
  friend constexpr auto operator<=>(FieldElem a, FieldElem b) { return a.value <=> b.value; }
};

namespace gf16 {

inline constexpr std::uint32_t kPolynomial = 0x1100B;
inline constexpr std::uint32_t kOrder = 65535;  // multiplicative group size

inline FieldElem add(FieldElem a, FieldElem b) {
  return FieldElem(static_cast<std::uint16_t>(a.value ^ b.value));
}
FieldElem mul(FieldElem a, FieldElem b);
/// Throws std::domain_error for zero.
FieldElem inv(FieldElem a);
FieldElem pow(FieldElem a, unsigned e);

/// dst[i] ^= c * src[i]
void mul_add(std::span<std::uint16_t> dst, std::span<const std::uint16_t> src, FieldElem c);

/// Shift-and-reduce multiply without tables; used to cross-check the tables.
FieldElem mul_slow(FieldElem a, FieldElem b);

}  // namespace gf16

inline FieldElem operator+(FieldElem a, FieldElem b) { return gf16::add(a, b); }
inline FieldElem operator*(FieldElem a, FieldElem b) { return gf16::mul(a, b); }

}  // namespace mcdc
