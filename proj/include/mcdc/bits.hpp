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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcdc {

/// Bit string stored MSB-first in bytes; bits past size() are always zero.
class BitString {
 public:
  BitString() = default;
  BitString(std::vector<std::uint8_t> bytes, std::size_t bits);
  static BitString zeros(std::size_t bits);

  std::size_t size() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool v);
  void flip(std::size_t i) { set_bit(i, !bit(i)); }

  void append(const BitString& tail);
  BitString slice(std::size_t offset, std::size_t length) const;

  /// Lowercase hex of the backing bytes (ceil(size/8) bytes).
  std::string hex() const;
  static BitString from_hex(std::string_view hex, std::size_t bits);

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.bits_ == b.bits_ && a.bytes_ == b.bytes_;
  }

 private:
  void clear_tail();

  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

}  // namespace mcdc
