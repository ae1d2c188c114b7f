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

#include "mcdc/bits.hpp"

#include <stdexcept>

namespace mcdc {

BitString::BitString(std::vector<std::uint8_t> bytes, std::size_t bits)
    : bytes_(std::move(bytes)), bits_(bits) {
  if (bytes_.size() * 8 < bits_) {
    throw std::invalid_argument("BitString: fewer bytes than bits");
  }
  bytes_.resize((bits_ + 7) / 8);
  clear_tail();
}

BitString BitString::zeros(std::size_t bits) {
  return BitString(std::vector<std::uint8_t>((bits + 7) / 8), bits);
}

void BitString::clear_tail() {
  if (bits_ % 8 != 0) {
    bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (bits_ % 8));
  }
}

bool BitString::bit(std::size_t i) const {
  if (i >= bits_) throw std::out_of_range("BitString::bit");
  return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
}

void BitString::set_bit(std::size_t i, bool v) {
  if (i >= bits_) throw std::out_of_range("BitString::set_bit");
  const auto mask = static_cast<std::uint8_t>(0x80u >> (i % 8));
  if (v) {
    bytes_[i / 8] |= mask;
  } else {
    bytes_[i / 8] &= static_cast<std::uint8_t>(~mask);
  }
}

void BitString::append(const BitString& tail) {
  if (bits_ % 8 == 0) {
    bytes_.insert(bytes_.end(), tail.bytes_.begin(), tail.bytes_.end());
    bits_ += tail.bits_;
    return;
  }
  const unsigned shift = bits_ % 8;
  std::size_t new_bits = bits_ + tail.bits_;
  bytes_.resize((new_bits + 7) / 8);
  std::size_t out = bits_ / 8;
  for (std::uint8_t b : tail.bytes_) {
    bytes_[out] |= static_cast<std::uint8_t>(b >> shift);
    if (out + 1 < bytes_.size()) {
      bytes_[out + 1] = static_cast<std::uint8_t>(b << (8 - shift));
    }
    ++out;
  }
  bits_ = new_bits;
  clear_tail();
}

BitString BitString::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > bits_) throw std::out_of_range("BitString::slice");
  BitString out = zeros(length);
  if (offset % 8 == 0) {
    for (std::size_t i = 0; i < out.bytes_.size(); ++i) out.bytes_[i] = bytes_[offset / 8 + i];
    out.clear_tail();
    return out;
  }
  for (std::size_t i = 0; i < length; ++i) {
    if (bit(offset + i)) out.set_bit(i, true);
  }
  return out;
}

std::string BitString::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    s += kDigits[b >> 4];
    s += kDigits[b & 0xF];
  }
  return s;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bits) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex string");
  auto nibble = [](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    throw std::invalid_argument("bad hex digit");
  };
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return BitString(std::move(bytes), bits);
}

}  // namespace mcdc
