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
#include <map>
#include <span>
#include <vector>

#include "mcdc/bits.hpp"
#include "mcdc/gf16.hpp"

namespace mcdc {

/// Payload interpreted as a vector of GF(2^16) elements (big-endian byte
/// pairs). Bit strings are zero-padded to a 16-bit boundary on entry and the
/// padding is stripped on exit.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::vector<std::uint16_t> words) : words_(std::move(words)) {}
  static Symbol zeros(std::size_t words) { return Symbol(std::vector<std::uint16_t>(words)); }
  static Symbol from_bits(const BitString& bits);
  /// Throws std::invalid_argument on an odd byte count.
  static Symbol from_bytes(std::span<const std::uint8_t> bytes);

  /// First bit_length bits. Throws DecodeFailure if a padding bit is set.
  BitString to_bits(std::size_t bit_length) const;
  std::vector<std::uint8_t> bytes() const;

  std::size_t size_words() const { return words_.size(); }
  std::size_t size_bytes() const { return 2 * words_.size(); }
  std::span<const std::uint16_t> words() const { return words_; }
  std::span<std::uint16_t> words() { return words_; }

  friend bool operator==(const Symbol& a, const Symbol& b) { return a.words_ == b.words_; }

 private:
  std::vector<std::uint16_t> words_;
};

/// Row i of a consecutive-power Vandermonde code: sum_j alpha_j^i U_j.
struct CodedRow {
  int row_index = 0;
  Symbol payload;
};

/// alphas 1, 2, ..., n in field representation.
std::vector<FieldElem> default_alphas(std::size_t n);

/// Rows 0..rows-1 of the Vandermonde code over the given symbols. Throws
/// InvalidInput on unequal symbol lengths, duplicate or zero alphas, or
/// rows > symbols.size().
std::vector<CodedRow> vandermonde_encode(std::span<const Symbol> symbols, int rows,
                                         std::span<const FieldElem> alphas);

/// Recovers the columns missing from `known` using side information: known
/// contributions are cancelled from each row and the remaining square system
/// is solved by Gaussian elimination. Returns only the recovered columns.
/// Throws DecodeFailure on too few rows or a rank-deficient system.
std::map<int, Symbol> vandermonde_decode(const std::map<int, Symbol>& known,
                                         std::span<const CodedRow> rows,
                                         std::span<const FieldElem> alphas);

/// Rank over GF(2^16) of the matrix with entries alphas[col]^row for the
/// given rows and columns.
std::size_t vandermonde_rank(std::span<const FieldElem> alphas, std::span<const int> row_indices,
                             std::span<const int> columns);

}  // namespace mcdc
