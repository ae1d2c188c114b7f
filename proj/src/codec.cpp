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

#include "mcdc/codec.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "mcdc/error.hpp"

namespace mcdc {

Symbol Symbol::from_bits(const BitString& bits) {
  const auto& b = bits.bytes();
  std::vector<std::uint16_t> words((bits.size() + 15) / 16);
  for (std::size_t i = 0; i < b.size(); ++i) {
    words[i / 2] |= static_cast<std::uint16_t>(i % 2 == 0 ? b[i] << 8 : b[i]);
  }
  return Symbol(std::move(words));
}

Symbol Symbol::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() % 2 != 0) {
    throw std::invalid_argument("symbol byte length must be even");
  }
  std::vector<std::uint16_t> words(bytes.size() / 2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    words[i] = static_cast<std::uint16_t>(bytes[2 * i] << 8 | bytes[2 * i + 1]);
  }
  return Symbol(std::move(words));
}

std::vector<std::uint8_t> Symbol::bytes() const {
  std::vector<std::uint8_t> out(2 * words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out[2 * i] = static_cast<std::uint8_t>(words_[i] >> 8);
    out[2 * i + 1] = static_cast<std::uint8_t>(words_[i] & 0xFF);
  }
  return out;
}

BitString Symbol::to_bits(std::size_t bit_length) const {
  if (bit_length > 16 * words_.size()) {
    throw DecodeFailure("symbol shorter than requested bit length");
  }
  std::vector<std::uint8_t> raw = bytes();
  const std::size_t keep = (bit_length + 7) / 8;
  for (std::size_t i = keep; i < raw.size(); ++i) {
    if (raw[i] != 0) throw DecodeFailure("nonzero padding in symbol");
  }
  if (bit_length % 8 != 0 &&
      (raw[keep - 1] & static_cast<std::uint8_t>(0xFFu >> (bit_length % 8))) != 0) {
    throw DecodeFailure("nonzero padding in symbol");
  }
  raw.resize(keep);
  return BitString(std::move(raw), bit_length);
}

std::vector<FieldElem> default_alphas(std::size_t n) {
  if (n > gf16::kOrder) {
    throw InvalidInput("GF(2^16) has only 65535 distinct nonzero coefficients");
  }
  std::vector<FieldElem> a;
  a.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) a.emplace_back(static_cast<std::uint16_t>(i));
  return a;
}

namespace {

void check_alphas(std::span<const FieldElem> alphas) {
  std::set<std::uint16_t> seen;
  for (FieldElem a : alphas) {
    if (a.is_zero()) throw InvalidInput("Vandermonde coefficient must be nonzero");
    if (!seen.insert(a.value).second) {
      throw InvalidInput("duplicate Vandermonde coefficient " + std::to_string(a.value));
    }
  }
}

}  // namespace

std::vector<CodedRow> vandermonde_encode(std::span<const Symbol> symbols, int rows,
                                         std::span<const FieldElem> alphas) {
  if (symbols.size() != alphas.size()) {
    throw InvalidInput("one coefficient per symbol required");
  }
  if (rows < 0 || static_cast<std::size_t>(rows) > symbols.size()) {
    throw InvalidInput("cannot emit more rows than symbols");
  }
  check_alphas(alphas);
  const std::size_t width = symbols.empty() ? 0 : symbols.front().size_words();
  for (const Symbol& s : symbols) {
    if (s.size_words() != width) throw InvalidInput("symbol length mismatch");
  }
  std::vector<CodedRow> out;
  out.reserve(static_cast<std::size_t>(rows));
  // powers[j] = alphas[j]^i for the current row i.
  std::vector<FieldElem> powers(symbols.size(), FieldElem(1));
  for (int i = 0; i < rows; ++i) {
    CodedRow row{i, Symbol::zeros(width)};
    for (std::size_t j = 0; j < symbols.size(); ++j) {
      gf16::mul_add(row.payload.words(), symbols[j].words(), powers[j]);
      powers[j] = powers[j] * alphas[j];
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::map<int, Symbol> vandermonde_decode(const std::map<int, Symbol>& known,
                                         std::span<const CodedRow> rows,
                                         std::span<const FieldElem> alphas) {
  check_alphas(alphas);
  const int n1 = static_cast<int>(alphas.size());
  std::vector<int> unknown;
  for (int j = 0; j < n1; ++j) {
    if (!known.contains(j)) unknown.push_back(j);
  }
  for (const auto& [col, sym] : known) {
    if (col < 0 || col >= n1) throw InvalidInput("known column out of range");
  }
  std::map<int, Symbol> out;
  if (unknown.empty()) return out;
  if (rows.size() < unknown.size()) {
    throw DecodeFailure("need " + std::to_string(unknown.size()) + " coded rows, got " +
                        std::to_string(rows.size()));
  }
  const std::size_t width = rows.front().payload.size_words();
  for (const CodedRow& r : rows) {
    if (r.payload.size_words() != width) throw DecodeFailure("coded row length mismatch");
  }
  for (const auto& [col, sym] : known) {
    if (sym.size_words() != width) throw DecodeFailure("side information length mismatch");
  }

  // Augmented system: coefficient row over the unknown columns plus the
  // residual payload after cancelling the side information.
  const std::size_t u = unknown.size();
  std::vector<std::vector<FieldElem>> coef(rows.size(), std::vector<FieldElem>(u));
  std::vector<Symbol> rhs;
  rhs.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto power = static_cast<unsigned>(rows[i].row_index);
    Symbol residual = rows[i].payload;
    for (const auto& [col, sym] : known) {
      gf16::mul_add(residual.words(), sym.words(), gf16::pow(alphas[col], power));
    }
    for (std::size_t c = 0; c < u; ++c) coef[i][c] = gf16::pow(alphas[unknown[c]], power);
    rhs.push_back(std::move(residual));
  }

  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_of(u);
  for (std::size_t c = 0; c < u; ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && coef[p][c].is_zero()) ++p;
    if (p == rows.size()) {
      throw DecodeFailure("singular Vandermonde system at column " +
                          std::to_string(unknown[c]));
    }
    std::swap(coef[p], coef[pivot_row]);
    std::swap(rhs[p], rhs[pivot_row]);
    const FieldElem scale = gf16::inv(coef[pivot_row][c]);
    for (std::size_t k = c; k < u; ++k) coef[pivot_row][k] = coef[pivot_row][k] * scale;
    {
      Symbol scaled = Symbol::zeros(width);
      gf16::mul_add(scaled.words(), rhs[pivot_row].words(), scale);
      rhs[pivot_row] = std::move(scaled);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || coef[i][c].is_zero()) continue;
      const FieldElem f = coef[i][c];
      for (std::size_t k = c; k < u; ++k) coef[i][k] = coef[i][k] + f * coef[pivot_row][k];
      gf16::mul_add(rhs[i].words(), rhs[pivot_row].words(), f);
    }
    pivot_of[c] = pivot_row++;
  }
  for (std::size_t c = 0; c < u; ++c) out.emplace(unknown[c], std::move(rhs[pivot_of[c]]));
  return out;
}

std::size_t vandermonde_rank(std::span<const FieldElem> alphas, std::span<const int> row_indices,
                             std::span<const int> columns) {
  std::vector<std::vector<FieldElem>> m;
  for (int r : row_indices) {
    std::vector<FieldElem> row;
    for (int c : columns) row.push_back(gf16::pow(alphas[c], static_cast<unsigned>(r)));
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < columns.size() && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const FieldElem scale = gf16::inv(m[rank][c]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c].is_zero()) continue;
      const FieldElem f = m[i][c] * scale;
      for (std::size_t k = c; k < columns.size(); ++k) m[i][k] = m[i][k] + f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace mcdc
