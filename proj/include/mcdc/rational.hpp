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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mcdc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}  // NOLINT(runtime/explicit)
  Rat(BigInt num, BigInt den);
  static Rat from_int(const BigInt& v) { return Rat(v, 1); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_.sign(); }

  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const;

  /// "num/den", or just "num" when the value is an integer.
  std::string str() const;
  /// Fixed-point decimal rendering, for convenience columns only.
  std::string decimal(int digits = 9) const;

  /// Accepts "a", "a/b", "-a/b" and finite decimals such as "0.25".
  static Rat parse(std::string_view text);

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat rmin(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat rmax(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace mcdc
