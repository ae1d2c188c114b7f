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

#include "mcdc/rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "mcdc/error.hpp"

namespace mcdc {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt Rat::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) {
    --q;
  }
  return q;
}

BigInt Rat::ceil() const {
  BigInt f = floor();
  return f * den_ == num_ ? f : f + 1;
}

double Rat::to_double() const {
  // Scale down huge operands so the conversion stays finite.
  BigInt n = num_;
  BigInt d = den_;
  const unsigned nb = n == 0 ? 0 : static_cast<unsigned>(msb(abs(n)));
  const unsigned db = static_cast<unsigned>(msb(d));
  const unsigned top = std::max(nb, db);
  if (top > 1000) {
    n >>= (top - 1000);
    d >>= (top - 1000);
    if (d == 0) {
      return n.sign() * HUGE_VAL;
    }
  }
  return n.convert_to<double>() / d.convert_to<double>();
}

std::string Rat::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::string Rat::decimal(int digits) const {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero at the requested precision.
  BigInt scaled = abs(num_) * scale * 2 + den_;
  scaled /= den_ * 2;
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  std::string out;
  if (num_ < 0 && scaled != 0) out += '-';
  out += body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    out += '.';
    out += body.substr(body.size() - static_cast<std::size_t>(digits));
  }
  return out;
}

namespace {

BigInt parse_integer(std::string_view t, std::string_view whole) {
  if (t.empty()) {
    throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  }
  for (char c : t) {
    if (c < '0' || c > '9') {
      throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
  }
  // cpp_int reads a leading 0 as an octal prefix.
  const auto first = t.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(t.substr(first)));
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
  bool negative = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  Rat out;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    BigInt n = parse_integer(t.substr(0, slash), text);
    BigInt d = parse_integer(t.substr(slash + 1), text);
    if (d == 0) {
      throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
    out = Rat(n, d);
  } else if (auto dot = t.find('.'); dot != std::string_view::npos) {
    std::string_view ip = t.substr(0, dot);
    std::string_view fp = t.substr(dot + 1);
    BigInt n = ip.empty() ? BigInt(0) : parse_integer(ip, text);
    BigInt d = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) d *= 10;
    if (!fp.empty()) n = n * d + parse_integer(fp, text);
    out = Rat(n, d);
  } else {
    out = Rat(parse_integer(t, text), 1);
  }
  return negative ? -out : out;
}

Rat& Rat::operator+=(const Rat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) {
    throw std::domain_error("rational division by zero");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace mcdc
