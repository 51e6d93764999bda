// Copyright 2026 The Minksum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINKSUM_SCALAR_HPP
#define MINKSUM_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace minksum {

// Exact rational number. Always kept in canonical reduced form
// (gcd(num, den) = 1, den > 0). All comparisons are exact.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(int n) : v_(n) {}                // NOLINT: implicit by design
  Scalar(long n) : v_(static_cast<signed long>(n)) {}
  Scalar(long long n) { v_ = from_ll(n); }
  Scalar(long long num, long long den);

  // Parses "123", "-4.25" or "11/4". Decimal digits are converted
  // exactly by scaling with a power of ten.
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const { return v_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
  friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
  friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
  friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  // -1, 0 or +1.
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  bool is_integer() const { return v_.get_den() == 1; }

  // "11/4" when the denominator is not 1, plain integer otherwise.
  std::string str() const;

  // Nearest double; display and box-prefilter use only.
  double approx() const { return v_.get_d(); }

  static Scalar min(const Scalar& a, const Scalar& b) { return a < b ? a : b; }
  static Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

 private:
  static mpq_class from_ll(long long n);
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace minksum

#endif  // MINKSUM_SCALAR_HPP
