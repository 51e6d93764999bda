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

#include "minksum/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "minksum/errors.hpp"

namespace minksum {

mpq_class Scalar::from_ll(long long n) {
  mpz_class z;
  if (n >= 0) {
    z = mpz_class(static_cast<unsigned long>(static_cast<unsigned long long>(n) & 0xffffffffULL));
    mpz_class hi(static_cast<unsigned long>(static_cast<unsigned long long>(n) >> 32));
    z += hi << 32;
  } else {
    unsigned long long m = static_cast<unsigned long long>(-(n + 1)) + 1ULL;
    z = mpz_class(static_cast<unsigned long>(m & 0xffffffffULL));
    mpz_class hi(static_cast<unsigned long>(m >> 32));
    z += hi << 32;
    z = -z;
  }
  return mpq_class(z);
}

Scalar::Scalar(long long num, long long den) {
  if (den == 0) throw GeometryError(ErrorKind::DivisionByZero, "rational with zero denominator");
  mpq_class q(from_ll(num));
  q /= from_ll(den);
  v_ = q;  // operator/ canonicalizes
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.v_ = -v_;
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sign() == 0) throw GeometryError(ErrorKind::DivisionByZero, "division by zero scalar");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw GeometryError(ErrorKind::ParseError, "empty number");
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw GeometryError(ErrorKind::ParseError, "bad rational: " + s);
    mpq_class q;
    if (q.get_num().set_str(num, 10) != 0 || q.get_den().set_str(den, 10) != 0)
      throw GeometryError(ErrorKind::ParseError, "bad rational: " + s);
    if (q.get_den() == 0) throw GeometryError(ErrorKind::ParseError, "zero denominator: " + s);
    q.canonicalize();
    Scalar r;
    r.v_ = q;
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw GeometryError(ErrorKind::ParseError, "bad decimal: " + s);
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw GeometryError(ErrorKind::ParseError, "bad decimal: " + s);
    mpz_class den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    Scalar r;
    r.v_ = q;
    return r;
  }
  mpz_class z;
  if (z.set_str(s, 10) != 0) throw GeometryError(ErrorKind::ParseError, "bad integer: " + s);
  Scalar r;
  r.v_ = mpq_class(z);
  return r;
}

std::string Scalar::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace minksum
