// Copyright 2026 The sl3web Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SL3WEB_LAURENT_HPP_
#define SL3WEB_LAURENT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>

namespace sl3web {

// Laurent polynomial in v with exact rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit constant
  LaurentPoly(const mpq_class& c);  // NOLINT
  static LaurentPoly monomial(int exponent, const mpq_class& c = 1);

  bool isZero() const { return terms_.empty(); }
  const std::map<int, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(int exponent) const;
  int minExponent() const;
  int maxExponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  void addTerm(int exponent, const mpq_class& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly bar() const;
  mpq_class classicalLimit() const;
  bool negativeExponentOnly() const;
  bool nonnegativeIntegral() const;
  LaurentPoly shifted(int by) const;

  std::string toString() const;
  static LaurentPoly parse(const std::string& text);

 private:
  std::map<int, mpq_class> terms_;
};

LaurentPoly quantumInt(int n);

}  // namespace sl3web

#endif  // SL3WEB_LAURENT_HPP_
