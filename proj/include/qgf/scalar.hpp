// Copyright 2026 The qgroup-frt Authors
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

#ifndef QGF_SCALAR_HPP
#define QGF_SCALAR_HPP

// Exact coefficients: the cyclotomic field Q(z), z a primitive m-th root of
// unity, and rational functions in one indeterminate t over it.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qgf/error.hpp"

namespace qgf {

/// Q(z_m) presented as Q[x]/Phi_m(x). Instances are interned per conductor.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> get(int m);

  int conductor() const noexcept { return m_; }
  /// Euler totient of the conductor, the degree of Phi_m.
  int degree() const noexcept { return phi_; }
  /// Coefficients of Phi_m, constant term first.
  const std::vector<mpz_class>& modulus() const noexcept { return modulus_; }
  /// Reduced representative of x^k, valid for 0 <= k < table_size().
  const std::vector<mpz_class>& power_residue(int k) const;
  int table_size() const noexcept { return static_cast<int>(powers_.size()); }

  explicit CycloField(int m);

 private:
  int m_;
  int phi_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpz_class>> powers_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Element of Q(z_m) kept as (integer numerators, positive denominator) in
/// lowest terms, numerators of degree < phi(m).
class Cyclo {
 public:
  explicit Cyclo(FieldPtr field);

  static Cyclo integer(FieldPtr field, long value);
  static Cyclo rational(FieldPtr field, const mpq_class& value);
  static Cyclo zeta_power(FieldPtr field, long k);
  static Cyclo from_coefficients(FieldPtr field, const std::vector<mpq_class>& coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Rational coefficients in the power basis 1, z, ..., z^(phi-1).
  std::vector<mpq_class> coefficients() const;
  /// True when the element lies in Q; `out` receives the value.
  bool as_rational(mpq_class* out) const;

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }
  Cyclo inverse() const;
  Cyclo pow(long e) const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void normalize();
  void check_field(const Cyclo& o) const;

  FieldPtr field_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

/// Polynomial in t with Cyclo coefficients, constant term first, no
/// trailing zeros.
class TPoly {
 public:
  explicit TPoly(FieldPtr field) : field_(std::move(field)) {}
  explicit TPoly(const Cyclo& c);
  static TPoly monomial(const Cyclo& c, int degree);

  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Cyclo>& coefficients() const noexcept { return coeffs_; }
  const Cyclo& leading() const { return coeffs_.back(); }
  Cyclo coefficient(int k) const;

  TPoly operator-() const;
  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly scaled(const Cyclo& c) const;
  void divmod(const TPoly& d, TPoly* quotient, TPoly* remainder) const;
  TPoly monic() const;
  static TPoly gcd(TPoly a, TPoly b);

  bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
  std::string str() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Cyclo> coeffs_;
};

/// Reduced fraction num/den with den monic.
class RatFunc {
 public:
  RatFunc(TPoly num, TPoly den);
  explicit RatFunc(const Cyclo& c);

  const TPoly& numerator() const noexcept { return num_; }
  const TPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  /// True when the fraction does not depend on t.
  bool is_constant() const noexcept;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const { return *this * o.inverse(); }
  RatFunc inverse() const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::string str() const;

 private:
  TPoly num_;
  TPoly den_;
};

/// Order of a root of unity; value 0 encodes "not a root of unity".
class RootOrder {
 public:
  static RootOrder finite(long k) { return RootOrder(k); }
  static RootOrder infinite() { return RootOrder(0); }

  bool is_finite() const noexcept { return value_ > 0; }
  long value() const;
  bool operator==(const RootOrder& o) const = default;
  std::string str() const;

 private:
  explicit RootOrder(long v) : value_(v) {}
  long value_;
};

enum class ScalarMode { Cyclo, RatFunc };

/// The coefficient type used everywhere else. Pure cyclotomic values stay in
/// Cyclo mode; anything touching t is promoted to RatFunc.
class Scalar {
 public:
  Scalar(const Cyclo& c) : value_(c) {}      // NOLINT(runtime/explicit)
  Scalar(const RatFunc& f) : value_(f) {}    // NOLINT(runtime/explicit)

  static Scalar zero(const FieldPtr& f) { return Cyclo(f); }
  static Scalar one(const FieldPtr& f) { return Cyclo::integer(f, 1); }
  static Scalar integer(const FieldPtr& f, long v) { return Cyclo::integer(f, v); }
  static Scalar zeta(const FieldPtr& f, long k) { return Cyclo::zeta_power(f, k); }
  /// z^zeta_exp * t^t_exp; t_exp may be negative.
  static Scalar monomial(const FieldPtr& f, long zeta_exp, long t_exp);
  static Scalar indeterminate(const FieldPtr& f) { return monomial(f, 0, 1); }

  ScalarMode mode() const noexcept;
  const FieldPtr& field() const noexcept;
  const Cyclo* as_cyclo() const noexcept { return std::get_if<Cyclo>(&value_); }
  const RatFunc* as_ratfunc() const noexcept { return std::get_if<RatFunc>(&value_); }

  bool is_zero() const noexcept;
  bool is_one() const;

  /// The same value viewed as a rational function.
  Scalar embed() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Mixed-mode comparison promotes the Cyclo side.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::variant<Cyclo, RatFunc> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar make_zeta_power(const FieldPtr& field, long k);
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);
RootOrder mult_order(const Scalar& a);

}  // namespace qgf

#endif
