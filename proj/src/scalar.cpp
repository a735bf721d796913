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

#include "qgf/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qgf {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::REqualsOne: return "REqualsOne";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ConventionAmbiguous: return "ConventionAmbiguous";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::FormalModeUnsupported: return "FormalModeUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of p by a monic divisor.
ZPoly divide_monic(ZPoly p, const ZPoly& d) {
  const size_t dd = d.size() - 1;
  if (p.size() < d.size()) return {};
  ZPoly q(p.size() - dd);
  for (size_t k = p.size(); k-- > dd;) {
    const mpz_class c = p[k];
    q[k - dd] = c;
    if (c == 0) continue;
    for (size_t i = 0; i <= dd; ++i) p[k - dd + i] -= c * d[i];
  }
  trim(q);
  return q;
}

ZPoly cyclotomic_polynomial(int m) {
  static std::mutex mu;
  static std::map<int, ZPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  ZPoly p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, p);
  return p;
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly* q, QPoly* r) {
  QPoly rem = a;
  trim(rem);
  QPoly quo;
  const size_t db = b.size() - 1;
  if (rem.size() >= b.size()) quo.assign(rem.size() - db, 0);
  while (!rem.empty() && rem.size() >= b.size()) {
    const size_t shift = rem.size() - b.size();
    const mpq_class c = rem.back() / b.back();
    quo[shift] = c;
    for (size_t i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  trim(quo);
  *q = std::move(quo);
  *r = std::move(rem);
}

QPoly qpoly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out = a;
  if (!q.empty() && !b.empty()) {
    out.resize(std::max(out.size(), q.size() + b.size() - 1));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
  }
  trim(out);
  return out;
}

std::string rational_str(const mpq_class& q) {
  return q.get_str();
}

std::string join_terms(const std::vector<std::pair<mpq_class, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << rational_str(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << rational_str(mag) << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// CycloField

CycloField::CycloField(int m) : m_(m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic conductor must be >= 1");
  modulus_ = cyclotomic_polynomial(m);
  phi_ = static_cast<int>(modulus_.size()) - 1;
  const int size = std::max(m, 2 * phi_ - 1);
  powers_.reserve(size);
  ZPoly cur(phi_);
  cur[0] = 1;
  if (phi_ == 1 && size > 0) {
    // Q itself: z = -modulus_[0].
  }
  for (int k = 0; k < size; ++k) {
    powers_.push_back(cur);
    // multiply by x and reduce with x^phi = -sum modulus_[i] x^i
    mpz_class top = cur[phi_ - 1];
    for (int i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < phi_; ++i) cur[i] -= top * modulus_[i];
    }
  }
}

std::shared_ptr<const CycloField> CycloField::get(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CycloField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto it = fields.find(m);
  if (it != fields.end()) return it->second;
  auto f = std::make_shared<const CycloField>(m);
  fields.emplace(m, f);
  return f;
}

const std::vector<mpz_class>& CycloField::power_residue(int k) const {
  if (k < 0 || k >= table_size()) throw Error(ErrorCode::InvalidArgument, "power residue out of table");
  return powers_[k];
}

// ---------------------------------------------------------------------------
// Cyclo

Cyclo::Cyclo(FieldPtr field) : field_(std::move(field)), num_(field_->degree()), den_(1) {}

Cyclo Cyclo::integer(FieldPtr field, long value) {
  Cyclo c(std::move(field));
  c.num_[0] = value;
  return c;
}

Cyclo Cyclo::rational(FieldPtr field, const mpq_class& value) {
  Cyclo c(std::move(field));
  c.num_[0] = value.get_num();
  c.den_ = value.get_den();
  c.normalize();
  return c;
}

Cyclo Cyclo::zeta_power(FieldPtr field, long k) {
  const long m = field->conductor();
  long r = k % m;
  if (r < 0) r += m;
  Cyclo c(field);
  c.num_ = field->power_residue(static_cast<int>(r));
  return c;
}

Cyclo Cyclo::from_coefficients(FieldPtr field, const std::vector<mpq_class>& coeffs) {
  Cyclo out(field);
  Cyclo zpow = Cyclo::integer(field, 1);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out = out + Cyclo::rational(field, coeffs[k]) * Cyclo::zeta_power(field, static_cast<long>(k));
  }
  return out;
}

bool Cyclo::is_zero() const noexcept {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool Cyclo::is_one() const noexcept {
  if (den_ != 1 || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(), [](const mpz_class& c) { return c == 0; });
}

std::vector<mpq_class> Cyclo::coefficients() const {
  std::vector<mpq_class> out(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) {
    out[i] = mpq_class(num_[i], den_);
    out[i].canonicalize();
  }
  return out;
}

bool Cyclo::as_rational(mpq_class* out) const {
  for (size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return false;
  }
  if (out) {
    *out = mpq_class(num_[0], den_);
    out->canonicalize();
  }
  return true;
}

void Cyclo::normalize() {
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) g = -abs(g);
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void Cyclo::check_field(const Cyclo& o) const {
  if (field_ != o.field_) {
    throw Error(ErrorCode::FieldMismatch, "operands live in different cyclotomic fields");
  }
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  check_field(o);
  Cyclo out(field_);
  if (den_ == o.den_) {
    for (size_t i = 0; i < num_.size(); ++i) out.num_[i] = num_[i] + o.num_[i];
    out.den_ = den_;
  } else {
    for (size_t i = 0; i < num_.size(); ++i) out.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    out.den_ = den_ * o.den_;
  }
  out.normalize();
  return out;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  check_field(o);
  const int phi = field_->degree();
  std::vector<mpz_class> prod(2 * phi - 1);
  bool any = false;
  for (int i = 0; i < phi; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.num_[j] == 0) continue;
      prod[i + j] += num_[i] * o.num_[j];
      any = true;
    }
  }
  Cyclo out(field_);
  if (!any) return out;
  for (int k = 0; k < phi; ++k) out.num_[k] = prod[k];
  for (int k = phi; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& red = field_->power_residue(k);
    for (int i = 0; i < phi; ++i) {
      if (red[i] != 0) out.num_[i] += prod[k] * red[i];
    }
  }
  out.den_ = den_ * o.den_;
  out.normalize();
  return out;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  // Extended Euclid in Q[x] against Phi_m: s*a + t*Phi = const.
  QPoly a = coefficients();
  trim(a);
  QPoly phi(field_->modulus().begin(), field_->modulus().end());
  QPoly r0 = phi, r1 = a;
  QPoly s0, s1{mpq_class(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qpoly_divmod(r0, r1, &q, &r);
    QPoly s2 = qpoly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_m is irreducible.
  const mpq_class c = r0[0];
  for (auto& x : s0) x /= c;
  QPoly q, rem;
  qpoly_divmod(s0, phi, &q, &rem);
  rem.resize(field_->degree());
  Cyclo out(field_);
  mpz_class lcm_den = 1;
  for (const auto& x : rem) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  for (size_t i = 0; i < rem.size(); ++i) out.num_[i] = rem[i].get_num() * (lcm_den / rem[i].get_den());
  out.den_ = lcm_den;
  out.normalize();
  return out;
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result = Cyclo::integer(field_, 1);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Cyclo::operator==(const Cyclo& o) const {
  check_field(o);
  return den_ == o.den_ && num_ == o.num_;
}

std::string Cyclo::str() const {
  std::vector<std::pair<mpq_class, std::string>> terms;
  const auto coeffs = coefficients();
  for (size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    terms.emplace_back(coeffs[k], mono);
  }
  return join_terms(terms);
}

// ---------------------------------------------------------------------------
// TPoly

TPoly::TPoly(const Cyclo& c) : field_(c.field()) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

TPoly TPoly::monomial(const Cyclo& c, int degree) {
  TPoly p(c.field());
  if (c.is_zero()) return p;
  p.coeffs_.assign(degree + 1, Cyclo(c.field()));
  p.coeffs_[degree] = c;
  return p;
}

Cyclo TPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return Cyclo(field_);
  return coeffs_[k];
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPoly TPoly::operator-() const {
  TPoly out(field_);
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

TPoly TPoly::operator+(const TPoly& o) const {
  TPoly out(field_);
  const size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  out.coeffs_.reserve(n);
  for (size_t i = 0; i < n; ++i) out.coeffs_.push_back(coefficient(static_cast<int>(i)) + o.coefficient(static_cast<int>(i)));
  out.trim();
  return out;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
  TPoly out(field_);
  if (is_zero() || o.is_zero()) return out;
  out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Cyclo(field_));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] = out.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

TPoly TPoly::scaled(const Cyclo& c) const {
  TPoly out(field_);
  if (c.is_zero()) return out;
  for (const auto& x : coeffs_) out.coeffs_.push_back(x * c);
  return out;
}

void TPoly::divmod(const TPoly& d, TPoly* quotient, TPoly* remainder) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  TPoly rem = *this;
  TPoly quo(field_);
  const Cyclo lead_inv = d.leading().inverse();
  if (rem.degree() >= d.degree()) quo.coeffs_.assign(rem.degree() - d.degree() + 1, Cyclo(field_));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int shift = rem.degree() - d.degree();
    const Cyclo c = rem.leading() * lead_inv;
    quo.coeffs_[shift] = c;
    for (int i = 0; i <= d.degree(); ++i) rem.coeffs_[shift + i] = rem.coeffs_[shift + i] - c * d.coeffs_[i];
    rem.trim();
  }
  quo.trim();
  if (quotient) *quotient = std::move(quo);
  if (remainder) *remainder = std::move(rem);
}

TPoly TPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

TPoly TPoly::gcd(TPoly a, TPoly b) {
  while (!b.is_zero()) {
    TPoly r(a.field());
    a.divmod(b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = coeffs_[k].str();
    const std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty()) {
      os << "(" << c << ")";
    } else if (coeffs_[k].is_one()) {
      os << mono;
    } else {
      os << "(" << c << ")*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = TPoly(Cyclo::integer(num_.field(), 1));
    return;
  }
  const TPoly g = TPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_.divmod(g, &num_, nullptr);
    den_.divmod(g, &den_, nullptr);
  }
  const Cyclo lead_inv = den_.leading().inverse();
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RatFunc::RatFunc(const Cyclo& c) : RatFunc(TPoly(c), TPoly(Cyclo::integer(c.field(), 1))) {}

bool RatFunc::is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// RootOrder

long RootOrder::value() const {
  if (!is_finite()) throw Error(ErrorCode::InvalidArgument, "infinite order has no value");
  return value_;
}

std::string RootOrder::str() const { return is_finite() ? std::to_string(value_) : "infinite"; }

// ---------------------------------------------------------------------------
// Scalar

namespace {

RatFunc promote(const std::variant<Cyclo, RatFunc>& v) {
  if (const auto* c = std::get_if<Cyclo>(&v)) return RatFunc(*c);
  return std::get<RatFunc>(v);
}

}  // namespace

Scalar Scalar::monomial(const FieldPtr& f, long zeta_exp, long t_exp) {
  const Cyclo z = Cyclo::zeta_power(f, zeta_exp);
  if (t_exp == 0) return z;
  const Cyclo one = Cyclo::integer(f, 1);
  if (t_exp > 0) return RatFunc(TPoly::monomial(z, static_cast<int>(t_exp)), TPoly(one));
  return RatFunc(TPoly(z), TPoly::monomial(one, static_cast<int>(-t_exp)));
}

ScalarMode Scalar::mode() const noexcept {
  return std::holds_alternative<Cyclo>(value_) ? ScalarMode::Cyclo : ScalarMode::RatFunc;
}

const FieldPtr& Scalar::field() const noexcept {
  if (const auto* c = std::get_if<Cyclo>(&value_)) return c->field();
  return std::get<RatFunc>(value_).denominator().field();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* c = std::get_if<Cyclo>(&value_)) return c->is_zero();
  return std::get<RatFunc>(value_).is_zero();
}

bool Scalar::is_one() const {
  if (const auto* c = std::get_if<Cyclo>(&value_)) return c->is_one();
  const auto& f = std::get<RatFunc>(value_);
  return f.is_constant() && f.numerator().degree() == 0 && f.numerator().leading().is_one();
}

Scalar Scalar::embed() const { return promote(value_); }

Scalar Scalar::operator-() const {
  if (const auto* c = std::get_if<Cyclo>(&value_)) return -*c;
  return -std::get<RatFunc>(value_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (mode() == ScalarMode::Cyclo && o.mode() == ScalarMode::Cyclo) return *as_cyclo() + *o.as_cyclo();
  return promote(value_) + promote(o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (mode() == ScalarMode::Cyclo && o.mode() == ScalarMode::Cyclo) return *as_cyclo() - *o.as_cyclo();
  return promote(value_) - promote(o.value_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (mode() == ScalarMode::Cyclo && o.mode() == ScalarMode::Cyclo) return *as_cyclo() * *o.as_cyclo();
  return promote(value_) * promote(o.value_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
  if (mode() == ScalarMode::Cyclo && o.mode() == ScalarMode::Cyclo) return *as_cyclo() / *o.as_cyclo();
  return promote(value_) / promote(o.value_);
}

Scalar Scalar::inverse() const {
  if (const auto* c = std::get_if<Cyclo>(&value_)) return c->inverse();
  return std::get<RatFunc>(value_).inverse();
}

Scalar Scalar::pow(long e) const {
  if (const auto* c = std::get_if<Cyclo>(&value_)) return c->pow(e);
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar::one(field());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode() == ScalarMode::Cyclo && o.mode() == ScalarMode::Cyclo) return *as_cyclo() == *o.as_cyclo();
  if (field() != o.field()) throw Error(ErrorCode::FieldMismatch, "comparing scalars of different fields");
  return promote(value_) == promote(o.value_);
}

std::string Scalar::str() const {
  if (const auto* c = std::get_if<Cyclo>(&value_)) return c->str();
  return std::get<RatFunc>(value_).str();
}

Scalar make_zeta_power(const FieldPtr& field, long k) { return Scalar::zeta(field, k); }

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

RootOrder mult_order(const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "multiplicative order of zero");
  Cyclo value(a.field());
  if (const auto* f = a.as_ratfunc()) {
    if (!f->is_constant()) return RootOrder::infinite();
    value = f->numerator().leading();
  } else {
    value = *a.as_cyclo();
  }
  // Every root of unity in Q(z_m) is +-z^j, so its order divides lcm(2, m).
  const long bound = std::lcm(2L, static_cast<long>(value.field()->conductor()));
  if (!value.pow(bound).is_one()) return RootOrder::infinite();
  for (long d = 1; d <= bound; ++d) {
    if (bound % d == 0 && value.pow(d).is_one()) return RootOrder::finite(d);
  }
  return RootOrder::finite(bound);
}

}  // namespace qgf
