/*
 * Copyright 2026 The addesign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "addesign/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "addesign/error.hpp"

namespace addesign::gf {

// ---------------------------------------------------------------- integers

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic for all 64-bit n with these witnesses.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1U);
  std::uint32_t alpha = 0;
  while (q % p == 0) {
    q /= p;
    ++alpha;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, alpha);
}

std::uint64_t mult_order(std::uint64_t u, std::uint64_t v) {
  if (v < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  if (gcd(u % v, v) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(u) + ", " + std::to_string(v) + ") != 1");
  }
  const std::uint64_t base = u % v;
  std::uint64_t acc = base;
  std::uint64_t t = 1;
  while (acc != 1) {
    acc = mul_mod(acc, base, v);
    ++t;
  }
  return t;
}

std::vector<std::uint32_t> parse_coefficients(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError, "bad coefficient list '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------- tables

struct Field::Tables {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> poly;  // high-to-low
  std::vector<std::uint32_t> powers_of_p;
  std::vector<std::uint32_t> exp;  // q-1 entries
  std::vector<std::uint32_t> log;  // q entries, log[0] unused
};

namespace {

std::string join(const std::vector<std::uint32_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// Walks the powers of x modulo `low` (low-to-high, monic, n+1 entries).
// Succeeds iff x has multiplicative order exactly p^n - 1; that already
// forces the quotient ring to be a field.
bool build_tables(Field::Tables& t, const std::vector<std::uint32_t>& low) {
  const std::uint32_t p = t.p;
  const std::uint32_t n = t.n;
  const std::uint32_t units = t.q - 1;
  if (low[0] == 0) return false;
  std::vector<std::uint32_t> c(n, 0);
  c[0] = 1;
  t.exp.assign(units, 0);
  t.log.assign(t.q, 0);
  for (std::uint32_t i = 0; i < units; ++i) {
    std::uint32_t code = 0;
    for (std::uint32_t j = n; j-- > 0;) code = code * p + c[j];
    if (i != 0 && code == 1) return false;
    t.exp[i] = code;
    t.log[code] = i;
    const std::uint32_t carry = c[n - 1];
    for (std::uint32_t j = n - 1; j > 0; --j) c[j] = c[j - 1];
    c[0] = 0;
    if (carry != 0) {
      for (std::uint32_t j = 0; j < n; ++j) {
        c[j] = static_cast<std::uint32_t>((c[j] + static_cast<std::uint64_t>(p - low[j]) * carry) % p);
      }
    }
  }
  // After q-1 steps we must be back at 1.
  if (c[0] != 1) return false;
  for (std::uint32_t j = 1; j < n; ++j) {
    if (c[j] != 0) return false;
  }
  return true;
}

bool has_root_in_prime_field(const std::vector<std::uint32_t>& low, std::uint32_t p) {
  for (std::uint32_t a = 0; a < p; ++a) {
    std::uint64_t acc = 0;
    for (std::size_t j = low.size(); j-- > 0;) acc = (acc * a + low[j]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t n, std::optional<std::vector<std::uint32_t>> poly) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxTableOrder) {
      throw Error(ErrorCode::FieldTooLarge, std::to_string(p) + "^" + std::to_string(n) +
                                                " exceeds the table limit 2^20");
    }
  }
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->n = n;
  t->q = static_cast<std::uint32_t>(q);
  t->powers_of_p.resize(n);
  for (std::uint32_t j = 0, pw = 1; j < n; ++j, pw *= p) t->powers_of_p[j] = pw;

  if (poly) {
    const auto& hi = *poly;
    if (hi.size() != n + 1 || hi.front() != 1) {
      throw Error(ErrorCode::InvalidArgument, "polynomial must be monic of degree " + std::to_string(n));
    }
    for (auto c : hi) {
      if (c >= p) throw Error(ErrorCode::InvalidArgument, "coefficient " + std::to_string(c) + " outside Z_p");
    }
    std::vector<std::uint32_t> low(hi.rbegin(), hi.rend());
    if (!build_tables(*t, low)) {
      throw Error(ErrorCode::NotPrimitivePolynomial, "x^" + std::to_string(n) + " poly [" + join(hi) +
                                                         "] is not primitive over Z_" + std::to_string(p));
    }
    t->poly = hi;
    return Field(std::move(t));
  }

  // Lexicographic on (c_0, c_1, ..., c_{n-1}): c_0 is the most significant digit.
  std::vector<std::uint32_t> low(n + 1, 0);
  low[n] = 1;
  const std::uint64_t candidates = q;
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t j = n; j-- > 0;) {
      low[j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (low[0] == 0) continue;
    if (n > 1 && has_root_in_prime_field(low, p)) continue;
    if (build_tables(*t, low)) {
      t->poly.assign(low.rbegin(), low.rend());
      return Field(std::move(t));
    }
  }
  throw Error(ErrorCode::NotPrimitivePolynomial, "no primitive polynomial found");  // unreachable
}

std::uint32_t Field::characteristic() const noexcept { return t_->p; }
std::uint32_t Field::degree() const noexcept { return t_->n; }
std::uint32_t Field::order() const noexcept { return t_->q; }
const std::vector<std::uint32_t>& Field::polynomial() const noexcept { return t_->poly; }

std::string Field::describe() const {
  return "GF(" + std::to_string(t_->p) + "^" + std::to_string(t_->n) + "; " + join(t_->poly) + ")";
}

bool Field::same_as(const Field& other) const noexcept { return t_ == other.t_; }

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.t_ == b.t_) return true;
  return a.t_->p == b.t_->p && a.t_->n == b.t_->n && a.t_->poly == b.t_->poly;
}

Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }
Element Field::root() const { return Element(*this, exp_code(1)); }

Element Field::from_code(std::uint32_t code) const {
  if (code >= t_->q) throw Error(ErrorCode::InvalidArgument, "element code out of range");
  return Element(*this, code);
}

Element Field::from_coeffs(std::span<const std::uint32_t> high_to_low) const {
  if (high_to_low.size() != t_->n) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(t_->n) + " coefficients");
  }
  std::uint32_t code = 0;
  for (auto c : high_to_low) {
    if (c >= t_->p) throw Error(ErrorCode::InvalidArgument, "coefficient outside Z_p");
    code = code * t_->p + c;
  }
  return Element(*this, code);
}

Element Field::parse_element(std::string_view text) const {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw Error(ErrorCode::ParseError, "element must look like (c_{n-1},...,c_0)");
  }
  const auto coeffs = parse_coefficients(text.substr(1, text.size() - 2));
  return from_coeffs(coeffs);
}

std::uint32_t Field::exp_code(std::uint64_t i) const noexcept { return t_->exp[i % (t_->q - 1)]; }

Element Field::exp(std::int64_t i) const {
  const auto units = static_cast<std::int64_t>(t_->q - 1);
  const auto r = ((i % units) + units) % units;
  return Element(*this, t_->exp[static_cast<std::size_t>(r)]);
}

std::uint32_t Field::log_code(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::LogOfZero, "log of zero");
  return t_->log[a];
}

std::uint32_t Field::log(const Element& x) const {
  if (!(x.field() == *this)) throw Error(ErrorCode::FieldMismatch, "element from another field");
  return log_code(x.code());
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint32_t p = t_->p;
  if (p == 2) return a ^ b;
  if (t_->n == 1) return (a + b) % p;
  std::uint32_t out = 0;
  for (std::uint32_t j = 0; j < t_->n; ++j) {
    const std::uint32_t s = (a % p + b % p) % p;
    out += s * t_->powers_of_p[j];
    a /= p;
    b /= p;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const noexcept {
  const std::uint32_t p = t_->p;
  if (p == 2) return a;
  std::uint32_t out = 0;
  for (std::uint32_t j = 0; j < t_->n; ++j) {
    const std::uint32_t d = a % p;
    out += ((p - d) % p) * t_->powers_of_p[j];
    a /= p;
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t s = static_cast<std::uint64_t>(t_->log[a]) + t_->log[b];
  return t_->exp[s % (t_->q - 1)];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t units = t_->q - 1;
  return t_->exp[(units - t_->log[a]) % units];
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const auto units = static_cast<std::int64_t>(t_->q - 1);
  const auto r = ((static_cast<__int128>(t_->log[a]) * e) % units + units) % units;
  return t_->exp[static_cast<std::size_t>(r)];
}

std::vector<std::uint32_t> Field::digits(std::uint32_t code) const {
  std::vector<std::uint32_t> out(t_->n);
  for (std::uint32_t j = t_->n; j-- > 0;) {
    out[j] = code % t_->p;
    code /= t_->p;
  }
  return out;
}

// ---------------------------------------------------------------- elements

namespace {

void require_same(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "operands from different fields");
}

}  // namespace

std::string Element::to_string() const {
  std::string out = "(";
  const auto d = coeffs();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(d[i]);
  }
  return out + ")";
}

Element Element::pow(std::int64_t e) const { return Element(field_, field_.pow(code_, e)); }
Element Element::inverse() const { return Element(field_, field_.inv(code_)); }
Element Element::operator-() const { return Element(field_, field_.neg(code_)); }

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.field_, a.field_.add(a.code_, b.code_));
}

Element operator-(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.field_, a.field_.sub(a.code_, b.code_));
}

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  return Element(a.field_, a.field_.mul(a.code_, b.code_));
}

Element operator/(const Element& a, const Element& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return Element(a.field_, a.field_.mul(a.code_, a.field_.inv(b.code_)));
}

Element field_arith(const Element& a, const Element& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown operation");
}

Field parse_field(std::string_view text) {
  // GF(p^n; c_n,...,c_0)
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  const auto caret = s.find('^');
  const auto semi = s.find(';');
  if (s.rfind("GF(", 0) != 0 || s.back() != ')' || caret == std::string::npos || caret > semi) {
    throw Error(ErrorCode::ParseError, "field must look like GF(p^n; c_n,...,c_0)");
  }
  const auto num = [&](std::string_view part) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw Error(ErrorCode::ParseError, "bad number in field description");
    }
    return value;
  };
  const std::string_view view(s);
  const std::uint32_t p = num(view.substr(3, caret - 3));
  if (semi == std::string::npos) {
    return Field::make(p, num(view.substr(caret + 1, s.size() - caret - 2)));
  }
  const std::uint32_t n = num(view.substr(caret + 1, semi - caret - 1));
  auto coeffs = parse_coefficients(view.substr(semi + 1, s.size() - semi - 2));
  return Field::make(p, n, std::move(coeffs));
}

Element subgroup_generator(const Field& field, std::uint64_t v) {
  const std::uint64_t units = field.order() - 1;
  if (v == 0 || units % v != 0) {
    throw Error(ErrorCode::OrderDoesNotDivide,
                std::to_string(v) + " does not divide " + std::to_string(units));
  }
  return field.exp(static_cast<std::int64_t>(units / v));
}

Element power_sum(const Field& field, std::uint64_t i) {
  if (i > field.order() - 1) throw Error(ErrorCode::InvalidArgument, "exponent above q-1");
  std::uint32_t acc = 0;
  for (std::uint32_t code = 0; code < field.order(); ++code) {
    acc = field.add(acc, field.pow(code, static_cast<std::int64_t>(i)));
  }
  return field.from_code(acc);
}

Element trace(const Element& x, std::uint64_t sub_order) {
  const Field& f = x.field();
  std::uint64_t m = 0;
  std::uint64_t acc = 1;
  while (acc < f.order()) {
    acc *= sub_order;
    ++m;
  }
  if (sub_order < 2 || acc != f.order()) {
    throw Error(ErrorCode::InvalidArgument, "field order is not a power of " + std::to_string(sub_order));
  }
  if (x.is_zero()) return f.zero();
  const std::uint64_t units = f.order() - 1;
  const std::uint64_t log_x = f.log_code(x.code());
  std::uint32_t sum = 0;
  std::uint64_t frob = 1;  // sub_order^j mod (q-1)
  for (std::uint64_t j = 0; j < m; ++j) {
    sum = f.add(sum, f.exp_code(mul_mod(log_x, frob, units)));
    frob = mul_mod(frob, sub_order, units);
  }
  return f.from_code(sum);
}

}  // namespace addesign::gf
