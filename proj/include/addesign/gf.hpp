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

// Exact arithmetic in GF(p^n) backed by exp/log tables over a primitive
// polynomial, plus the integer helpers (primality, multiplicative order)
// the constructions lean on.
//
// Elements are coded as integers: code = c_0 + c_1 p + ... + c_{n-1} p^{n-1}
// where c_j is the coefficient of x^j. Text forms print the highest
// coefficient first:
//   field    GF(p^n; c_n,...,c_0)
//   element  (c_{n-1},...,c_0)

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace addesign::gf {

/// Largest field order for which tables are built.
inline constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
/// (p, alpha) with q = p^alpha, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept;
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Smallest t >= 1 with u^t = 1 (mod v). Throws NotCoprime.
std::uint64_t mult_order(std::uint64_t u, std::uint64_t v);

/// Parses "1,2,0,1" (whitespace tolerant).
std::vector<std::uint32_t> parse_coefficients(std::string_view text);

class Element;

enum class ArithOp { Add, Sub, Mul, Div };

class Field {
 public:
  /// Builds GF(p^n). `poly` lists the n+1 coefficients highest degree first
  /// and must be monic; when omitted the lexicographically smallest
  /// primitive polynomial (comparing c_0, c_1, ... in that order) is used.
  static Field make(std::uint32_t p, std::uint32_t n,
                    std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// Highest degree first, n+1 entries.
  const std::vector<std::uint32_t>& polynomial() const noexcept;
  std::string describe() const;

  Element zero() const;
  Element one() const;
  /// The residue class r of x, a generator of the multiplicative group.
  Element root() const;
  Element from_code(std::uint32_t code) const;
  Element from_coeffs(std::span<const std::uint32_t> high_to_low) const;
  Element parse_element(std::string_view text) const;
  /// r^i, any integer i (taken mod q-1).
  Element exp(std::int64_t i) const;
  std::uint32_t log(const Element& x) const;

  // Code-level arithmetic, used by the geometry enumerators.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
  std::uint32_t exp_code(std::uint64_t i) const noexcept;
  std::uint32_t log_code(std::uint32_t a) const;
  /// Coefficients highest degree first.
  std::vector<std::uint32_t> digits(std::uint32_t code) const;

  bool same_as(const Field& other) const noexcept;
  friend bool operator==(const Field& a, const Field& b) noexcept;

  struct Tables;  // defined in gf.cpp

 private:
  explicit Field(std::shared_ptr<const Tables> tables) : t_(std::move(tables)) {}
  std::shared_ptr<const Tables> t_;
};

class Element {
 public:
  Element(Field field, std::uint32_t code) : field_(std::move(field)), code_(code) {}

  const Field& field() const noexcept { return field_; }
  std::uint32_t code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  std::vector<std::uint32_t> coeffs() const { return field_.digits(code_); }
  std::string to_string() const;

  /// 0^0 = 1; negative powers of zero throw DivisionByZero.
  Element pow(std::int64_t e) const;
  Element inverse() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }
  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  std::uint32_t code_;
};

Element field_arith(const Element& a, const Element& b, ArithOp op);

/// Textual field description "GF(p^n; c_n,...,c_0)" back into a Field.
Field parse_field(std::string_view text);

/// g = r^{(q-1)/v}, of multiplicative order exactly v.
Element subgroup_generator(const Field& field, std::uint64_t v);

/// Sum of lambda^i over all lambda in the field, by direct summation.
Element power_sum(const Field& field, std::uint64_t i);

/// Relative trace into the subfield of order `sub_order`:
/// x + x^s + x^{s^2} + ... + x^{s^{m-1}} where |field| = s^m.
Element trace(const Element& x, std::uint64_t sub_order);

}  // namespace addesign::gf
