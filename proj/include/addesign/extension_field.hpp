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

// Table-free GF(p^n) over an irreducible modulus. Used where p^n is beyond
// the table limit of gf::Field, e.g. GF(7^41) for cyclic embeddings of
// Paley(83). Elements are coefficient vectors; multiplication is schoolbook
// followed by reduction.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace addesign::gf {

using BigInt = boost::multiprecision::cpp_int;

/// Rabin's test; `low` is monic, lowest coefficient first.
bool is_irreducible(const std::vector<std::uint32_t>& low, std::uint32_t p);

class ExtElement;

class ExtensionField {
 public:
  /// `poly` highest coefficient first; default is the lexicographically
  /// smallest monic irreducible (c_0 compared first).
  static ExtensionField make(std::uint32_t p, std::uint32_t n,
                             std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

  std::uint32_t characteristic() const noexcept { return impl_->p; }
  std::uint32_t degree() const noexcept { return impl_->n; }
  BigInt order() const;
  /// Highest degree first.
  std::vector<std::uint32_t> polynomial() const;
  std::string describe() const;

  ExtElement zero() const;
  ExtElement one() const;
  /// Element whose low-to-high digit expansion in base p is `code`.
  ExtElement from_code(std::uint64_t code) const;

  /// Deterministic search for an element of multiplicative order exactly v.
  ExtElement element_of_order(std::uint64_t v) const;

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) noexcept {
    return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  friend class ExtElement;
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::vector<std::uint32_t> modulus;  // low-to-high, n+1 entries, monic
  };
  explicit ExtensionField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

class ExtElement {
 public:
  ExtElement(ExtensionField field, std::vector<std::uint32_t> low)
      : field_(std::move(field)), low_(std::move(low)) {}

  const ExtensionField& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Highest degree first.
  std::vector<std::uint32_t> coeffs() const { return {low_.rbegin(), low_.rend()}; }
  std::string to_string() const;

  ExtElement pow(const BigInt& e) const;
  ExtElement pow(std::uint64_t e) const { return pow(BigInt(e)); }

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
  ExtElement& operator+=(const ExtElement& b) { return *this = *this + b; }
  friend bool operator==(const ExtElement& a, const ExtElement& b) noexcept {
    return a.low_ == b.low_ && a.field_ == b.field_;
  }

 private:
  ExtensionField field_;
  std::vector<std::uint32_t> low_;
};

}  // namespace addesign::gf
