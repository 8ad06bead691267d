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

#include "addesign/extension_field.hpp"

#include <algorithm>

#include "addesign/error.hpp"
#include "addesign/gf.hpp"

namespace addesign::gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

// a mod f, f monic not required (leading coefficient inverted).
Poly reduce(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - factor) * f[j]) % p);
    }
    trim(a);
  }
  return a;
}

Poly mul_mod_poly(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  Poly out(acc.begin(), acc.end());
  return reduce(std::move(out), f, p);
}

Poly pow_mod_poly(Poly base, BigInt e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = reduce(std::move(base), f, p);
  while (e != 0) {
    if ((e & 1) != 0) result = mul_mod_poly(result, base, f, p);
    base = mul_mod_poly(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly sub_poly(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j) a[j] = (a[j] + p - b[j]) % p;
  trim(a);
  return a;
}

Poly gcd_poly(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = reduce(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly padded(Poly a, std::size_t n) {
  a.resize(n, 0);
  return a;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& low, std::uint32_t p) {
  Poly f = low;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  if (f[0] == 0) return false;
  const Poly x{0, 1};
  // frob[k] = x^{p^k} mod f
  std::vector<Poly> frob{x};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(pow_mod_poly(frob.back(), BigInt(p), f, p));
  if (frob[n] != x) return false;
  for (auto ell : prime_factors(n)) {
    const Poly g = gcd_poly(f, sub_poly(frob[n / ell], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

ExtensionField ExtensionField::make(std::uint32_t p, std::uint32_t n,
                                    std::optional<std::vector<std::uint32_t>> poly) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->n = n;
  if (poly) {
    if (poly->size() != n + 1 || poly->front() != 1) {
      throw Error(ErrorCode::InvalidArgument, "polynomial must be monic of degree " + std::to_string(n));
    }
    for (auto c : *poly) {
      if (c >= p) throw Error(ErrorCode::InvalidArgument, "coefficient outside Z_p");
    }
    impl->modulus.assign(poly->rbegin(), poly->rend());
    if (!is_irreducible(impl->modulus, p)) {
      throw Error(ErrorCode::NotPrimitivePolynomial, "modulus is reducible");
    }
    return ExtensionField(std::move(impl));
  }
  Poly low(n + 1, 0);
  low[n] = 1;
  low[0] = 1;  // c_0 = 0 is divisible by x
  // Advance the digit vector (c_0 most significant) until irreducible.
  for (;;) {
    if (is_irreducible(low, p)) {
      impl->modulus = low;
      return ExtensionField(std::move(impl));
    }
    std::size_t j = n;
    while (j-- > 0) {
      if (++low[j] < p) break;
      low[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  throw Error(ErrorCode::NotPrimitivePolynomial, "no irreducible polynomial found");  // unreachable
}

BigInt ExtensionField::order() const {
  BigInt q = 1;
  for (std::uint32_t i = 0; i < impl_->n; ++i) q *= impl_->p;
  return q;
}

std::vector<std::uint32_t> ExtensionField::polynomial() const {
  return {impl_->modulus.rbegin(), impl_->modulus.rend()};
}

std::string ExtensionField::describe() const {
  std::string out = "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->n) + "; ";
  const auto hi = polynomial();
  for (std::size_t i = 0; i < hi.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(hi[i]);
  }
  return out + ")";
}

ExtElement ExtensionField::zero() const { return ExtElement(*this, Poly(impl_->n, 0)); }

ExtElement ExtensionField::one() const {
  Poly c(impl_->n, 0);
  c[0] = 1;
  return ExtElement(*this, std::move(c));
}

ExtElement ExtensionField::from_code(std::uint64_t code) const {
  Poly c(impl_->n, 0);
  for (std::uint32_t j = 0; j < impl_->n && code != 0; ++j) {
    c[j] = static_cast<std::uint32_t>(code % impl_->p);
    code /= impl_->p;
  }
  if (code != 0) throw Error(ErrorCode::InvalidArgument, "element code out of range");
  return ExtElement(*this, std::move(c));
}

ExtElement ExtensionField::element_of_order(std::uint64_t v) const {
  const BigInt units = order() - 1;
  if (v == 0 || units % v != 0) {
    throw Error(ErrorCode::OrderDoesNotDivide, std::to_string(v) + " does not divide p^n - 1");
  }
  const BigInt cofactor = units / v;
  if (v == 1) return one();
  const auto ells = prime_factors(v);
  const std::uint64_t limit = std::min<std::uint64_t>(1'000'000, static_cast<std::uint64_t>(std::min<BigInt>(units, 1'000'000)));
  for (std::uint64_t code = 2; code <= limit; ++code) {
    const ExtElement h = from_code(code).pow(cofactor);
    bool exact = !h.is_one();
    for (auto ell : ells) {
      if (!exact) break;
      if (h.pow(v / ell).is_one()) exact = false;
    }
    if (exact) return h;
  }
  throw Error(ErrorCode::OrderDoesNotDivide, "no element of order " + std::to_string(v) + " found");
}

bool ExtElement::is_zero() const noexcept {
  return std::all_of(low_.begin(), low_.end(), [](std::uint32_t c) { return c == 0; });
}

bool ExtElement::is_one() const noexcept {
  if (low_.empty() || low_[0] != 1) return false;
  return std::all_of(low_.begin() + 1, low_.end(), [](std::uint32_t c) { return c == 0; });
}

std::string ExtElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = low_.size(); i-- > 0;) {
    out += std::to_string(low_[i]);
    if (i != 0) out += ',';
  }
  return out + ")";
}

ExtElement ExtElement::pow(const BigInt& e) const {
  const auto& impl = *field_.impl_;
  return ExtElement(field_, padded(pow_mod_poly(low_, e, impl.modulus, impl.p), impl.n));
}

namespace {

void require_same(const ExtElement& a, const ExtElement& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "operands from different fields");
}

}  // namespace

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  require_same(a, b);
  const std::uint32_t p = a.field_.characteristic();
  Poly out(a.low_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = (a.low_[j] + b.low_[j]) % p;
  return ExtElement(a.field_, std::move(out));
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  require_same(a, b);
  const std::uint32_t p = a.field_.characteristic();
  Poly out(a.low_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = (a.low_[j] + p - b.low_[j]) % p;
  return ExtElement(a.field_, std::move(out));
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  require_same(a, b);
  const auto& impl = *a.field_.impl_;
  return ExtElement(a.field_, padded(mul_mod_poly(a.low_, b.low_, impl.modulus, impl.p), impl.n));
}

}  // namespace addesign::gf
