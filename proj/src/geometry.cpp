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

#include "addesign/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "addesign/error.hpp"

namespace addesign::geometry {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::TooLarge, "integer overflow");
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

std::uint32_t checked_u32(std::uint64_t x, const char* what) {
  if (x > 0xFFFFFFFFULL) throw Error(ErrorCode::TooLarge, std::string(what) + " exceeds 32 bits");
  return static_cast<std::uint32_t>(x);
}

// Odometer over base-q digit vectors, most significant first.
bool advance(Coords& digits, std::uint32_t q) {
  for (std::size_t j = digits.size(); j-- > 0;) {
    if (++digits[j] < q) return true;
    digits[j] = 0;
  }
  return false;
}

}  // namespace

std::uint64_t bracket(unsigned n, std::uint64_t q) {
  std::uint64_t sum = 0;
  std::uint64_t term = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (__builtin_add_overflow(sum, term, &sum)) throw Error(ErrorCode::TooLarge, "integer overflow");
    if (i + 1 < n) term = checked_mul(term, q);
  }
  return sum;
}

std::uint64_t gaussian(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n) throw Error(ErrorCode::InvalidArgument, "gaussian coefficient needs 0 <= k <= n");
  // G(n, i+1) = G(n, i) (q^{n-i} - 1) / (q^{i+1} - 1), integral at every step.
  unsigned __int128 value = 1;
  for (unsigned i = 0; i < k; ++i) {
    const unsigned __int128 num = ipow(q, n - i) - 1;
    const unsigned __int128 den = ipow(q, i + 1) - 1;
    value = value * num / den;
    if (value > 0xFFFFFFFFFFFFFFFFULL) throw Error(ErrorCode::TooLarge, "gaussian coefficient overflow");
  }
  return static_cast<std::uint64_t>(value);
}

gf::Field coordinate_field(std::uint64_t q) {
  const auto pp = gf::prime_power(q);
  if (!pp) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  return gf::Field::make(static_cast<std::uint32_t>(pp->first), pp->second);
}

std::vector<Coords> pg_points(unsigned n, std::uint64_t q) {
  const auto qq = checked_u32(q, "q");
  std::vector<Coords> out;
  out.reserve(bracket(n + 1, q));
  for (unsigned lead = n + 1; lead-- > 0;) {
    Coords tail(n - lead, 0);
    do {
      Coords x(n + 1, 0);
      x[lead] = 1;
      std::copy(tail.begin(), tail.end(), x.begin() + lead + 1);
      out.push_back(std::move(x));
    } while (advance(tail, qq));
  }
  return out;
}

std::uint32_t pg_point_index(std::span<const std::uint32_t> coords, std::uint64_t q) {
  const std::size_t lead = static_cast<std::size_t>(
      std::find_if(coords.begin(), coords.end(), [](std::uint32_t c) { return c != 0; }) - coords.begin());
  if (lead == coords.size() || coords[lead] != 1) {
    throw Error(ErrorCode::InvalidArgument, "point is not normalized");
  }
  const unsigned n = static_cast<unsigned>(coords.size() - 1);
  std::uint64_t tail = 0;
  for (std::size_t j = lead + 1; j < coords.size(); ++j) tail = tail * q + coords[j];
  return checked_u32(bracket(n - static_cast<unsigned>(lead), q) + tail, "point index");
}

Coords normalize(Coords x, const gf::Field& field) {
  const auto it = std::find_if(x.begin(), x.end(), [](std::uint32_t c) { return c != 0; });
  if (it == x.end()) throw Error(ErrorCode::InvalidArgument, "the zero vector is not a projective point");
  const std::uint32_t scale = field.inv(*it);
  for (auto& c : x) c = field.mul(c, scale);
  return x;
}

std::string coords_label(std::span<const std::uint32_t> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

Coords parse_coords_label(std::string_view label) {
  if (label.size() < 2 || label.front() != '(' || label.back() != ')') {
    throw Error(ErrorCode::ParseError, "coordinate label must look like (c_0,...,c_n)");
  }
  return gf::parse_coefficients(label.substr(1, label.size() - 2));
}

// ---------------------------------------------------------------- subspaces

Subspace::Subspace(unsigned ambient, unsigned dim, std::vector<std::uint32_t> rows)
    : ambient_(ambient), dim_(dim), rows_(std::move(rows)) {
  const unsigned width = ambient_ + 1;
  if (rows_.size() != static_cast<std::size_t>(dim_ + 1) * width) {
    throw Error(ErrorCode::InvalidArgument, "basis has the wrong shape");
  }
  for (unsigned r = 0; r <= dim_; ++r) {
    const auto rr = row(r);
    const auto it = std::find_if(rr.begin(), rr.end(), [](std::uint32_t c) { return c != 0; });
    if (it == rr.end() || *it != 1) throw Error(ErrorCode::InvalidArgument, "basis is not in RREF");
    pivots_.push_back(static_cast<unsigned>(it - rr.begin()));
  }
  for (unsigned r = 0; r <= dim_; ++r) {
    if (r > 0 && pivots_[r] <= pivots_[r - 1]) throw Error(ErrorCode::InvalidArgument, "basis is not in RREF");
    for (unsigned s = 0; s <= dim_; ++s) {
      if (s != r && rows_[s * width + pivots_[r]] != 0) {
        throw Error(ErrorCode::InvalidArgument, "basis is not in RREF");
      }
    }
  }
}

std::span<const std::uint32_t> Subspace::row(unsigned i) const {
  const std::size_t width = ambient_ + 1;
  return std::span<const std::uint32_t>(rows_).subspan(i * width, width);
}

std::vector<std::uint32_t> Subspace::point_indices(const gf::Field& field) const {
  const std::uint64_t q = field.order();
  const unsigned width = ambient_ + 1;
  std::vector<std::uint32_t> out;
  Coords x(width);
  for (const auto& c : pg_points(dim_, q)) {
    std::fill(x.begin(), x.end(), 0);
    for (unsigned r = 0; r <= dim_; ++r) {
      if (c[r] == 0) continue;
      const auto rr = row(r);
      for (unsigned j = 0; j < width; ++j) x[j] = field.add(x[j], field.mul(c[r], rr[j]));
    }
    out.push_back(pg_point_index(x, q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Subspace::contains(std::span<const std::uint32_t> point, const gf::Field& field) const {
  const unsigned width = ambient_ + 1;
  if (point.size() != width) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  Coords y(width, 0);
  for (unsigned r = 0; r <= dim_; ++r) {
    const std::uint32_t c = point[pivots_[r]];
    if (c == 0) continue;
    const auto rr = row(r);
    for (unsigned j = 0; j < width; ++j) y[j] = field.add(y[j], field.mul(c, rr[j]));
  }
  return std::equal(y.begin(), y.end(), point.begin());
}

std::vector<Subspace> enumerate_subspaces(unsigned n, std::uint64_t q, unsigned d) {
  if (d > n) throw Error(ErrorCode::DimensionOutOfRange, "need 0 <= d <= n");
  const auto qq = checked_u32(q, "q");
  const unsigned width = n + 1;
  const unsigned rank = d + 1;
  std::vector<Subspace> out;
  out.reserve(gaussian(width, rank, q));

  std::vector<unsigned> piv(rank);
  std::iota(piv.begin(), piv.end(), 0U);
  for (;;) {
    std::vector<bool> is_pivot(width, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_slots;
    for (unsigned r = 0; r < rank; ++r) {
      for (unsigned j = piv[r] + 1; j < width; ++j) {
        if (!is_pivot[j]) free_slots.push_back(static_cast<std::size_t>(r) * width + j);
      }
    }
    Coords values(free_slots.size(), 0);
    do {
      std::vector<std::uint32_t> rows(static_cast<std::size_t>(rank) * width, 0);
      for (unsigned r = 0; r < rank; ++r) rows[static_cast<std::size_t>(r) * width + piv[r]] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s) rows[free_slots[s]] = values[s];
      out.emplace_back(n, d, std::move(rows));
    } while (advance(values, qq));

    // next combination of pivot columns
    int i = static_cast<int>(rank) - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == width - rank + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < rank; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- designs

designs::Design pg_design(unsigned n, std::uint64_t q, unsigned d) {
  if (d < 1 || d + 1 > n) throw Error(ErrorCode::DimensionOutOfRange, "PG_d(n,q) needs 1 <= d <= n-1");
  const auto field = coordinate_field(q);
  const auto points = pg_points(n, q);
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& x : points) labels.push_back(coords_label(x));
  std::vector<designs::Block> blocks;
  for (const auto& s : enumerate_subspaces(n, q, d)) blocks.push_back(s.point_indices(field));
  auto design = designs::validate_2design(designs::make_design(
      checked_u32(points.size(), "point count"), std::move(blocks), std::move(labels)));
  if (design.params->lambda != gaussian(n - 1, d - 1, q)) {
    throw Error(ErrorCode::NotTwoDesign, "unexpected lambda for PG_d(n,q)");
  }
  return design;
}

std::vector<Coords> ag_points(unsigned n, std::uint64_t q) {
  const auto qq = checked_u32(q, "q");
  std::vector<Coords> out;
  out.reserve(ipow(q, n));
  Coords x(n, 0);
  do {
    out.push_back(x);
  } while (advance(x, qq));
  return out;
}

designs::Design ag_design(unsigned n, std::uint64_t q, unsigned d) {
  if (d < 1 || d + 1 > n) throw Error(ErrorCode::DimensionOutOfRange, "AG_d(n,q) needs 1 <= d <= n-1");
  const auto field = coordinate_field(q);
  const auto points = ag_points(n, q);
  const auto v = checked_u32(points.size(), "point count");
  const auto index_of = [&](const Coords& x) {
    std::uint64_t idx = 0;
    for (auto c : x) idx = idx * q + c;
    return static_cast<std::uint32_t>(idx);
  };
  const auto coeffs = ag_points(d, q);  // all coefficient vectors, zero included

  std::vector<designs::Block> blocks;
  for (const auto& w : enumerate_subspaces(n - 1, q, d - 1)) {
    std::vector<Coords> members;
    members.reserve(coeffs.size());
    for (const auto& c : coeffs) {
      Coords x(n, 0);
      for (unsigned r = 0; r < d; ++r) {
        if (c[r] == 0) continue;
        const auto rr = w.row(r);
        for (unsigned j = 0; j < n; ++j) x[j] = field.add(x[j], field.mul(c[r], rr[j]));
      }
      members.push_back(std::move(x));
    }
    std::vector<bool> covered(v, false);
    for (std::uint32_t base = 0; base < v; ++base) {
      if (covered[base]) continue;
      designs::Block coset;
      coset.reserve(members.size());
      for (const auto& m : members) {
        Coords x(n);
        for (unsigned j = 0; j < n; ++j) x[j] = field.add(points[base][j], m[j]);
        const auto idx = index_of(x);
        covered[idx] = true;
        coset.push_back(idx);
      }
      std::sort(coset.begin(), coset.end());
      blocks.push_back(std::move(coset));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (const auto& x : points) labels.push_back(coords_label(x));
  return designs::validate_2design(designs::make_design(v, std::move(blocks), std::move(labels)));
}

// ---------------------------------------------------------------- field model

std::vector<gf::Element> field_points(std::span<const Coords> points, std::uint64_t q, const gf::Field& big) {
  const auto small = coordinate_field(q);
  if (points.empty()) return {};
  const auto width = static_cast<unsigned>(points.front().size());
  if (big.characteristic() != small.characteristic() || big.order() != ipow(q, width)) {
    throw Error(ErrorCode::FieldMismatch, big.describe() + " is not an extension of degree " +
                                              std::to_string(width) + " of GF(" + std::to_string(q) + ")");
  }
  // A root of GF(q)'s primitive polynomial inside big's subfield of order q.
  const std::uint64_t cls = (static_cast<std::uint64_t>(big.order()) - 1) / (q - 1);
  const auto& poly = small.polynomial();  // high-to-low over Z_p
  std::optional<gf::Element> zeta;
  for (std::uint64_t j = 1; j < q && !zeta; ++j) {
    if (gf::gcd(j, q - 1) != 1) continue;
    const auto z = big.exp(static_cast<std::int64_t>(j * cls));
    gf::Element acc = big.zero();
    for (auto c : poly) acc = acc * z + big.from_code(c);
    if (acc.is_zero()) zeta = z;
  }
  if (!zeta) throw Error(ErrorCode::FieldMismatch, "subfield embedding not found");  // unreachable
  std::vector<gf::Element> image_of(q, big.zero());
  for (std::uint32_t c = 1; c < q; ++c) image_of[c] = zeta->pow(small.log_code(c));

  std::vector<gf::Element> powers;
  for (unsigned j = 0; j < width; ++j) powers.push_back(big.exp(width - 1 - j));
  std::vector<gf::Element> out;
  out.reserve(points.size());
  for (const auto& x : points) {
    if (x.size() != width) throw Error(ErrorCode::InvalidArgument, "mixed coordinate lengths");
    gf::Element acc = big.zero();
    for (unsigned j = 0; j < width; ++j) {
      if (x[j] >= q) throw Error(ErrorCode::InvalidArgument, "coordinate outside GF(q)");
      acc += image_of[x[j]] * powers[j];
    }
    out.push_back(acc);
  }
  return out;
}

designs::Design pg_design_field_model(unsigned n, std::uint64_t q, unsigned d, const gf::Field& big) {
  const auto coordinate_design = pg_design(n, q, d);
  const auto points = pg_points(n, q);
  const auto reps = field_points(points, q, big);
  const std::uint32_t v = coordinate_design.v;
  std::vector<std::uint32_t> relabel(v);
  std::vector<bool> hit(v, false);
  for (std::uint32_t i = 0; i < v; ++i) {
    relabel[i] = big.log(reps[i]) % v;
    if (hit[relabel[i]]) throw Error(ErrorCode::FieldMismatch, "coordinate map is not injective");
    hit[relabel[i]] = true;
  }
  std::vector<designs::Block> blocks;
  blocks.reserve(coordinate_design.blocks.size());
  for (const auto& b : coordinate_design.blocks) {
    designs::Block mapped;
    mapped.reserve(b.size());
    for (auto x : b) mapped.push_back(relabel[x]);
    std::sort(mapped.begin(), mapped.end());
    blocks.push_back(std::move(mapped));
  }
  std::sort(blocks.begin(), blocks.end());
  std::vector<std::string> labels;
  labels.reserve(v);
  for (std::uint32_t i = 0; i < v; ++i) labels.push_back("g^" + std::to_string(i));
  return designs::validate_2design(designs::make_design(v, std::move(blocks), std::move(labels)));
}

}  // namespace addesign::geometry
