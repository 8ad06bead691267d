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

// Points and subspaces of PG(n,q) and AG(n,q), q-analog counting, and the
// classical designs PG_d(n,q) and AG_d(n,q).
//
// Coordinates are GF(q) element codes (gf::Field codes for the default
// polynomial of GF(q)); for prime q they are plain residues. Projective
// points are normalized so the first nonzero coordinate is 1 and listed in
// lexicographic order. Subspaces are carried by their RREF basis.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addesign/designs.hpp"
#include "addesign/gf.hpp"

namespace addesign::geometry {

using Coords = std::vector<std::uint32_t>;

/// [n]_q = (q^n - 1)/(q - 1), with [0]_q = 0.
std::uint64_t bracket(unsigned n, std::uint64_t q);

/// Number of k-dimensional linear subspaces of F_q^n.
std::uint64_t gaussian(unsigned n, unsigned k, std::uint64_t q);

/// GF(q) with its default primitive polynomial. Throws InvalidArgument when
/// q is not a prime power.
gf::Field coordinate_field(std::uint64_t q);

std::vector<Coords> pg_points(unsigned n, std::uint64_t q);

/// Index of a normalized point within pg_points(coords.size()-1, q).
std::uint32_t pg_point_index(std::span<const std::uint32_t> coords, std::uint64_t q);

/// Scales a nonzero vector so its first nonzero entry is 1.
Coords normalize(Coords x, const gf::Field& field);

std::string coords_label(std::span<const std::uint32_t> coords);
Coords parse_coords_label(std::string_view label);

class Subspace {
 public:
  /// `rows` is the flattened (dim+1) x (ambient+1) RREF basis.
  Subspace(unsigned ambient, unsigned dim, std::vector<std::uint32_t> rows);

  unsigned ambient_dim() const noexcept { return ambient_; }
  unsigned dim() const noexcept { return dim_; }
  std::span<const std::uint32_t> row(unsigned i) const;
  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }
  const std::vector<unsigned>& pivots() const noexcept { return pivots_; }

  /// Sorted indices (into pg_points) of the [dim+1]_q points.
  std::vector<std::uint32_t> point_indices(const gf::Field& field) const;
  bool contains(std::span<const std::uint32_t> point, const gf::Field& field) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.rows_ == b.rows_; }
  friend auto operator<=>(const Subspace& a, const Subspace& b) noexcept { return a.rows_ <=> b.rows_; }

 private:
  unsigned ambient_;
  unsigned dim_;
  std::vector<std::uint32_t> rows_;
  std::vector<unsigned> pivots_;
};

/// All projective d-subspaces of PG(n,q), lexicographic on the RREF rows.
std::vector<Subspace> enumerate_subspaces(unsigned n, std::uint64_t q, unsigned d);

/// Points of PG(n,q) against its d-subspaces; 1 <= d <= n-1.
designs::Design pg_design(unsigned n, std::uint64_t q, unsigned d);

/// The q^n vectors of F_q^n; index = base-q value, first coordinate most significant.
std::vector<Coords> ag_points(unsigned n, std::uint64_t q);

/// Points of AG(n,q) against all cosets of all d-dim linear subspaces.
designs::Design ag_design(unsigned n, std::uint64_t q, unsigned d);

/// Maps coordinate vectors of length N over GF(q) into GF(q^N) (the field
/// `big`, built over Z_p): (c_0,...,c_{N-1}) -> sum_j c_j w^{N-1-j}, with
/// GF(q) placed inside `big` as its subfield of order q.
std::vector<gf::Element> field_points(std::span<const Coords> points, std::uint64_t q, const gf::Field& big);

/// PG_d(n,q) with points relabelled as the classes w^i F_q^*, 0 <= i < [n+1]_q,
/// of GF(q^{n+1})^* / F_q^*. Labels read "g^i".
designs::Design pg_design_field_model(unsigned n, std::uint64_t q, unsigned d, const gf::Field& big);

}  // namespace addesign::geometry
