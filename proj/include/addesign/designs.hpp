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

// Finite incidence structures, 2-design validation, cyclic difference sets
// and their developments, and the Paley and Singer families.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace addesign::designs {

using Block = std::vector<std::uint32_t>;  // strictly increasing point indices

struct DesignParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t r = 0;
  std::uint64_t b = 0;
  bool symmetric = false;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

struct Design {
  std::uint32_t v = 0;
  std::vector<std::string> points;  // display labels, index-aligned
  std::vector<Block> blocks;
  std::optional<DesignParams> params;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

/// Checks block shape (strictly increasing, inside [0,v)) and fills in
/// default labels "0".."v-1" when `labels` is empty. Throws InvalidBlock.
Design make_design(std::uint32_t v, std::vector<Block> blocks, std::vector<std::string> labels = {});

/// Computes (k, lambda, r, b) by exhaustive pair counting and attaches them.
/// Throws EmptyDesign, UnequalBlockSizes or NotTwoDesign.
Design validate_2design(Design raw);

/// True iff every two distinct blocks meet in the same number of points.
/// For a symmetric design that common value is lambda.
std::optional<std::uint64_t> uniform_block_intersection(const Design& design);

struct DifferenceSet {
  std::uint32_t v = 0;
  std::vector<std::uint32_t> elems;  // sorted
  std::uint32_t lambda = 0;

  std::uint32_t k() const noexcept { return static_cast<std::uint32_t>(elems.size()); }
};

/// Certifies D as a (v,k,lambda) difference set. Throws NotDifferenceSet
/// naming the first residue whose multiplicity deviates.
DifferenceSet validate_difference_set(std::uint32_t v, std::vector<std::uint32_t> elems);

/// The symmetric design {D + i : 0 <= i < v}, validated.
Design develop(const DifferenceSet& ds);

/// Recovers D from a design laid out as develop() lays it out (block i is
/// D + i). Throws NotCyclic otherwise.
DifferenceSet base_difference_set(const Design& design);

/// Nonzero quadratic residues mod a prime v = 3 (mod 4), v >= 7.
DifferenceSet paley_diffset(std::uint32_t v);

/// {i mod v : Tr(w^i) = 0} in GF(q^{n+1}) with w the root of its (default or
/// supplied) primitive polynomial; v = [n+1]_q. `poly` is over Z_p, degree
/// alpha(n+1), highest coefficient first.
DifferenceSet singer_diffset(unsigned n, std::uint64_t q,
                             std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

}  // namespace addesign::designs
