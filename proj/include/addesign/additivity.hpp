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

// Embeddings of designs into abelian groups Z_m^t and their verification.
//
// An embedding is additive when it is injective and every block image is
// zero-sum. It is strong when, in addition, the zero-sum k-subsets of the
// embedded point set f(V) are exactly the block images.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "addesign/designs.hpp"
#include "addesign/geometry.hpp"
#include "addesign/gf.hpp"
#include "json.hpp"

namespace addesign::additivity {

using Json = nlohmann::ordered_json;

/// Z_m^t.
struct AbelianGroup {
  std::uint32_t modulus = 2;
  std::uint32_t rank = 1;

  std::string describe() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

using GroupElement = std::vector<std::uint32_t>;

enum class EmbeddingKind { SymmetricStrong, CyclicSmooth, PgStrong, SubspaceSmooth, Identity };

std::string_view kind_name(EmbeddingKind kind) noexcept;
EmbeddingKind parse_kind(std::string_view name);

struct Embedding {
  AbelianGroup group;
  std::vector<GroupElement> image;  // index-aligned with the design's points
  EmbeddingKind kind = EmbeddingKind::Identity;
  Json meta = Json::object();
};

/// "strict" when |G| = v, "almost-strict" when |G| = v + 1, otherwise empty.
std::string size_label(const AbelianGroup& group, std::uint64_t v);

/// Componentwise sum; throws GroupMismatch on a malformed element.
GroupElement group_sum(const AbelianGroup& group, std::span<const GroupElement> elems);
bool zero_sum(const AbelianGroup& group, std::span<const GroupElement> elems);

/// Rows of the complement incidence matrix (0 on incidence, 1 otherwise)
/// over Z_{k-lambda}. Throws NotSymmetric or DegenerateOrder.
Embedding symmetric_strong_embedding(const designs::Design& design);

/// Everything the cyclic construction computes along the way.
struct CyclicDetail {
  std::uint32_t p = 0;
  std::uint64_t t = 0;
  bool table_field = true;  // false: table-free extension field
  std::string field;
  std::string generator;                       // g, order v
  std::optional<std::uint64_t> generator_log;  // g = r^e when table-backed
  std::string sigma_1;
  std::string sigma_minus_1;
  bool sigma_1_zero = false;
  bool sigma_minus_1_zero = false;
  bool product_zero = false;  // sigma_1 * sigma_{-1} == 0
  int sign = 0;               // chosen i in {1, -1}; 0 if neither sigma vanishes
};

/// sigma_{+1}, sigma_{-1} and the choice of sign for the map x -> g^{ix} in
/// GF(p^t), t = ord_v(p). `poly` (degree t, highest first) overrides the
/// field polynomial. Throws BadPrime unless p | k-lambda and p does not divide v.
CyclicDetail cyclic_detail(const designs::DifferenceSet& ds, std::uint32_t p,
                           std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

/// Embedding of develop(ds) into EA(p^t) = Z_p^t, image[x] = g^{ix}.
/// Throws NoZeroSigma if neither sigma vanishes (excluded by theory).
Embedding cyclic_embedding(const designs::DifferenceSet& ds, std::uint32_t p,
                           std::optional<std::vector<std::uint32_t>> poly = std::nullopt);

/// Point-hyperplane complement rows of PG(n,q) over Z_{q^d}, aligned with
/// geometry::pg_design(n, q, d).
Embedding pg_strong_embedding(unsigned n, std::uint64_t q, unsigned d);

/// w^i for 0 <= i < (|big| - 1)/(q - 1): representatives of the classes of
/// big^* / F_q^*, for designs whose point i is the class of w^i.
std::vector<gf::Element> exponent_class_reps(const gf::Field& big, std::uint64_t q);

/// x -> x^{q-1} into EA(|big|) flattened to Z_p^{deg big}. Throws
/// NotSubspaceBlocks when some block image is not zero-sum.
Embedding subspace_embedding(const designs::Design& design, std::uint64_t q, std::span<const gf::Element> reps);

/// Coordinate vectors over GF(q) read as vectors over Z_p (each coordinate
/// expanded into its alpha base-p digits, highest first).
Embedding identity_embedding(std::span<const geometry::Coords> points, std::uint64_t q);

struct BlockFailure {
  std::size_t block = 0;
  GroupElement sum;
};

enum class StrongStatus { NotRun, Pass, Fail, Skipped };

std::string_view status_name(StrongStatus status) noexcept;

struct Report {
  bool injective = false;
  bool additive = false;
  std::size_t blocks_checked = 0;
  std::vector<BlockFailure> failures;

  StrongStatus strong = StrongStatus::NotRun;
  std::string criterion;  // what the strong check compared against
  std::string note;       // reason for a skipped strong check
  std::uint64_t subsets_scanned = 0;
  std::uint64_t zero_sum_subsets = 0;
  std::uint64_t extra_zero_sum_subsets = 0;     // zero-sum k-subsets that are not blocks
  std::vector<designs::Block> extra_examples;   // the first few, lexicographically
  std::string size_class;

  bool passed() const noexcept { return injective && additive && strong != StrongStatus::Fail; }
};

/// Injectivity plus a zero-sum check on every block. Throws SizeMismatch.
Report verify_embedding(const designs::Design& design, const Embedding& emb);

struct StrongOptions {
  std::uint64_t cap = 10'000'000;  // maximum C(v,k) to enumerate
  unsigned jobs = 1;
  std::size_t max_examples = 16;
};

/// verify_embedding followed by an exhaustive scan of the k-subsets of V.
/// Over the cap the strong status is Skipped.
Report verify_strong(const designs::Design& design, const Embedding& emb, const StrongOptions& options = {});

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace addesign::additivity
