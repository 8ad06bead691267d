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

#include "addesign/designs.hpp"

#include <algorithm>
#include <bit>

#include "addesign/error.hpp"
#include "addesign/geometry.hpp"
#include "addesign/gf.hpp"

namespace addesign::designs {

Design make_design(std::uint32_t v, std::vector<Block> blocks, std::vector<std::string> labels) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] >= v || (j > 0 && b[j] <= b[j - 1])) {
        throw Error(ErrorCode::InvalidBlock,
                    "block " + std::to_string(i) + " is not a strictly increasing subset of [0," +
                        std::to_string(v) + ")");
      }
    }
  }
  if (labels.empty()) {
    labels.reserve(v);
    for (std::uint32_t i = 0; i < v; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != v) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(v) + " point labels");
  }
  Design d;
  d.v = v;
  d.points = std::move(labels);
  d.blocks = std::move(blocks);
  return d;
}

Design validate_2design(Design raw) {
  if (raw.v < 2 || raw.blocks.empty()) throw Error(ErrorCode::EmptyDesign, "need v >= 2 and at least one block");
  raw = make_design(raw.v, std::move(raw.blocks), std::move(raw.points));
  const std::uint64_t v = raw.v;
  const std::size_t k = raw.blocks.front().size();
  for (std::size_t i = 0; i < raw.blocks.size(); ++i) {
    if (raw.blocks[i].size() != k) {
      throw Error(ErrorCode::UnequalBlockSizes, "block " + std::to_string(i) + " has size " +
                                                    std::to_string(raw.blocks[i].size()) + ", block 0 has " +
                                                    std::to_string(k));
    }
  }
  // Upper-triangular pair counters, row-major.
  std::vector<std::uint32_t> pairs(v * (v - 1) / 2, 0);
  std::vector<std::uint64_t> replication(v, 0);
  const auto pair_slot = [v](std::uint64_t i, std::uint64_t j) { return i * (2 * v - i - 1) / 2 + (j - i - 1); };
  for (const auto& b : raw.blocks) {
    for (std::size_t a = 0; a < b.size(); ++a) {
      ++replication[b[a]];
      for (std::size_t c = a + 1; c < b.size(); ++c) ++pairs[pair_slot(b[a], b[c])];
    }
  }
  const std::uint64_t lambda = pairs.front();
  for (std::uint64_t i = 0; i < v; ++i) {
    for (std::uint64_t j = i + 1; j < v; ++j) {
      const auto c = pairs[pair_slot(i, j)];
      if (c != lambda) {
        throw Error(ErrorCode::NotTwoDesign, "pair {" + std::to_string(i) + "," + std::to_string(j) + "} lies on " +
                                                 std::to_string(c) + " blocks, pair {0,1} on " +
                                                 std::to_string(lambda));
      }
    }
  }
  const std::uint64_t r = replication.front();
  for (std::uint64_t i = 0; i < v; ++i) {
    if (replication[i] != r) {
      throw Error(ErrorCode::NotTwoDesign, "point " + std::to_string(i) + " lies on " +
                                               std::to_string(replication[i]) + " blocks, point 0 on " +
                                               std::to_string(r));
    }
  }
  DesignParams params;
  params.v = v;
  params.k = k;
  params.lambda = lambda;
  params.r = r;
  params.b = raw.blocks.size();
  params.symmetric = params.b == v;
  raw.params = params;
  return raw;
}

std::optional<std::uint64_t> uniform_block_intersection(const Design& design) {
  const auto& blocks = design.blocks;
  std::optional<std::uint64_t> common;
  std::vector<char> mark(design.v, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (auto x : blocks[i]) mark[x] = 1;
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::uint64_t meet = 0;
      for (auto x : blocks[j]) meet += static_cast<std::uint64_t>(mark[x]);
      if (!common) common = meet;
      if (*common != meet) return std::nullopt;
    }
    for (auto x : blocks[i]) mark[x] = 0;
  }
  return common;
}

// ---------------------------------------------------------------- difference sets

namespace {

// Multiplicity of s in the difference list equals |D intersect (D + s)|,
// computed by AND-ing the indicator with a doubled, shifted copy.
class ShiftCorrelator {
 public:
  ShiftCorrelator(std::uint32_t v, const std::vector<std::uint32_t>& elems)
      : v_(v), words_((v + 63) / 64), base_(words_, 0), doubled_((2 * static_cast<std::size_t>(v) + 127) / 64 + 1, 0) {
    for (auto d : elems) {
      base_[d / 64] |= std::uint64_t{1} << (d % 64);
      doubled_[d / 64] |= std::uint64_t{1} << (d % 64);
      const std::size_t e = static_cast<std::size_t>(d) + v;
      doubled_[e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }

  std::uint32_t count(std::uint32_t s) const {
    // bit x of the window is doubled[x + v - s], i.e. [x - s mod v in D]
    const std::size_t offset = v_ - s;
    std::uint32_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      const std::size_t pos = offset + w * 64;
      const std::size_t word = pos / 64;
      const unsigned sh = pos % 64;
      std::uint64_t window = doubled_[word] >> sh;
      if (sh != 0) window |= doubled_[word + 1] << (64 - sh);
      total += static_cast<std::uint32_t>(std::popcount(base_[w] & window));
    }
    return total;
  }

 private:
  std::uint32_t v_;
  std::size_t words_;
  std::vector<std::uint64_t> base_;
  std::vector<std::uint64_t> doubled_;
};

}  // namespace

DifferenceSet validate_difference_set(std::uint32_t v, std::vector<std::uint32_t> elems) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw Error(ErrorCode::InvalidArgument, "difference set has repeated elements");
  }
  if (elems.size() < 2 || elems.size() >= v) {
    throw Error(ErrorCode::InvalidArgument, "need 2 <= |D| < v");
  }
  if (elems.back() >= v) throw Error(ErrorCode::InvalidArgument, "elements must lie in [0, v)");

  const std::uint64_t k = elems.size();
  const bool balanced = (k * (k - 1)) % (v - 1) == 0;
  const ShiftCorrelator corr(v, elems);
  const std::uint32_t expected = balanced ? static_cast<std::uint32_t>(k * (k - 1) / (v - 1)) : corr.count(1);
  for (std::uint32_t s = 1; s < v; ++s) {
    const std::uint32_t c = corr.count(s);
    if (c != expected || !balanced) {
      throw Error(ErrorCode::NotDifferenceSet,
                  "difference " + std::to_string(s) + " occurs " + std::to_string(c) + " times, expected " +
                      (balanced ? std::to_string(expected) : std::string("k(k-1)/(v-1), which is not integral")));
    }
  }
  return DifferenceSet{v, std::move(elems), expected};
}

Design develop(const DifferenceSet& ds) {
  std::vector<Block> blocks;
  blocks.reserve(ds.v);
  for (std::uint32_t i = 0; i < ds.v; ++i) {
    Block b;
    b.reserve(ds.elems.size());
    for (auto d : ds.elems) b.push_back((d + i) % ds.v);
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
  }
  return validate_2design(make_design(ds.v, std::move(blocks)));
}

DifferenceSet base_difference_set(const Design& design) {
  if (design.blocks.size() != design.v || design.blocks.empty()) {
    throw Error(ErrorCode::NotCyclic, "a development has exactly v blocks");
  }
  const auto& base = design.blocks.front();
  for (std::uint32_t i = 0; i < design.v; ++i) {
    Block b;
    for (auto d : base) b.push_back((d + i) % design.v);
    std::sort(b.begin(), b.end());
    if (b != design.blocks[i]) {
      throw Error(ErrorCode::NotCyclic, "block " + std::to_string(i) + " is not block 0 shifted by " +
                                            std::to_string(i));
    }
  }
  return validate_difference_set(design.v, base);
}

DifferenceSet paley_diffset(std::uint32_t v) {
  if (v < 7 || v % 4 != 3 || !gf::is_prime(v)) {
    throw Error(ErrorCode::BadModulus, std::to_string(v) + " is not a prime = 3 (mod 4) with v >= 7");
  }
  std::vector<bool> square(v, false);
  for (std::uint64_t x = 1; x < v; ++x) square[x * x % v] = true;
  std::vector<std::uint32_t> elems;
  for (std::uint32_t x = 1; x < v; ++x) {
    if (square[x]) elems.push_back(x);
  }
  auto ds = validate_difference_set(v, std::move(elems));
  if (ds.lambda != (v - 3) / 4) throw Error(ErrorCode::NotDifferenceSet, "Paley lambda mismatch");
  return ds;
}

DifferenceSet singer_diffset(unsigned n, std::uint64_t q, std::optional<std::vector<std::uint32_t>> poly) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Singer difference sets need n >= 2");
  const auto pp = gf::prime_power(q);
  if (!pp) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  const auto degree = static_cast<std::uint64_t>(pp->second) * (n + 1);
  if (degree > 64) throw Error(ErrorCode::FieldTooLarge, "GF(q^{n+1}) is beyond the table limit");
  const auto big = gf::Field::make(static_cast<std::uint32_t>(pp->first), static_cast<std::uint32_t>(degree),
                                   std::move(poly));
  const auto v = static_cast<std::uint32_t>(geometry::bracket(n + 1, q));
  std::vector<std::uint32_t> elems;
  for (std::uint32_t i = 0; i < v; ++i) {
    if (gf::trace(big.exp(i), q).is_zero()) elems.push_back(i);
  }
  auto ds = validate_difference_set(v, std::move(elems));
  if (ds.k() != geometry::bracket(n, q) || ds.lambda != geometry::bracket(n - 1, q)) {
    throw Error(ErrorCode::NotDifferenceSet, "Singer parameters mismatch");
  }
  return ds;
}

}  // namespace addesign::designs
