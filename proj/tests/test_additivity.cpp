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

#include <algorithm>
#include <set>
#include <vector>

#include "addesign/additivity.hpp"
#include "addesign/designs.hpp"
#include "addesign/error.hpp"
#include "addesign/geometry.hpp"
#include "addesign/gf.hpp"
#include "addesign/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace addesign;
using namespace addesign::additivity;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

// Brute-force strong check: zero-sum k-subsets of the image versus the blocks.
std::pair<std::uint64_t, bool> brute_strong(const designs::Design& d, const Embedding& e) {
  std::set<designs::Block> blocks(d.blocks.begin(), d.blocks.end());
  std::uint64_t count = 0;
  bool only_blocks = true;
  oracle::zero_sum_subsets(e.image, e.group.modulus, d.block_size(), [&](const std::vector<std::uint32_t>& s) {
    ++count;
    if (!blocks.count(s)) only_blocks = false;
  });
  return {count, only_blocks && count == blocks.size()};
}

designs::Design fano() { return geometry::pg_design(2, 2, 1); }

}  // namespace

TEST_CASE("group sums") {
  const AbelianGroup z3{3, 3};
  const std::vector<GroupElement> zero{{0, 0, 0}};
  CHECK(zero_sum(z3, zero));
  const std::vector<GroupElement> two{{0, 0, 1}, {1, 0, 0}};
  CHECK_FALSE(zero_sum(z3, two));
  CHECK(group_sum(z3, two) == GroupElement{1, 0, 1});
  const AbelianGroup z34{3, 4};
  const std::vector<GroupElement> b4{{0, 0, 0, 1}, {2, 2, 1, 0}, {0, 0, 0, 2}, {1, 1, 2, 0}};
  CHECK(zero_sum(z34, b4));
  CHECK(code_of([&] { group_sum(z34, two); }) == ErrorCode::GroupMismatch);
  CHECK(size_label({2, 3}, 7) == "almost-strict");
  CHECK(size_label({2, 3}, 8) == "strict");
  CHECK(size_label({2, 4}, 7) == "");
  for (auto k : {EmbeddingKind::SymmetricStrong, EmbeddingKind::CyclicSmooth, EmbeddingKind::PgStrong,
                 EmbeddingKind::SubspaceSmooth, EmbeddingKind::Identity})
    CHECK(parse_kind(kind_name(k)) == k);
}

TEST_CASE("symmetric strong embeddings") {
  struct Case {
    designs::Design d;
    std::uint32_t m;
  };
  const std::vector<Case> cases{{fano(), 2},
                                {designs::develop(designs::validate_difference_set(13, {0, 1, 3, 9})), 3},
                                {geometry::pg_design(3, 2, 2), 4},
                                {designs::develop(designs::paley_diffset(11)), 3}};
  for (const auto& c : cases) {
    const auto e = symmetric_strong_embedding(c.d);
    CHECK(e.group == AbelianGroup{c.m, c.d.v});
    const auto r = verify_strong(c.d, e);
    CHECK(r.injective);
    CHECK(r.additive);
    CHECK(r.strong == StrongStatus::Pass);
    CHECK(r.subsets_scanned == binomial(c.d.v, c.d.block_size()));
    const auto [count, exact] = brute_strong(c.d, e);
    CHECK(r.zero_sum_subsets == count);
    CHECK(exact);
  }
  CHECK(code_of([] { symmetric_strong_embedding(geometry::pg_design(3, 2, 1)); }) == ErrorCode::NotSymmetric);
}

TEST_CASE("cyclic embedding for PG(2,3)") {
  const auto ds = designs::validate_difference_set(13, {0, 1, 3, 9});
  const auto poly = std::vector<std::uint32_t>{1, 2, 0, 1};
  const auto det = cyclic_detail(ds, 3, poly);
  CHECK(det.sigma_1 == "(0,0,2)");
  CHECK(det.sigma_minus_1 == "(0,0,0)");
  CHECK(det.sign == -1);
  CHECK(det.generator_log == 2);
  CHECK(det.product_zero);
  const auto e = cyclic_embedding(ds, 3, poly);
  CHECK(e.group == AbelianGroup{3, 3});
  CHECK(e.image[0] == GroupElement{0, 0, 1});
  CHECK(e.image[1] == GroupElement{0, 2, 1});
  const auto d = designs::develop(ds);
  const auto r = verify_strong(d, e);
  CHECK(r.additive);
  CHECK(r.blocks_checked == 13);
  CHECK(r.strong == StrongStatus::Fail);
  CHECK(r.zero_sum_subsets > 13);
  CHECK(r.zero_sum_subsets == brute_strong(d, e).first);
  CHECK(code_of([&] { cyclic_embedding(ds, 2); }) == ErrorCode::BadPrime);
  CHECK(code_of([&] { cyclic_embedding(ds, 13); }) == ErrorCode::BadPrime);
}

TEST_CASE("Mersenne case: {0,1,3} mod 7 into Z_2^3") {
  const auto ds = designs::validate_difference_set(7, {0, 1, 3});
  const auto det = cyclic_detail(ds, 2);
  CHECK(det.t == 3);
  const auto e = cyclic_embedding(ds, 2);
  CHECK(e.group == AbelianGroup{2, 3});
  CHECK(size_label(e.group, 7) == "almost-strict");
  const auto r = verify_embedding(designs::develop(ds), e);
  CHECK(r.passed());
  CHECK(r.blocks_checked == 7);
}

TEST_CASE("pg strong embeddings") {
  const auto e = pg_strong_embedding(2, 2, 1);
  CHECK(e.group == symmetric_strong_embedding(fano()).group);
  const auto d = geometry::pg_design(3, 2, 1);
  const auto pe = pg_strong_embedding(3, 2, 1);
  CHECK(pe.group == AbelianGroup{2, 15});
  const auto r = verify_strong(d, pe);
  CHECK(r.subsets_scanned == 455);
  CHECK(r.zero_sum_subsets == 35);
  CHECK(r.strong == StrongStatus::Pass);
  CHECK(brute_strong(d, pe) == std::pair<std::uint64_t, bool>{35, true});
  const auto d3 = geometry::pg_design(3, 2, 2);
  const auto e3 = pg_strong_embedding(3, 2, 2);
  CHECK(e3.group == AbelianGroup{4, 15});
  CHECK(verify_strong(d3, e3).strong == StrongStatus::Pass);
}

TEST_CASE("subspace and identity embeddings") {
  // PG(2,2) through points of GF(8); smooth but the strong check fails
  const auto big = gf::Field::make(2, 3);
  const auto pts = geometry::pg_points(2, 2);
  const auto reps = geometry::field_points(pts, 2, big);
  const auto d = fano();
  const auto e = subspace_embedding(d, 2, reps);
  CHECK(e.group == AbelianGroup{2, 3});
  CHECK(verify_embedding(d, e).passed());
  // identity ignores the field model: coordinates into Z_2^3
  const auto id = identity_embedding(pts, 2);
  CHECK(verify_embedding(d, id).passed());
  auto broken = id;
  broken.image[0] = GroupElement{1, 1, 1};
  const auto r = verify_embedding(d, broken);
  CHECK_FALSE(r.additive);
  REQUIRE_FALSE(r.failures.empty());
  for (const auto& f : r.failures) {
    const auto& b = d.blocks[f.block];
    CHECK(std::find(b.begin(), b.end(), 0u) != b.end());
  }
  // AG over GF(4): identity into Z_2^{2n}
  const auto ag = geometry::ag_design(2, 4, 1);
  CHECK(verify_embedding(ag, identity_embedding(geometry::ag_points(2, 4), 4)).passed());
  // AG(2,2) lines have two points; their sum is never zero
  CHECK_FALSE(verify_embedding(geometry::ag_design(2, 2, 1), identity_embedding(geometry::ag_points(2, 2), 2)).additive);
  CHECK(code_of([&] { verify_embedding(d, identity_embedding(geometry::ag_points(2, 3), 3)); }) ==
        ErrorCode::SizeMismatch);
}

TEST_CASE("strong check options") {
  const auto d = geometry::pg_design(3, 3, 1);
  const auto e = pg_strong_embedding(3, 3, 1);
  StrongOptions one, many, tiny;
  many.jobs = 4;
  tiny.cap = 1000;
  const auto a = verify_strong(d, e, one);
  const auto b = verify_strong(d, e, many);
  CHECK(a.zero_sum_subsets == 130);
  CHECK(brute_strong(d, e) == std::pair<std::uint64_t, bool>{130, true});
  CHECK(io::render(io::to_json(a)) == io::render(io::to_json(b)));
  const auto s = verify_strong(d, e, tiny);
  CHECK(s.strong == StrongStatus::Skipped);
  CHECK(s.additive);
  CHECK(binomial(40, 4) == 91390);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("json round trips") {
  const auto d = designs::develop(designs::validate_difference_set(13, {0, 1, 3, 9}));
  const auto dj = io::to_json(d);
  CHECK(dj["k"] == 4);
  CHECK(dj["lambda"] == 1);
  const auto d2 = io::design_from_json(io::parse(io::render(dj)));
  CHECK(d2.blocks == d.blocks);
  CHECK(d2.points == d.points);
  const auto e = cyclic_embedding(designs::base_difference_set(d), 3, std::vector<std::uint32_t>{1, 2, 0, 1});
  const auto e2 = io::embedding_from_json(io::parse(io::render(io::to_json(e))));
  CHECK(e2.image == e.image);
  CHECK(e2.group == e.group);
  CHECK(e2.kind == e.kind);
  auto bad = dj;
  bad["lambda"] = 2;
  CHECK(code_of([&] { io::design_from_json(bad); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse("{not json"); }) == ErrorCode::ParseError);
  const auto ds = io::diffset_from_json(io::to_json(designs::paley_diffset(7)));
  CHECK(ds.elems == std::vector<std::uint32_t>{1, 2, 4});
}
