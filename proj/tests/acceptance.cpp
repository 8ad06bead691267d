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

// Acceptance checks. One line per criterion; exit status is the number of
// failures. Runtime limits are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "addesign/additivity.hpp"
#include "addesign/designs.hpp"
#include "addesign/error.hpp"
#include "addesign/geometry.hpp"
#include "addesign/gf.hpp"

using namespace addesign;
using additivity::GroupElement;
using additivity::StrongStatus;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  explicit Check(Outcome& out) : out_(out) {}
  void require(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }

 private:
  Outcome& out_;
};

// "012" -> {0,1,2}
GroupElement digits(const std::string& s) {
  GroupElement g;
  for (char c : s) g.push_back(static_cast<std::uint32_t>(c - '0'));
  return g;
}

std::string show(const GroupElement& g) {
  std::string s;
  for (auto c : g) s += std::to_string(c);
  return s;
}

// ---------------------------------------------------------------- 1

Outcome pg23_golden() {
  Outcome out;
  Check c(out);
  const auto ds = designs::validate_difference_set(13, {0, 1, 3, 9});
  const std::vector<std::uint32_t> poly{1, 2, 0, 1};
  const auto det = additivity::cyclic_detail(ds, 3, poly);
  c.require(det.sigma_1 == "(0,0,2)", "sigma_1 = " + det.sigma_1);
  c.require(det.sigma_minus_1 == "(0,0,0)", "sigma_-1 = " + det.sigma_minus_1);
  c.require(det.sign == -1, "sign = " + std::to_string(det.sign));
  const auto emb = additivity::cyclic_embedding(ds, 3, poly);
  c.require(emb.group == additivity::AbelianGroup{3, 3}, "group " + emb.group.describe());

  // f(V) listed as g^0, g^1, ..., g^12, and f(x) = g^{-x}
  const std::vector<std::string> listed{"001", "100", "122", "220", "112", "121", "120",
                                        "020", "201", "011", "202", "111", "021"};
  for (std::uint32_t j = 0; j < 13; ++j) {
    const auto& img = emb.image[(13 - j) % 13];
    c.require(img == digits(listed[j]), "g^" + std::to_string(j) + " = " + show(img) + ", expected " + listed[j]);
  }
  const std::vector<std::vector<std::string>> blocks{
      {"001", "021", "202", "112"}, {"021", "111", "011", "220"}, {"111", "202", "201", "122"},
      {"202", "011", "020", "100"}, {"011", "201", "120", "001"}, {"201", "020", "121", "021"},
      {"020", "120", "112", "111"}, {"120", "121", "220", "202"}, {"121", "112", "122", "011"},
      {"112", "220", "100", "201"}, {"220", "122", "001", "020"}, {"122", "100", "021", "120"},
      {"100", "001", "111", "121"}};
  const std::uint32_t base[4] = {0, 1, 3, 9};
  for (std::uint32_t j = 0; j < 13; ++j) {
    std::vector<GroupElement> elems;
    for (std::uint32_t t = 0; t < 4; ++t) {
      const auto& img = emb.image[(base[t] + j) % 13];
      c.require(img == digits(blocks[j][t]), "block " + std::to_string(j) + " entry " + std::to_string(t) + " = " +
                                                 show(img) + ", expected " + blocks[j][t]);
      elems.push_back(img);
    }
    c.require(additivity::zero_sum(emb.group, elems), "block " + std::to_string(j) + " not zero-sum");
  }
  const auto r = additivity::verify_embedding(designs::develop(ds), emb);
  c.require(r.passed() && r.blocks_checked == 13, "verify_embedding");
  return out;
}

// ---------------------------------------------------------------- 2

Outcome pg133_golden() {
  Outcome out;
  Check c(out);
  const auto big = gf::Field::make(3, 4, std::vector<std::uint32_t>{1, 0, 0, 1, 2});
  const auto d = geometry::pg_design_field_model(3, 3, 1, big);
  c.require(d.v == 40 && d.blocks.size() == 130, "PG_1(3,3) size");
  for (std::uint32_t i = 0; i < d.v; ++i) c.require(d.points[i] == "g^" + std::to_string(i), "label " + d.points[i]);

  const std::vector<designs::Block> B{{0, 1, 4, 13}, {0, 2, 17, 24}, {0, 5, 26, 34}, {0, 10, 20, 30}};
  std::set<designs::Block> census;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::uint32_t shifts = i < 3 ? 40 : 10;
    for (std::uint32_t j = 0; j < shifts; ++j) {
      designs::Block b;
      for (auto x : B[i]) b.push_back((x + j) % 40);
      std::sort(b.begin(), b.end());
      census.insert(b);
    }
  }
  c.require(census.size() == 130, "census has " + std::to_string(census.size()) + " blocks");
  c.require(census == std::set<designs::Block>(d.blocks.begin(), d.blocks.end()), "census differs from the lines");

  const auto reps = additivity::exponent_class_reps(big, 3);
  const auto emb = additivity::subspace_embedding(d, 3, reps);
  const std::vector<std::vector<std::string>> listed{{"0001", "0100", "0111", "0121"},
                                                     {"0001", "0021", "0122", "0222"},
                                                     {"0001", "1121", "1002", "1212"},
                                                     {"0001", "2210", "0002", "1120"}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t t = 0; t < 4; ++t) {
      const auto& img = emb.image[B[i][t]];
      c.require(img == digits(listed[i][t]), "f(B_" + std::to_string(i + 1) + ") entry " + std::to_string(t) + " = " +
                                                 show(img) + ", expected " + listed[i][t]);
    }
  const auto r = additivity::verify_embedding(d, emb);
  c.require(r.passed() && r.blocks_checked == 130, "verify_embedding on 130 blocks");
  return out;
}

// ---------------------------------------------------------------- 3

Outcome symmetric_strong() {
  Outcome out;
  Check c(out);
  struct Case {
    std::string name;
    designs::Design d;
    std::uint64_t subsets;
  };
  const std::vector<Case> cases{{"Fano", geometry::pg_design(2, 2, 1), 35},
                                {"Singer(13,4,1)", designs::develop(designs::singer_diffset(2, 3)), 715},
                                {"PG_2(3,2)", geometry::pg_design(3, 2, 2), 6435}};
  for (const auto& cs : cases) {
    const auto emb = additivity::symmetric_strong_embedding(cs.d);
    const auto& p = *cs.d.params;
    c.require(emb.group == additivity::AbelianGroup{static_cast<std::uint32_t>(p.k - p.lambda), cs.d.v},
              cs.name + " group " + emb.group.describe());
    const auto r = additivity::verify_strong(cs.d, emb);
    c.require(r.additive && r.strong == StrongStatus::Pass, cs.name + " strong check");
    c.require(r.subsets_scanned == cs.subsets, cs.name + " scanned " + std::to_string(r.subsets_scanned));
    c.require(r.zero_sum_subsets == cs.d.blocks.size(), cs.name + " zero-sum count");
  }
  return out;
}

// ---------------------------------------------------------------- 4

Outcome pg_strong() {
  Outcome out;
  Check c(out);
  struct Case {
    std::uint64_t q;
    std::uint64_t scanned, zero;
  };
  for (const auto cs : {Case{2, 455, 35}, Case{3, 91390, 130}}) {
    const auto d = geometry::pg_design(3, cs.q, 1);
    const auto emb = additivity::pg_strong_embedding(3, cs.q, 1);
    const auto r = additivity::verify_strong(d, emb);
    const std::string tag = "PG_1(3," + std::to_string(cs.q) + ")";
    c.require(r.subsets_scanned == cs.scanned, tag + " scanned " + std::to_string(r.subsets_scanned));
    c.require(r.zero_sum_subsets == cs.zero, tag + " zero-sum " + std::to_string(r.zero_sum_subsets));
    c.require(r.strong == StrongStatus::Pass, tag + " strong");
  }
  return out;
}

// ---------------------------------------------------------------- 5

Outcome smooth_witness() {
  Outcome out;
  Check c(out);
  const auto ds = designs::singer_diffset(2, 3);
  const auto d = designs::develop(ds);
  const auto big = gf::Field::make(3, 3);  // the field the Singer set was built in
  const auto emb = additivity::subspace_embedding(d, 3, additivity::exponent_class_reps(big, 3));
  const auto r = additivity::verify_strong(d, emb);
  c.require(r.additive, "not additive");
  c.require(r.strong == StrongStatus::Fail, std::string("strong = ") + std::string(additivity::status_name(r.strong)));
  c.require(r.zero_sum_subsets > 13, "zero-sum count " + std::to_string(r.zero_sum_subsets));
  return out;
}

// ---------------------------------------------------------------- 6

Outcome power_sums() {
  Outcome out;
  Check c(out);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
    const auto f = geometry::coordinate_field(q);
    for (std::uint64_t i = 0; i + 2 <= q; ++i)
      c.require(gf::power_sum(f, i).is_zero(), "q=" + std::to_string(q) + " i=" + std::to_string(i));
    c.require(gf::power_sum(f, q - 1) == -f.one(), "q=" + std::to_string(q) + " i=q-1");
  }
  return out;
}

// ---------------------------------------------------------------- 7

Outcome orders() {
  Outcome out;
  Check c(out);
  c.require(gf::mult_order(2, 465) == 20, "ord_465(2)");
  c.require(gf::mult_order(3, 910) == 12, "ord_910(3)");
  for (std::uint64_t q = 2; q <= 32; ++q) {
    const auto pp = gf::prime_power(q);
    if (!pp) continue;
    for (unsigned n = 1; n <= 5; ++n) {
      const auto v = geometry::bracket(n + 1, q);
      c.require(gf::mult_order(pp->first, v) == pp->second * (n + 1),
                "q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
  }
  return out;
}

// ---------------------------------------------------------------- 8

Outcome mersenne() {
  Outcome out;
  Check c(out);
  struct Case {
    std::uint32_t v, t;
  };
  for (const auto cs : {Case{7, 3}, Case{31, 5}}) {
    const auto ds = designs::paley_diffset(cs.v);
    const auto emb = additivity::cyclic_embedding(ds, 2);
    const std::string tag = "Paley(" + std::to_string(cs.v) + ")";
    c.require(emb.group == additivity::AbelianGroup{2, cs.t}, tag + " group " + emb.group.describe());
    c.require(additivity::size_label(emb.group, cs.v) == "almost-strict", tag + " label");
    const auto r = additivity::verify_embedding(designs::develop(ds), emb);
    c.require(r.passed() && r.blocks_checked == cs.v, tag + " translates");
  }
  return out;
}

// ---------------------------------------------------------------- 9

Outcome sigma_product() {
  Outcome out;
  Check c(out);
  std::vector<designs::DifferenceSet> sets;
  for (unsigned n = 2; n <= 6; ++n)
    for (std::uint64_t q = 2; q <= 9; ++q) {
      if (!gf::prime_power(q) || geometry::bracket(n + 1, q) > 100) continue;
      sets.push_back(designs::singer_diffset(n, q));
    }
  for (std::uint32_t v = 7; v <= 100; v += 4)
    if (gf::is_prime(v)) sets.push_back(designs::paley_diffset(v));
  std::size_t cases = 0;
  for (const auto& ds : sets) {
    for (auto p : gf::prime_factors(ds.k() - ds.lambda)) {
      if (ds.v % p == 0) continue;
      const auto det = additivity::cyclic_detail(ds, static_cast<std::uint32_t>(p));
      const std::string tag = "v=" + std::to_string(ds.v) + " k=" + std::to_string(ds.k()) + " p=" + std::to_string(p);
      c.require(det.product_zero, tag + " sigma_1*sigma_-1 != 0");
      c.require(det.sign != 0, tag + " no vanishing sigma");
      const auto emb = additivity::cyclic_embedding(ds, static_cast<std::uint32_t>(p));
      c.require(additivity::verify_embedding(designs::develop(ds), emb).passed(), tag + " embedding");
      ++cases;
    }
  }
  c.require(cases == 30, std::to_string(cases) + " (set, p) cases, expected 30");
  return out;
}

// ---------------------------------------------------------------- 10

Outcome ag_identity() {
  Outcome out;
  Check c(out);
  for (std::uint64_t q = 2; q <= 81; ++q) {
    const auto pp = gf::prime_power(q);
    if (!pp) continue;
    std::uint64_t qn = q * q;
    for (unsigned n = 2; qn <= 81; ++n, qn *= q)
      for (unsigned d = 1; d < n; ++d) {
        if (d == 1 && q == 2) continue;
        const std::string tag = "AG_" + std::to_string(d) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
        const auto design = geometry::ag_design(n, q, d);
        const auto emb = additivity::identity_embedding(geometry::ag_points(n, q), q);
        c.require(emb.group == additivity::AbelianGroup{static_cast<std::uint32_t>(pp->first), pp->second * n},
                  tag + " group " + emb.group.describe());
        const auto r = additivity::verify_embedding(design, emb);
        c.require(r.passed() && r.blocks_checked == design.blocks.size(), tag);
      }
  }
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "PG(2,3) cyclic embedding golden values", 1.0, pg23_golden},
      {2, "PG_1(3,3) subspace embedding golden values", 1.0, pg133_golden},
      {3, "symmetric strong embeddings, exhaustive", 1.0, symmetric_strong},
      {4, "PG_1(3,q) strong embeddings, exhaustive", 10.0, pg_strong},
      {5, "Singer (13,4,1) subspace embedding is smooth, not strong", 1.0, smooth_witness},
      {6, "power sums over GF(q)", 0.0, power_sums},
      {7, "multiplicative order anchors", 0.0, orders},
      {8, "Paley(7), Paley(31) into Z_2^t", 1.0, mersenne},
      {9, "sigma product vanishes, v <= 100", 0.0, sigma_product},
      {10, "AG identity additivity, q^n <= 81", 0.0, ag_identity},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && cr.limit_s > 0 && s >= cr.limit_s) o = {false, "over the time limit"};
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << "  " << cr.id << ". " << cr.name;
    char buf[64];
    std::snprintf(buf, sizeof buf, "  [%.3f s", s);
    line << buf;
    if (cr.limit_s > 0) {
      std::snprintf(buf, sizeof buf, " < %.0f s", cr.limit_s);
      line << buf;
    }
    line << "]";
    if (!o.ok) line << "  " << o.detail;
    std::puts(line.str().c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
