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

#include "addesign/additivity.hpp"

#include <algorithm>
#include <set>
#include <thread>
#include <unordered_map>

#include "addesign/error.hpp"
#include "addesign/extension_field.hpp"

namespace addesign::additivity {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) noexcept {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) return UINT64_MAX;
  }
  return out;
}

std::uint32_t to_u32(std::uint64_t x, const char* what) {
  if (x > 0xFFFFFFFFULL) throw Error(ErrorCode::TooLarge, std::string(what) + " exceeds 32 bits");
  return static_cast<std::uint32_t>(x);
}

struct ElementHash {
  std::size_t operator()(const GroupElement& e) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : e) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool pairwise_distinct(std::vector<GroupElement> image) {
  std::sort(image.begin(), image.end());
  return std::adjacent_find(image.begin(), image.end()) == image.end();
}

void check_shape(const AbelianGroup& group, const GroupElement& e) {
  if (e.size() != group.rank) {
    throw Error(ErrorCode::GroupMismatch, "element of length " + std::to_string(e.size()) + " in " + group.describe());
  }
  for (auto c : e) {
    if (c >= group.modulus) throw Error(ErrorCode::GroupMismatch, "coordinate outside Z_" + std::to_string(group.modulus));
  }
}

const designs::DesignParams& params_of(const designs::Design& design, designs::Design& scratch) {
  if (design.params) return *design.params;
  scratch = designs::validate_2design(design);
  return *scratch.params;
}

}  // namespace

std::string AbelianGroup::describe() const {
  return "Z_" + std::to_string(modulus) + "^" + std::to_string(rank);
}

std::string_view kind_name(EmbeddingKind kind) noexcept {
  switch (kind) {
    case EmbeddingKind::SymmetricStrong: return "symmetric-strong";
    case EmbeddingKind::CyclicSmooth: return "cyclic-smooth";
    case EmbeddingKind::PgStrong: return "pg-strong";
    case EmbeddingKind::SubspaceSmooth: return "subspace-smooth";
    case EmbeddingKind::Identity: return "identity";
  }
  return "identity";
}

EmbeddingKind parse_kind(std::string_view name) {
  for (auto k : {EmbeddingKind::SymmetricStrong, EmbeddingKind::CyclicSmooth, EmbeddingKind::PgStrong,
                 EmbeddingKind::SubspaceSmooth, EmbeddingKind::Identity}) {
    if (kind_name(k) == name) return k;
  }
  throw Error(ErrorCode::ParseError, "unknown embedding kind '" + std::string(name) + "'");
}

std::string size_label(const AbelianGroup& group, std::uint64_t v) {
  const auto order = saturating_pow(group.modulus, group.rank);
  if (order == v) return "strict";
  if (v != UINT64_MAX && order == v + 1) return "almost-strict";
  return "";
}

GroupElement group_sum(const AbelianGroup& group, std::span<const GroupElement> elems) {
  std::vector<std::uint64_t> acc(group.rank, 0);
  for (const auto& e : elems) {
    check_shape(group, e);
    for (std::size_t c = 0; c < e.size(); ++c) acc[c] = (acc[c] + e[c]) % group.modulus;
  }
  return GroupElement(acc.begin(), acc.end());
}

bool zero_sum(const AbelianGroup& group, std::span<const GroupElement> elems) {
  const auto s = group_sum(group, elems);
  return std::all_of(s.begin(), s.end(), [](std::uint32_t c) { return c == 0; });
}

// ---------------------------------------------------------------- constructions

Embedding symmetric_strong_embedding(const designs::Design& design) {
  designs::Design scratch;
  const auto& params = params_of(design, scratch);
  if (!params.symmetric) {
    throw Error(ErrorCode::NotSymmetric, "design has " + std::to_string(params.b) + " blocks on " +
                                             std::to_string(params.v) + " points");
  }
  if (params.k < params.lambda + 2) {
    throw Error(ErrorCode::DegenerateOrder, "k - lambda = " + std::to_string(params.k - params.lambda) + " < 2");
  }
  Embedding emb;
  emb.kind = EmbeddingKind::SymmetricStrong;
  emb.group = {to_u32(params.k - params.lambda, "k - lambda"), design.v};
  emb.image.assign(design.v, GroupElement(design.v, 1));
  for (std::size_t j = 0; j < design.blocks.size(); ++j) {
    for (auto x : design.blocks[j]) emb.image[x][j] = 0;
  }
  // k > lambda separates every pair of rows.
  if (!pairwise_distinct(emb.image)) throw Error(ErrorCode::NotSymmetric, "incidence rows are not distinct");
  emb.meta = Json{{"k", params.k}, {"lambda", params.lambda}, {"order", params.k - params.lambda}};
  return emb;
}

namespace {

template <class E>
struct CyclicRun {
  std::vector<E> powers;  // g^0 .. g^{v-1}
  E sigma_1;
  E sigma_minus_1;
  E product;
};

template <class E>
CyclicRun<E> run_cyclic(const designs::DifferenceSet& ds, const E& g) {
  std::vector<E> powers;
  powers.reserve(ds.v);
  powers.push_back(g.pow(std::uint64_t{0}));
  for (std::uint32_t i = 1; i < ds.v; ++i) powers.push_back(powers.back() * g);
  E s1 = powers[0] - powers[0];
  E sm1 = s1;
  for (auto d : ds.elems) {
    s1 += powers[d];
    sm1 += powers[(ds.v - d) % ds.v];
  }
  E prod = s1 * sm1;
  return {std::move(powers), std::move(s1), std::move(sm1), std::move(prod)};
}

template <class E>
void fill_detail(CyclicDetail& detail, const CyclicRun<E>& run) {
  detail.sigma_1 = run.sigma_1.to_string();
  detail.sigma_minus_1 = run.sigma_minus_1.to_string();
  detail.sigma_1_zero = run.sigma_1.is_zero();
  detail.sigma_minus_1_zero = run.sigma_minus_1.is_zero();
  detail.product_zero = run.product.is_zero();
  // Both vanishing: keep i = 1.
  detail.sign = detail.sigma_1_zero ? 1 : (detail.sigma_minus_1_zero ? -1 : 0);
}

template <class E>
std::vector<GroupElement> cyclic_image(const CyclicRun<E>& run, int sign) {
  const auto v = static_cast<std::uint32_t>(run.powers.size());
  std::vector<GroupElement> image;
  image.reserve(v);
  for (std::uint32_t x = 0; x < v; ++x) {
    const std::uint32_t e = sign > 0 ? x : (v - x) % v;
    image.push_back(run.powers[e].coeffs());
  }
  return image;
}

struct CyclicSetup {
  std::uint64_t t = 0;
  bool table = true;
};

CyclicSetup check_cyclic(const designs::DifferenceSet& ds, std::uint32_t p) {
  if (!gf::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const std::uint64_t order = ds.k() - ds.lambda;
  if (order % p != 0 || ds.v % p == 0) {
    throw Error(ErrorCode::BadPrime, "need p | k - lambda = " + std::to_string(order) + " and p not dividing v = " +
                                         std::to_string(ds.v));
  }
  CyclicSetup s;
  s.t = gf::mult_order(p, ds.v);
  s.table = saturating_pow(p, s.t) <= gf::kMaxTableOrder;
  return s;
}

// Shared between cyclic_detail and cyclic_embedding so the embedding is
// built from the same powers the sigmas came from.
template <class Fn>
auto with_cyclic_field(const designs::DifferenceSet& ds, std::uint32_t p,
                       std::optional<std::vector<std::uint32_t>> poly, Fn&& fn) {
  const auto setup = check_cyclic(ds, p);
  if (poly && poly->size() != setup.t + 1) {
    throw Error(ErrorCode::InvalidArgument, "polynomial degree must equal t = ord_v(p) = " + std::to_string(setup.t));
  }
  CyclicDetail detail;
  detail.p = p;
  detail.t = setup.t;
  detail.table_field = setup.table;
  if (setup.table) {
    const auto field = gf::Field::make(p, static_cast<std::uint32_t>(setup.t), std::move(poly));
    const auto g = gf::subgroup_generator(field, ds.v);
    detail.field = field.describe();
    detail.generator = g.to_string();
    detail.generator_log = (field.order() - 1) / ds.v;
    const auto run = run_cyclic(ds, g);
    fill_detail(detail, run);
    return fn(detail, cyclic_image(run, detail.sign));
  }
  const auto field = gf::ExtensionField::make(p, static_cast<std::uint32_t>(setup.t), std::move(poly));
  const auto g = field.element_of_order(ds.v);
  detail.field = field.describe();
  detail.generator = g.to_string();
  const auto run = run_cyclic(ds, g);
  fill_detail(detail, run);
  return fn(detail, cyclic_image(run, detail.sign));
}

}  // namespace

CyclicDetail cyclic_detail(const designs::DifferenceSet& ds, std::uint32_t p,
                           std::optional<std::vector<std::uint32_t>> poly) {
  return with_cyclic_field(ds, p, std::move(poly),
                           [](const CyclicDetail& d, const std::vector<GroupElement>&) { return d; });
}

Embedding cyclic_embedding(const designs::DifferenceSet& ds, std::uint32_t p,
                           std::optional<std::vector<std::uint32_t>> poly) {
  return with_cyclic_field(ds, p, std::move(poly), [&](const CyclicDetail& d, std::vector<GroupElement> image) {
    if (d.sign == 0) {
      throw Error(ErrorCode::NoZeroSigma, "neither sigma_1 = " + d.sigma_1 + " nor sigma_-1 = " + d.sigma_minus_1 +
                                              " vanishes");
    }
    Embedding emb;
    emb.kind = EmbeddingKind::CyclicSmooth;
    emb.group = {d.p, static_cast<std::uint32_t>(d.t)};
    emb.image = std::move(image);
    if (!pairwise_distinct(emb.image)) throw Error(ErrorCode::NoZeroSigma, "powers of g are not distinct");
    emb.meta = Json{{"p", d.p},
                    {"t", d.t},
                    {"field", d.field},
                    {"table_field", d.table_field},
                    {"g", d.generator}};
    if (d.generator_log) emb.meta["g_log"] = *d.generator_log;
    emb.meta["sigma_1"] = d.sigma_1;
    emb.meta["sigma_-1"] = d.sigma_minus_1;
    emb.meta["sign"] = d.sign;
    emb.meta["label"] = size_label(emb.group, ds.v);
    return emb;
  });
}

Embedding pg_strong_embedding(unsigned n, std::uint64_t q, unsigned d) {
  if (d < 1 || d + 1 > n) throw Error(ErrorCode::DimensionOutOfRange, "PG_d(n,q) needs 1 <= d <= n-1");
  const auto field = geometry::coordinate_field(q);
  const auto v = to_u32(geometry::bracket(n + 1, q), "point count");
  const auto hyperplanes = geometry::enumerate_subspaces(n, q, n - 1);
  Embedding emb;
  emb.kind = EmbeddingKind::PgStrong;
  emb.group = {to_u32(saturating_pow(q, d), "q^d"), v};
  emb.image.assign(v, GroupElement(v, 1));
  for (std::size_t j = 0; j < hyperplanes.size(); ++j) {
    for (auto x : hyperplanes[j].point_indices(field)) emb.image[x][j] = 0;
  }
  if (!pairwise_distinct(emb.image)) throw Error(ErrorCode::DimensionOutOfRange, "hyperplane rows not distinct");
  emb.meta = Json{{"n", n}, {"q", q}, {"d", d}};
  return emb;
}

std::vector<gf::Element> exponent_class_reps(const gf::Field& big, std::uint64_t q) {
  const std::uint64_t units = big.order() - 1;
  if (q < 2 || units % (q - 1) != 0) {
    throw Error(ErrorCode::FieldMismatch, big.describe() + " has no subfield of order " + std::to_string(q));
  }
  const std::uint64_t v = units / (q - 1);
  std::vector<gf::Element> reps;
  reps.reserve(v);
  for (std::uint64_t i = 0; i < v; ++i) reps.push_back(big.exp(static_cast<std::int64_t>(i)));
  return reps;
}

Embedding subspace_embedding(const designs::Design& design, std::uint64_t q, std::span<const gf::Element> reps) {
  if (reps.size() != design.v) {
    throw Error(ErrorCode::SizeMismatch, std::to_string(reps.size()) + " representatives for " +
                                             std::to_string(design.v) + " points");
  }
  if (reps.empty()) throw Error(ErrorCode::EmptyDesign, "no points");
  const gf::Field& big = reps.front().field();
  const auto pp = gf::prime_power(q);
  std::uint64_t acc = 1;
  while (acc < big.order()) acc *= q;
  if (!pp || pp->first != big.characteristic() || acc != big.order()) {
    throw Error(ErrorCode::FieldMismatch, big.describe() + " is not an extension of GF(" + std::to_string(q) + ")");
  }
  Embedding emb;
  emb.kind = EmbeddingKind::SubspaceSmooth;
  emb.group = {big.characteristic(), big.degree()};
  emb.image.reserve(reps.size());
  for (const auto& x : reps) {
    if (!(x.field() == big)) throw Error(ErrorCode::FieldMismatch, "representatives from different fields");
    if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero is not a projective point");
    emb.image.push_back(x.pow(static_cast<std::int64_t>(q - 1)).coeffs());
  }
  if (!pairwise_distinct(emb.image)) {
    throw Error(ErrorCode::InvalidArgument, "two representatives lie in the same F_q^* class");
  }
  for (std::size_t j = 0; j < design.blocks.size(); ++j) {
    std::vector<GroupElement> elems;
    for (auto x : design.blocks[j]) elems.push_back(emb.image[x]);
    if (!zero_sum(emb.group, elems)) {
      throw Error(ErrorCode::NotSubspaceBlocks, "block " + std::to_string(j) + " is not zero-sum under x -> x^" +
                                                    std::to_string(q - 1));
    }
  }
  emb.meta = Json{{"q", q}, {"field", big.describe()}, {"exponent", q - 1}};
  return emb;
}

Embedding identity_embedding(std::span<const geometry::Coords> points, std::uint64_t q) {
  const auto field = geometry::coordinate_field(q);
  if (points.empty()) throw Error(ErrorCode::EmptyDesign, "no points");
  const auto width = points.front().size();
  Embedding emb;
  emb.kind = EmbeddingKind::Identity;
  emb.group = {field.characteristic(), to_u32(width * field.degree(), "rank")};
  for (const auto& x : points) {
    if (x.size() != width) throw Error(ErrorCode::InvalidArgument, "mixed coordinate lengths");
    GroupElement e;
    e.reserve(emb.group.rank);
    for (auto c : x) {
      const auto digits = field.from_code(c).coeffs();
      e.insert(e.end(), digits.begin(), digits.end());
    }
    emb.image.push_back(std::move(e));
  }
  emb.meta = Json{{"q", q}};
  return emb;
}

// ---------------------------------------------------------------- verification

std::string_view status_name(StrongStatus status) noexcept {
  switch (status) {
    case StrongStatus::NotRun: return "skipped";
    case StrongStatus::Pass: return "pass";
    case StrongStatus::Fail: return "fail";
    case StrongStatus::Skipped: return "skipped";
  }
  return "skipped";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(acc);
}

Report verify_embedding(const designs::Design& design, const Embedding& emb) {
  if (emb.image.size() != design.v) {
    throw Error(ErrorCode::SizeMismatch, "embedding has " + std::to_string(emb.image.size()) +
                                             " points, design has " + std::to_string(design.v));
  }
  for (const auto& e : emb.image) {
    if (e.size() != emb.group.rank) {
      throw Error(ErrorCode::SizeMismatch, "image element of length " + std::to_string(e.size()) + " in " +
                                               emb.group.describe());
    }
    check_shape(emb.group, e);
  }
  Report report;
  report.injective = pairwise_distinct(emb.image);
  report.blocks_checked = design.blocks.size();
  std::vector<GroupElement> elems;
  for (std::size_t j = 0; j < design.blocks.size(); ++j) {
    elems.clear();
    for (auto x : design.blocks[j]) elems.push_back(emb.image[x]);
    auto s = group_sum(emb.group, elems);
    if (std::any_of(s.begin(), s.end(), [](std::uint32_t c) { return c != 0; })) {
      report.failures.push_back({j, std::move(s)});
    }
  }
  report.additive = report.injective && report.failures.empty();
  report.size_class = size_label(emb.group, design.v);
  return report;
}

namespace {

struct ScanResult {
  std::uint64_t zero_sum = 0;
  std::uint64_t extras = 0;
  std::vector<designs::Block> examples;
};

// Depth-first walk over increasing index tuples. The last element is never
// enumerated: it is looked up as the negated partial sum. A branch is cut
// when some coordinate cannot reach a multiple of m with the remaining picks.
class ZeroSumScanner {
 public:
  ZeroSumScanner(const Embedding& emb, unsigned k, const std::set<designs::Block>& blocks, std::size_t max_examples)
      : m_(emb.group.modulus),
        t_(emb.group.rank),
        v_(static_cast<std::uint32_t>(emb.image.size())),
        k_(k),
        blocks_(blocks),
        max_examples_(max_examples) {
    flat_.reserve(static_cast<std::size_t>(v_) * t_);
    for (std::uint32_t i = 0; i < v_; ++i) {
      flat_.insert(flat_.end(), emb.image[i].begin(), emb.image[i].end());
      index_.emplace(emb.image[i], i);
    }
    suffix_min_.assign(static_cast<std::size_t>(v_ + 1) * t_, 0);
    suffix_max_.assign(static_cast<std::size_t>(v_ + 1) * t_, 0);
    for (std::uint32_t i = v_; i-- > 0;) {
      for (std::uint32_t c = 0; c < t_; ++c) {
        const auto x = flat_[static_cast<std::size_t>(i) * t_ + c];
        const bool last = i + 1 == v_;
        const std::size_t here = static_cast<std::size_t>(i) * t_ + c;
        const std::size_t next = here + t_;
        suffix_min_[here] = last ? x : std::min<std::uint32_t>(x, suffix_min_[next]);
        suffix_max_[here] = last ? x : std::max<std::uint32_t>(x, suffix_max_[next]);
      }
    }
  }

  ScanResult run(std::uint32_t first_begin, std::uint32_t first_end) const {
    ScanResult out;
    std::vector<std::int64_t> sum(t_, 0);
    std::vector<std::uint32_t> chosen;
    chosen.reserve(k_);
    if (k_ == 1) {
      if (first_begin == 0) finish(sum, chosen, 0, out);
      return out;
    }
    for (std::uint32_t i = first_begin; i < first_end; ++i) descend(i, sum, chosen, out);
    return out;
  }

 private:
  void descend(std::uint32_t i, std::vector<std::int64_t>& sum, std::vector<std::uint32_t>& chosen,
               ScanResult& out) const {
    const auto* row = &flat_[static_cast<std::size_t>(i) * t_];
    for (std::uint32_t c = 0; c < t_; ++c) sum[c] += row[c];
    chosen.push_back(i);
    const unsigned remaining = k_ - static_cast<unsigned>(chosen.size());  // >= 1
    if (feasible(sum, remaining, i + 1)) {
      if (remaining == 1) {
        finish(sum, chosen, i + 1, out);
      } else {
        const std::uint32_t last_start = v_ - remaining;
        for (std::uint32_t j = i + 1; j <= last_start; ++j) descend(j, sum, chosen, out);
      }
    }
    chosen.pop_back();
    for (std::uint32_t c = 0; c < t_; ++c) sum[c] -= row[c];
  }

  bool feasible(const std::vector<std::int64_t>& sum, unsigned remaining, std::uint32_t from) const {
    if (from >= v_) return false;
    const std::size_t base = static_cast<std::size_t>(from) * t_;
    const auto m = static_cast<std::int64_t>(m_);
    for (std::uint32_t c = 0; c < t_; ++c) {
      const std::int64_t lo = sum[c] + static_cast<std::int64_t>(remaining) * suffix_min_[base + c];
      const std::int64_t hi = sum[c] + static_cast<std::int64_t>(remaining) * suffix_max_[base + c];
      if ((hi / m) * m < lo) return false;
    }
    return true;
  }

  void finish(const std::vector<std::int64_t>& sum, const std::vector<std::uint32_t>& chosen, std::uint32_t from,
              ScanResult& out) const {
    GroupElement need(t_);
    for (std::uint32_t c = 0; c < t_; ++c) {
      const auto r = static_cast<std::uint32_t>(sum[c] % m_);
      need[c] = r == 0 ? 0 : m_ - r;
    }
    const auto it = index_.find(need);
    if (it == index_.end() || it->second < from) return;
    ++out.zero_sum;
    designs::Block subset(chosen.begin(), chosen.end());
    subset.push_back(it->second);
    if (blocks_.count(subset) == 0) {
      ++out.extras;
      if (out.examples.size() < max_examples_) out.examples.push_back(std::move(subset));
    }
  }

  std::uint32_t m_;
  std::uint32_t t_;
  std::uint32_t v_;
  unsigned k_;
  const std::set<designs::Block>& blocks_;
  std::size_t max_examples_;
  std::vector<std::uint32_t> flat_;
  std::vector<std::uint32_t> suffix_min_;
  std::vector<std::uint32_t> suffix_max_;
  std::unordered_map<GroupElement, std::uint32_t, ElementHash> index_;
};

}  // namespace

Report verify_strong(const designs::Design& design, const Embedding& emb, const StrongOptions& options) {
  Report report = verify_embedding(design, emb);
  report.criterion = "zero-sum k-subsets of f(V) equal the block images";
  if (design.blocks.empty()) throw Error(ErrorCode::EmptyDesign, "no blocks");
  const std::size_t k = design.blocks.front().size();
  for (const auto& b : design.blocks) {
    if (b.size() != k) throw Error(ErrorCode::UnequalBlockSizes, "blocks of different sizes");
  }
  const std::uint64_t total = binomial(design.v, k);
  if (total > options.cap) {
    report.strong = StrongStatus::Skipped;
    report.note = "C(" + std::to_string(design.v) + "," + std::to_string(k) + ") exceeds cap " +
                  std::to_string(options.cap);
    return report;
  }
  if (!report.injective) {
    report.strong = StrongStatus::Fail;
    report.note = "embedding is not injective";
    return report;
  }
  const std::set<designs::Block> blocks(design.blocks.begin(), design.blocks.end());
  const ZeroSumScanner scanner(emb, static_cast<unsigned>(k), blocks, options.max_examples);

  // Contiguous ranges of the first index, balanced by subset count.
  const std::uint32_t first_end = k == 0 ? 0 : design.v - static_cast<std::uint32_t>(k) + 1;
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, std::max<std::uint32_t>(1, first_end)));
  std::vector<std::uint32_t> cuts{0};
  {
    unsigned __int128 acc = 0;
    for (std::uint32_t i = 0; i < first_end && cuts.size() < jobs; ++i) {
      acc += binomial(design.v - 1 - i, k - 1);
      if (acc * jobs >= static_cast<unsigned __int128>(total) * cuts.size()) cuts.push_back(i + 1);
    }
    while (cuts.size() < jobs) cuts.push_back(first_end);
    cuts.push_back(first_end);
  }
  std::vector<ScanResult> parts(jobs);
  if (jobs == 1) {
    parts[0] = scanner.run(0, first_end);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] { parts[w] = scanner.run(cuts[w], cuts[w + 1]); });
    }
    for (auto& th : workers) th.join();
  }
  for (auto& part : parts) {
    report.zero_sum_subsets += part.zero_sum;
    report.extra_zero_sum_subsets += part.extras;
    for (auto& ex : part.examples) {
      if (report.extra_examples.size() < options.max_examples) report.extra_examples.push_back(std::move(ex));
    }
  }
  report.subsets_scanned = total;
  const bool exact = report.additive && report.extra_zero_sum_subsets == 0 && report.zero_sum_subsets == blocks.size();
  report.strong = exact ? StrongStatus::Pass : StrongStatus::Fail;
  return report;
}

}  // namespace addesign::additivity
