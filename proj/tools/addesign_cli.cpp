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

// addesign: generate designs, embed them in abelian groups, verify additivity.

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "addesign/additivity.hpp"
#include "addesign/designs.hpp"
#include "addesign/error.hpp"
#include "addesign/geometry.hpp"
#include "addesign/gf.hpp"
#include "addesign/io.hpp"

namespace {

using namespace addesign;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

constexpr const char* kExitHelp = R"(Exit status:
  0  every requested check passed (or the document was written)
  1  a mathematical check failed: not additive, not strong, or a construction
     precondition such as NotSymmetric, NotDifferenceSet, BadPrime, NotPrimitivePolynomial
  2  usage or size error: bad flags, unreadable or malformed files, SizeMismatch,
     strong check over --cap (reported as "skipped"), FieldTooLarge)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::optional<std::vector<std::uint32_t>> poly_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return gf::parse_coefficients(text);
}

void require(bool present, const std::string& what) {
  if (!present) throw UsageError(what);
}

// "g^5" or "5" -> 5
std::optional<std::uint64_t> exponent_label(const std::string& label) {
  std::string_view s(label);
  if (s.rfind("g^", 0) == 0) s.remove_prefix(2);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool coordinate_labels(const designs::Design& design) {
  for (const auto& l : design.points) {
    if (l.size() < 2 || l.front() != '(' || l.back() != ')') return false;
  }
  return true;
}

std::vector<geometry::Coords> coordinates_of(const designs::Design& design) {
  std::vector<geometry::Coords> out;
  out.reserve(design.points.size());
  for (const auto& l : design.points) out.push_back(geometry::parse_coords_label(l));
  return out;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  unsigned n = 0;
  std::uint64_t q = 0;
  unsigned d = 0;
  std::uint32_t v = 0;
  std::string set;
  std::string poly;
  bool as_set = false;
  bool field_model = false;
  std::string out;
};

int run_gen(const GenArgs& a, const CLI::App& app) {
  const auto has = [&](const char* flag) { return app.count(flag) > 0; };
  std::optional<designs::DifferenceSet> ds;
  std::optional<designs::Design> design;
  if (a.kind == "pg" || a.kind == "ag") {
    require(has("--n") && has("--q") && has("--d"), a.kind + " needs --n, --q and --d");
    if (a.kind == "ag") {
      design = geometry::ag_design(a.n, a.q, a.d);
    } else if (a.field_model) {
      const auto pp = gf::prime_power(a.q);
      if (!pp) throw UsageError("--q must be a prime power");
      const auto big = gf::Field::make(static_cast<std::uint32_t>(pp->first), pp->second * (a.n + 1), poly_flag(a.poly));
      design = geometry::pg_design_field_model(a.n, a.q, a.d, big);
    } else {
      design = geometry::pg_design(a.n, a.q, a.d);
    }
  } else if (a.kind == "paley") {
    require(has("--v"), "paley needs --v");
    ds = designs::paley_diffset(a.v);
  } else if (a.kind == "singer") {
    require(has("--n") && has("--q"), "singer needs --n and --q");
    ds = designs::singer_diffset(a.n, a.q, poly_flag(a.poly));
  } else {
    require(has("--v") && has("--set"), "dev needs --v and --set");
    ds = designs::validate_difference_set(a.v, gf::parse_coefficients(a.set));
  }
  if (ds) {
    if (a.as_set) {
      write_output(a.out, io::render(io::to_json(*ds)));
      return kExitOk;
    }
    design = designs::develop(*ds);
  } else if (a.as_set) {
    throw UsageError("--as-set applies to paley, singer and dev");
  }
  write_output(a.out, io::render(io::to_json(*design)));
  return kExitOk;
}

// ---------------------------------------------------------------- embed

struct EmbedArgs {
  std::string method;
  std::string in;
  std::string out;
  std::uint32_t p = 0;
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned d = 0;
  std::string poly;
};

additivity::Embedding embed_subspace(const designs::Design& design, std::uint64_t q,
                                     std::optional<std::vector<std::uint32_t>> poly) {
  const auto pp = gf::prime_power(q);
  if (!pp) throw UsageError("--q must be a prime power");
  if (coordinate_labels(design)) {
    const auto coords = coordinates_of(design);
    const auto width = static_cast<std::uint32_t>(coords.front().size());
    const auto big = gf::Field::make(static_cast<std::uint32_t>(pp->first), pp->second * width, std::move(poly));
    const auto reps = geometry::field_points(coords, q, big);
    return additivity::subspace_embedding(design, q, reps);
  }
  // Points labelled by exponent classes w^i F_q^*.
  unsigned width = 1;
  while (geometry::bracket(width, q) < design.v) ++width;
  if (geometry::bracket(width, q) != design.v) {
    throw UsageError(std::to_string(design.v) + " is not a point count [N]_q for q = " + std::to_string(q));
  }
  const auto big = gf::Field::make(static_cast<std::uint32_t>(pp->first), pp->second * width, std::move(poly));
  std::vector<gf::Element> reps;
  reps.reserve(design.v);
  for (const auto& label : design.points) {
    const auto e = exponent_label(label);
    if (!e) throw UsageError("point label '" + label + "' is neither a coordinate tuple nor an exponent");
    reps.push_back(big.exp(static_cast<std::int64_t>(*e)));
  }
  return additivity::subspace_embedding(design, q, reps);
}

int run_embed(const EmbedArgs& a, const CLI::App& app) {
  const auto has = [&](const char* flag) { return app.count(flag) > 0; };
  additivity::Embedding emb;
  if (a.method == "pg") {
    require(has("--n") && has("--q") && has("--d"), "pg needs --n, --q and --d");
    emb = additivity::pg_strong_embedding(a.n, a.q, a.d);
  } else {
    const Json doc = io::parse(read_input(a.in));
    if (a.method == "cyclic") {
      require(has("--p"), "cyclic needs --p");
      const auto ds = io::is_diffset_document(doc) ? io::diffset_from_json(doc)
                                                   : designs::base_difference_set(io::design_from_json(doc));
      emb = additivity::cyclic_embedding(ds, a.p, poly_flag(a.poly));
    } else {
      if (io::is_diffset_document(doc)) throw UsageError(a.method + " needs a design document");
      const auto design = io::design_from_json(doc);
      if (a.method == "symmetric") {
        emb = additivity::symmetric_strong_embedding(design);
      } else if (a.method == "subspace") {
        require(has("--q"), "subspace needs --q");
        emb = embed_subspace(design, a.q, poly_flag(a.poly));
      } else {
        require(has("--q"), "identity needs --q");
        if (!coordinate_labels(design)) throw UsageError("identity needs coordinate-labelled points");
        emb = additivity::identity_embedding(coordinates_of(design), a.q);
      }
    }
  }
  write_output(a.out, io::render(io::to_json(emb)));
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string design;
  std::string embedding;
  bool strong = false;
  std::uint64_t cap = 10'000'000;
  unsigned jobs = 1;
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  const auto design = io::design_from_json(io::parse(read_input(a.design)));
  const auto emb = io::embedding_from_json(io::parse(read_input(a.embedding)));
  additivity::Report report;
  if (a.strong) {
    additivity::StrongOptions opts;
    opts.cap = a.cap;
    opts.jobs = a.jobs;
    report = additivity::verify_strong(design, emb, opts);
  } else {
    report = additivity::verify_embedding(design, emb);
  }
  write_output(a.out, io::render(io::to_json(report)));
  if (!report.additive) return kExitCheckFailed;
  if (a.strong) {
    if (report.strong == additivity::StrongStatus::Skipped) return kExitUsage;
    if (report.strong != additivity::StrongStatus::Pass) return kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- info

struct InfoArgs {
  std::string topic;
  std::string in;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::string poly;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
};

int run_info(const InfoArgs& a, const CLI::App& app) {
  const auto has = [&](const char* flag) { return app.count(flag) > 0; };
  Json out;
  if (a.topic == "field") {
    require(has("--p") && has("--n"), "info field needs --p and --n");
    const auto f = gf::Field::make(a.p, a.n, poly_flag(a.poly));
    out = Json{{"field", f.describe()}, {"order", f.order()}, {"root", f.root().to_string()}};
  } else if (a.topic == "order") {
    require(has("--u") && has("--v"), "info order needs --u and --v");
    out = Json{{"u", a.u}, {"v", a.v}, {"order", gf::mult_order(a.u, a.v)}};
  } else {
    const Json doc = io::parse(read_input(a.in));
    if (io::is_diffset_document(doc)) {
      const auto ds = io::diffset_from_json(doc);
      out = Json{{"type", "difference-set"}, {"v", ds.v}, {"k", ds.k()}, {"lambda", ds.lambda}};
    } else if (doc.contains("image")) {
      const auto emb = io::embedding_from_json(doc);
      out = Json{{"type", "embedding"},
                 {"kind", additivity::kind_name(emb.kind)},
                 {"group", emb.group.describe()},
                 {"points", emb.image.size()},
                 {"label", additivity::size_label(emb.group, emb.image.size())}};
    } else {
      const auto design = io::design_from_json(doc);
      const auto& p = *design.params;
      out = Json{{"type", "design"}, {"v", p.v},         {"k", p.k},
                 {"lambda", p.lambda}, {"r", p.r},       {"b", p.b},
                 {"symmetric", p.symmetric}};
    }
  }
  std::cout << io::render(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive block designs: generate, embed, verify"};
  app.footer(kExitHelp);
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a design (or difference set) document");
  gen_cmd->add_option("kind", gen.kind, "pg | ag | paley | singer | dev")
      ->required()
      ->check(CLI::IsMember({"pg", "ag", "paley", "singer", "dev"}));
  gen_cmd->add_option("--n", gen.n, "Dimension");
  gen_cmd->add_option("--q", gen.q, "Field order (prime power)");
  gen_cmd->add_option("--d", gen.d, "Subspace dimension");
  gen_cmd->add_option("--v", gen.v, "Modulus");
  gen_cmd->add_option("--set", gen.set, "Difference set, comma separated");
  gen_cmd->add_option("--poly", gen.poly, "Primitive polynomial over Z_p, coefficients high to low");
  gen_cmd->add_flag("--as-set", gen.as_set, "Emit the difference set document instead of its development");
  gen_cmd->add_flag("--field-model", gen.field_model,
                    "pg only: label points by classes g^i of GF(q^{n+1})^*/GF(q)^*");
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  EmbedArgs embed;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a design into an abelian group");
  embed_cmd->add_option("method", embed.method, "symmetric | cyclic | pg | subspace | identity")
      ->required()
      ->check(CLI::IsMember({"symmetric", "cyclic", "pg", "subspace", "identity"}));
  embed_cmd->add_option("--in", embed.in, "Input document (default: stdin)");
  embed_cmd->add_option("--out", embed.out, "Output file (default: stdout)");
  embed_cmd->add_option("--p", embed.p, "cyclic: prime dividing k - lambda");
  embed_cmd->add_option("--q", embed.q, "subspace/identity/pg: field order");
  embed_cmd->add_option("--n", embed.n, "pg: dimension");
  embed_cmd->add_option("--d", embed.d, "pg: subspace dimension");
  embed_cmd->add_option("--poly", embed.poly, "Field polynomial over Z_p, coefficients high to low");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check additivity (and strong additivity)");
  verify_cmd->add_option("--design", verify.design, "Design document")->required();
  verify_cmd->add_option("--embedding", verify.embedding, "Embedding document")->required();
  verify_cmd->add_flag("--strong", verify.strong, "Enumerate all k-subsets");
  verify_cmd->add_option("--cap", verify.cap, "Maximum number of k-subsets to enumerate")->capture_default_str();
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads for --strong")->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Report file (default: stdout)");

  InfoArgs info;
  auto* info_cmd = app.add_subcommand("info", "Summarize a document, a field, or a multiplicative order");
  info_cmd->add_option("topic", info.topic, "file | field | order")
      ->required()
      ->check(CLI::IsMember({"file", "field", "order"}));
  info_cmd->add_option("--in", info.in, "file: input document (default: stdin)");
  info_cmd->add_option("--p", info.p, "field: characteristic");
  info_cmd->add_option("--n", info.n, "field: degree");
  info_cmd->add_option("--poly", info.poly, "field: polynomial, high to low");
  info_cmd->add_option("--u", info.u, "order: base");
  info_cmd->add_option("--v", info.v, "order: modulus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, *gen_cmd);
    if (*embed_cmd) return run_embed(embed, *embed_cmd);
    if (*verify_cmd) return run_verify(verify);
    return run_info(info, *info_cmd);
  } catch (const Error& e) {
    std::cerr << "addesign: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitCheckFailed;
  } catch (const UsageError& e) {
    std::cerr << "addesign: usage: " << e.what() << "\n";
    return kExitUsage;
  }
}
