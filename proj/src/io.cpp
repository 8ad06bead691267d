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

#include "addesign/io.hpp"

#include "addesign/error.hpp"

namespace addesign::io {

namespace {

template <class T>
T field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing key \"") + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json to_json(const designs::Design& design) {
  Json doc;
  doc["v"] = design.v;
  doc["points"] = design.points;
  doc["blocks"] = design.blocks;
  doc["k"] = design.block_size();
  if (design.params) {
    doc["lambda"] = design.params->lambda;
  } else {
    doc["lambda"] = nullptr;
  }
  return doc;
}

Json to_json(const designs::DifferenceSet& ds) { return Json{{"v", ds.v}, {"set", ds.elems}}; }

Json to_json(const additivity::Embedding& emb) {
  Json doc;
  doc["group"] = Json{{"m", emb.group.modulus}, {"t", emb.group.rank}};
  doc["kind"] = additivity::kind_name(emb.kind);
  doc["image"] = emb.image;
  doc["meta"] = emb.meta;
  return doc;
}

Json to_json(const additivity::Report& report) {
  Json doc;
  doc["injective"] = report.injective;
  doc["additive"] = report.additive;
  doc["strong"] = additivity::status_name(report.strong);
  doc["zero_sum_subsets"] = report.zero_sum_subsets;
  doc["blocks"] = report.blocks_checked;
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(Json{{"block", f.block}, {"sum", f.sum}});
  for (const auto& s : report.extra_examples) failures.push_back(Json{{"zero_sum_non_block", s}});
  doc["failures"] = failures;
  if (report.strong != additivity::StrongStatus::NotRun) {
    doc["criterion"] = report.criterion;
    doc["subsets_scanned"] = report.subsets_scanned;
    doc["extra_zero_sum_subsets"] = report.extra_zero_sum_subsets;
  }
  if (!report.note.empty()) doc["note"] = report.note;
  if (!report.size_class.empty()) doc["label"] = report.size_class;
  return doc;
}

designs::Design design_from_json(const Json& doc) {
  const auto v = field<std::uint32_t>(doc, "v");
  auto blocks = field<std::vector<designs::Block>>(doc, "blocks");
  std::vector<std::string> labels;
  if (doc.contains("points")) labels = field<std::vector<std::string>>(doc, "points");
  auto design = designs::validate_2design(designs::make_design(v, std::move(blocks), std::move(labels)));
  if (doc.contains("k") && !doc.at("k").is_null() && field<std::uint64_t>(doc, "k") != design.params->k) {
    throw Error(ErrorCode::ParseError, "\"k\" disagrees with the blocks");
  }
  if (doc.contains("lambda") && !doc.at("lambda").is_null() &&
      field<std::uint64_t>(doc, "lambda") != design.params->lambda) {
    throw Error(ErrorCode::ParseError, "\"lambda\" disagrees with the blocks");
  }
  return design;
}

designs::DifferenceSet diffset_from_json(const Json& doc) {
  return designs::validate_difference_set(field<std::uint32_t>(doc, "v"),
                                          field<std::vector<std::uint32_t>>(doc, "set"));
}

additivity::Embedding embedding_from_json(const Json& doc) {
  additivity::Embedding emb;
  const auto group = field<Json>(doc, "group");
  emb.group.modulus = field<std::uint32_t>(group, "m");
  emb.group.rank = field<std::uint32_t>(group, "t");
  if (emb.group.modulus < 2 || emb.group.rank < 1) throw Error(ErrorCode::ParseError, "group needs m >= 2, t >= 1");
  emb.kind = additivity::parse_kind(field<std::string>(doc, "kind"));
  emb.image = field<std::vector<additivity::GroupElement>>(doc, "image");
  if (doc.contains("meta")) emb.meta = doc.at("meta");
  return emb;
}

bool is_diffset_document(const Json& doc) { return doc.is_object() && doc.contains("set") && !doc.contains("blocks"); }

std::string render(const Json& doc) { return doc.dump() + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace addesign::io
