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

// JSON exchange documents:
//   design          {"v", "points", "blocks", "k", "lambda"}
//   difference set  {"v", "set"}
//   embedding       {"group": {"m", "t"}, "kind", "image", "meta"}
//   report          {"injective", "additive", "strong", "zero_sum_subsets", "blocks", "failures", ...}

#pragma once

#include <string>
#include <string_view>

#include "addesign/additivity.hpp"
#include "addesign/designs.hpp"

namespace addesign::io {

using Json = nlohmann::ordered_json;

Json to_json(const designs::Design& design);
Json to_json(const designs::DifferenceSet& ds);
Json to_json(const additivity::Embedding& emb);
Json to_json(const additivity::Report& report);

/// Validates the incidence structure and cross-checks "k"/"lambda" if present.
designs::Design design_from_json(const Json& doc);
/// Certifies the set.
designs::DifferenceSet diffset_from_json(const Json& doc);
additivity::Embedding embedding_from_json(const Json& doc);

bool is_diffset_document(const Json& doc);

/// Single-line rendering plus trailing newline; byte-stable across runs.
std::string render(const Json& doc);
Json parse(std::string_view text);

}  // namespace addesign::io
