// src/evalsvc/campaign.cc

// Copyright 2026  The cstk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "cstk/evalsvc/campaign.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "json.hpp"

#include "cstk/base/error.h"

namespace cstk {

namespace {

void RequireUnique(const std::vector<std::string> &ids, const char *what) {
  std::set<std::string> seen;
  for (const std::string &id : ids) {
    if (id.empty()) throw Error(ErrorKind::kInvalidConfig, std::string("empty ") + what + " id");
    if (!seen.insert(id).second)
      throw Error(ErrorKind::kDuplicateId, std::string(what) + " id '" + id + "' repeated");
  }
}

std::vector<std::string> ItemIds(const std::vector<EvalItem> &items) {
  std::vector<std::string> ids;
  for (const EvalItem &item : items) ids.push_back(item.id);
  return ids;
}

}  // namespace

EvalCampaign CreateCampaign(std::vector<EvalItem> items, std::vector<std::string> evaluators,
                            std::uint64_t seed) {
  if (evaluators.size() < 2)
    throw Error(ErrorKind::kTooFewEvaluators,
                "need at least 2 evaluators, got " + std::to_string(evaluators.size()));
  if (items.empty()) throw Error(ErrorKind::kEmptyCorpus, "no items to evaluate");
  RequireUnique(ItemIds(items), "item");
  RequireUnique(evaluators, "evaluator");

  std::vector<std::string> order = evaluators;
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  EvalCampaign c;
  c.seed = seed;
  c.evaluators = std::move(evaluators);
  const std::size_t e = order.size();
  for (std::size_t i = 0; i < items.size(); ++i)
    c.assignment.push_back({order[(2 * i) % e], order[(2 * i + 1) % e]});
  c.items = std::move(items);
  return c;
}

void ValidateCampaign(const EvalCampaign &c) {
  if (c.evaluators.size() < 2)
    throw Error(ErrorKind::kTooFewEvaluators, "campaign has fewer than 2 evaluators");
  if (c.items.empty()) throw Error(ErrorKind::kEmptyCorpus, "campaign has no items");
  RequireUnique(ItemIds(c.items), "item");
  RequireUnique(c.evaluators, "evaluator");
  if (c.assignment.size() != c.items.size())
    throw Error(ErrorKind::kInvalidConfig, "assignment does not cover every item");
  const std::set<std::string> known(c.evaluators.begin(), c.evaluators.end());
  std::map<std::string, std::size_t> load;
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    const auto &pair = c.assignment[i];
    if (pair[0] == pair[1] || !known.count(pair[0]) || !known.count(pair[1]))
      throw Error(ErrorKind::kInvalidConfig,
                  "item '" + c.items[i].id + "' needs two distinct known evaluators");
    ++load[pair[0]];
    ++load[pair[1]];
  }
  const std::size_t lo = 2 * c.items.size() / c.evaluators.size();
  const std::size_t hi = lo + (2 * c.items.size() % c.evaluators.size() ? 1 : 0);
  for (const std::string &ev : c.evaluators) {
    const std::size_t n = load[ev];
    if (n < lo || n > hi)
      throw Error(ErrorKind::kInvalidConfig, "unbalanced load for evaluator '" + ev + "'");
  }
}

std::string SerializeCampaign(const EvalCampaign &c) {
  nlohmann::json items = nlohmann::json::array();
  for (std::size_t i = 0; i < c.items.size(); ++i) {
    items.push_back({{"id", c.items[i].id},
                     {"audio_path", c.items[i].audio_path},
                     {"transcript", c.items[i].transcript},
                     {"evaluators", c.assignment[i]}});
  }
  nlohmann::json doc = {{"version", 1},
                        {"seed", c.seed},
                        {"evaluators", c.evaluators},
                        {"items", items}};
  return doc.dump(1) + "\n";
}

EvalCampaign ParseCampaign(std::string_view text) {
  EvalCampaign c;
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.at("version").get<int>() != 1)
      throw Error(ErrorKind::kInvalidConfig, "unsupported campaign version");
    c.seed = doc.at("seed").get<std::uint64_t>();
    c.evaluators = doc.at("evaluators").get<std::vector<std::string>>();
    for (const nlohmann::json &item : doc.at("items")) {
      c.items.push_back({item.at("id").get<std::string>(),
                         item.at("audio_path").get<std::string>(),
                         item.at("transcript").get<std::string>()});
      c.assignment.push_back(item.at("evaluators").get<std::array<std::string, 2>>());
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::kInvalidConfig, std::string("bad campaign file: ") + e.what());
  }
  ValidateCampaign(c);
  return c;
}

}  // namespace cstk
