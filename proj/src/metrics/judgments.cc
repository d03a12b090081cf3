// src/metrics/judgments.cc

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

#include "cstk/metrics/judgments.h"

#include <map>
#include <set>
#include <utility>

#include "cstk/base/error.h"
#include "cstk/base/utf8.h"

namespace cstk {

namespace {

// The two verdicts of every item, in input order.
std::vector<std::pair<bool, bool>> Pairs(const std::vector<Judgment> &judgments,
                                         const std::vector<std::string> &items) {
  if (items.empty()) throw Error(ErrorKind::kEmptyCorpus, "no items");
  std::map<std::string, std::vector<const Judgment *>> by_item;
  for (const std::string &id : items) by_item[id];
  for (const Judgment &j : judgments) {
    auto it = by_item.find(j.item_id);
    if (it != by_item.end()) it->second.push_back(&j);
  }
  std::vector<std::string> bad;
  std::vector<std::pair<bool, bool>> out;
  for (const std::string &id : items) {
    const auto &js = by_item.at(id);
    if (js.size() != 2 || js[0]->evaluator_id == js[1]->evaluator_id) {
      bad.push_back(id);
      continue;
    }
    out.emplace_back(js[0]->accept, js[1]->accept);
  }
  if (!bad.empty())
    throw Error(ErrorKind::kIncompleteJudgments,
                "items without two distinct judgments: " + JoinStrings(bad, ", "));
  return out;
}

}  // namespace

double HumanSentenceErrorRate(const std::vector<Judgment> &judgments,
                              const std::vector<std::string> &items) {
  const auto pairs = Pairs(judgments, items);
  std::size_t correct = 0;
  for (const auto &[a, b] : pairs)
    if (a && b) ++correct;
  return 100.0 * (1.0 - static_cast<double>(correct) / static_cast<double>(pairs.size()));
}

double Agreement(const std::vector<Judgment> &judgments, const std::vector<std::string> &items) {
  const auto pairs = Pairs(judgments, items);
  std::size_t same = 0;
  for (const auto &[a, b] : pairs)
    if (a == b) ++same;
  return 100.0 * static_cast<double>(same) / static_cast<double>(pairs.size());
}

}  // namespace cstk
