// include/cstk/metrics/judgments.h

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

#ifndef CSTK_METRICS_JUDGMENTS_H_
#define CSTK_METRICS_JUDGMENTS_H_

#include <string>
#include <vector>

namespace cstk {

struct Judgment {
  std::string item_id;
  std::string evaluator_id;
  bool accept = false;
  std::string timestamp;  // ISO 8601, UTC
};

/// Percentage of items not accepted by both of their two evaluators.
/// Throws IncompleteJudgments, naming the items, unless every item has
/// exactly two judgments from distinct evaluators. Judgments on items outside
/// `items` are ignored. Throws EmptyCorpus when `items` is empty.
double HumanSentenceErrorRate(const std::vector<Judgment> &judgments,
                              const std::vector<std::string> &items);

/// Percentage of items whose two verdicts match. Same preconditions.
double Agreement(const std::vector<Judgment> &judgments, const std::vector<std::string> &items);

}  // namespace cstk

#endif  // CSTK_METRICS_JUDGMENTS_H_
