// include/cstk/evalsvc/campaign.h

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

#ifndef CSTK_EVALSVC_CAMPAIGN_H_
#define CSTK_EVALSVC_CAMPAIGN_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cstk {

struct EvalItem {
  std::string id;
  std::string audio_path;  // empty when the item has no audio
  std::string transcript;

  friend bool operator==(const EvalItem &, const EvalItem &) = default;
};

/// Immutable description of a human evaluation campaign. `assignment[i]`
/// holds the two distinct evaluators of `items[i]`.
struct EvalCampaign {
  std::vector<EvalItem> items;
  std::vector<std::string> evaluators;
  std::uint64_t seed = 0;
  std::vector<std::array<std::string, 2>> assignment;

  friend bool operator==(const EvalCampaign &, const EvalCampaign &) = default;
};

/// Shuffles the evaluators with `seed`, then walks the shuffled list
/// cyclically, two slots per item: item i goes to positions 2i mod E and
/// 2i+1 mod E. Every evaluator receives floor or ceil of 2N/E items.
/// Throws TooFewEvaluators (fewer than 2), EmptyCorpus (no items) and
/// DuplicateId (repeated item or evaluator id).
EvalCampaign CreateCampaign(std::vector<EvalItem> items, std::vector<std::string> evaluators,
                            std::uint64_t seed);

/// Checks the assignment invariants; throws InvalidConfig on violation.
void ValidateCampaign(const EvalCampaign &campaign);

/// JSON with sorted keys, terminated by a newline.
std::string SerializeCampaign(const EvalCampaign &campaign);
EvalCampaign ParseCampaign(std::string_view text);

}  // namespace cstk

#endif  // CSTK_EVALSVC_CAMPAIGN_H_
