// include/cstk/evalsvc/eval-service.h

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

#ifndef CSTK_EVALSVC_EVAL_SERVICE_H_
#define CSTK_EVALSVC_EVAL_SERVICE_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cstk/evalsvc/campaign.h"
#include "cstk/metrics/judgments.h"

namespace cstk {

struct EvaluatorProgress {
  std::size_t judged = 0;
  std::size_t assigned = 0;

  friend bool operator==(const EvaluatorProgress &, const EvaluatorProgress &) = default;
};

struct CampaignReport {
  std::size_t total_items = 0;
  std::size_t completed_items = 0;
  std::vector<std::string> pending_items;  // campaign order
  std::optional<double> human_ser;         // percent, absent with no completed item
  std::optional<double> agreement;         // percent
  std::map<std::string, EvaluatorProgress> evaluators;

  /// JSON with sorted keys; absent metrics are null.
  std::string ToJson() const;
};

enum class SubmitOutcome { kRecorded, kDuplicate };

/// A campaign directory holds "campaign.json" (written once) and
/// "journal.jsonl" (one judgment per line, appended and fsync'ed before a
/// submission returns). Opening replays the journal; a trailing line without
/// its newline is the remains of an interrupted write and is cut off.
class EvalService {
 public:
  using Clock = std::function<std::string()>;

  /// Writes a new campaign directory. Throws IoError if it already holds a
  /// campaign.
  static std::unique_ptr<EvalService> Create(const std::filesystem::path &dir,
                                             const EvalCampaign &campaign, Clock clock = {});
  static std::unique_ptr<EvalService> Open(const std::filesystem::path &dir, Clock clock = {});

  ~EvalService();
  EvalService(const EvalService &) = delete;
  EvalService &operator=(const EvalService &) = delete;

  const EvalCampaign &campaign() const { return campaign_; }
  const std::filesystem::path &dir() const { return dir_; }

  /// First assigned and unjudged item of `evaluator` in campaign order, or
  /// nullopt when done. Throws UnknownEvaluator.
  std::optional<EvalItem> NextItem(const std::string &evaluator) const;

  /// Records `judgment`; an empty timestamp is filled from the clock. An
  /// identical verdict on an already judged pair is a no-op. Throws
  /// UnknownEvaluator, NotAssigned and AlreadyJudged (conflicting verdict).
  SubmitOutcome Submit(Judgment judgment);

  /// Throws UnknownEvaluator.
  EvaluatorProgress Progress(const std::string &evaluator) const;

  CampaignReport Report() const;

  /// Item lookup by id; nullptr when absent.
  const EvalItem *FindItem(const std::string &item_id) const;

  /// Recorded judgments in journal order.
  std::vector<Judgment> Journal() const;

 private:
  struct State;

  EvalService(std::filesystem::path dir, EvalCampaign campaign, Clock clock);
  std::shared_ptr<const State> Snapshot() const;
  // Validates against `state`; returns true if the judgment is new.
  bool Check(const State &state, const Judgment &j) const;
  void OpenJournal();

  std::filesystem::path dir_;
  EvalCampaign campaign_;
  Clock clock_;
  std::map<std::string, std::size_t> item_index_;
  std::map<std::string, std::vector<std::size_t>> evaluator_items_;
  mutable std::shared_mutex snapshot_mutex_;
  std::shared_ptr<const State> state_;
  std::mutex write_mutex_;
  int journal_fd_ = -1;
};

std::string SerializeJudgment(const Judgment &j);
Judgment ParseJudgment(std::string_view line);

/// Current UTC time as ISO 8601 with seconds.
std::string UtcTimestamp();

}  // namespace cstk

#endif  // CSTK_EVALSVC_EVAL_SERVICE_H_
