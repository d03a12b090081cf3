// src/evalsvc/eval-service.cc

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

#include "cstk/evalsvc/eval-service.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <utility>

#include "json.hpp"
#include "spdlog/spdlog.h"

#include "cstk/base/error.h"
#include "cstk/base/file-util.h"

namespace cstk {

namespace fs = std::filesystem;

namespace {

constexpr const char *kCampaignFile = "campaign.json";
constexpr const char *kJournalFile = "journal.jsonl";

void WriteAll(int fd, std::string_view data, const fs::path &path) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorKind::kIoError,
                  "cannot append to " + path.string() + ": " + std::strerror(errno));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
  if (::fsync(fd) != 0)
    throw Error(ErrorKind::kIoError, "cannot sync " + path.string() + ": " + std::strerror(errno));
}

}  // namespace

struct EvalService::State {
  // (item index, evaluator) -> verdict
  std::map<std::pair<std::size_t, std::string>, bool> verdicts;
  std::vector<Judgment> journal;
};

std::string UtcTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string SerializeJudgment(const Judgment &j) {
  const nlohmann::json doc = {{"item_id", j.item_id},
                              {"evaluator_id", j.evaluator_id},
                              {"accept", j.accept},
                              {"timestamp", j.timestamp}};
  return doc.dump();
}

Judgment ParseJudgment(std::string_view line) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(line);
    Judgment j;
    j.item_id = doc.at("item_id").get<std::string>();
    j.evaluator_id = doc.at("evaluator_id").get<std::string>();
    j.accept = doc.at("accept").get<bool>();
    if (doc.contains("timestamp")) j.timestamp = doc.at("timestamp").get<std::string>();
    return j;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorKind::kInvalidConfig, std::string("bad judgment record: ") + e.what());
  }
}

std::string CampaignReport::ToJson() const {
  nlohmann::json evals = nlohmann::json::object();
  for (const auto &[id, p] : evaluators)
    evals[id] = {{"assigned", p.assigned}, {"judged", p.judged}};
  nlohmann::json doc = {{"total_items", total_items},
                        {"completed_items", completed_items},
                        {"pending_items", pending_items},
                        {"human_ser", nullptr},
                        {"agreement", nullptr},
                        {"evaluators", evals}};
  if (human_ser) doc["human_ser"] = *human_ser;
  if (agreement) doc["agreement"] = *agreement;
  return doc.dump();
}

EvalService::EvalService(fs::path dir, EvalCampaign campaign, Clock clock)
    : dir_(std::move(dir)),
      campaign_(std::move(campaign)),
      clock_(clock ? std::move(clock) : Clock(UtcTimestamp)),
      state_(std::make_shared<State>()) {
  for (std::size_t i = 0; i < campaign_.items.size(); ++i) {
    item_index_[campaign_.items[i].id] = i;
    for (const std::string &ev : campaign_.assignment[i]) evaluator_items_[ev].push_back(i);
  }
  for (const std::string &ev : campaign_.evaluators) evaluator_items_[ev];
}

EvalService::~EvalService() {
  if (journal_fd_ >= 0) ::close(journal_fd_);
}

void EvalService::OpenJournal() {
  const fs::path path = dir_ / kJournalFile;
  journal_fd_ = ::open(path.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (journal_fd_ < 0)
    throw Error(ErrorKind::kIoError, "cannot open " + path.string() + ": " + std::strerror(errno));
}

std::unique_ptr<EvalService> EvalService::Create(const fs::path &dir, const EvalCampaign &campaign,
                                                 Clock clock) {
  ValidateCampaign(campaign);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kIoError, "cannot create " + dir.string() + ": " + ec.message());
  if (fs::exists(dir / kCampaignFile))
    throw Error(ErrorKind::kIoError, (dir / kCampaignFile).string() + " already exists");
  const fs::path tmp = dir / (std::string(kCampaignFile) + ".tmp");
  WriteFile(tmp, SerializeCampaign(campaign));
  fs::rename(tmp, dir / kCampaignFile);
  WriteFile(dir / kJournalFile, "");
  std::unique_ptr<EvalService> svc(new EvalService(dir, campaign, std::move(clock)));
  svc->OpenJournal();
  return svc;
}

std::unique_ptr<EvalService> EvalService::Open(const fs::path &dir, Clock clock) {
  EvalCampaign campaign = ParseCampaign(ReadFile(dir / kCampaignFile));
  std::unique_ptr<EvalService> svc(new EvalService(dir, std::move(campaign), std::move(clock)));
  const fs::path path = dir / kJournalFile;
  std::string text = fs::exists(path) ? ReadFile(path) : std::string();
  const std::size_t complete = text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1;
  if (complete < text.size()) {
    spdlog::warn("discarding {} bytes of an interrupted journal write in {}",
                 text.size() - complete, path.string());
    text.resize(complete);
    fs::resize_file(path, complete);
  }
  auto state = std::make_shared<State>();
  std::size_t line_number = 0;
  for (const std::string &line : SplitLines(text)) {
    ++line_number;
    if (line.empty()) continue;
    Judgment j;
    try {
      j = ParseJudgment(line);
      if (!svc->Check(*state, j)) continue;
    } catch (const Error &e) {
      throw Error(e.kind(), path.string() + " line " + std::to_string(line_number) + ": " +
                                e.what());
    }
    state->verdicts[{svc->item_index_.at(j.item_id), j.evaluator_id}] = j.accept;
    state->journal.push_back(std::move(j));
  }
  svc->state_ = std::move(state);
  svc->OpenJournal();
  return svc;
}

std::shared_ptr<const EvalService::State> EvalService::Snapshot() const {
  std::shared_lock lock(snapshot_mutex_);
  return state_;
}

bool EvalService::Check(const State &state, const Judgment &j) const {
  if (!evaluator_items_.count(j.evaluator_id))
    throw Error(ErrorKind::kUnknownEvaluator, "'" + j.evaluator_id + "'");
  auto it = item_index_.find(j.item_id);
  if (it == item_index_.end())
    throw Error(ErrorKind::kNotAssigned, "unknown item '" + j.item_id + "'");
  const auto &pair = campaign_.assignment[it->second];
  if (pair[0] != j.evaluator_id && pair[1] != j.evaluator_id)
    throw Error(ErrorKind::kNotAssigned,
                "item '" + j.item_id + "' is not assigned to '" + j.evaluator_id + "'");
  auto prev = state.verdicts.find({it->second, j.evaluator_id});
  if (prev == state.verdicts.end()) return true;
  if (prev->second != j.accept)
    throw Error(ErrorKind::kAlreadyJudged,
                "'" + j.evaluator_id + "' already judged item '" + j.item_id + "'");
  return false;
}

std::optional<EvalItem> EvalService::NextItem(const std::string &evaluator) const {
  auto it = evaluator_items_.find(evaluator);
  if (it == evaluator_items_.end())
    throw Error(ErrorKind::kUnknownEvaluator, "'" + evaluator + "'");
  const auto state = Snapshot();
  for (std::size_t i : it->second)
    if (!state->verdicts.count({i, evaluator})) return campaign_.items[i];
  return std::nullopt;
}

SubmitOutcome EvalService::Submit(Judgment judgment) {
  std::lock_guard write_lock(write_mutex_);
  const auto current = Snapshot();
  if (!Check(*current, judgment)) return SubmitOutcome::kDuplicate;
  if (judgment.timestamp.empty()) judgment.timestamp = clock_();
  WriteAll(journal_fd_, SerializeJudgment(judgment) + "\n", dir_ / kJournalFile);
  auto next = std::make_shared<State>(*current);
  next->verdicts[{item_index_.at(judgment.item_id), judgment.evaluator_id}] = judgment.accept;
  next->journal.push_back(std::move(judgment));
  std::unique_lock lock(snapshot_mutex_);
  state_ = std::move(next);
  return SubmitOutcome::kRecorded;
}

EvaluatorProgress EvalService::Progress(const std::string &evaluator) const {
  auto it = evaluator_items_.find(evaluator);
  if (it == evaluator_items_.end())
    throw Error(ErrorKind::kUnknownEvaluator, "'" + evaluator + "'");
  const auto state = Snapshot();
  EvaluatorProgress p;
  p.assigned = it->second.size();
  for (std::size_t i : it->second) p.judged += state->verdicts.count({i, evaluator});
  return p;
}

CampaignReport EvalService::Report() const {
  const auto state = Snapshot();
  CampaignReport r;
  r.total_items = campaign_.items.size();
  std::vector<Judgment> judgments;
  std::vector<std::string> completed;
  for (std::size_t i = 0; i < campaign_.items.size(); ++i) {
    const std::string &id = campaign_.items[i].id;
    std::vector<Judgment> pair;
    for (const std::string &ev : campaign_.assignment[i]) {
      auto v = state->verdicts.find({i, ev});
      if (v != state->verdicts.end()) pair.push_back({id, ev, v->second, ""});
    }
    if (pair.size() == 2) {
      completed.push_back(id);
      judgments.insert(judgments.end(), pair.begin(), pair.end());
    } else {
      r.pending_items.push_back(id);
    }
  }
  r.completed_items = completed.size();
  if (!completed.empty()) {
    r.human_ser = HumanSentenceErrorRate(judgments, completed);
    r.agreement = Agreement(judgments, completed);
  }
  for (const std::string &ev : campaign_.evaluators) {
    EvaluatorProgress &p = r.evaluators[ev];
    const auto &mine = evaluator_items_.at(ev);
    p.assigned = mine.size();
    for (std::size_t i : mine) p.judged += state->verdicts.count({i, ev});
  }
  return r;
}

const EvalItem *EvalService::FindItem(const std::string &item_id) const {
  auto it = item_index_.find(item_id);
  return it == item_index_.end() ? nullptr : &campaign_.items[it->second];
}

std::vector<Judgment> EvalService::Journal() const { return Snapshot()->journal; }

}  // namespace cstk
