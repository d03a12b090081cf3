// src/evalsvc/http-api.cc

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

#include "cstk/evalsvc/http-api.h"

#include "httplib.h"
#include "json.hpp"
#include "spdlog/spdlog.h"

#include "cstk/base/error.h"
#include "cstk/base/file-util.h"

namespace cstk {

namespace {

constexpr const char *kJson = "application/json";

int StatusFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownEvaluator: return 404;
    case ErrorKind::kNotAssigned: return 403;
    case ErrorKind::kAlreadyJudged: return 409;
    case ErrorKind::kIoError: return 500;
    default: return 400;
  }
}

void SendError(httplib::Response &res, int status, std::string_view kind, const std::string &msg) {
  res.status = status;
  res.set_content(nlohmann::json{{"error", kind}, {"message", msg}}.dump(), kJson);
}

void SendJson(httplib::Response &res, const nlohmann::json &doc) {
  res.status = 200;
  res.set_content(doc.dump(), kJson);
}

std::string EvaluatorParam(const httplib::Request &req) {
  if (!req.has_param("evaluator"))
    throw Error(ErrorKind::kInvalidConfig, "missing 'evaluator' query parameter");
  return req.get_param_value("evaluator");
}

// Runs `body`, mapping library errors to JSON error responses.
template <typename F>
httplib::Server::Handler Guarded(F body) {
  return [body](const httplib::Request &req, httplib::Response &res) {
    try {
      body(req, res);
    } catch (const Error &e) {
      SendError(res, StatusFor(e.kind()), ErrorName(e.kind()), e.what());
    }
  };
}

std::string AudioContentType(const std::string &path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".wav") == 0) return "audio/wav";
  return "application/octet-stream";
}

}  // namespace

void InstallRoutes(httplib::Server *server, EvalService *service) {
  server->Get("/api/next", Guarded([service](const httplib::Request &req, httplib::Response &res) {
                const std::optional<EvalItem> item = service->NextItem(EvaluatorParam(req));
                if (!item) return SendJson(res, {{"done", true}});
                SendJson(res, {{"done", false},
                               {"item_id", item->id},
                               {"audio", "/api/audio/" + item->id},
                               {"transcript", item->transcript}});
              }));

  server->Get(R"(/api/audio/(.+))",
              Guarded([service](const httplib::Request &req, httplib::Response &res) {
                const std::string id = req.matches[1];
                const EvalItem *item = service->FindItem(id);
                if (!item) return SendError(res, 404, "NotFound", "no item '" + id + "'");
                if (item->audio_path.empty())
                  return SendError(res, 404, "NotFound", "item '" + id + "' has no audio");
                res.set_header("Accept-Ranges", "bytes");
                res.set_content(ReadFile(item->audio_path), AudioContentType(item->audio_path));
              }));

  server->Post("/api/judgment",
               Guarded([service](const httplib::Request &req, httplib::Response &res) {
                 Judgment j;
                 try {
                   const nlohmann::json body = nlohmann::json::parse(req.body);
                   j.item_id = body.at("item_id").get<std::string>();
                   j.evaluator_id = body.at("evaluator_id").get<std::string>();
                   j.accept = body.at("accept").get<bool>();
                 } catch (const nlohmann::json::exception &e) {
                   return SendError(res, 400, "BadRequest", e.what());
                 }
                 const SubmitOutcome outcome = service->Submit(std::move(j));
                 SendJson(res, {{"ok", true}, {"duplicate", outcome == SubmitOutcome::kDuplicate}});
               }));

  server->Get("/api/report", Guarded([service](const httplib::Request &, httplib::Response &res) {
                res.status = 200;
                res.set_content(service->Report().ToJson(), kJson);
              }));

  server->Get("/api/progress",
              Guarded([service](const httplib::Request &req, httplib::Response &res) {
                const EvaluatorProgress p = service->Progress(EvaluatorParam(req));
                SendJson(res, {{"judged", p.judged}, {"assigned", p.assigned}});
              }));
}

void ServeCampaign(EvalService *service, const std::string &host, int port) {
  httplib::Server server;
  InstallRoutes(&server, service);
  spdlog::info("serving {} on {}:{}", service->dir().string(), host, port);
  if (!server.listen(host, port))
    throw Error(ErrorKind::kIoError, "cannot listen on " + host + ":" + std::to_string(port));
}

}  // namespace cstk
