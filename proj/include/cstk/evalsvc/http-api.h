// include/cstk/evalsvc/http-api.h

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

#ifndef CSTK_EVALSVC_HTTP_API_H_
#define CSTK_EVALSVC_HTTP_API_H_

#include <string>

#include "cstk/evalsvc/eval-service.h"

namespace httplib {
class Server;
}

namespace cstk {

/// Installs the JSON endpoints:
///   GET  /api/next?evaluator=<id>      item payload or {"done":true}
///   GET  /api/audio/<item_id>          audio bytes, range requests honored
///   POST /api/judgment                 {"item_id","evaluator_id","accept"} -> {"ok":true}
///   GET  /api/report                   report payload
///   GET  /api/progress?evaluator=<id>  {"judged","assigned"}
/// Domain errors answer {"error":<kind>,"message":..} with status 400
/// (bad request), 403 (NotAssigned), 404 (UnknownEvaluator, unknown item)
/// or 409 (AlreadyJudged).
void InstallRoutes(httplib::Server *server, EvalService *service);

/// Serves until the process is stopped. Throws IoError if the port cannot be
/// bound.
void ServeCampaign(EvalService *service, const std::string &host, int port);

}  // namespace cstk

#endif  // CSTK_EVALSVC_HTTP_API_H_
