// include/cstk/base/error.h

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

#ifndef CSTK_BASE_ERROR_H_
#define CSTK_BASE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cstk {

/// Every domain failure the toolkit reports. The CLI prints ErrorName() so the
/// names are part of the user-facing contract.
enum class ErrorKind {
  kMalformedTag,
  kEmptyCorpus,
  kOutOfVocabulary,
  kInvalidVocabulary,
  kBadMagic,
  kTruncatedFile,
  kVocabMismatch,
  kInvalidPosteriorgram,
  kManifestSyntax,
  kDuplicateId,
  kEmptyAudio,
  kBadAudio,
  kInvalidConfig,
  kArpaSyntax,
  kCountMismatch,
  kBlankInTarget,
  kVocabOverflow,
  kNoSpaceSymbol,
  kFrameCountMismatch,
  kShapeMismatch,
  kDiverged,
  kEmptyReferenceCorpus,
  kIncompleteJudgments,
  kTranscriberFailure,
  kTooFewEvaluators,
  kUnknownEvaluator,
  kNotAssigned,
  kAlreadyJudged,
  kIoError,
  kIdMismatch,
};

std::string_view ErrorName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(ErrorName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cstk

#endif  // CSTK_BASE_ERROR_H_
