// src/base/error.cc

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

#include "cstk/base/error.h"

namespace cstk {

std::string_view ErrorName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedTag: return "MalformedTag";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kOutOfVocabulary: return "OutOfVocabulary";
    case ErrorKind::kInvalidVocabulary: return "InvalidVocabulary";
    case ErrorKind::kBadMagic: return "BadMagic";
    case ErrorKind::kTruncatedFile: return "TruncatedFile";
    case ErrorKind::kVocabMismatch: return "VocabMismatch";
    case ErrorKind::kInvalidPosteriorgram: return "InvalidPosteriorgram";
    case ErrorKind::kManifestSyntax: return "ManifestSyntax";
    case ErrorKind::kDuplicateId: return "DuplicateId";
    case ErrorKind::kEmptyAudio: return "EmptyAudio";
    case ErrorKind::kBadAudio: return "BadAudio";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kArpaSyntax: return "ArpaSyntax";
    case ErrorKind::kCountMismatch: return "CountMismatch";
    case ErrorKind::kBlankInTarget: return "BlankInTarget";
    case ErrorKind::kVocabOverflow: return "VocabOverflow";
    case ErrorKind::kNoSpaceSymbol: return "NoSpaceSymbol";
    case ErrorKind::kFrameCountMismatch: return "FrameCountMismatch";
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kDiverged: return "Diverged";
    case ErrorKind::kEmptyReferenceCorpus: return "EmptyReferenceCorpus";
    case ErrorKind::kIncompleteJudgments: return "IncompleteJudgments";
    case ErrorKind::kTranscriberFailure: return "TranscriberFailure";
    case ErrorKind::kTooFewEvaluators: return "TooFewEvaluators";
    case ErrorKind::kUnknownEvaluator: return "UnknownEvaluator";
    case ErrorKind::kNotAssigned: return "NotAssigned";
    case ErrorKind::kAlreadyJudged: return "AlreadyJudged";
    case ErrorKind::kIoError: return "IoError";
    case ErrorKind::kIdMismatch: return "IdMismatch";
  }
  return "Unknown";
}

}  // namespace cstk
