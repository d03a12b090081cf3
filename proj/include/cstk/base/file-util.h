// include/cstk/base/file-util.h

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

#ifndef CSTK_BASE_FILE_UTIL_H_
#define CSTK_BASE_FILE_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cstk {

// All throw IoError with the path on failure.
std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, std::string_view contents);

// Lines without their terminators; a final empty line (trailing newline) is
// not returned.
std::vector<std::string> ReadLines(const std::filesystem::path &path);
std::vector<std::string> SplitLines(std::string_view text);

}  // namespace cstk

#endif  // CSTK_BASE_FILE_UTIL_H_
