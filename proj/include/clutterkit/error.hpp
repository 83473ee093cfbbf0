// Copyright 2026 The clutterkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLUTTERKIT_ERROR_HPP
#define CLUTTERKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace clutterkit {

enum class ErrorKind {
  kAntichainViolation,
  kForeignElement,
  kDuplicateLabel,
  kInvalidLabel,
  kElementNotFound,
  kInvalidSpec,
  kVertexNotFound,
  kNotBlack,
  kNoTwin,
  kNotMinimal,
  kPreconditionViolation,
  kTheoremCounterexample,
  kTooLarge,
  kParseError,
  kNotAMatroid,
  kGroundOverlap,
  kBadRank,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kAntichainViolation: return "AntichainViolation";
    case ErrorKind::kForeignElement: return "ForeignElement";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kInvalidLabel: return "InvalidLabel";
    case ErrorKind::kElementNotFound: return "ElementNotFound";
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
    case ErrorKind::kVertexNotFound: return "VertexNotFound";
    case ErrorKind::kNotBlack: return "NotBlack";
    case ErrorKind::kNoTwin: return "NoTwin";
    case ErrorKind::kNotMinimal: return "NotMinimal";
    case ErrorKind::kPreconditionViolation: return "PreconditionViolation";
    case ErrorKind::kTheoremCounterexample: return "TheoremCounterexample";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kNotAMatroid: return "NotAMatroid";
    case ErrorKind::kGroundOverlap: return "GroundOverlap";
    case ErrorKind::kBadRank: return "BadRank";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to a status without parsing messages.
class ClutterError : public std::runtime_error {
 public:
  ClutterError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace clutterkit

#endif  // CLUTTERKIT_ERROR_HPP
