// Copyright 2026 The hyperent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERENT_ERROR_H
#define HYPERENT_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperent {

/// Failure cases raised by the library. The names are stable and printed by
/// the command-line tool.
enum class ErrorCode {
    DuplicateEdge,
    VertexOutOfRange,
    SameVertex,
    VertexCountMismatch,
    TooManyVertices,
    TooFewQubits,
    RankTooHigh,
    TableMiss,
    ClosedFormUnavailable,
    NoConvergence,
    NotAGraph,
    InvalidArgument,
    ParseError,
    VerificationMismatch,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Error raised while reading the hypergraph text format; carries the 1-based
/// line number of the offending line (0 when the file is empty).
class ParseFailure : public Error {
   public:
    ParseFailure(ErrorCode code, std::size_t line, const std::string &message);

    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace hyperent

#endif
