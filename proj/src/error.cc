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

#include "hyperent/error.h"

namespace hyperent {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateEdge:
            return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange:
            return "VertexOutOfRange";
        case ErrorCode::SameVertex:
            return "SameVertex";
        case ErrorCode::VertexCountMismatch:
            return "VertexCountMismatch";
        case ErrorCode::TooManyVertices:
            return "TooManyVertices";
        case ErrorCode::TooFewQubits:
            return "TooFewQubits";
        case ErrorCode::RankTooHigh:
            return "RankTooHigh";
        case ErrorCode::TableMiss:
            return "TableMiss";
        case ErrorCode::ClosedFormUnavailable:
            return "ClosedFormUnavailable";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::NotAGraph:
            return "NotAGraph";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::VerificationMismatch:
            return "VerificationMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {
}

ParseFailure::ParseFailure(ErrorCode code, std::size_t line, const std::string &message)
    : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {
}

}  // namespace hyperent
