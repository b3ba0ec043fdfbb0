// Copyright 2026 The Hypergram Authors
//
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

#include "hypergram/errors.hpp"

namespace hypergram {

const char *err_name(Err code) {
    switch (code) {
        case Err::NonIdentityProduct:
            return "NonIdentityProduct";
        case Err::ImaginaryPhase:
            return "ImaginaryPhase";
        case Err::NonCommutingInput:
            return "NonCommutingInput";
        case Err::NotAssignable:
            return "NotAssignable";
        case Err::OddRank:
            return "OddRank";
        case Err::InvalidContext:
            return "InvalidContext";
        case Err::DuplicateObservable:
            return "DuplicateObservable";
        case Err::IdentityObservable:
            return "IdentityObservable";
        case Err::MissingValue:
            return "MissingValue";
        case Err::VertexSetMismatch:
            return "VertexSetMismatch";
        case Err::ThresholdExceeded:
            return "ThresholdExceeded";
        case Err::TooLarge:
            return "TooLarge";
    }
    return "Unknown";
}

DomainError::DomainError(Err code, const std::string &message)
    : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {
}

}  // namespace hypergram
