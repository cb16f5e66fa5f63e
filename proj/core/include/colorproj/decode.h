// Copyright 2026 colorproj Contributors
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

#ifndef COLORPROJ_DECODE_H
#define COLORPROJ_DECODE_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "colorproj/color_code.h"
#include "colorproj/gf2.h"

namespace colorproj {

enum class DecodeStatus {
    kCorrected,
    kLogicalFailure,
    kHeraldedNoLifting,
};

const char *status_name(DecodeStatus s);

/// Raised when a decoder result breaks a property that holds for every
/// valid input, e.g. a lifted estimate with the wrong syndrome.
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

struct DecodeOutcome {
    /// kCorrected whenever an estimate was produced; judge() decides whether
    /// it is actually equivalent to the error.
    DecodeStatus status = DecodeStatus::kCorrected;
    std::optional<BinaryChain> estimate;
    std::array<BinaryChain, 3> surface_corrections;  // one per color, over subtiling edges
    std::array<int64_t, 3> per_color_weights = {0, 0, 0};
    BinaryChain combined_boundary;  // over the edges of gstar (and g)
    size_t combined_boundary_weight = 0;
};

/// Projects the syndrome onto the three subtilings, decodes each, then
/// recombines and lifts. Throws std::invalid_argument if a projected
/// syndrome has odd weight.
DecodeOutcome decode_color(const ColorCode &code, const BinaryChain &s);

/// The recombine-and-lift stage on its own, from caller-supplied surface
/// corrections.
DecodeOutcome lift_corrections(const ColorCode &code, const BinaryChain &s, std::array<BinaryChain, 3> corrections);

enum class Verdict { kSuccess, kFailure };

/// Success iff an estimate exists and differs from x by a stabilizer.
Verdict judge(const ColorCode &code, const BinaryChain &x, const DecodeOutcome &outcome);

/// The outcome's status after judging against the actual error.
DecodeStatus final_status(const ColorCode &code, const BinaryChain &x, const DecodeOutcome &outcome);

}  // namespace colorproj

#endif
