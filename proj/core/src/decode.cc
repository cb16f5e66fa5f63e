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

#include "colorproj/decode.h"

#include <utility>

#include "colorproj/lift.h"
#include "colorproj/projection.h"

namespace colorproj {

const char *status_name(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::kCorrected:
            return "corrected";
        case DecodeStatus::kLogicalFailure:
            return "logical_failure";
        case DecodeStatus::kHeraldedNoLifting:
            return "heralded_no_lifting";
    }
    return "unknown";
}

DecodeOutcome decode_color(const ColorCode &code, const BinaryChain &s) {
    if (s.dimension() != code.hypergraph.num_vertices()) {
        throw std::invalid_argument("decode_color: syndrome dimension mismatch");
    }
    std::array<BinaryChain, 3> corrections;
    std::array<int64_t, 3> weights{};
    for (Color c : kColors) {
        auto i = static_cast<size_t>(c);
        BinaryChain projected = project_syndrome(code.projections[i], s);
        if (projected.weight() % 2 != 0) {
            throw std::invalid_argument("decode_color: invalid syndrome (odd projected defect count)");
        }
        SurfaceDecoding d = code.decoders[i].decode(projected);
        corrections[i] = std::move(d.correction);
        weights[i] = d.pairing.total_weight;
    }
    DecodeOutcome out = lift_corrections(code, s, std::move(corrections));
    out.per_color_weights = weights;
    return out;
}

DecodeOutcome lift_corrections(const ColorCode &code, const BinaryChain &s, std::array<BinaryChain, 3> corrections) {
    DecodeOutcome out;
    out.combined_boundary = recombine(code.projections, corrections);
    out.combined_boundary_weight = out.combined_boundary.weight();
    for (size_t i = 0; i < 3; i++) {
        out.per_color_weights[i] = static_cast<int64_t>(corrections[i].weight());
    }
    out.surface_corrections = std::move(corrections);

    // Edges of gstar and g share indices; vertices of g are the qubits.
    std::optional<BinaryChain> lifted = lift_boundary(code.g, out.combined_boundary);
    if (!lifted) {
        out.status = DecodeStatus::kHeraldedNoLifting;
        return out;
    }
    if (color_syndrome(code, *lifted) != s) {
        throw InvariantViolation("decode_color: lifted estimate does not reproduce the syndrome");
    }
    out.status = DecodeStatus::kCorrected;
    out.estimate = std::move(lifted);
    return out;
}

Verdict judge(const ColorCode &code, const BinaryChain &x, const DecodeOutcome &outcome) {
    if (x.dimension() != code.css.n) {
        throw std::invalid_argument("judge: error dimension mismatch");
    }
    if (!outcome.estimate) {
        return Verdict::kFailure;
    }
    return code.stabilizers.contains(x + *outcome.estimate) ? Verdict::kSuccess : Verdict::kFailure;
}

DecodeStatus final_status(const ColorCode &code, const BinaryChain &x, const DecodeOutcome &outcome) {
    if (!outcome.estimate) {
        return DecodeStatus::kHeraldedNoLifting;
    }
    return judge(code, x, outcome) == Verdict::kSuccess ? DecodeStatus::kCorrected : DecodeStatus::kLogicalFailure;
}

}  // namespace colorproj
