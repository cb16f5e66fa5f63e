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

#ifndef COLORPROJ_COMPLEX_H
#define COLORPROJ_COMPLEX_H

#include <cstddef>
#include <vector>

#include "colorproj/gf2.h"

namespace colorproj {

/// A 2-complex C2 -> C1 -> C0 over GF(2).
///
/// `d2` has one row per basis element of C2 listing its boundary in C1;
/// `d1` has one row per basis element of C1 listing its boundary in C0.
class TwoComplex {
   public:
    TwoComplex() = default;
    TwoComplex(BinaryMatrix d2, BinaryMatrix d1);

    size_t dim2() const { return d2_.rows(); }
    size_t dim1() const { return d1_.rows(); }
    size_t dim0() const { return d1_.cols(); }
    const BinaryMatrix &d2() const { return d2_; }
    const BinaryMatrix &d1() const { return d1_; }

    bool operator==(const TwoComplex &other) const = default;

   private:
    BinaryMatrix d2_;
    BinaryMatrix d1_;
};

struct ValidationReport {
    /// Basis elements of C2 whose boundary has a nonzero boundary.
    std::vector<uint32_t> offending_faces;
    bool ok() const { return offending_faces.empty(); }
};

/// Checks d1 ∘ d2 = 0 on every basis element of C2.
ValidationReport validate(const TwoComplex &c);

/// The transposed complex C0 -> C1 -> C2, re-read as a 2-complex.
TwoComplex dual(const TwoComplex &c);

/// Binary CSS code with checks as rows and qubits as columns.
struct CssCode {
    size_t n = 0;
    size_t k = 0;
    BinaryMatrix hx;  // one row per C0 basis element; s_Z = hx * e_Z
    BinaryMatrix hz;  // one row per C2 basis element; the Z stabilizers
};

/// Throws std::invalid_argument if the complex does not validate.
CssCode css_from_complex(const TwoComplex &c);

/// Image of x ∈ C1 under the boundary map into C0.
BinaryChain syndrome(const TwoComplex &c, const BinaryChain &x);

/// True iff x ∈ im d2. Rebuilds the echelon form on every call.
bool is_stabilizer(const TwoComplex &c, const BinaryChain &x);

}  // namespace colorproj

#endif
