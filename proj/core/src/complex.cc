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

#include "colorproj/complex.h"

#include <stdexcept>

namespace colorproj {

TwoComplex::TwoComplex(BinaryMatrix d2, BinaryMatrix d1) : d2_(std::move(d2)), d1_(std::move(d1)) {
    if (d2_.cols() != d1_.rows()) {
        throw std::invalid_argument("d2 columns must equal d1 rows");
    }
}

ValidationReport validate(const TwoComplex &c) {
    ValidationReport report;
    std::vector<uint8_t> acc(c.dim0(), 0);
    for (size_t f = 0; f < c.dim2(); f++) {
        for (uint32_t e : c.d2().row(f)) {
            for (uint32_t v : c.d1().row(e)) {
                acc[v] ^= 1;
            }
        }
        bool bad = false;
        for (uint32_t e : c.d2().row(f)) {
            for (uint32_t v : c.d1().row(e)) {
                bad |= acc[v] != 0;
                acc[v] = 0;
            }
        }
        if (bad) {
            report.offending_faces.push_back(static_cast<uint32_t>(f));
        }
    }
    return report;
}

TwoComplex dual(const TwoComplex &c) {
    return TwoComplex(c.d1().transpose(), c.d2().transpose());
}

CssCode css_from_complex(const TwoComplex &c) {
    ValidationReport report = validate(c);
    if (!report.ok()) {
        throw std::invalid_argument(
            "complex does not satisfy d1 d2 = 0 (first offending face " + std::to_string(report.offending_faces[0]) +
            ")");
    }
    CssCode code;
    code.n = c.dim1();
    code.hx = c.d1().transpose();
    code.hz = c.d2();
    code.k = code.n - rank(code.hx) - rank(code.hz);
    return code;
}

BinaryChain syndrome(const TwoComplex &c, const BinaryChain &x) {
    return c.d1().combine_rows(x);
}

bool is_stabilizer(const TwoComplex &c, const BinaryChain &x) {
    return in_row_space(c.d2(), x);
}

}  // namespace colorproj
