// Copyright 2026 The entverify Authors
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

#pragma once

#include "entverify/linalg.hpp"

namespace entverify {

/// Label (i, j) of the displacement operator X^i Z^j, both reduced mod d.
struct WeylIndex {
    int i = 0;
    int j = 0;

    /// Reduces arbitrary integers into [0, d).
    static WeylIndex reduced(long long i, long long j, int d);
    friend bool operator==(const WeylIndex &, const WeylIndex &) = default;
};

/// Shift X = sum |j+1><j| (indices mod d).
Matrix shift_operator(int d);
/// Clock Z = sum w^j |j><j| with w = exp(2 pi i / d).
Matrix clock_operator(int d);

/// W(i, j) = X^i Z^j. Throws if the index is outside [0, d).
Matrix weyl(int d, WeylIndex idx);

/// W(i, j) v without forming the matrix.
Vector apply_weyl(int d, WeylIndex idx, const Vector &v);

}  // namespace entverify
