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

#include "entverify/weyl.hpp"

namespace entverify {

WeylIndex WeylIndex::reduced(long long i, long long j, int d) {
    auto mod = [d](long long v) { return static_cast<int>(((v % d) + d) % d); };
    return WeylIndex{mod(i), mod(j)};
}

Matrix shift_operator(int d) {
    Matrix x = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        x((j + 1) % d, j) = 1.0;
    }
    return x;
}

Matrix clock_operator(int d) {
    Matrix z = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        z(j, j) = root_of_unity(d, j);
    }
    return z;
}

Matrix weyl(int d, WeylIndex idx) {
    if (d < 1 || idx.i < 0 || idx.j < 0 || idx.i >= d || idx.j >= d) {
        throw Error("Weyl index out of range");
    }
    // (X^i Z^j)_{k, k-i} = w^{j (k - i)}.
    Matrix w = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m) {
        w((m + idx.i) % d, m) = root_of_unity(d, static_cast<long long>(idx.j) * m);
    }
    return w;
}

Vector apply_weyl(int d, WeylIndex idx, const Vector &v) {
    if (v.size() != d) {
        throw DimensionMismatch("vector dimension differs from d");
    }
    Vector out(d);
    for (int m = 0; m < d; ++m) {
        out((m + idx.i) % d) = root_of_unity(d, static_cast<long long>(idx.j) * m) * v(m);
    }
    return out;
}

}  // namespace entverify
