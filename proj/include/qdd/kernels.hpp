#pragma once
#include <vector>

#include "qdd/field.hpp"

namespace qdd {

// Raw-buffer kernels. Buffers are row-major with m consecutive int64 limbs
// per entry, every limb reduced to [0, p). Outputs never alias inputs.
//
// kernels::* is the production path: delayed modular reduction plus OpenMP
// over rows once the problem crosses a size threshold. ref::* is the serial
// textbook implementation kept as the correctness reference; the two must
// agree bit for bit on every input.

namespace kernels {

// C (ra x cb) = A (ra x ca) * B (ca x cb)
void matmul(const FieldCtx& F, const i64* A, const i64* B, i64* C,
            int ra, int ca, int cb);

// in-place row echelon form (Gauss-Jordan when reduced = true) with
// first-nonzero pivoting; returns the pivot column indices in order
std::vector<int> row_reduce(const FieldCtx& F, i64* data, int rows, int cols,
                            bool reduced);

}  // namespace kernels

namespace ref {

void matmul(const FieldCtx& F, const i64* A, const i64* B, i64* C,
            int ra, int ca, int cb);

std::vector<int> row_reduce(const FieldCtx& F, i64* data, int rows, int cols,
                            bool reduced);

}  // namespace ref

}  // namespace qdd
