#pragma once

// Traces of the dihedral group D_h realized in GL_2 over a finite field.

#include <array>
#include <cstddef>
#include <vector>

#include "dihedra/finite_field.hpp"

namespace dihedra {

struct TraceSet {
    u64 h = 0;
    u64 p = 0;
    unsigned m = 0; ///< degree of the ambient field F_{p^m}
    FieldPtr ctx;
    /// x^i + x^-i for 0 <= i <= h/2, in that order; floor(h/2) + 1 values.
    std::vector<FieldElement> rotation_traces;
    /// rotation traces together with 0 from the reflections, sorted, deduplicated.
    std::vector<FieldElement> traces;
};

/// Throws std::invalid_argument if gcd(h, p) != 1 or p is not prime.
TraceSet dihedral_trace_set(u64 h, u64 p);

/// True iff every trace t satisfies t^(p^s) = t.
bool traces_all_in_subfield(const TraceSet &ts, unsigned s);

/// Degree over F_p of the field generated by all traces (smallest s | m
/// that works).
unsigned trace_field_degree(const TraceSet &ts);

using Matrix2 = std::array<FieldElement, 4>; ///< row-major

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b);

/// Elements of the group generated by the swap matrix and diag(x, x^-1) for
/// an element x of exact order h. Closure by breadth-first multiplication.
std::vector<Matrix2> dihedral_matrix_group(u64 h, u64 p);

} // namespace dihedra
