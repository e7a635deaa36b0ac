#pragma once

#include "ilcp/interval.hpp"
#include "ilcp/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ilcp {

enum class MatrixClass { Z, M, HPlus, P, NotInClass };

std::string matrix_class_name(MatrixClass c);

/// Certificate of class membership or of its failure. A positive M/H+
/// certificate carries a vector u > 0 with Au > 0 (comparison-matrix u for
/// H+); a P failure names a principal minor with det <= 0 and, for interval
/// tests, the vertex matrix where it fails; a Z failure names the entry.
struct ClassCertificate {
    MatrixClass kind = MatrixClass::NotInClass;
    std::optional<RatVec> witness;
    std::optional<std::vector<int>> bad_minor;            // 0-based index set
    std::optional<Rational> bad_minor_value;
    std::optional<std::pair<int, int>> bad_entry;          // 0-based (i, j)
    std::optional<RatMat> bad_vertex;                      // failing corner of the box
    std::string note;

    bool in_class() const { return kind != MatrixClass::NotInClass; }
};

bool is_z_matrix(const RatMat& A);

/// Witness search order: u = (1,...,1) first, then the exact solution of
/// Au = (1,...,1). A positive certificate is cross-checked against
/// A^{-1} >= 0 computed exactly.
ClassCertificate is_m_matrix(const RatMat& A);

/// Every member of the box is an M-matrix iff every member is a Z-matrix
/// (upper off-diagonal corners <= 0) and the lower corner is an M-matrix;
/// the returned certificate is the lower corner's.
ClassCertificate interval_is_m(const IntervalMatrix& A);

RatMat comparison_matrix(const RatMat& A);

/// Positive diagonal lower bounds plus an M-certificate for the entrywise
/// worst comparison matrix (diagonal a_ii lower bounds, off-diagonal
/// -max(|lo|,|hi|)).
ClassCertificate interval_is_hplus(const IntervalMatrix& A);

ClassCertificate is_p_matrix(const RatMat& A);

/// Exhaustive vertex sweep of the box (2^(n^2) corners, n <= 4): every
/// principal minor of every corner must be positive. Minors are multilinear
/// in the entries, so corners are extremal. Deterministic: the
/// lexicographically first failing corner (by entry bitmask) is reported.
ClassCertificate interval_is_p(const IntervalMatrix& A);

ClassCertificate point_class_certificate(const RatMat& A, MatrixClass which);

}  // namespace ilcp
