#pragma once

#include "ilcp/rational.hpp"

#include <optional>
#include <vector>

namespace ilcp {

/// Dense rational matrix, row-major.
struct RatMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    RatVec data;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}
    RatMat(std::initializer_list<std::initializer_list<Rational>> init);

    Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool square() const { return rows == cols; }
    static RatMat identity(std::size_t n);
    RatMat transpose() const;
    bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && data == o.data; }
};

RatVec mat_vec(const RatMat& A, const RatVec& x);
RatMat mat_mul(const RatMat& A, const RatMat& B);
bool mat_le(const RatMat& A, const RatMat& B);  // entrywise <=
bool mat_lt(const RatMat& A, const RatMat& B);  // entrywise <

Rational det(const RatMat& A);
std::optional<RatMat> inverse(const RatMat& A);

/// Unique solution of Ax = b, or nullopt when A is singular.
std::optional<RatVec> solve(const RatMat& A, const RatVec& b);

std::size_t rank(RatMat A);

/// Basis of the null space of A.
std::vector<RatVec> nullspace(const RatMat& A);

/// General (possibly singular) solve: consistency flag, one particular
/// solution and a kernel basis.
struct AffineSolution {
    bool consistent = false;
    RatVec particular;
    std::vector<RatVec> kernel;
};
AffineSolution solve_affine(const RatMat& A, const RatVec& b);

/// Principal submatrix selected by 0-based row/column indices.
RatMat principal_submatrix(const RatMat& A, const std::vector<int>& idx);

}  // namespace ilcp
