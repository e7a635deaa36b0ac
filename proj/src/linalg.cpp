#include "ilcp/linalg.hpp"

namespace ilcp {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rational>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    data.reserve(rows * cols);
    for (const auto& r : init) {
        if (r.size() != cols) throw InvariantError("ragged matrix initializer");
        for (const auto& x : r) data.push_back(x);
    }
}

RatMat RatMat::identity(std::size_t n) {
    RatMat I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

RatMat RatMat::transpose() const {
    RatMat T(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) T(j, i) = (*this)(i, j);
    return T;
}

RatVec mat_vec(const RatMat& A, const RatVec& x) {
    if (A.cols != x.size()) throw InvariantError("mat_vec: dimension mismatch");
    RatVec y(A.rows, Rational(0));
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
    return y;
}

RatMat mat_mul(const RatMat& A, const RatMat& B) {
    if (A.cols != B.rows) throw InvariantError("mat_mul: dimension mismatch");
    RatMat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            if (A(i, k) == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

bool mat_le(const RatMat& A, const RatMat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw InvariantError("mat_le: shape mismatch");
    for (std::size_t i = 0; i < A.data.size(); ++i)
        if (A.data[i] > B.data[i]) return false;
    return true;
}

bool mat_lt(const RatMat& A, const RatMat& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw InvariantError("mat_lt: shape mismatch");
    for (std::size_t i = 0; i < A.data.size(); ++i)
        if (A.data[i] >= B.data[i]) return false;
    return true;
}

namespace {

// Fraction-free echelon reduction is unnecessary at this scale; plain
// rational Gauss with first-nonzero pivoting keeps everything exact and
// deterministic.
struct Echelon {
    RatMat m;             // reduced matrix
    std::vector<int> pivot_col;
    Rational det_factor;  // determinant of the eliminated square part (square input only)
    std::size_t rank = 0;
};

Echelon echelon(RatMat a) {
    Echelon e{a, {}, Rational(1), 0};
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && e.m(p, c) == 0) ++p;
        if (p == a.rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(e.m(r, j), e.m(p, j));
            e.det_factor = -e.det_factor;
        }
        e.det_factor *= e.m(r, c);
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || e.m(i, c) == 0) continue;
            Rational f = e.m(i, c) / e.m(r, c);
            for (std::size_t j = c; j < a.cols; ++j) e.m(i, j) -= f * e.m(r, j);
        }
        e.pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    e.rank = r;
    return e;
}

}  // namespace

Rational det(const RatMat& A) {
    if (!A.square()) throw InvariantError("det: non-square matrix");
    Echelon e = echelon(A);
    return e.rank == A.rows ? e.det_factor : Rational(0);
}

std::optional<RatMat> inverse(const RatMat& A) {
    if (!A.square()) throw InvariantError("inverse: non-square matrix");
    std::size_t n = A.rows;
    RatMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = echelon(aug);
    if (e.rank < n || e.pivot_col[n - 1] >= static_cast<int>(n)) return std::nullopt;
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational piv = e.m(i, static_cast<std::size_t>(e.pivot_col[i]));
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j) / piv;
    }
    return inv;
}

std::optional<RatVec> solve(const RatMat& A, const RatVec& b) {
    auto s = solve_affine(A, b);
    if (!s.consistent || !s.kernel.empty() || A.rows != A.cols) return std::nullopt;
    return s.particular;
}

std::size_t rank(RatMat A) { return echelon(A).rank; }

std::vector<RatVec> nullspace(const RatMat& A) {
    Echelon e = echelon(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (int c : e.pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<RatVec> basis;
    for (std::size_t fc = 0; fc < A.cols; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(A.cols, Rational(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < e.rank; ++r) {
            std::size_t pc = static_cast<std::size_t>(e.pivot_col[r]);
            v[pc] = -e.m(r, fc) / e.m(r, pc);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolution solve_affine(const RatMat& A, const RatVec& b) {
    if (A.rows != b.size()) throw InvariantError("solve_affine: dimension mismatch");
    RatMat aug(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    Echelon e = echelon(aug);
    AffineSolution out;
    for (std::size_t r = 0; r < e.rank; ++r)
        if (e.pivot_col[r] == static_cast<int>(A.cols)) return out;  // 0 = nonzero
    out.consistent = true;
    out.particular.assign(A.cols, Rational(0));
    for (std::size_t r = 0; r < e.rank; ++r) {
        std::size_t pc = static_cast<std::size_t>(e.pivot_col[r]);
        out.particular[pc] = e.m(r, A.cols) / e.m(r, pc);
    }
    // Free columns span the kernel.
    std::vector<bool> is_pivot(A.cols, false);
    for (std::size_t r = 0; r < e.rank; ++r) is_pivot[static_cast<std::size_t>(e.pivot_col[r])] = true;
    for (std::size_t fc = 0; fc < A.cols; ++fc) {
        if (is_pivot[fc]) continue;
        RatVec v(A.cols, Rational(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < e.rank; ++r) {
            std::size_t pc = static_cast<std::size_t>(e.pivot_col[r]);
            v[pc] = -e.m(r, fc) / e.m(r, pc);
        }
        out.kernel.push_back(std::move(v));
    }
    return out;
}

RatMat principal_submatrix(const RatMat& A, const std::vector<int>& idx) {
    RatMat S(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            S(i, j) = A(static_cast<std::size_t>(idx[i]), static_cast<std::size_t>(idx[j]));
    return S;
}

}  // namespace ilcp
