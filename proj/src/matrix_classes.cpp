#include "ilcp/matrix_classes.hpp"

namespace ilcp {

std::string matrix_class_name(MatrixClass c) {
    switch (c) {
        case MatrixClass::Z: return "Z";
        case MatrixClass::M: return "M";
        case MatrixClass::HPlus: return "H+";
        case MatrixClass::P: return "P";
        case MatrixClass::NotInClass: return "none";
    }
    return "?";
}

bool is_z_matrix(const RatMat& A) {
    if (!A.square()) throw InvariantError("is_z_matrix: non-square matrix");
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (i != j && A(i, j) > 0) return false;
    return true;
}

namespace {

bool strictly_positive(const RatVec& v) {
    for (const auto& x : v)
        if (x <= 0) return false;
    return true;
}

bool nonneg_matrix(const RatMat& A) {
    for (const auto& x : A.data)
        if (x < 0) return false;
    return true;
}

}  // namespace

ClassCertificate is_m_matrix(const RatMat& A) {
    if (!A.square()) throw InvariantError("is_m_matrix: non-square matrix");
    ClassCertificate cert;
    if (!is_z_matrix(A)) {
        for (std::size_t i = 0; i < A.rows; ++i)
            for (std::size_t j = 0; j < A.cols; ++j)
                if (i != j && A(i, j) > 0) {
                    cert.bad_entry = {static_cast<int>(i), static_cast<int>(j)};
                    cert.note = "positive off-diagonal entry";
                    return cert;
                }
    }

    std::size_t n = A.rows;
    RatVec ones(n, Rational(1));
    std::optional<RatVec> u;
    if (strictly_positive(mat_vec(A, ones))) {
        u = ones;
    } else if (auto s = solve(A, ones); s && strictly_positive(*s)) {
        u = *s;
    }
    if (!u) {
        cert.note = "no positive u with Au > 0";
        return cert;
    }

    auto inv = inverse(A);
    if (!inv || !nonneg_matrix(*inv))
        throw InvariantError("M-matrix witness found but inverse is not nonnegative");

    cert.kind = MatrixClass::M;
    cert.witness = std::move(*u);
    return cert;
}

ClassCertificate interval_is_m(const IntervalMatrix& A) {
    ClassCertificate cert;
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j)
            if (i != j && A.at(i, j).hi > 0) {
                cert.bad_entry = {static_cast<int>(i), static_cast<int>(j)};
                cert.note = "off-diagonal entry can be positive; not a Z-matrix family";
                return cert;
            }
    RatMat lower(A.n, A.n);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) lower(i, j) = A.at(i, j).lo;
    return is_m_matrix(lower);
}

RatMat comparison_matrix(const RatMat& A) {
    if (!A.square()) throw InvariantError("comparison_matrix: non-square matrix");
    RatMat C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) {
            Rational m = abs(A(i, j));
            C(i, j) = (i == j) ? m : Rational(-m);
        }
    return C;
}

ClassCertificate interval_is_hplus(const IntervalMatrix& A) {
    ClassCertificate cert;
    for (std::size_t i = 0; i < A.n; ++i)
        if (A.at(i, i).lo <= 0) {
            cert.bad_entry = {static_cast<int>(i), static_cast<int>(i)};
            cert.note = "diagonal lower bound not positive";
            return cert;
        }
    // Worst-case comparison matrix over the box: smallest diagonal,
    // largest off-diagonal magnitude.
    RatMat W(A.n, A.n);
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t j = 0; j < A.n; ++j) {
            Rational lo_mag = abs(A.at(i, j).lo);
            Rational hi_mag = abs(A.at(i, j).hi);
            W(i, j) = (i == j) ? A.at(i, i).lo : Rational(-std::max(lo_mag, hi_mag));
        }
    ClassCertificate m = is_m_matrix(W);
    if (!m.in_class()) {
        m.note = "worst-case comparison matrix is not an M-matrix";
        return m;
    }
    m.kind = MatrixClass::HPlus;
    return m;
}

ClassCertificate is_p_matrix(const RatMat& A) {
    IntervalMatrix box(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) box.at(i, j) = Interval::point(A(i, j));
    return interval_is_p(box);
}

ClassCertificate interval_is_p(const IntervalMatrix& A) {
    std::size_t n = A.n;
    if (n > 4) throw DimensionError("interval P-test limited to n <= 4");
    ClassCertificate cert;

    // Principal index sets in bitmask order.
    std::vector<std::vector<int>> subsets;
    for (unsigned s = 1; s < (1u << n); ++s) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (s & (1u << i)) idx.push_back(static_cast<int>(i));
        subsets.push_back(std::move(idx));
    }

    std::vector<std::pair<std::size_t, std::size_t>> wide;  // entries with lo < hi
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!A.at(i, j).is_point()) wide.emplace_back(i, j);

    RatMat V(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) V(i, j) = A.at(i, j).lo;

    const unsigned long corners = 1ul << wide.size();
    for (unsigned long mask = 0; mask < corners; ++mask) {
        for (std::size_t k = 0; k < wide.size(); ++k) {
            const auto& [i, j] = wide[k];
            V(i, j) = (mask & (1ul << k)) ? A.at(i, j).hi : A.at(i, j).lo;
        }
        for (const auto& idx : subsets) {
            Rational minor = det(principal_submatrix(V, idx));
            if (minor <= 0) {
                cert.bad_minor = idx;
                cert.bad_minor_value = minor;
                cert.bad_vertex = V;
                cert.note = "principal minor not positive at a box corner";
                return cert;
            }
        }
    }
    cert.kind = MatrixClass::P;
    return cert;
}

ClassCertificate point_class_certificate(const RatMat& A, MatrixClass which) {
    switch (which) {
        case MatrixClass::Z: {
            ClassCertificate c;
            if (is_z_matrix(A)) c.kind = MatrixClass::Z;
            return c;
        }
        case MatrixClass::M: return is_m_matrix(A);
        case MatrixClass::HPlus: {
            IntervalMatrix box(A.rows);
            for (std::size_t i = 0; i < A.rows; ++i)
                for (std::size_t j = 0; j < A.cols; ++j) box.at(i, j) = Interval::point(A(i, j));
            return interval_is_hplus(box);
        }
        case MatrixClass::P: return is_p_matrix(A);
        default: throw InvariantError("point_class_certificate: bad class");
    }
}

}  // namespace ilcp
