#include "ctube/matrix.hpp"

#include <utility>

namespace ctube {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, mpz_class(0)) {}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        fail(ErrorKind::InternalInvariantBroken, "matrix product shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix r(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
    return r;
}

mpz_class det(const IntMatrix& a) {
    if (a.rows() != a.cols())
        fail(ErrorKind::InternalInvariantBroken, "determinant of a non-square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    int sign = 1;
    mpz_class prev = 1;
    // Bareiss: every division below is exact, so the arithmetic stays in
    // the integers the whole way down.
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

std::optional<std::vector<std::vector<mpq_class>>> rational_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols())
        fail(ErrorKind::InternalInvariantBroken, "inverse of a non-square matrix");
    const int n = a.rows();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, mpq_class(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(m[piv], m[col]);
        mpq_class d = m[col][col];
        for (int c = 0; c < 2 * n; ++c) m[col][c] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (int c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    auto inv = rational_inverse(a);
    if (!inv) fail(ErrorKind::InternalInvariantBroken, "singular matrix where det = +-1 was proven");
    IntMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            mpq_class v = (*inv)[i][j];
            v.canonicalize();
            if (v.get_den() != 1)
                fail(ErrorKind::InternalInvariantBroken, "non-integral inverse where det = +-1 was proven");
            r.at(i, j) = v.get_num();
        }
    return r;
}

std::string to_string(const IntMatrix& a) {
    std::string out = "[";
    for (int i = 0; i < a.rows(); ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < a.cols(); ++j) {
            if (j) out += ",";
            out += a.at(i, j).get_str();
        }
        out += "]";
    }
    out += "]";
    return out;
}

}  // namespace ctube
