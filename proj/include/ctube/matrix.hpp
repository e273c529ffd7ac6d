#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ctube/error.hpp"

namespace ctube {

// Dense matrix with arbitrary-precision integer entries. Everything in this
// project is rank <= 12, so the implementation favors clarity over speed.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpz_class> e_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

// Fraction-free Bareiss elimination; exact for any integer matrix.
mpz_class det(const IntMatrix& a);

// Exact inverse over the rationals, rejected (nullopt) when singular.
std::optional<std::vector<std::vector<mpq_class>>> rational_inverse(const IntMatrix& a);

// Inverse of a matrix whose inverse is again integral (det = +-1 in all our
// uses). Throws InternalInvariantBroken when the inverse fails to be integral
// or the matrix is singular, because every caller has a theorem saying
// otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

}  // namespace ctube
