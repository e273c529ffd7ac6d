#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ctube/error.hpp"

namespace ctube {

/* Exact multivariate Laurent polynomial: a map from dense exponent vectors
   (length = number of ambient variables) to nonzero integer coefficients.
   The std::map keeps keys in lexicographic order, which doubles as the
   canonical term order for equality, serialization and division. */
class LaurentPoly {
public:
    using Exp = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const mpz_class& c);
    static LaurentPoly monomial(int nvars, Exp e, const mpz_class& c);
    // The generator x_{i+1} (0-based i).
    static LaurentPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, mpz_class>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly pow(int e) const;  // e >= 0

    /* Exact division. The quotient is built by peeling leading terms (valid
       in the Laurent ring because the term order is translation invariant),
       then the identity quotient * divisor == dividend is checked outright.
       Any failure throws LaurentViolation: exchange relations are the only
       caller and their divisions are exact unless the engine is broken. */
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    // Substitute 1 for every variable with 0-based position >= keep.
    LaurentPoly specialize_ones_from(int keep) const;

    // Smallest exponent of variable i across terms (0 for the zero poly).
    int min_exponent(int i) const;

    // Stable byte representation, used for seed hashing and golden output.
    std::string canonical_bytes() const;

    void add_term(const Exp& e, const mpz_class& c);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    int nvars_ = 0;
    std::map<Exp, mpz_class> terms_;
};

}  // namespace ctube
