#include "ctube/laurent.hpp"

namespace ctube {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() != b.nvars())
        fail(ErrorKind::InternalInvariantBroken, "Laurent polynomials over different ambient rings");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
    LaurentPoly r(nvars);
    r.add_term(Exp(nvars, 0), c);
    return r;
}

LaurentPoly LaurentPoly::monomial(int nvars, Exp e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != nvars)
        fail(ErrorKind::InternalInvariantBroken, "exponent vector length mismatch");
    LaurentPoly r(nvars);
    r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    Exp e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), 1);
}

void LaurentPoly::add_term(const Exp& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_vars(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    require_same_vars(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_vars(*this, o);
    LaurentPoly r(nvars_);
    Exp e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) fail(ErrorKind::InternalInvariantBroken, "negative power of a Laurent polynomial");
    LaurentPoly r = constant(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    require_same_vars(*this, d);
    if (d.is_zero()) fail(ErrorKind::LaurentViolation, "division by the zero polynomial");
    LaurentPoly q(nvars_);
    if (is_zero()) return q;

    /* Leading-term peeling. The lexicographic order on exponent vectors is
       translation invariant, so in the Laurent ring the leading term of a
       product is the product of leading terms; when the division is exact,
       each round strips one term of the quotient. The iteration cap only
       matters when the division is NOT exact (the remainder can then walk
       downward forever); the multiplication check afterwards is the real
       arbiter either way. */
    LaurentPoly rem = *this;
    const auto& ld = *d.terms_.rbegin();
    long long steps = 0;
    const long long cap = 4096 + 64LL * static_cast<long long>(terms_.size() + d.terms_.size());
    Exp qe(nvars_);
    while (!rem.terms_.empty()) {
        if (++steps > cap) fail(ErrorKind::LaurentViolation, "division did not terminate");
        const auto& lr = *rem.terms_.rbegin();
        for (int i = 0; i < nvars_; ++i) qe[i] = lr.first[i] - ld.first[i];
        mpz_class qc;
        mpz_class r_coeff;
        mpz_fdiv_qr(qc.get_mpz_t(), r_coeff.get_mpz_t(), lr.second.get_mpz_t(), ld.second.get_mpz_t());
        if (r_coeff != 0) fail(ErrorKind::LaurentViolation, "leading coefficient does not divide");
        q.add_term(qe, qc);
        Exp se(nvars_);
        for (const auto& [e2, c2] : d.terms_) {
            for (int i = 0; i < nvars_; ++i) se[i] = qe[i] + e2[i];
            rem.add_term(se, -qc * c2);
        }
    }
    if (!(q * d == *this)) fail(ErrorKind::LaurentViolation, "quotient times divisor is not the dividend");
    return q;
}

LaurentPoly LaurentPoly::specialize_ones_from(int keep) const {
    LaurentPoly r(nvars_);
    Exp e(nvars_, 0);
    for (const auto& [e1, c1] : terms_) {
        for (int i = 0; i < keep; ++i) e[i] = e1[i];
        for (int i = keep; i < nvars_; ++i) e[i] = 0;
        r.add_term(e, c1);
    }
    return r;
}

int LaurentPoly::min_exponent(int i) const {
    bool first = true;
    int best = 0;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first || e[i] < best) best = e[i];
        first = false;
    }
    return best;
}

std::string LaurentPoly::canonical_bytes() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
        for (int v : e) {
            out += std::to_string(v);
            out += ' ';
        }
        out += ':';
        out += c.get_str();
        out += ';';
    }
    return out;
}

}  // namespace ctube
