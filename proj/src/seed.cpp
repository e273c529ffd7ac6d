#include "ctube/seed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace ctube {

namespace {

void require_direction(int n, int k) {
    if (k < 1 || k > n)
        fail(ErrorKind::BadDirection,
             "direction " + std::to_string(k) + " outside 1.." + std::to_string(n));
}

mpz_class pos_part(const mpz_class& v) { return v > 0 ? v : mpz_class(0); }

int sgn(const mpz_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

ExtendedMatrix with_principal_coefficients(const IntMatrix& b) {
    if (b.rows() != b.cols()) fail(ErrorKind::InternalInvariantBroken, "exchange matrix not square");
    const int n = b.rows();
    IntMatrix m(2 * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = b.at(i, j);
            m.at(n + i, j) = i == j ? 1 : 0;
        }
    return ExtendedMatrix{n, std::move(m)};
}

IntMatrix principal_part(const ExtendedMatrix& em) {
    IntMatrix b(em.n, em.n);
    for (int i = 0; i < em.n; ++i)
        for (int j = 0; j < em.n; ++j) b.at(i, j) = em.m.at(i, j);
    return b;
}

IntMatrix coefficient_part(const ExtendedMatrix& em) {
    IntMatrix c(em.n, em.n);
    for (int i = 0; i < em.n; ++i)
        for (int j = 0; j < em.n; ++j) c.at(i, j) = em.m.at(em.n + i, j);
    return c;
}

IntMatrix mutate_matrix(const IntMatrix& m, int k) {
    require_direction(m.cols(), k);
    const int kk = k - 1;
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == kk || j == kk) {
                out.at(i, j) = -m.at(i, j);
            } else {
                mpz_class ik = m.at(i, kk);
                mpz_class kj = m.at(kk, j);
                out.at(i, j) = m.at(i, j) + sgn(ik) * pos_part(ik * kj);
            }
        }
    return out;
}

ExtendedMatrix mutate_matrix(const ExtendedMatrix& em, int k) {
    return ExtendedMatrix{em.n, mutate_matrix(em.m, k)};
}

Seed initial_seed(const MaximalRigid& t) {
    Seed s;
    s.matrix = with_principal_coefficients(b_matrix(t));
    s.cluster.reserve(t.n);
    for (int i = 0; i < t.n; ++i) s.cluster.push_back(LaurentPoly::variable(2 * t.n, i));
    std::vector<Indec> shifted;
    shifted.reserve(t.n);
    for (const Indec& x : t.summands) shifted.push_back(shift(x));
    s.objects = make_maximal_rigid(t.n, std::move(shifted));
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    const int n = s.matrix.n;
    require_direction(n, k);
    const int kk = k - 1;

    LaurentPoly plus = LaurentPoly::constant(2 * n, 1);
    LaurentPoly minus = plus;
    for (int i = 0; i < 2 * n; ++i) {
        mpz_class e = s.matrix.m.at(i, kk);
        if (e == 0) continue;
        long ei = e.get_si();
        LaurentPoly f = i < n ? s.cluster[i] : LaurentPoly::variable(2 * n, i);
        if (ei > 0)
            plus = plus * f.pow(static_cast<int>(ei));
        else
            minus = minus * f.pow(static_cast<int>(-ei));
    }

    Seed out;
    out.matrix = mutate_matrix(s.matrix, k);
    out.cluster = s.cluster;
    out.cluster[kk] = (plus + minus).divide_exact(s.cluster[kk]);
    out.objects = mutate_rigid(s.objects, k).first;
    return out;
}

std::vector<int> denominator_vector(const LaurentPoly& v, int n) {
    if (v.is_zero()) fail(ErrorKind::Undefined, "zero polynomial has no denominator vector");
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = -v.min_exponent(i);
    return d;
}

std::vector<int> g_vector(const LaurentPoly& v, const IntMatrix& b0) {
    if (v.is_zero()) fail(ErrorKind::Undefined, "zero polynomial has no degree");
    const int n = b0.rows();
    bool first = true;
    std::vector<int> g(n, 0);
    for (const auto& [e, c] : v.terms()) {
        std::vector<int> deg(n, 0);
        for (int r = 0; r < n; ++r) {
            long acc = e[r];
            for (int j = 0; j < n; ++j)
                acc -= e[n + j] * b0.at(r, j).get_si();
            deg[r] = static_cast<int>(acc);
        }
        if (first) {
            g = deg;
            first = false;
        } else if (deg != g) {
            fail(ErrorKind::GradingViolation, "inhomogeneous polynomial: " + v.canonical_bytes());
        }
    }
    return g;
}

IntMatrix c_matrix(const Seed& s) {
    IntMatrix c = coefficient_part(s.matrix);
    for (int j = 0; j < c.cols(); ++j) {
        bool pos = false, neg = false;
        for (int i = 0; i < c.rows(); ++i) {
            if (c.at(i, j) > 0) pos = true;
            if (c.at(i, j) < 0) neg = true;
        }
        if (pos == neg)  // mixed signs, or an all-zero column
            fail(ErrorKind::InternalInvariantBroken,
                 "c-vector column " + std::to_string(j + 1) + " is not sign-coherent in " +
                     to_string(c));
    }
    return c;
}

LaurentPoly specialize_coefficients(const LaurentPoly& v) {
    return v.specialize_ones_from(v.nvars() / 2);
}

namespace {

// Slot permutation ordering the objects; applied to the cluster and to the
// top rows and all columns of the matrix it yields a representative
// independent of the path the BFS took to reach the seed.
std::vector<int> canonical_slot_order(const Seed& s) {
    std::vector<int> perm(s.cluster.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
        return s.objects.summands[x] < s.objects.summands[y];
    });
    return perm;
}

std::string canonical_cluster_key(const Seed& s, const std::vector<int>& perm) {
    std::ostringstream os;
    for (int idx : perm)
        os << to_string(s.objects.summands[idx]) << "=" << s.cluster[idx].canonical_bytes() << "|";
    return os.str();
}

std::string canonical_matrix_bytes(const Seed& s, const std::vector<int>& perm) {
    const int n = s.matrix.n;
    std::ostringstream os;
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = 0; j < n; ++j) {
            int row = i < n ? perm[i] : i;  // coefficient rows are not slots
            os << s.matrix.m.at(row, perm[j]).get_str() << ",";
        }
        os << ";";
    }
    return os.str();
}

}  // namespace

PatternResult enumerate_pattern(const Seed& s0, long long max_seeds) {
    PatternResult result;
    const int n = s0.matrix.n;
    const IntMatrix b0 = principal_part(s0.matrix);

    std::map<std::string, std::pair<int, std::string>> seen;  // key -> (index, matrix bytes)
    std::map<Indec, std::pair<std::string, int>> by_object;   // object -> (var bytes, record idx)
    std::set<std::pair<int, int>> edge_seen;

    auto note_seed = [&](const Seed& s) -> std::pair<int, bool> {
        std::vector<int> perm = canonical_slot_order(s);
        std::string key = canonical_cluster_key(s, perm);
        std::string mat = canonical_matrix_bytes(s, perm);
        if (auto it = seen.find(key); it != seen.end()) {
            if (it->second.second != mat)
                fail(ErrorKind::InternalInvariantBroken,
                     "same cluster reached with different matrices: " + key);
            return {it->second.first, false};
        }
        if (static_cast<long long>(result.seeds.size()) >= max_seeds)
            fail(ErrorKind::UsageError, "seed cap exceeded (max " + std::to_string(max_seeds) + ")");
        int idx = static_cast<int>(result.seeds.size());
        seen.emplace(std::move(key), std::make_pair(idx, std::move(mat)));
        result.seeds.push_back(s);
        for (int i = 0; i < n; ++i) {
            const Indec& obj = s.objects.summands[i];
            std::string vb = s.cluster[i].canonical_bytes();
            if (auto rit = by_object.find(obj); rit != by_object.end()) {
                if (rit->second.first != vb)
                    fail(ErrorKind::InternalInvariantBroken,
                         "object " + to_string(obj) + " carries two distinct variables");
            } else {
                ClusterRecord rec;
                rec.object = obj;
                rec.variable = s.cluster[i];
                rec.den = denominator_vector(s.cluster[i], n);
                rec.g = g_vector(s.cluster[i], b0);
                by_object.emplace(obj, std::make_pair(std::move(vb),
                                                      static_cast<int>(result.records.size())));
                result.records.push_back(std::move(rec));
            }
        }
        return {idx, true};
    };

    note_seed(s0);
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        for (int k = 1; k <= n; ++k) {
            Seed child = mutate_seed(result.seeds[cur], k);
            auto [idx, fresh] = note_seed(child);
            if (fresh) frontier.push_back(idx);
            /* Neighboring clusters share all but one variable, so a pair of
               seeds meets in at most one exchange; the direction label is
               slot numbering local to the first-discovered side and must not
               split the pair into two edges. */
            if (edge_seen.insert({std::min(cur, idx), std::max(cur, idx)}).second)
                result.edges.push_back(PatternEdge{cur, idx, k});
        }
    }
    return result;
}

}  // namespace ctube
