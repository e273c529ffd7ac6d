#include "ctube/rigid.hpp"

#include <algorithm>
#include <optional>

namespace ctube {

namespace {

void require_valid_direction(const MaximalRigid& t, int k) {
    if (k < 1 || k > t.n)
        fail(ErrorKind::BadDirection,
             "direction " + std::to_string(k) + " outside 1.." + std::to_string(t.n));
}

int mod_shift(int from, int to, int p) {
    int h = (to - from) % p;
    if (h < 0) h += p;
    return h;
}

// h and i of the short-object exchange parameterization: z = (y.a + h,
// y.b - h + i) with 1 <= h <= y.b and 1 <= i <= n - y.b, or nothing.
std::optional<std::pair<int, int>> short_exchange_params(const Indec& y, const Indec& z) {
    const int n = y.p - 1;
    int h = mod_shift(y.a, z.a, y.p);
    if (h < 1 || h > y.b) return std::nullopt;
    int i = z.b - y.b + h;
    if (i < 1 || i > n - y.b) return std::nullopt;
    return std::make_pair(h, i);
}

void push_if_nonzero(std::vector<Indec>& v, long long a, long long b, int p) {
    if (b > 0) v.emplace_back(a, b, p);
}

}  // namespace

MaximalRigid make_maximal_rigid(int n, std::vector<Indec> summands) {
    if (n < 1) fail(ErrorKind::InvalidRank, "rank parameter must be at least 1");
    const int p = n + 1;
    if (static_cast<int>(summands.size()) != n)
        fail(ErrorKind::UsageError,
             "expected " + std::to_string(n) + " summands, got " + std::to_string(summands.size()));
    for (const Indec& s : summands) {
        if (s.p != p)
            fail(ErrorKind::RankMismatch, "summand " + to_string(s) + " has tube rank " + std::to_string(s.p));
        if (!is_rigid_indec(s)) fail(ErrorKind::NotRigid, "summand " + to_string(s) + " is not rigid");
    }
    for (size_t i = 0; i < summands.size(); ++i)
        for (size_t j = i; j < summands.size(); ++j) {
            if (i != j && summands[i] == summands[j])
                fail(ErrorKind::UsageError, "repeated summand " + to_string(summands[i]));
            if (ext1_dim(summands[i], summands[j]) != 0)
                fail(ErrorKind::UsageError,
                     "summands " + to_string(summands[i]) + " and " + to_string(summands[j]) +
                         " are not Ext-orthogonal");
        }
    // Pin the (necessarily unique) length-n summand to the front.
    auto it = std::find_if(summands.begin(), summands.end(), [n](const Indec& s) { return s.b == n; });
    if (it == summands.end())
        fail(ErrorKind::UsageError, "no summand of length " + std::to_string(n));
    std::rotate(summands.begin(), it, it + 1);
    for (size_t i = 1; i < summands.size(); ++i)
        if (summands[i].b == n)
            fail(ErrorKind::InternalInvariantBroken, "two summands of length " + std::to_string(n));
    return MaximalRigid{n, std::move(summands)};
}

std::vector<Indec> enum_rigid_indecs(int n) {
    if (n < 1) fail(ErrorKind::InvalidRank, "rank parameter must be at least 1");
    std::vector<Indec> out;
    out.reserve(static_cast<size_t>(n) * (n + 1));
    for (int a = 1; a <= n + 1; ++a)
        for (int b = 1; b <= n; ++b) out.emplace_back(a, b, n + 1);
    return out;
}

std::vector<MaximalRigid> enum_maximal_rigids(int n) {
    if (n < 1) fail(ErrorKind::InvalidRank, "rank parameter must be at least 1");
    const std::vector<Indec> rigids = enum_rigid_indecs(n);
    const int m = static_cast<int>(rigids.size());

    std::vector<std::vector<char>> compat(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) compat[i][j] = ext1_dim(rigids[i], rigids[j]) == 0;

    std::vector<MaximalRigid> out;
    std::vector<int> chosen;
    // Depth-first over index-increasing subsets; the compat test against
    // everything already chosen prunes hard enough for every rank in the
    // supported envelope.
    auto search = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            std::vector<Indec> summands;
            summands.reserve(n);
            for (int idx : chosen) summands.push_back(rigids[idx]);
            auto it = std::find_if(summands.begin(), summands.end(),
                                   [n](const Indec& s) { return s.b == n; });
            if (it == summands.end() ||
                std::find_if(it + 1, summands.end(), [n](const Indec& s) { return s.b == n; }) !=
                    summands.end())
                fail(ErrorKind::InternalInvariantBroken,
                     "maximal rigid object without a unique length-n summand");
            std::rotate(summands.begin(), it, it + 1);
            out.push_back(MaximalRigid{n, std::move(summands)});
            return;
        }
        int need = n - static_cast<int>(chosen.size());
        for (int i = start; i + need <= m; ++i) {
            bool ok = true;
            for (int idx : chosen)
                if (!compat[idx][i]) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    search(search, 0);
    return out;
}

std::pair<TubeObject, TubeObject> exchange_triangles(const Indec& x, const Indec& x_star) {
    if (x.p != x_star.p)
        fail(ErrorKind::RankMismatch, "exchange pair across tubes of different rank");
    const int p = x.p;
    const int n = p - 1;
    if (x == x_star || !is_rigid_indec(x) || !is_rigid_indec(x_star))
        fail(ErrorKind::NotExchangePair, to_string(x) + ", " + to_string(x_star));

    std::vector<Indec> u, u_prime;
    if (x.b == n && x_star.b == n) {
        int h = mod_shift(x.a, x_star.a, p);
        push_if_nonzero(u, x.a, h - 1, p);
        push_if_nonzero(u, x.a, h - 1, p);
        push_if_nonzero(u_prime, x.a + h, n - h, p);
        push_if_nonzero(u_prime, x.a + h, n - h, p);
    } else if (x.b < n && x_star.b < n) {
        if (auto direct = short_exchange_params(x, x_star)) {
            auto [h, i] = *direct;
            push_if_nonzero(u, x.a + x.b + 1, i - 1, p);
            push_if_nonzero(u, x.a, h - 1, p);
            push_if_nonzero(u_prime, x.a, x.b + i, p);
            push_if_nonzero(u_prime, x.a + h, x.b - h, p);
        } else if (auto swapped = short_exchange_params(x_star, x)) {
            // Only one ordering of a short exchange pair fits the
            // parameterization; the triangles based at x_star end at x and
            // vice versa, so the two middles swap roles.
            auto [h, i] = *swapped;
            push_if_nonzero(u, x_star.a, x_star.b + i, p);
            push_if_nonzero(u, x_star.a + h, x_star.b - h, p);
            push_if_nonzero(u_prime, x_star.a + x_star.b + 1, i - 1, p);
            push_if_nonzero(u_prime, x_star.a, h - 1, p);
        } else {
            fail(ErrorKind::NotExchangePair, to_string(x) + ", " + to_string(x_star));
        }
    } else {
        fail(ErrorKind::NotExchangePair,
             to_string(x) + ", " + to_string(x_star) + " mix length n with shorter length");
    }
    return {make_tube_object(std::move(u)), make_tube_object(std::move(u_prime))};
}

std::pair<MaximalRigid, ExchangeData> mutate_rigid(const MaximalRigid& t, int k) {
    require_valid_direction(t, k);
    const Indec& removed = t.summands[k - 1];

    std::vector<Indec> found;
    for (const Indec& cand : enum_rigid_indecs(t.n)) {
        if (cand == removed) continue;
        bool ok = true;
        for (int i = 0; i < t.n && ok; ++i) {
            if (i == k - 1) continue;
            if (cand == t.summands[i] || ext1_dim(cand, t.summands[i]) != 0) ok = false;
        }
        if (ok) found.push_back(cand);
    }
    if (found.size() != 1)
        fail(ErrorKind::InternalInvariantBroken,
             "expected a unique completion replacing " + to_string(removed) + " in " + to_string(t) +
                 ", found " + std::to_string(found.size()));
    const Indec replacement = found[0];
    if ((removed.b == t.n) != (replacement.b == t.n))
        fail(ErrorKind::InternalInvariantBroken,
             "mutation changed which slot holds the length-n summand");

    MaximalRigid result = t;
    result.summands[k - 1] = replacement;
    auto [u, u_prime] = exchange_triangles(removed, replacement);
    return {std::move(result), ExchangeData{removed, replacement, std::move(u), std::move(u_prime)}};
}

IntMatrix b_matrix(const MaximalRigid& t) {
    IntMatrix b(t.n, t.n);
    for (int j = 1; j <= t.n; ++j) {
        ExchangeData e = mutate_rigid(t, j).second;
        for (int i = 0; i < t.n; ++i) {
            long mult = 0;
            for (const Indec& s : e.U)
                if (s == t.summands[i]) ++mult;
            for (const Indec& s : e.U_prime)
                if (s == t.summands[i]) --mult;
            b.at(i, j - 1) = mult;
        }
    }
    return b;
}

std::map<std::pair<int, int>, int> quiver_arrows(const MaximalRigid& t) {
    IntMatrix b = b_matrix(t);
    std::map<std::pair<int, int>, int> arrows;
    arrows[{1, 1}] = 1;  // the loop, invisible to the exchange matrix
    for (int i = 1; i <= t.n; ++i)
        for (int j = 1; j <= t.n; ++j) {
            if (i == j) continue;
            mpz_class v = b.at(i - 1, j - 1);
            if (j == 1) {
                if (mpz_odd_p(v.get_mpz_t()))
                    fail(ErrorKind::InternalInvariantBroken,
                         "odd loop-column entry " + v.get_str() + " in " + to_string(t));
                v /= 2;
            }
            arrows[{i, j}] = v > 0 ? static_cast<int>(v.get_si()) : 0;
        }
    return arrows;
}

bool check_compatibility(const Indec& m, const ExchangeData& e) {
    if (!is_rigid_indec(m)) fail(ErrorKind::NotRigid, to_string(m) + " is not rigid");
    if (m.p != e.removed.p)
        fail(ErrorKind::RankMismatch, "object and exchange live in tubes of different rank");
    if (shift(m) == e.removed || shift(m) == e.replacement) return true;
    int lhs = hom_cluster_dim(m, e.removed) + hom_cluster_dim(m, e.replacement);
    int rhs = std::max(hom_cluster_dim(m, e.U), hom_cluster_dim(m, e.U_prime));
    return lhs == rhs;
}

std::string to_string(const MaximalRigid& t) {
    std::string out;
    for (int i = 0; i < t.n; ++i) {
        if (i) out += ";";
        out += to_string(t.summands[i]);
    }
    return out;
}

}  // namespace ctube
