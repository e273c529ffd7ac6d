#include "ctube/indec.hpp"

#include <algorithm>

namespace ctube {

Indec::Indec(long long a_, long long b_, long long p_) {
    if (p_ < 2) fail(ErrorKind::InvalidRank, "tube rank must be at least 2, got " + std::to_string(p_));
    if (b_ <= 0) fail(ErrorKind::InvalidLength, "object length must be positive, got " + std::to_string(b_));
    p = static_cast<int>(p_);
    b = static_cast<int>(b_);
    long long r = a_ % p;
    if (r <= 0) r += p;
    a = static_cast<int>(r);
}

Indec normalize(long long a, long long b, long long p) { return Indec(a, b, p); }

Indec tau(const Indec& x) { return Indec(x.a - 1, x.b, x.p); }
Indec tau_inv(const Indec& x) { return Indec(x.a + 1, x.b, x.p); }
Indec shift(const Indec& x) { return tau(x); }
Indec shift_inv(const Indec& x) { return tau_inv(x); }

namespace {

void require_same_rank(const Indec& x, const Indec& y) {
    if (x.p != y.p)
        fail(ErrorKind::RankMismatch,
             "objects live in tubes of rank " + std::to_string(x.p) + " and " + std::to_string(y.p));
}

}  // namespace

int hom_tube_dim(const Indec& x, const Indec& y) {
    require_same_rank(x, y);
    // Count the top-slices of x that embed into y: slice k starts at socle
    // position a+k and has length b-k.
    int count = 0;
    for (int k = 0; k < x.b; ++k) {
        if ((x.a + k - y.a) % x.p == 0 && x.b - k <= y.b) ++count;
    }
    return count;
}

int hom_cluster_dim(const Indec& x, const Indec& y) {
    require_same_rank(x, y);
    return hom_tube_dim(x, y) + hom_tube_dim(y, tau(tau(x)));
}

int ext1_dim(const Indec& x, const Indec& y) {
    require_same_rank(x, y);
    return hom_cluster_dim(x, tau(y));
}

bool in_wing(const Indec& m, const Indec& w_top) {
    require_same_rank(m, w_top);
    if (w_top.b >= w_top.p)
        fail(ErrorKind::WingUndefined,
             "wing top " + to_string(w_top) + " has length >= tube rank");
    int j = ((m.a - w_top.a) % m.p + m.p) % m.p;
    return j <= w_top.b - 1 && m.b <= w_top.b - j;
}

bool is_rigid_indec(const Indec& x) { return x.b <= x.p - 1; }

TubeObject make_tube_object(std::vector<Indec> summands) {
    for (size_t i = 1; i < summands.size(); ++i) require_same_rank(summands[0], summands[i]);
    std::sort(summands.begin(), summands.end());
    return summands;
}

int hom_cluster_dim(const Indec& x, const TubeObject& y) {
    int total = 0;
    for (const Indec& s : y) total += hom_cluster_dim(x, s);
    return total;
}

std::string to_string(const Indec& x) {
    return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

std::string to_string(const TubeObject& xs) {
    if (xs.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += "+";
        out += to_string(xs[i]);
    }
    return out;
}

}  // namespace ctube
