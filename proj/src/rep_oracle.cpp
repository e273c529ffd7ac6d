#include "ctube/rep_oracle.hpp"

#include <vector>

namespace ctube {

namespace {

// Row-reduce over the rationals and return the rank. Matrices here stay
// tiny (a few dozen rows), so plain Gaussian elimination with the first
// nonzero pivot is plenty.
int rational_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

NilpotentRep build_rep(const Indec& x) {
    const int p = x.p;
    NilpotentRep rep;
    rep.p = p;
    rep.dims.assign(p, 0);

    /* Basis e_1..e_b, where e_j lives at vertex a+j-1 (cyclically) and the
       arrow out of that vertex sends e_j to e_{j-1}, with e_1 (the socle)
       mapped to zero. vertex_of and slot_of record where each basis vector
       lands and in which coordinate. */
    std::vector<int> vertex_of(x.b);           // 0-based vertex of e_{j+1}
    std::vector<int> slot_of(x.b);             // coordinate within its vertex space
    std::vector<std::vector<int>> at_vertex(p);  // ascending j at each vertex
    for (int j = 0; j < x.b; ++j) {
        int v = (x.a - 1 + j) % p;
        vertex_of[j] = v;
        slot_of[j] = static_cast<int>(at_vertex[v].size());
        at_vertex[v].push_back(j);
        ++rep.dims[v];
    }

    rep.maps.resize(p);
    for (int v = 0; v < p; ++v) {
        int tgt = (v + p - 1) % p;
        rep.maps[v].assign(rep.dims[tgt], std::vector<mpq_class>(rep.dims[v], mpq_class(0)));
    }
    for (int j = 1; j < x.b; ++j) {
        int v = vertex_of[j];
        rep.maps[v][slot_of[j - 1]][slot_of[j]] = 1;
    }
    return rep;
}

int hom_dim_oracle(const Indec& x, const Indec& y) {
    if (x.p != y.p)
        fail(ErrorKind::RankMismatch,
             "objects live in tubes of rank " + std::to_string(x.p) + " and " + std::to_string(y.p));
    const int p = x.p;
    NilpotentRep rx = build_rep(x);
    NilpotentRep ry = build_rep(y);

    /* Unknowns: one matrix F_v (dims_y[v] x dims_x[v]) per vertex. A
       degree-0 map is a homomorphism exactly when, for every vertex v with
       arrow v -> w, F_w MX_v = MY_v F_v. Flatten everything into one linear
       system and read the solution-space dimension off the rank. */
    std::vector<int> offset(p + 1, 0);
    for (int v = 0; v < p; ++v) offset[v + 1] = offset[v] + ry.dims[v] * rx.dims[v];
    const int unknowns = offset[p];
    if (unknowns == 0) return 0;

    auto var_of = [&](int v, int r, int c) { return offset[v] + r * rx.dims[v] + c; };

    std::vector<std::vector<mpq_class>> sys;
    for (int v = 0; v < p; ++v) {
        int w = (v + p - 1) % p;
        for (int r = 0; r < ry.dims[w]; ++r) {
            for (int c = 0; c < rx.dims[v]; ++c) {
                std::vector<mpq_class> row(unknowns, mpq_class(0));
                bool nonzero = false;
                for (int s = 0; s < rx.dims[w]; ++s) {
                    if (rx.maps[v][s][c] != 0) {
                        row[var_of(w, r, s)] += rx.maps[v][s][c];
                        nonzero = true;
                    }
                }
                for (int s = 0; s < ry.dims[v]; ++s) {
                    if (ry.maps[v][r][s] != 0) {
                        row[var_of(v, s, c)] -= ry.maps[v][r][s];
                        nonzero = true;
                    }
                }
                if (nonzero) sys.push_back(std::move(row));
            }
        }
    }
    return unknowns - rational_rank(std::move(sys));
}

}  // namespace ctube
