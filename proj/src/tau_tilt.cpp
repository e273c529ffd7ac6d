#include "ctube/tau_tilt.hpp"

#include <deque>
#include <map>
#include <optional>
#include <string>

namespace ctube {

namespace {

void require_same_setting(const MaximalRigid& t, const Indec& m) {
    if (m.p != t.p())
        fail(ErrorKind::RankMismatch,
             to_string(m) + " lives in a tube of rank " + std::to_string(m.p) +
                 ", expected " + std::to_string(t.p()));
    if (!is_rigid_indec(m)) fail(ErrorKind::NotRigid, to_string(m) + " is not rigid");
}

// Slot of x in t, or -1.
int slot_of(const MaximalRigid& t, const Indec& x) {
    for (int i = 0; i < t.n; ++i)
        if (t.summands[i] == x) return i;
    return -1;
}

std::string node_key(const MaximalRigid& t) {
    std::vector<Indec> sorted = t.summands;
    std::sort(sorted.begin(), sorted.end());
    std::string key;
    for (const Indec& s : sorted) key += to_string(s);
    return key;
}

}  // namespace

std::vector<int> f_dim_vector(const MaximalRigid& t, const Indec& m) {
    require_same_setting(t, m);
    std::vector<int> out(t.n);
    for (int i = 0; i < t.n; ++i) out[i] = hom_cluster_dim(t.summands[i], m);
    return out;
}

std::vector<int> rank_vector(const MaximalRigid& t, const Indec& m) {
    require_same_setting(t, m);
    for (const Indec& s : t.summands)
        if (m == shift(s))
            fail(ErrorKind::InShift, to_string(m) + " lies in add of the shifted object");
    std::vector<int> v = f_dim_vector(t, m);
    if (v[0] % 2 != 0)
        fail(ErrorKind::InternalInvariantBroken,
             "odd loop-vertex dimension " + std::to_string(v[0]) + " for " + to_string(m));
    v[0] /= 2;
    return v;
}

std::vector<int> index_vector(const MaximalRigid& t, const Indec& x) {
    require_same_setting(t, x);
    std::vector<int> ind(t.n, 0);
    for (int i = 0; i < t.n; ++i) {
        if (x == t.summands[i]) {
            ind[i] = 1;
            return ind;
        }
        if (x == shift(t.summands[i])) {
            ind[i] = -1;
            return ind;
        }
    }

    // Walk the mutation graph until some node contains x, remembering the
    // exchange data of each tree edge for the transport back.
    struct Node {
        MaximalRigid rigid;
        int parent;
        ExchangeData edge;  // parent --mu_k--> this, k = edge slot + 1
        int k = 0;
    };
    std::vector<Node> nodes;
    std::map<std::string, int> visited;
    nodes.push_back(Node{t, -1, {}, 0});
    visited.emplace(node_key(t), 0);
    std::deque<int> frontier{0};
    std::optional<std::pair<int, int>> hit;  // (node, slot of x)

    while (!frontier.empty() && !hit) {
        int cur = frontier.front();
        frontier.pop_front();
        for (int k = 1; k <= t.n && !hit; ++k) {
            auto [next, edata] = mutate_rigid(nodes[cur].rigid, k);
            std::string key = node_key(next);
            if (visited.contains(key)) continue;
            visited.emplace(std::move(key), static_cast<int>(nodes.size()));
            nodes.push_back(Node{std::move(next), cur, std::move(edata), k});
            int idx = static_cast<int>(nodes.size()) - 1;
            if (int s = slot_of(nodes[idx].rigid, x); s >= 0)
                hit = std::make_pair(idx, s);
            else
                frontier.push_back(idx);
        }
    }
    if (!hit)
        fail(ErrorKind::InternalInvariantBroken,
             "no maximal rigid object contains " + to_string(x));

    ind[hit->second] = 1;
    for (int at = hit->first; nodes[at].parent >= 0; at = nodes[at].parent) {
        const Node& node = nodes[at];
        const MaximalRigid& parent = nodes[node.parent].rigid;
        int kk = node.k - 1;
        int c = ind[kk];
        // [replacement] = [middle ending at replacement] - [removed] when the
        // coefficient is nonnegative, and the other triangle otherwise.
        const TubeObject& mid = c >= 0 ? node.edge.U_prime : node.edge.U;
        ind[kk] = -c;
        for (const Indec& s : mid) {
            int j = slot_of(parent, s);
            if (j < 0 || j == kk)
                fail(ErrorKind::InternalInvariantBroken,
                     "exchange middle " + to_string(s) + " is not a shared summand");
            ind[j] += c;
        }
    }
    return ind;
}

GCDMatrices g_c_d_matrices(const MaximalRigid& t, const MaximalRigid& t_t) {
    if (t.n != t_t.n) fail(ErrorKind::RankMismatch, "mixed ranks");
    const int n = t.n;
    GCDMatrices out{IntMatrix(n, n), IntMatrix(n, n), IntMatrix(n, n)};
    for (int j = 0; j < n; ++j) {
        std::vector<int> col = index_vector(t, t_t.summands[j]);
        for (int i = 0; i < n; ++i) out.G.at(i, j) = col[i];
    }
    out.C = inverse_unimodular(transpose(out.G));
    for (int j = 0; j < n; ++j) {
        if (int i = slot_of(t, t_t.summands[j]); i >= 0) {
            out.D.at(i, j) = -1;  // initial variable: denominator -e_i
        } else {
            std::vector<int> col = rank_vector(t, shift(t_t.summands[j]));
            for (int i = 0; i < n; ++i) out.D.at(i, j) = col[i];
        }
    }
    return out;
}

std::set<std::vector<int>> positive_c_vectors(const MaximalRigid& t) {
    std::set<std::vector<int>> out;
    for (const Indec& m : enum_rigid_indecs(t.n)) {
        bool shifted = false;
        for (const Indec& s : t.summands)
            if (m == shift(s)) shifted = true;
        if (!shifted) out.insert(rank_vector(t, m));
    }
    return out;
}

IntMatrix cartan_via_duality(const MaximalRigid& t, const MaximalRigid& t_t) {
    if (t.n != t_t.n) fail(ErrorKind::RankMismatch, "mixed ranks");
    const int n = t.n;
    for (const Indec& x : t_t.summands)
        for (const Indec& s : t.summands)
            if (x == shift(s))
                fail(ErrorKind::InShift,
                     to_string(x) + " is a shifted summand and is killed by the functor");
    IntMatrix g(n, n), d(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<int> gcol = index_vector(t, t_t.summands[j]);
        std::vector<int> dcol = f_dim_vector(t, t_t.summands[j]);
        for (int i = 0; i < n; ++i) {
            g.at(i, j) = gcol[i];
            d.at(i, j) = dcol[i];
        }
    }
    IntMatrix cartan = mul(transpose(g), d);
    if (det(cartan) == 0)
        fail(ErrorKind::InternalInvariantBroken, "degenerate Cartan product " + to_string(cartan));
    return cartan;
}

}  // namespace ctube
