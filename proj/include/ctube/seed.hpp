#pragma once

#include <vector>

#include "ctube/laurent.hpp"
#include "ctube/matrix.hpp"
#include "ctube/rigid.hpp"

namespace ctube {

/* Extended exchange matrix: 2n rows, n columns. The top n x n block is the
   exchange matrix proper; the bottom block tracks coefficients and starts
   as the identity (principal coefficients). */
struct ExtendedMatrix {
    int n = 0;
    IntMatrix m;  // 2n x n

    friend bool operator==(const ExtendedMatrix&, const ExtendedMatrix&) = default;
};

ExtendedMatrix with_principal_coefficients(const IntMatrix& b);
IntMatrix principal_part(const ExtendedMatrix& em);
IntMatrix coefficient_part(const ExtendedMatrix& em);

/* Matrix mutation in direction k (1-based):
       b'_ij = -b_ij                     when i = k or j = k,
       b'_ij = b_ij + sgn(b_ik) [b_ik b_kj]_+   otherwise,
   applied to every row (principal and coefficient alike). Involutive. */
IntMatrix mutate_matrix(const IntMatrix& m, int k);
ExtendedMatrix mutate_matrix(const ExtendedMatrix& em, int k);

/* A seed: extended matrix, the n cluster variables as Laurent polynomials
   in the 2n ambient variables, and the n rigid objects tracked in parallel.
   The tracked objects of the initial seed are Sigma T_i; mutating the seed
   mutates them through mutate_rigid, which keeps the variable <-> object
   bijection aligned across the whole pattern. */
struct Seed {
    ExtendedMatrix matrix;
    std::vector<LaurentPoly> cluster;
    MaximalRigid objects;
};

Seed initial_seed(const MaximalRigid& t);

/* Seed mutation: the outgoing variable is replaced by
       (prod_i x_i^{[b_ik]_+} + prod_i x_i^{[-b_ik]_+}) / x_k
   with i running over all 2n rows. The division is exact by the Laurent
   phenomenon; LaurentViolation here means the engine is broken. */
Seed mutate_seed(const Seed& s, int k);

// d_i = -(minimum exponent of x_i across terms), i = 1..n. Initial
// variables come out as -e_i.
std::vector<int> denominator_vector(const LaurentPoly& v, int n);

/* Multidegree under the principal-coefficient grading deg x_i = e_i,
   deg x_{n+j} = -(column j of the initial exchange matrix b0). Every
   cluster variable is homogeneous for it; anything else throws. */
std::vector<int> g_vector(const LaurentPoly& v, const IntMatrix& b0);

// Bottom block of the seed matrix; every column must be sign-coherent.
IntMatrix c_matrix(const Seed& s);

// Substitute 1 for the coefficient variables x_{n+1}..x_{2n}, recovering
// the coefficient-free expression.
LaurentPoly specialize_coefficients(const LaurentPoly& v);

struct ClusterRecord {
    Indec object;
    LaurentPoly variable;
    std::vector<int> den;
    std::vector<int> g;
};

struct PatternEdge {
    int from = 0;
    int to = 0;
    int k = 0;  // mutation direction, 1-based
};

struct PatternResult {
    std::vector<Seed> seeds;          // breadth-first discovery order
    std::vector<PatternEdge> edges;   // each undirected edge once
    std::vector<ClusterRecord> records;  // one per distinct variable, by object
};

/* Breadth-first closure of the mutation graph with seed deduplication.
   Two seeds are the same when their (object, variable) pair sets agree; the
   dedup store also compares the slot-permuted matrices and the variable of
   every repeated object, so any path dependence of the construction would
   explode immediately instead of corrupting counts. Terminates because the
   pattern is finite type; max_seeds is a safety cap, not a tuning knob. */
PatternResult enumerate_pattern(const Seed& s0, long long max_seeds = 1000000);

}  // namespace ctube
