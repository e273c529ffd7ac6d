#pragma once

#include <set>
#include <vector>

#include "ctube/matrix.hpp"
#include "ctube/rigid.hpp"

namespace ctube {

/* The module-theoretic side, seen through the functor F = Hom_C(T,-).
   Everything here is dimension bookkeeping: no modules are materialized,
   only their dimension vectors, rank vectors and index classes. */

// Entry i is dim Hom_C(T_i, M), the dimension vector of F(M).
std::vector<int> f_dim_vector(const MaximalRigid& t, const Indec& m);

/* Rank vector of F(M): the dimension vector with the first coordinate
   halved. The loop vertex carries a local endomorphism ring of dimension 2,
   so the first coordinate is always even; an odd value would mean the
   arithmetic upstream is wrong. Objects in add Sigma T are killed by F and
   have no rank vector. */
std::vector<int> rank_vector(const MaximalRigid& t, const Indec& m);

/* Index of a rigid indecomposable X with respect to T, written in the basis
   [T_1..T_n]. Base cases: summands of T give e_i, their shifts give -e_i.
   Everything else is reached by a breadth-first walk to some maximal rigid
   containing X and transported back one mutation at a time: across the
   mutation exchanging T_k for T_k* with middles U (triangle ending at T_k)
   and U' (ending at T_k*), the class [T_k] maps to [U] - [T_k*] when the
   transported coefficient at slot k is nonnegative and to [U'] - [T_k*]
   otherwise. The result is path independent; the verification suites check
   it against the g-vectors of the cluster pattern. */
std::vector<int> index_vector(const MaximalRigid& t, const Indec& x);

struct GCDMatrices {
    IntMatrix G;
    IntMatrix C;
    IntMatrix D;
};

/* Per-cluster matrices relative to the initial T. The argument t_t is the
   index-side maximal rigid: its shift gives the tracked objects of the
   corresponding seed (callers holding a seed pass tau_inv of each object).
   G's columns are index_vector(T, t_t[j]); C is the inverse transpose of G
   (integral because det G = +-1); D's column j is the denominator-relevant
   vector of the object Sigma t_t[j]: the rank vector when that object is
   not in add Sigma T, and -e_i when it equals Sigma T_i (matching the
   denominator convention for initial variables). */
GCDMatrices g_c_d_matrices(const MaximalRigid& t, const MaximalRigid& t_t);

// Rank vectors of all rigid indecomposables outside add Sigma T. These are
// exactly the positive c-vectors of the pattern rooted at T, n^2 of them.
std::set<std::vector<int>> positive_c_vectors(const MaximalRigid& t);

/* Cartan matrix of the endomorphism algebra of F(t_t) through the duality
   G^tr * D = Cartan, where D here is the UNHALVED dimension-vector matrix
   (columns f_dim_vector(T, t_t[j])). This is intentionally a different D
   from g_c_d_matrices; halving would destroy the identity. Requires that no
   summand of t_t lies in add Sigma T (those are killed by F and would
   contribute a zero column). At t_t = T the result is the Cartan matrix of
   End_C(T) itself, with diagonal (2,1,...,1). */
IntMatrix cartan_via_duality(const MaximalRigid& t, const MaximalRigid& t_t);

}  // namespace ctube
