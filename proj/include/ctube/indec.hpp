#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ctube/error.hpp"

namespace ctube {

/* Indecomposable object of the tube of rank p, written (a,b): the unique
   indecomposable with socle at vertex a and length b. Socle indices are
   cyclic, so constructors reduce a into 1..p; lengths may exceed p (such
   objects exist in the tube, they are just never rigid). Two objects are
   equal exactly when their normalized coordinates and rank agree. */
struct Indec {
    int a = 1;
    int b = 1;
    int p = 2;

    Indec() = default;
    Indec(long long a_, long long b_, long long p_);

    friend bool operator==(const Indec&, const Indec&) = default;
    friend auto operator<=>(const Indec&, const Indec&) = default;
};

// Constructor wrapper under the operation's own name.
Indec normalize(long long a, long long b, long long p);

/* Auslander-Reiten translate tau(a,b) = (a-1,b). In the cluster tube the
   suspension coincides with tau, so shift and shift_inv are aliases kept
   separate for readability at call sites. */
Indec tau(const Indec& x);
Indec tau_inv(const Indec& x);
Indec shift(const Indec& x);
Indec shift_inv(const Indec& x);

/* Morphism-space dimension inside the tube itself. A basis of
   Hom(X,Y) is indexed by the ways a quotient of X coincides with a
   submodule of Y: a top-slice of X of length b-k (k = 0..b-1) embeds into Y
   exactly when the socle positions line up, a+k = c mod p, and the slice
   fits, b-k <= d. The count of such k is the dimension. The rep_oracle
   module re-derives these numbers from explicit representations and the
   test suite insists the two agree before anything downstream is trusted. */
int hom_tube_dim(const Indec& x, const Indec& y);

// Morphisms in the cluster tube decompose as
// Hom_C(X,Y) = Hom_T(X,Y) + Hom_T(Y, tau^2 X), hence this sum of hammocks.
int hom_cluster_dim(const Indec& x, const Indec& y);

// Ext^1 through the 2-Calabi-Yau shift: Ext^1(X,Y) = Hom_C(X, Sigma Y).
// Symmetric in its arguments.
int ext1_dim(const Indec& x, const Indec& y);

/* The wing of W_top is the triangle of the AR quiver hanging below W_top:
   all (W_top.a + j, d) with 0 <= j <= W_top.b - 1 and 1 <= d <= W_top.b - j.
   Only defined when W_top.b <= p-1; a full-circumference "wing" would wrap
   around the tube and the notion degenerates. */
bool in_wing(const Indec& m, const Indec& w_top);

// Rigidity is a pure length condition in a tube: length at most p-1.
bool is_rigid_indec(const Indec& x);

/* A finite direct sum of indecomposables, kept as a sorted multiset.
   The empty sum is the zero object; exchange triangles produce genuinely
   vanishing middle terms, so the empty case is routine, not exotic. */
using TubeObject = std::vector<Indec>;

TubeObject make_tube_object(std::vector<Indec> summands);
int hom_cluster_dim(const Indec& x, const TubeObject& y);

std::string to_string(const Indec& x);
std::string to_string(const TubeObject& xs);

}  // namespace ctube
