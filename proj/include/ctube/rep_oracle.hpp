#pragma once

#include <vector>

#include <gmpxx.h>

#include "ctube/indec.hpp"

namespace ctube {

/* Brute-force oracle for Hom dimensions. An indecomposable (a,b) is realized
   as an explicit uniserial nilpotent representation of the cyclic quiver on
   p vertices (arrows v -> v-1, towards the socle), and Hom(X,Y) is computed
   as the solution space of the intertwiner equations, by exact rational
   elimination. Nothing here is clever on purpose: this module is the
   independent route the hammock formula is checked against. */

struct NilpotentRep {
    int p = 2;
    // dims[v] counts basis vectors at vertex v+1.
    std::vector<int> dims;
    // maps[v] is the matrix of the arrow out of vertex v+1, with
    // dims[(v+p-1)%p] rows and dims[v] columns.
    std::vector<std::vector<std::vector<mpq_class>>> maps;
};

NilpotentRep build_rep(const Indec& x);

int hom_dim_oracle(const Indec& x, const Indec& y);

}  // namespace ctube
