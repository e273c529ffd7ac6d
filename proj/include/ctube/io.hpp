#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ctube/rigid.hpp"
#include "ctube/seed.hpp"

namespace ctube {

/* Serialization and parsing shared by the CLI and the tests. JSON shapes:
   an indecomposable is {"a":int,"b":int}; a direct sum is a list of those
   (empty = zero object); matrices are row-major arrays of integer arrays;
   big integers travel as decimal strings. All output is UTF-8 with LF line
   endings and deterministic ordering. */

nlohmann::json to_json(const Indec& x);
nlohmann::json to_json(const TubeObject& xs);
nlohmann::json to_json(const MaximalRigid& t);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const LaurentPoly& v);
nlohmann::json to_json(const ClusterRecord& r);

// "(a,b)" with optional spaces.
Indec parse_indec(const std::string& s, int p);
// Semicolon-separated "(a,b)" list; the length-n summand may sit anywhere
// and is re-pinned to slot 1.
MaximalRigid parse_maximal_rigid(const std::string& s, int n);

// CSV table of (object, den, g) triples, one record per line.
std::string records_csv(const std::vector<ClusterRecord>& records);

// Exchange graph exports: nodes are clusters labeled by their object
// multisets, edges are mutations labeled by direction.
std::string exchange_graph_dot(const PatternResult& pattern);
nlohmann::json exchange_graph_json(const PatternResult& pattern);

// Canonical pretty-printed JSON: two-space indent, sorted keys, trailing
// newline. The golden fixture comparison is byte-exact against this form.
std::string dump_json(const nlohmann::json& j);

}  // namespace ctube
