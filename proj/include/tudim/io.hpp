#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tudim/matrix.hpp"

namespace tudim {

struct HPolyhedron;

// Shared repo-wide matrix text format:
//   line 1: "m n"
//   then m lines of n whitespace-separated entries
// Integer entries are decimal; rationals are "p/q".
IntMatrix read_int_matrix(std::istream& in);
RatMatrix read_rat_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMatrix& m);
void write_matrix(std::ostream& out, const RatMatrix& m);

// Instance file: matrix block for A, one line for b, then one line each for
// lb and ub using "inf"/"-inf" sentinels for absent bounds.
HPolyhedron read_instance(std::istream& in);
void write_instance(std::ostream& out, const HPolyhedron& p);

// JSON encodings keep integers bit-exact as decimal strings.
nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json matrix_to_json(const RatMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);
RatMatrix rat_matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const IntVector& v);
nlohmann::json vector_to_json(const RatVector& v);
IntVector int_vector_from_json(const nlohmann::json& j);
RatVector rat_vector_from_json(const nlohmann::json& j);

nlohmann::json polyhedron_to_json(const HPolyhedron& p);
HPolyhedron polyhedron_from_json(const nlohmann::json& j);

}  // namespace tudim
