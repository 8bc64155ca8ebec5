// JSON serialization with canonical byte output. Three payload formats:
//   lie-v1: a Lie algebra as a sparse bracket table over a labeled basis,
//   ljs-v1: a symplectic Lie-Jordan structure (omega, J2, g0, unit, delta0),
//   cls-v1: a classification table (one row per diagram marking),
// plus the small sl2-triple format {"e": [...], "f": [...], "h": [...]}.
// All rationals are strings "p/q" (or "p" when q = 1); matrices are row-major
// flat arrays. canonical_text emits two-space-indented JSON with keys in
// lexicographic order and a trailing newline, so equal values always produce
// identical bytes. Parsers throw Error(MalformedInput) naming the offending
// key for any shape violation; value-level invariants (skewness of omega,
// bracket axioms, ...) are left to the structure validators downstream.
#ifndef SHORTSL2_SERIALIZE_HPP
#define SHORTSL2_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "shortsl2/lie.hpp"
#include "shortsl2/rootsys.hpp"
#include "shortsl2/sympjordan.hpp"

namespace shortsl2 {

// Two-space indented dump with a trailing newline; object keys are emitted
// in lexicographic order.
std::string canonical_text(const nlohmann::json& j);

// lie-v1: {"brackets": [{"i": .., "j": .., "terms": [[k, "p/q"], ...]}, ...],
//          "dim": N, "labels": ["..", ...]}
// Bracket rows are sorted by (i, j) with i < j, terms by basis index; empty
// brackets are omitted.
nlohmann::json lie_to_json(const LieAlgebra& algebra);
LieAlgebra lie_from_json(const nlohmann::json& j);

// ljs-v1: {"delta0": [{"i": .., "j": .., "value": [..]}, ...], "dim_j1": N,
//          "g0_basis": [[..], ...], "j2_basis": [[..], ...],
//          "omega": [..], "unit": [..]}
// delta0 covers every pair i <= j exactly once (values are coordinates over
// the canonical i0 basis and are empty arrays when i0 = 0).
nlohmann::json structure_to_json(const LieJordanStructure& s);
LieJordanStructure structure_from_json(const nlohmann::json& j);

// {"e": [...], "f": [...], "h": [...]}, each of length dim.
nlohmann::json triple_to_json(const Sl2Triple& t);
Sl2Triple triple_from_json(const nlohmann::json& j, std::size_t dim);

// cls-v1: an array of rows
//   {"dims": [g0, j1, j2], "equivalent_to"?: k, "exists": bool,
//    "g2_dim": .., "marking": [p_1, ...], "note"?: "...",
//    "witness"?: {"e": [...], "f": [...], "h": [...]}}
nlohmann::json classification_to_json(const std::vector<ClassificationRow>& rows);

// Throws MalformedInput when the file cannot be read or is not valid JSON.
nlohmann::json read_json_file(const std::string& path);
// Throws InvalidParameters when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace shortsl2

#endif  // SHORTSL2_SERIALIZE_HPP
