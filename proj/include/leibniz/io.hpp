#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "leibniz/algebra.hpp"
#include "leibniz/dim1.hpp"
#include "leibniz/metabelian.hpp"

namespace leibniz::io {

// Input documents are YAML (JSON documents are accepted as a subset). Every parse
// failure throws ParseError carrying the 1-based line of the offending node.
//
// Algebra:   field: Q | {GF: p}
//            dim: n
//            brackets: [[i, j, k, "coeff"], ...]      # 1-based, duplicates summed
// Datum:     field, kind: leibniz | lie, v_dim, p_dim, then sparse [.., .., y, "c"] lists
//            left_act [x, p, y, c], right_act [p, x, y, c], f [p, q, y, c]  (leibniz)
//            act [p, x, y, c], f [p, q, y, c]                             (lie)
// Triple:    field, p_dim, lambda: [..], Lambda: [..], f: [[..], ..]   (dense)
// Morphism:  v: [..], u: "c", psi: [[..], ..]                          (dense)

/// "Q", "GF:p" or "GF(p)".
FieldSpec parse_field_flag(std::string_view text);

AlgebraTable parse_algebra(std::string_view text);
AlgebraTable load_algebra(const std::string& path);
/// Canonical form: nonzero entries in (i, j, k) order. serialize(parse(serialize(g)))
/// equals serialize(g).
std::string serialize_algebra(const AlgebraTable& g);

using AnyDatum = std::variant<MetabelianDatum, LieMetabelianDatum>;
AnyDatum parse_datum(std::string_view text);
AnyDatum load_datum(const std::string& path);
std::string serialize_datum(const MetabelianDatum& d);
std::string serialize_datum(const LieMetabelianDatum& d);

Dim1Triple parse_triple(std::string_view text);
Dim1Triple load_triple(const std::string& path);
std::string serialize_triple(const Dim1Triple& t);

/// Field and p_dim come from the triples the morphism connects.
MorphismTriple parse_morphism(std::string_view text, FieldSpec field, std::size_t p_dim);
MorphismTriple load_morphism(const std::string& path, FieldSpec field, std::size_t p_dim);
std::string serialize_morphism(const MorphismTriple& m);

/// Whole file as text; ParseError when unreadable.
std::string read_file(const std::string& path);

/// Peeks at the top-level keys: "datum" when v_dim is present, "triple" for p_dim,
/// otherwise "algebra".
std::string detect_document_kind(std::string_view text);

}  // namespace leibniz::io
