#pragma once

#include <string>

#include "kron/invariants.hpp"
#include "kron/pencil.hpp"

namespace kron {

enum class JsonKind { Invariants, Pencil };

// Schema detection by top-level fields: a document with any pencil field is
// a pencil, anything else must validate as invariants (the empty object is
// the empty invariant set).
JsonKind detect_json_kind(const std::string& text);

// Serializations are deterministic: fixed key order, two-space indentation,
// ending in one newline, rationals rendered as strings.
std::string invariants_to_json(const KroneckerInvariants& inv);
std::string pencil_to_json(const Pencil& p);

// Parsers validate strictly and throw ParseError naming the offending
// field. Part lists and regular points are normalized on input.
KroneckerInvariants invariants_from_json(const std::string& text);
Pencil pencil_from_json(const std::string& text);

}  // namespace kron
