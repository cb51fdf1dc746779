#pragma once

#include <string>

#include "blw/hilbert.hpp"
#include "blw/nd.hpp"

namespace blw {

/// Natural deduction proof files are JSON trees of nodes
///   { "rule": "ImpI", "sequent": "|- p -> p", "premises": [ ... ] }
/// with sequents in surface syntax; "premises" may be omitted when empty.
/// Malformed documents, unknown rule names and unparseable sequents raise
/// std::invalid_argument or ParseError. Loading does not check the proof.
NDProof load_nd_proof(const std::string& json_text);
std::string save_nd_proof(const NDProof& p);

/// Hilbert proof files are JSON of the shape
///   { "lines": [ { "formula": "p -> p", "axiom": "A1" },
///                { "formula": "...", "mp": [i, j] }, ... ] }
/// with 1-based line references.
HilbertProof load_hilbert_proof(const std::string& json_text);
std::string save_hilbert_proof(const HilbertProof& p);

}  // namespace blw
