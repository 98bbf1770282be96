#pragma once

#include <json.hpp>
#include <string>

#include "pants/cat/star_sum.hpp"

namespace pants::io {

// Keys are emitted in insertion order so identical inputs reproduce
// byte-identical documents.
using Json = nlohmann::ordered_json;

/// Matrices are arrays of rows of rational strings ("p/q", or "p" when the
/// denominator is 1), row-major.
Json matrix_to_json(const cat::RatMatrix& m);

/// `where` prefixes error positions, e.g. "outer[1].map". Throws ParseError
/// naming the offending cell on malformed rationals or ragged rows.
cat::RatMatrix matrix_from_json(const Json& j, const std::string& where);

/// {"n": int, "dimV": int, "outer": [{"dim": int, "map": [[..]]}, ..]}
Json rep_to_json(const cat::StarSumRep& rep);
cat::StarSumRep rep_from_json(const Json& j);

/// {"dim": int, "m": [[..]]}
Json autpair_to_json(const cat::AutPair& a);
cat::AutPair autpair_from_json(const Json& j);

Json validation_to_json(const cat::ValidationReport& report);
Json classification_to_json(const cat::ClassificationResult& res);
Json witness_to_json(const cat::RoundTripWitness& w);

/// Parse a document, rethrowing malformed JSON as ParseError with the
/// line/column computed from the byte offset.
Json parse_document(const std::string& text, const std::string& filename);

/// Reads and parses a file; ParseError on unreadable input.
Json load_document(const std::string& path);

}  // namespace pants::io
