#pragma once

#include <string>

#include "qpoly/mpoly.hpp"
#include "qpoly/qstate.hpp"
#include "qpoly/teleport.hpp"

namespace qpoly::io {

/// State document: {"n": integer, "amplitudes": [[re, im], ...]} with
/// amplitudes in index order.
std::string state_to_json(const QubitState& s);

/// Throws FileFormatError on structural problems (bad JSON, missing fields,
/// wrong-length arrays); NotNormalized propagates from state validation.
QubitState state_from_json(const std::string& text);

/// Polynomial document: {"nvars": integer, "coeffs": [[re, im], ...]}.
std::string poly_to_json(const MultilinearPoly& p);

MultilinearPoly poly_from_json(const std::string& text);

/// Basis document: {"T": [[ [re, im] x4 ] x4]}; reading validates through
/// make_basis, so NotUnitary propagates.
std::string basis_to_json(const EntangledBasis& b);

EntangledBasis basis_from_json(const std::string& text);

/// Throws FileFormatError when the file cannot be opened or read.
std::string read_text_file(const std::string& path);

/// Throws FileFormatError when the file cannot be created or written.
void write_text_file(const std::string& path, const std::string& content);

} // namespace qpoly::io
