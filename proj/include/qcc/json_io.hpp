#pragma once

#include <string>

#include "qcc/codes.hpp"

namespace qcc {

/// Code artifact as a JSON document:
///   {"field": {"p", "ell", "modulus"}, "n", "lambda", "kind",
///    "generators": [[element index, ...], ...]}
/// The generators written are the canonical basis rows, so the text is a
/// deterministic function of the row space.  Extra keys are ignored on
/// read; any malformed or inconsistent input raises BadArtifact.
std::string code_to_json(const QuasiCode &C);
QuasiCode code_from_json(const std::string &text);

} // namespace qcc
