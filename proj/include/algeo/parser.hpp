#pragma once

#include <string>
#include <vector>

#include "algeo/signature.hpp"
#include "algeo/term.hpp"

namespace algeo {

// Prefix term grammar:
//   term := var | const-symbol | "(" symbol term+ ")"
//   var  := "x" digits | "y" digits
// Both x- and y-forms denote the same 1-based variable space; the printer
// always emits x-forms.
Term parse_term(const std::string& text, const Signature& sig, int var_count);

// equation := term "=" term
Equation parse_equation(const std::string& text, const Signature& sig, int var_count);

// System file: one equation per line; '#' starts a comment; blank lines
// ignored. `path` is used in diagnostics only.
std::vector<Equation> parse_system(const std::string& text, const Signature& sig, int var_count,
                                   const std::string& path = "<string>");

// Substitution file: one term over x1..x|target_vars| per line (line j is the
// image of yj); '#' comments and blank lines as in system files.
Substitution parse_substitution(const std::string& text, const Signature& sig, int target_vars,
                                const std::string& path = "<string>");

}  // namespace algeo
