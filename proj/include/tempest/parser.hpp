#pragma once

#include <string_view>

#include "tempest/ast.hpp"
#include "tempest/lexer.hpp"

namespace tempest {

// Parses a whole definition file.  Syntax problems are reported through
// `diags` with statement-level recovery (skip to the next '.'), so several
// errors can be reported in one pass.  The returned Program contains every
// statement that parsed cleanly.
Program parse_program(std::string_view src, Diagnostics& diags);

}  // namespace tempest
