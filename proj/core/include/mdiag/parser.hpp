#pragma once

#include <optional>
#include <string_view>

#include "mdiag/cycle_expr.hpp"

namespace mdiag {

/// Parses the expression grammar:
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*  |  rational factor ('*' factor)*
///   factor := rational | 'D(' i ',' j ')' | 'G(' i ',' j ')' | 'pD(' i ',' j ')'
///           | 'tpD(' i ',' j ';' sym ')' | 'Sig' k '(' i0 ',' ... ',' ik ')'
///           | sym '(' i ')' | call | '(' expr ')'
///   call   := 'gamma(' m ';' sym ')' | 'gamma1(' m ';' sym ')' | 'smalldiag(' i, ... ')'
///           | 'star(' sym ';' i, ... ')' | 'deltapm(' i ',' j ',' ('+'|'-') ')'
///           | 'sigma_b(' k ',' d ';' sym ')' | 'delta0(' i ',' j ')' | 'kimura(' M ')'
///
/// The ambient arity is `arity` when given, otherwise the smallest one
/// holding every index and every constructor's own arity. Throws ParseError
/// (with byte offset), UnknownSymbolError or ArityError.
CycleExpr parse_expr(std::string_view text, ModelPtr model, std::optional<int> arity = std::nullopt);

}  // namespace mdiag
