#pragma once

#include <string>

#include "mdiag/cycle_expr.hpp"

namespace mdiag {

/// Canonical text in the expression grammar: D(i,j), G(i,j), pD(i,j),
/// tpD(i,j;s), Sig<k>(i,...), s(i); "0" for the zero expression and "1" for
/// the empty monomial. parse_expr(to_text(e)) == e.
std::string to_text(const Generator& g);
std::string to_text(const Monomial& m);
std::string to_text(const CycleExpr& e);

}  // namespace mdiag
