#include "mdiag/printer.hpp"

namespace mdiag {

std::string to_text(const Generator& g) {
  std::string head;
  switch (g.kind) {
    case GenKind::Diagonal: head = "D"; break;
    case GenKind::InvolGraph: head = "G"; break;
    case GenKind::PiDiagonal: head = "pD"; break;
    case GenKind::TwistedPiDiagonal: head = "tpD"; break;
    case GenKind::Sigma: head = "Sig" + std::to_string(g.sigma_order()); break;
    case GenKind::PointCycle:
    case GenKind::Divisor: head = g.symbol; break;
  }
  std::string out = head + "(";
  for (std::size_t k = 0; k < g.idx.size(); ++k) out += (k ? "," : "") + std::to_string(g.idx[k]);
  if (g.kind == GenKind::TwistedPiDiagonal) out += ";" + g.symbol;
  return out + ")";
}

std::string to_text(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& g : m.generators()) {
    if (!out.empty()) out += "*";
    out += to_text(g);
  }
  return out;
}

std::string to_text(const CycleExpr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += to_text(m);
    }
  }
  return out;
}

}  // namespace mdiag
