#include "mdiag/generator.hpp"

#include <algorithm>

#include "mdiag/errors.hpp"

namespace mdiag {

const char* kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Diagonal: return "Diagonal";
    case GenKind::InvolGraph: return "InvolGraph";
    case GenKind::PiDiagonal: return "PiDiagonal";
    case GenKind::TwistedPiDiagonal: return "TwistedPiDiagonal";
    case GenKind::Sigma: return "Sigma";
    case GenKind::PointCycle: return "PointCycle";
    case GenKind::Divisor: return "Divisor";
  }
  return "?";
}

void Generator::normalize() {
  for (int i : idx)
    if (i < 0) throw ArityError(std::string(kind_name(kind)) + ": negative index");
  switch (kind) {
    case GenKind::Diagonal:
    case GenKind::InvolGraph:
    case GenKind::PiDiagonal:
      if (idx.size() != 2) throw ArityError(std::string(kind_name(kind)) + " takes two indices");
      if (idx[0] == idx[1])
        throw ArityError(std::string(kind_name(kind)) + "(" + std::to_string(idx[0]) + "," +
                         std::to_string(idx[1]) + ") has a repeated index");
      if (idx[0] > idx[1]) std::swap(idx[0], idx[1]);
      symbol.clear();
      break;
    case GenKind::TwistedPiDiagonal:
      if (idx.size() != 2 || idx[0] == idx[1])
        throw ArityError("TwistedPiDiagonal takes two distinct indices");
      break;
    case GenKind::Sigma:
      if (idx.size() < 2) throw ArityError("Sigma needs at least two indices");
      std::sort(idx.begin(), idx.end());
      if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw ArityError("Sigma has a repeated index");
      symbol.clear();
      break;
    case GenKind::PointCycle:
    case GenKind::Divisor:
      if (idx.size() != 1) throw ArityError(std::string(kind_name(kind)) + " takes one index");
      break;
  }
}

namespace {
Generator make(GenKind kind, std::vector<int> idx, std::string symbol = {}) {
  Generator g{kind, std::move(idx), std::move(symbol)};
  g.normalize();
  return g;
}
}  // namespace

Generator Generator::diagonal(int i, int j) { return make(GenKind::Diagonal, {i, j}); }
Generator Generator::invol_graph(int i, int j) { return make(GenKind::InvolGraph, {i, j}); }
Generator Generator::pi_diagonal(int i, int j) { return make(GenKind::PiDiagonal, {i, j}); }
Generator Generator::twisted_pi_diagonal(int base, int target, std::string symbol) {
  return make(GenKind::TwistedPiDiagonal, {base, target}, std::move(symbol));
}
Generator Generator::sigma(std::vector<int> indices) { return make(GenKind::Sigma, std::move(indices)); }
Generator Generator::point(int i, std::string symbol) {
  return make(GenKind::PointCycle, {i}, std::move(symbol));
}
Generator Generator::divisor(int i, std::string symbol) {
  return make(GenKind::Divisor, {i}, std::move(symbol));
}

bool Generator::touches(int i) const { return std::find(idx.begin(), idx.end(), i) != idx.end(); }

int Generator::max_index() const { return idx.empty() ? -1 : *std::max_element(idx.begin(), idx.end()); }

int Generator::codim(int n) const {
  switch (kind) {
    case GenKind::Divisor: return 1;
    case GenKind::Sigma: return sigma_order() * n;
    default: return n;
  }
}

}  // namespace mdiag
