#include <string>

#include "mdiag/errors.hpp"
#include "mdiag/relations.hpp"

namespace mdiag::relations {

namespace {

using G = Generator;
using P = GenPattern;
constexpr int x = 0, y = 1, z = 2;
constexpr int s = 0, t = 1;

Replacement zero(const Binding&) { return {}; }

RewriteRule rule(std::string name, std::vector<P> lhs, int index_vars, int symbol_vars,
                 std::vector<std::pair<int, int>> less, std::function<Replacement(const Binding&)> rhs) {
  RewriteRule r;
  r.name = std::move(name);
  r.lhs = std::move(lhs);
  r.index_vars = index_vars;
  r.symbol_vars = symbol_vars;
  r.less = std::move(less);
  r.rhs = std::move(rhs);
  return r;
}

Generator edge(bool graph, int i, int j) { return graph ? G::invol_graph(i, j) : G::diagonal(i, j); }

}  // namespace

RelationSet trivial() {
  RelationSet rs;
  rs.name = "trivial";
  rs.rules.push_back(rule("T1:pp", {P::unary(GenKind::PointCycle, x, s), P::unary(GenKind::PointCycle, x, t)}, 1, 2, {},
                          zero));
  rs.rules.push_back(rule("T1:dp", {P::unary(GenKind::Divisor, x, s), P::unary(GenKind::PointCycle, x, t)}, 1, 2, {},
                          zero));
  rs.rules.push_back(rule("T2:fork", {P::diagonal(x, y), P::diagonal(x, z)}, 3, 0, {{x, y}, {y, z}},
                          [](const Binding& b) -> Replacement {
                            return {{{G::diagonal(b.idx[x], b.idx[y]), G::diagonal(b.idx[y], b.idx[z])}, 1}};
                          }));
  rs.rules.push_back(rule("T2:join", {P::diagonal(x, z), P::diagonal(y, z)}, 3, 0, {{x, y}, {y, z}},
                          [](const Binding& b) -> Replacement {
                            return {{{G::diagonal(b.idx[x], b.idx[y]), G::diagonal(b.idx[y], b.idx[z])}, 1}};
                          }));
  rs.rules.push_back(rule("T3:point", {P::diagonal(x, y), P::unary(GenKind::PointCycle, x, s)}, 2, 1, {{x, y}},
                          [](const Binding& b) -> Replacement {
                            return {{{G::diagonal(b.idx[x], b.idx[y]), G::point(b.idx[y], b.sym[s])}, 1}};
                          }));
  rs.rules.push_back(rule("T3:divisor", {P::diagonal(x, y), P::unary(GenKind::Divisor, x, s)}, 2, 1, {{x, y}},
                          [](const Binding& b) -> Replacement {
                            return {{{G::diagonal(b.idx[x], b.idx[y]), G::divisor(b.idx[y], b.sym[s])}, 1}};
                          }));
  rs.clearing.diagonal_transport = true;
  return rs;
}

RelationSet point_relation(const std::string& sym) {
  RelationSet rs;
  rs.name = "point(" + sym + ")";
  rs.rules.push_back(rule("point(" + sym + ")", {P::diagonal(x, y), P::unary_literal(GenKind::PointCycle, x, sym)}, 2,
                          0, {}, [sym](const Binding& b) -> Replacement {
                            return {{{G::point(b.idx[x], sym), G::point(b.idx[y], sym)}, 1}};
                          }));
  return rs;
}

RelationSet bv_k3(const BvParams& params) {
  RelationSet rs = trivial() + point_relation(params.point);
  rs.name = "bv_k3";
  const std::string o = params.point;
  auto degrees = params.degrees;
  rs.rules.push_back(rule("B1", {P::unary(GenKind::Divisor, x, s), P::unary(GenKind::Divisor, x, t)}, 1, 2, {},
                          [o, degrees](const Binding& b) -> Replacement {
                            auto it = degrees.find({b.sym[s], b.sym[t]});
                            if (it == degrees.end()) it = degrees.find({b.sym[t], b.sym[s]});
                            if (it == degrees.end())
                              throw ConfigError("bv_k3: no intersection number for " + b.sym[s] + "." + b.sym[t]);
                            return {{{G::point(b.idx[x], o)}, it->second}};
                          }));
  rs.rules.push_back(rule("B2", {P::diagonal(x, y), P::unary(GenKind::Divisor, x, s)}, 2, 1, {},
                          [o](const Binding& b) -> Replacement {
                            const int i = b.idx[x], j = b.idx[y];
                            return {{{G::divisor(i, b.sym[s]), G::point(j, o)}, 1},
                                    {{G::point(i, o), G::divisor(j, b.sym[s])}, 1}};
                          }));
  rs.rules.push_back(rule("B3", {P::diagonal(x, y), P::diagonal(x, y)}, 2, 0, {{x, y}},
                          [o, e = params.euler](const Binding& b) -> Replacement {
                            return {{{G::point(b.idx[x], o), G::point(b.idx[y], o)}, e}};
                          }));
  rs.rules.push_back(rule("B4", {P::diagonal(x, y), P::diagonal(y, z)}, 3, 0, {{x, y}, {y, z}},
                          [o](const Binding& b) -> Replacement {
                            const int i = b.idx[x], j = b.idx[y], k = b.idx[z];
                            return {{{G::point(i, o), G::diagonal(j, k)}, 1},
                                    {{G::point(j, o), G::diagonal(i, k)}, 1},
                                    {{G::point(k, o), G::diagonal(i, j)}, 1},
                                    {{G::point(i, o), G::point(j, o)}, -1},
                                    {{G::point(i, o), G::point(k, o)}, -1},
                                    {{G::point(j, o), G::point(k, o)}, -1}};
                          }));
  return rs;
}

RelationSet cover_double(const std::vector<std::string>& invariant, const std::vector<std::string>& branch) {
  RelationSet rs = trivial();
  rs.name = "cover_double";
  auto kind = [](bool graph) { return graph ? GenKind::InvolGraph : GenKind::Diagonal; };
  auto tag = [](bool graph) { return graph ? 'G' : 'D'; };
  for (int la = 0; la < 2; ++la) {
    for (int lb = 0; lb < 2; ++lb) {
      if (!la && !lb) continue;  // plain diagonals: T2
      const bool a = la, bb = lb, c = a != bb;
      const std::string labels = {tag(a), tag(bb)};
      rs.rules.push_back(rule("C1:fork:" + labels, {P::binary(kind(a), x, y), P::binary(kind(bb), x, z)}, 3, 0,
                              {{x, y}, {y, z}}, [a, c](const Binding& b) -> Replacement {
                                return {{{edge(a, b.idx[x], b.idx[y]), edge(c, b.idx[y], b.idx[z])}, 1}};
                              }));
      rs.rules.push_back(rule("C1:join:" + labels, {P::binary(kind(a), x, z), P::binary(kind(bb), y, z)}, 3, 0,
                              {{x, y}, {y, z}}, [bb, c](const Binding& b) -> Replacement {
                                return {{{edge(c, b.idx[x], b.idx[y]), edge(bb, b.idx[y], b.idx[z])}, 1}};
                              }));
    }
  }
  if (!branch.empty()) {
    P pb = P::unary(GenKind::PointCycle, x, s);
    pb.symbol_in = branch;
    rs.rules.push_back(rule("C3", {pb, P::invol_graph(x, y)}, 2, 1, {}, [](const Binding& b) -> Replacement {
      return {{{G::point(b.idx[x], b.sym[s]), G::diagonal(b.idx[x], b.idx[y])}, 1}};
    }));
  }
  std::vector<std::string> fixed = invariant;
  fixed.insert(fixed.end(), branch.begin(), branch.end());
  if (!fixed.empty()) {
    P pi = P::unary(GenKind::PointCycle, x, s);
    pi.symbol_in = fixed;
    rs.rules.push_back(rule("C2", {P::invol_graph(x, y), pi}, 2, 1, {{x, y}}, [](const Binding& b) -> Replacement {
      return {{{G::invol_graph(b.idx[x], b.idx[y]), G::point(b.idx[y], b.sym[s])}, 1}};
    }));
  }
  rs.rules.push_back(rule("C0:pi", {P::pi_diagonal(x, y)}, 2, 0, {{x, y}}, [](const Binding& b) -> Replacement {
    return {{{G::diagonal(b.idx[x], b.idx[y])}, 1}, {{G::invol_graph(b.idx[x], b.idx[y])}, 1}};
  }));
  {
    P tw = P::binary(GenKind::TwistedPiDiagonal, x, y);
    tw.symbol_var = s;
    rs.rules.push_back(rule("C0:twisted", {tw}, 2, 1, {}, [](const Binding& b) -> Replacement {
      return {{{G::pi_diagonal(b.idx[x], b.idx[y])}, 1}, {{G::point(b.idx[y], b.sym[s])}, -2}};
    }));
  }
  rs.clearing.involution_transport = true;
  rs.clearing.invariant_symbols.insert(fixed.begin(), fixed.end());
  rs.clearing.cover_degree = 2;
  return rs;
}

RelationSet cover_degree(int d, bool with_vanishing) {
  if (d < 2) throw ConfigError("cover degree must be at least 2, got " + std::to_string(d));
  RelationSet rs = trivial();
  rs.name = with_vanishing ? "cover_degree(" + std::to_string(d) + ")" : "recursion(" + std::to_string(d) + ")";
  if (with_vanishing) rs.rules.push_back(rule("A3", {P::sigma(d, 1 << 20)}, 0, 0, {}, zero));
  rs.rules.push_back(rule("A2", {P::sigma(2, 1 << 20)}, 0, 0, {}, [](const Binding& b) -> Replacement {
    const auto& tu = b.tuple;
    const std::size_t k = tu.size() - 2;  // tuple is Sigma_{k+1}
    std::vector<int> head(tu.begin(), tu.end() - 1);
    const int last = tu.back();
    auto sig = [](std::vector<int> idx) { return idx.size() == 1 ? std::vector<G>{} : std::vector<G>{G::sigma(idx)}; };
    Replacement out;
    auto first = sig(head);
    first.push_back(G::sigma({tu[0], last}));
    out.emplace_back(std::move(first), 1);
    for (std::size_t i = 1; i <= k; ++i) {
      auto term = sig(head);
      term.push_back(G::diagonal(tu[i], last));
      out.emplace_back(std::move(term), -1);
    }
    return out;
  }));
  rs.rules.push_back(rule("A1", {P::sigma(1, 1)}, 0, 0, {}, [](const Binding& b) -> Replacement {
    return {{{G::pi_diagonal(b.tuple[0], b.tuple[1])}, 1}, {{G::diagonal(b.tuple[0], b.tuple[1])}, -1}};
  }));
  rs.clearing.cover_degree = d;
  return rs;
}

DropRule e_ideal() { return DropRule{"E", GenKind::PiDiagonal, 0, std::nullopt, 1}; }

RelationSet decorate(int d, const std::string& b) {
  RelationSet rs;
  rs.name = "decorate(" + std::to_string(d) + "," + b + ")";
  RewriteRule r = rule("Ea(" + b + ")", {P::pi_diagonal(x, y)}, 2, 0, {}, [d, b](const Binding& bd) -> Replacement {
    return {{{G::point(bd.idx[y], b)}, Rational(d)}};
  });
  r.fixed = {{x, 0}};
  rs.rules.push_back(std::move(r));
  rs.merge(point_relation(b));
  rs.name = "decorate(" + std::to_string(d) + "," + b + ")";
  rs.clearing.cover_degree = d;
  return rs;
}

RelationSet hypothesis_ideal(int m, const std::string& sym) {
  if (m < 1) throw ConfigError("hypothesis ideal needs m >= 1");
  RelationSet rs;
  rs.name = "hypothesis(" + std::to_string(m) + "," + sym + ")";
  rs.drops.push_back(DropRule{rs.name, GenKind::TwistedPiDiagonal, 0, sym, m});
  return rs;
}

}  // namespace mdiag::relations
