#include "mdiag/cycle_expr.hpp"

#include <algorithm>
#include <string>

#include "mdiag/errors.hpp"

namespace mdiag {

Monomial::Monomial(std::vector<Generator> generators) : gens_(std::move(generators)) {
  std::sort(gens_.begin(), gens_.end());
}

int Monomial::codim(int n) const {
  int c = 0;
  for (const auto& g : gens_) c += g.codim(n);
  return c;
}

int Monomial::max_index() const {
  int m = -1;
  for (const auto& g : gens_) m = std::max(m, g.max_index());
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.gens_.reserve(gens_.size() + other.gens_.size());
  std::merge(gens_.begin(), gens_.end(), other.gens_.begin(), other.gens_.end(), std::back_inserter(r.gens_));
  return r;
}

Monomial Monomial::without(std::span<const std::size_t> positions) const {
  Monomial r;
  r.gens_.reserve(gens_.size());
  std::size_t p = 0;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (p < positions.size() && positions[p] == k) {
      ++p;
      continue;
    }
    r.gens_.push_back(gens_[k]);
  }
  return r;
}

CycleExpr::CycleExpr(int arity, ModelPtr model) : arity_(arity), model_(std::move(model)) {
  if (arity_ < 0) throw ArityError("negative arity");
  if (!model_) throw ConfigError("cycle expression without a variety model");
}

CycleExpr CycleExpr::from_terms(int arity, ModelPtr model, std::span<const Term> terms) {
  CycleExpr e(arity, std::move(model));
  for (const auto& [m, c] : terms) e.add_term(m, c);
  return e;
}

CycleExpr CycleExpr::one(int arity, ModelPtr model) {
  CycleExpr e(arity, std::move(model));
  e.terms_.emplace(Monomial{}, Rational(1));
  return e;
}

CycleExpr CycleExpr::generator(int arity, ModelPtr model, Generator g, Rational coefficient) {
  CycleExpr e(arity, std::move(model));
  e.add_term(Monomial({std::move(g)}), coefficient);
  return e;
}

std::optional<int> CycleExpr::codim() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.codim(model_->dimension);
}

Rational CycleExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CycleExpr::check_monomial(const Monomial& m) const {
  for (const auto& g : m.generators()) {
    if (g.max_index() >= arity_)
      throw ArityError(std::string(kind_name(g.kind)) + " index " + std::to_string(g.max_index()) +
                       " out of range for X^" + std::to_string(arity_));
    if (g.is_unary()) {
      SymbolRole want = g.kind == GenKind::PointCycle ? SymbolRole::Point : SymbolRole::Divisor;
      if (model_->role(g.symbol) != want)
        throw UnknownSymbolError("symbol '" + g.symbol + "' used as " +
                                 (want == SymbolRole::Point ? "a point class" : "a divisor") +
                                 " but declared otherwise");
    } else if (g.kind == GenKind::TwistedPiDiagonal) {
      if (model_->role(g.symbol) != SymbolRole::Point)
        throw UnknownSymbolError("twisted PiDiagonal needs a point symbol, got '" + g.symbol + "'");
    }
  }
}

void CycleExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  check_monomial(m);
  if (!terms_.empty()) {
    const int n = model_->dimension;
    if (m.codim(n) != terms_.begin()->first.codim(n))
      throw HomogeneityError("mixed codimension: " + std::to_string(m.codim(n)) + " vs " +
                             std::to_string(terms_.begin()->first.codim(n)));
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

// Models built separately (e.g. loaded from a file) are interchangeable when
// dimension and symbol table agree.
bool same_variety(const ModelPtr& a, const ModelPtr& b) {
  return a == b || (a->dimension == b->dimension && a->symbols == b->symbols);
}

}  // namespace

void CycleExpr::check_compatible(const CycleExpr& other, const char* op) const {
  if (arity_ != other.arity_)
    throw ArityError(std::string(op) + ": arity mismatch X^" + std::to_string(arity_) + " vs X^" +
                     std::to_string(other.arity_));
  if (!same_variety(model_, other.model_))
    throw ConfigError(std::string(op) + ": expressions over different varieties");
}

CycleExpr& CycleExpr::operator+=(const CycleExpr& other) {
  check_compatible(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

CycleExpr& CycleExpr::operator-=(const CycleExpr& other) {
  check_compatible(other, "subtract");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

CycleExpr& CycleExpr::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

CycleExpr CycleExpr::operator-() const {
  CycleExpr r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool CycleExpr::operator==(const CycleExpr& other) const {
  return arity_ == other.arity_ && terms_ == other.terms_ &&
         same_variety(model_, other.model_);
}

CycleExpr mul(const CycleExpr& a, const CycleExpr& b) {
  if (a.arity() != b.arity())
    throw ArityError("mul: arity mismatch X^" + std::to_string(a.arity()) + " vs X^" + std::to_string(b.arity()));
  if (!same_variety(a.model(), b.model()))
    throw ConfigError("mul: expressions over different varieties");
  CycleExpr r(a.arity(), a.model());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) r.add_term(ma * mb, ca * cb);
  return r;
}

CycleExpr operator*(const CycleExpr& a, const CycleExpr& b) { return mul(a, b); }

CycleExpr product(std::span<const CycleExpr> factors) {
  if (factors.empty()) throw ArityError("product of an empty list has no arity");
  CycleExpr r = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) r = mul(r, factors[k]);
  return r;
}

CycleExpr canonicalize(const CycleExpr& e) {
  std::vector<Term> raw(e.terms().begin(), e.terms().end());
  return CycleExpr::from_terms(e.arity(), e.model(), raw);
}

CycleExpr pullback(const CycleExpr& e, std::span<const int> placement, int m) {
  if (static_cast<int>(placement.size()) != e.arity())
    throw ArityError("pullback: placement has " + std::to_string(placement.size()) + " entries for X^" +
                     std::to_string(e.arity()));
  std::vector<bool> hit(static_cast<std::size_t>(std::max(m, 0)), false);
  for (int t : placement) {
    if (t < 0 || t >= m) throw ArityError("pullback: placement target " + std::to_string(t) + " outside X^" + std::to_string(m));
    if (hit[t]) throw ArityError("pullback: placement is not injective");
    hit[t] = true;
  }
  CycleExpr r(m, e.model());
  for (const auto& [mono, c] : e.terms()) {
    std::vector<Generator> gens;
    gens.reserve(mono.size());
    for (const auto& g : mono.generators()) gens.push_back(g.relabel([&](int i) { return placement[i]; }));
    r.add_term(Monomial(std::move(gens)), c);
  }
  return r;
}

CycleExpr permute(const CycleExpr& e, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != e.arity()) throw ArityError("permute: permutation size differs from arity");
  return pullback(e, sigma, e.arity());
}

}  // namespace mdiag
