#include "mdiag/parser.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "mdiag/constructions.hpp"
#include "mdiag/errors.hpp"

namespace mdiag {

namespace {

struct Node {
  enum Kind { Sum, Product, Scalar, Gen, Call } kind = Scalar;
  std::size_t pos = 0;
  Rational value = 0;
  Generator gen;
  std::string name;
  std::vector<int> ints;
  std::string sym;
  std::vector<Node> children;
  std::vector<Rational> signs;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Node parse() {
    Node e = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, p_); }

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool peek(char c) {
    skip();
    return p_ < s_.size() && s_[p_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++p_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() {
    skip();
    return p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]));
  }
  std::string digits() {
    skip();
    std::size_t start = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (start == p_) fail("expected a nonnegative integer");
    return std::string(s_.substr(start, p_ - start));
  }
  int integer() {
    std::size_t start = p_;
    std::string d = digits();
    if (d.size() > 6) {
      p_ = start;
      fail("index too large");
    }
    return std::stoi(d);
  }
  Rational rational() {
    std::string num = digits();
    if (accept('/')) {
      std::size_t at = p_;
      std::string den = digits();
      Rational r;
      try {
        r = parse_rational(num + "/" + den);
      } catch (const ConfigError&) {
        p_ = at;
        fail("zero denominator");
      }
      return r;
    }
    return Rational(Integer(num));
  }
  std::string identifier() {
    skip();
    std::size_t start = p_;
    if (p_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) {
      ++p_;
      while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    }
    if (start == p_) fail("expected a name");
    return std::string(s_.substr(start, p_ - start));
  }
  std::vector<int> index_list() {
    std::vector<int> out{integer()};
    while (accept(',')) out.push_back(integer());
    return out;
  }

  Node expr() {
    Node sum;
    sum.kind = Node::Sum;
    skip();
    sum.pos = p_;
    Rational sign = accept('-') ? -1 : 1;
    if (sign == 1) accept('+');
    while (true) {
      sum.children.push_back(term());
      sum.signs.push_back(sign);
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
    }
    return sum;
  }

  Node term() {
    Node prod;
    prod.kind = Node::Product;
    skip();
    prod.pos = p_;
    prod.children.push_back(factor());
    bool leading_scalar = prod.children.back().kind == Node::Scalar;
    while (true) {
      if (accept('*')) {
        prod.children.push_back(factor());
      } else if (leading_scalar && prod.children.size() == 1 && starts_factor()) {
        prod.children.push_back(factor());
      } else {
        break;
      }
    }
    return prod;
  }

  bool starts_factor() {
    skip();
    if (p_ >= s_.size()) return false;
    char c = s_[p_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Node factor() {
    skip();
    Node f;
    f.pos = p_;
    if (p_ >= s_.size()) fail("unexpected end of input");
    if (at_digit()) {
      f.kind = Node::Scalar;
      f.value = rational();
      return f;
    }
    if (accept('(')) {
      Node inner = expr();
      expect(')');
      return inner;
    }
    std::string name = identifier();
    expect('(');
    if (name == "D" || name == "G" || name == "pD") {
      int i = integer();
      expect(',');
      int j = integer();
      expect(')');
      f.kind = Node::Gen;
      f.gen = guard([&] {
        return name == "D" ? Generator::diagonal(i, j) : name == "G" ? Generator::invol_graph(i, j) : Generator::pi_diagonal(i, j);
      }, f.pos);
      return f;
    }
    if (name == "tpD") {
      int i = integer();
      expect(',');
      int j = integer();
      expect(';');
      std::string sym = identifier();
      expect(')');
      f.kind = Node::Gen;
      f.gen = guard([&] { return Generator::twisted_pi_diagonal(i, j, sym); }, f.pos);
      return f;
    }
    if (name.size() > 3 && name.rfind("Sig", 0) == 0 &&
        std::all_of(name.begin() + 3, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int k = std::stoi(name.substr(3));
      auto idx = index_list();
      expect(')');
      if (static_cast<int>(idx.size()) != k + 1) throw ArityError(name + " takes " + std::to_string(k + 1) + " indices");
      f.kind = Node::Gen;
      f.gen = guard([&] { return Generator::sigma(idx); }, f.pos);
      return f;
    }
    f.kind = Node::Call;
    f.name = name;
    if (name == "gamma" || name == "gamma1") {
      f.ints = {integer()};
      expect(';');
      f.sym = identifier();
    } else if (name == "smalldiag") {
      f.ints = index_list();
    } else if (name == "star") {
      f.sym = identifier();
      expect(';');
      f.ints = index_list();
    } else if (name == "deltapm") {
      f.ints = {integer()};
      expect(',');
      f.ints.push_back(integer());
      expect(',');
      if (accept('+'))
        f.ints.push_back(1);
      else if (accept('-'))
        f.ints.push_back(-1);
      else
        fail("expected '+' or '-'");
    } else if (name == "sigma_b") {
      f.ints = {integer()};
      expect(',');
      f.ints.push_back(integer());
      expect(';');
      f.sym = identifier();
    } else if (name == "delta0") {
      f.ints = {integer()};
      expect(',');
      f.ints.push_back(integer());
    } else if (name == "kimura") {
      f.ints = {integer()};
    } else {
      f.kind = Node::Gen;
      f.sym = name;
      f.ints = {integer()};
    }
    expect(')');
    return f;
  }

  template <class F>
  Generator guard(F&& make, std::size_t pos) {
    try {
      return make();
    } catch (const ArityError& e) {
      throw ArityError(std::string(e.what()) + " at position " + std::to_string(pos));
    }
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

// Smallest arity holding every index and constructor.
int needed_arity(const Node& n) {
  switch (n.kind) {
    case Node::Scalar: return 0;
    case Node::Gen: return n.sym.empty() || !n.gen.idx.empty() ? n.gen.max_index() + 1 : n.ints[0] + 1;
    case Node::Call: {
      if (n.name == "gamma") return n.ints[0];
      if (n.name == "gamma1") return n.ints[0] + 1;
      if (n.name == "sigma_b") return n.ints[0] + 1;
      if (n.name == "kimura") return 2 * n.ints[0] + 2;
      if (n.name == "deltapm") return std::max(n.ints[0], n.ints[1]) + 1;
      return *std::max_element(n.ints.begin(), n.ints.end()) + 1;
    }
    default: {
      int a = 0;
      for (const auto& c : n.children) a = std::max(a, needed_arity(c));
      return a;
    }
  }
}

CycleExpr lift(const CycleExpr& e, int arity) {
  if (e.arity() == arity) return e;
  std::vector<int> placement(e.arity());
  std::iota(placement.begin(), placement.end(), 0);
  return pullback(e, placement, arity);
}

CycleExpr eval(const Node& n, const ModelPtr& model, int arity) {
  switch (n.kind) {
    case Node::Scalar: return n.value * CycleExpr::one(arity, model);
    case Node::Gen: {
      if (!n.gen.idx.empty()) return CycleExpr::generator(arity, model, n.gen);
      const Generator g = model->role(n.sym) == SymbolRole::Point ? Generator::point(n.ints[0], n.sym)
                                                                  : Generator::divisor(n.ints[0], n.sym);
      return CycleExpr::generator(arity, model, g);
    }
    case Node::Call: {
      const auto& v = n.ints;
      CycleExpr e(arity, model);
      if (n.name == "gamma") e = gamma_m(v[0], n.sym, model);
      else if (n.name == "gamma1") e = gamma_1m(v[0], n.sym, model);
      else if (n.name == "smalldiag") e = small_diagonal(arity, model, v);
      else if (n.name == "star") e = star_power(arity, model, n.sym, v);
      else if (n.name == "deltapm") e = delta_pm(arity, model, v[0], v[1], v[2]);
      else if (n.name == "sigma_b") e = sigma_b_expansion(v[0], v[1], n.sym, model);
      else if (n.name == "delta0") e = delta0(arity, model, v[0], v[1]);
      else if (n.name == "kimura") e = kimura_class(v[0], model);
      return lift(e, arity);
    }
    case Node::Product: {
      CycleExpr e = eval(n.children.front(), model, arity);
      for (std::size_t k = 1; k < n.children.size(); ++k) e = mul(e, eval(n.children[k], model, arity));
      return e;
    }
    case Node::Sum: {
      std::vector<CycleExpr> parts;
      for (std::size_t k = 0; k < n.children.size(); ++k)
        parts.push_back(n.signs[k] * eval(n.children[k], model, arity));
      CycleExpr e(arity, model);
      for (const auto& p : parts) e += p;
      return e;
    }
  }
  return CycleExpr(arity, model);
}

}  // namespace

CycleExpr parse_expr(std::string_view text, ModelPtr model, std::optional<int> arity) {
  Node root = Parser(text).parse();
  const int need = needed_arity(root);
  if (arity && *arity < need)
    throw ArityError("expression needs X^" + std::to_string(need) + " but arity " + std::to_string(*arity) +
                     " was declared");
  return eval(root, model, arity.value_or(need));
}

}  // namespace mdiag
