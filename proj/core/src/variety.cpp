#include "mdiag/variety.hpp"

#include <array>
#include <cctype>

#include "mdiag/errors.hpp"

namespace mdiag {

namespace {
std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}
}  // namespace

bool is_reserved_name(const std::string& name) {
  static const std::array<const char*, 13> reserved = {
      "D", "G", "pD", "tpD", "gamma", "gamma1", "smalldiag", "star", "deltapm",
      "sigma_b", "delta0", "kimura", "Sig"};
  for (const char* r : reserved)
    if (name == r) return true;
  return name.rfind("Sig", 0) == 0 && name.size() > 3 &&
         std::isdigit(static_cast<unsigned char>(name[3]));
}

void VarietyModel::validate() const {
  if (dimension < 1)
    throw ConfigError("variety '" + name + "': dimension must be >= 1 (n = 0 models are rejected)");
  for (const auto& [symbol, role] : symbols) {
    if (symbol.empty() || !(std::isalpha(static_cast<unsigned char>(symbol[0])) || symbol[0] == '_'))
      throw ConfigError("variety '" + name + "': bad symbol name '" + symbol + "'");
    for (char c : symbol)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw ConfigError("variety '" + name + "': bad symbol name '" + symbol + "'");
    if (is_reserved_name(symbol))
      throw ConfigError("variety '" + name + "': symbol '" + symbol + "' is a reserved name");
    (void)role;
  }
  for (const auto& [pair, value] : intersections) {
    (void)value;
    for (const auto* s : {&pair.first, &pair.second}) {
      auto it = symbols.find(*s);
      if (it == symbols.end() || it->second != SymbolRole::Divisor)
        throw ConfigError("variety '" + name + "': intersection table names non-divisor '" + *s + "'");
    }
  }
  for (const auto& s : involution_invariant) {
    auto it = symbols.find(s);
    if (it == symbols.end()) throw ConfigError("variety '" + name + "': unknown invariant symbol '" + s + "'");
  }
  if (cover_degree && *cover_degree < 2)
    throw ConfigError("variety '" + name + "': cover degree must be >= 2");
}

SymbolRole VarietyModel::role(const std::string& symbol) const {
  auto it = symbols.find(symbol);
  if (it == symbols.end()) throw UnknownSymbolError("unknown symbol '" + symbol + "' in variety '" + name + "'");
  return it->second;
}

std::optional<Rational> VarietyModel::intersection(const std::string& a, const std::string& b) const {
  auto it = intersections.find(ordered(a, b));
  if (it == intersections.end()) return std::nullopt;
  return it->second;
}

void VarietyModel::set_intersection(const std::string& a, const std::string& b, Rational value) {
  intersections[ordered(a, b)] = std::move(value);
}

ModelPtr make_variety(VarietyModel model) {
  model.validate();
  return std::make_shared<const VarietyModel>(std::move(model));
}

ModelPtr generic_variety(int dimension) {
  VarietyModel v;
  v.name = "generic";
  v.dimension = dimension;
  for (const char* p : {"a", "b", "o", "pt"}) v.symbols[p] = SymbolRole::Point;
  for (const char* d : {"L", "K"}) v.symbols[d] = SymbolRole::Divisor;
  return make_variety(std::move(v));
}

}  // namespace mdiag
