#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mdiag/errors.hpp"
#include "mdiag/relations.hpp"

namespace mdiag::relations {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    std::string part(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    auto first = part.find_first_not_of(" \t");
    auto last = part.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? std::string() : part.substr(first, last - first + 1));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& s, const std::string& token) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("relation token '" + token + "': expected an integer, got '" + s + "'");
}

Rational rational_field(const nlohmann::json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ConfigError(what + ": rationals are written as integers or \"p/q\" strings");
}

RelationSet token_set(const std::string& token, const Params& params) {
  auto parts = split(token, ':');
  const std::string& head = parts[0];
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi)
      throw ConfigError("relation token '" + token + "' has the wrong number of arguments");
  };
  if (head == "trivial") {
    want(0, 0);
    return trivial();
  }
  if (head == "point") {
    want(1, 1);
    return point_relation(parts[1]);
  }
  if (head == "bv_k3") {
    want(0, 2);
    BvParams bv = params.bv;
    if (parts.size() > 1) bv.point = parts[1];
    if (parts.size() > 2) bv.euler = parse_rational(parts[2]);
    return bv_k3(bv);
  }
  if (head == "cover_double") {
    want(0, 0);
    return cover_double(params.invariant, params.branch);
  }
  if (head == "cover_degree" || head == "recursion") {
    want(1, 1);
    return cover_degree(parse_int(parts[1], token), head == "cover_degree");
  }
  if (head == "E") {
    want(0, 0);
    RelationSet rs;
    rs.name = "E";
    rs.drops.push_back(e_ideal());
    return rs;
  }
  if (head == "decorate") {
    want(2, 2);
    return decorate(parse_int(parts[1], token), parts[2]);
  }
  if (head == "hypothesis") {
    want(2, 2);
    return hypothesis_ideal(parse_int(parts[1], token), parts[2]);
  }
  throw ConfigError("unknown relation family '" + head + "'");
}

}  // namespace

Params default_params(const VarietyModel& model) {
  Params p;
  if (!model.has_symbol("o")) {
    for (const auto& [name, role] : model.symbols)
      if (role == SymbolRole::Point) {
        p.bv.point = name;
        break;
      }
  }
  p.bv.degrees = model.intersections;
  p.invariant.assign(model.involution_invariant.begin(), model.involution_invariant.end());
  if (model.has_symbol("b") && model.role("b") == SymbolRole::Point) {
    p.branch = {"b"};
    std::erase(p.invariant, std::string("b"));
  }
  return p;
}

RelationSet builtin(std::string_view spec, const Params& params) {
  RelationSet rs;
  for (const auto& token : split(spec, '+')) {
    if (token.empty()) throw ConfigError("empty relation token in '" + std::string(spec) + "'");
    rs.merge(token_set(token, params));
  }
  rs.name = std::string(spec);
  return rs;
}

std::vector<std::string> builtin_help() {
  return {
      "trivial                 T1 vanishing, T2 diagonal chains, T3 transport",
      "point:<s>               Delta_ij * s_i -> s_i * s_j",
      "bv_k3[:<o>[:<euler>]]   trivial + point(o) + B1..B4 (degrees from the variety)",
      "cover_double            involution shuffles, transport, branch relation, PiDiag expansion",
      "cover_degree:<d>        Sigma elimination for a degree-d cover",
      "recursion:<d>           cover_degree without Sigma_k -> 0 for k >= d",
      "E                       drop monomials containing PiDiag(0, .)",
      "decorate:<d>:<b>        PiDiag(0,j) -> d * b_j, plus point:<b>",
      "hypothesis:<m>:<s>      drop m twisted PiDiagonals (0, j; s) with distinct j",
  };
}

namespace {

RelationSet from_json(const nlohmann::json& j, const VarietyModel& model) {
  if (!j.is_object()) throw ConfigError("relation config must be a JSON object");
  static const std::set<std::string> known = {"name", "sets", "parameters", "disable", "enable"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ConfigError("relation config: unknown key '" + key + "'");

  Params params = default_params(model);
  if (j.contains("parameters")) {
    const auto& pj = j.at("parameters");
    if (!pj.is_object()) throw ConfigError("relation config: 'parameters' must be an object");
    for (const auto& [key, value] : pj.items()) {
      if (key == "point") {
        params.bv.point = value.get<std::string>();
      } else if (key == "euler") {
        params.bv.euler = rational_field(value, "euler");
      } else if (key == "degrees") {
        params.bv.degrees.clear();
        for (const auto& row : value) {
          auto a = row.at("a").get<std::string>(), b = row.at("b").get<std::string>();
          params.bv.degrees[{std::min(a, b), std::max(a, b)}] = rational_field(row.at("value"), "degree");
        }
      } else if (key == "invariant") {
        params.invariant = value.get<std::vector<std::string>>();
      } else if (key == "branch") {
        params.branch = value.get<std::vector<std::string>>();
      } else {
        throw ConfigError("relation config: unknown parameter '" + key + "'");
      }
    }
  }
  if (!j.contains("sets") || !j.at("sets").is_array() || j.at("sets").empty())
    throw ConfigError("relation config needs a non-empty 'sets' array");
  std::string spec;
  for (const auto& s : j.at("sets")) spec += (spec.empty() ? "" : "+") + s.get<std::string>();
  RelationSet rs = builtin(spec, params);
  if (j.contains("enable")) {
    auto names = j.at("enable").get<std::set<std::string>>();
    for (const auto& n : names)
      if (!rs.has_rule(n)) throw ConfigError("relation config: cannot enable unknown rule '" + n + "'");
    rs.filter_rules([&](const std::string& n) { return names.count(n) != 0; });
  }
  if (j.contains("disable")) {
    auto names = j.at("disable").get<std::set<std::string>>();
    for (const auto& n : names)
      if (!rs.has_rule(n)) throw ConfigError("relation config: cannot disable unknown rule '" + n + "'");
    rs.filter_rules([&](const std::string& n) { return names.count(n) == 0; });
  }
  rs.name = j.value("name", spec);
  return rs;
}

}  // namespace

RelationSet from_json_text(std::string_view text, const VarietyModel& model) {
  try {
    return from_json(nlohmann::json::parse(text), model);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("relation config: ") + e.what());
  }
}

RelationSet load(const std::filesystem::path& path, const VarietyModel& model) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open relation config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), model);
}

RelationSet resolve(const std::string& file_or_builtin, const VarietyModel& model) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(file_or_builtin, ec)) return load(file_or_builtin, model);
  return builtin(file_or_builtin, default_params(model));
}

}  // namespace mdiag::relations
