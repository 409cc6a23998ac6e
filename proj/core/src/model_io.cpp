#include <json.hpp>

#include "mdiag/errors.hpp"
#include "mdiag/model_library.hpp"

namespace mdiag::models {

namespace {

using nlohmann::ordered_json;
using Data = CohomModel::Data;

Rational rational_of(const ordered_json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ConfigError("model file: rationals are integers or \"p/q\" strings, got " + j.dump());
}

// Integers stay JSON numbers; fractions become "p/q" strings.
ordered_json rational_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

Data parse(const ordered_json& j) {
  Data d;
  d.name = j.at("name").get<std::string>();
  d.description = j.value("description", "");
  d.dimension = j.at("dimension").get<int>();
  d.albanese = j.value("albanese", 0);
  const int n = d.dimension;
  if (n < 1) throw ConfigError("model file: dimension must be >= 1");
  auto betti = j.at("betti").get<std::vector<int>>();
  if (static_cast<int>(betti.size()) != 2 * n + 1) throw ConfigError("model file: betti needs 2n+1 entries");
  std::vector<std::vector<int>> by_degree(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k)
    for (int i = 0; i < betti[k]; ++i) {
      by_degree[k].push_back(static_cast<int>(d.degrees.size()));
      d.degrees.push_back(k);
    }
  const int r = static_cast<int>(d.degrees.size());
  if (j.contains("basis_names")) {
    d.basis_names = j.at("basis_names").get<std::vector<std::string>>();
    if (static_cast<int>(d.basis_names.size()) != r) throw ConfigError("model file: basis_names length != sum of betti");
  } else {
    for (int a = 0; a < r; ++a) d.basis_names.push_back("e" + std::to_string(a));
  }
  std::map<std::string, int> index;
  for (int a = 0; a < r; ++a)
    if (!index.emplace(d.basis_names[a], a).second) throw ConfigError("model file: duplicate basis name");
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw ConfigError("model file: unknown basis element '" + s + "'");
    return it->second;
  };

  d.pairing.assign(r, std::vector<Rational>(r, Rational(0)));
  for (const auto& [key, block] : j.at("pairing").items()) {
    const int k = std::stoi(key);
    if (k < 0 || k > n) throw ConfigError("model file: pairing blocks are keyed by degree 0..n");
    const auto& rows = by_degree[k];
    const auto& cols = by_degree[2 * n - k];
    if (block.size() != rows.size()) throw ConfigError("model file: pairing block " + key + " has the wrong shape");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (block[i].size() != cols.size()) throw ConfigError("model file: pairing block " + key + " has the wrong shape");
      for (std::size_t c = 0; c < cols.size(); ++c) {
        Rational v = rational_of(block[i][c]);
        d.pairing[rows[i]][cols[c]] = v;
        d.pairing[cols[c]][rows[i]] = (k * (2 * n - k)) % 2 ? Rational(-v) : v;
      }
    }
  }
  if (j.contains("products"))
    for (const auto& row : j.at("products")) {
      if (!row.is_array() || row.size() != 3) throw ConfigError("model file: products rows are [a, b, {c: value}]");
      SparseVec v;
      for (const auto& [c, x] : row[2].items()) v[lookup(c)] = rational_of(x);
      d.products[{lookup(row[0].get<std::string>()), lookup(row[1].get<std::string>())}] = v;
    }
  for (const auto& [sym, vec] : j.at("classes").items()) {
    SparseVec v;
    for (const auto& [c, x] : vec.items()) v[lookup(c)] = rational_of(x);
    d.classes[sym] = v;
  }
  if (j.contains("involution")) {
    Matrix m(r, std::vector<Rational>(r, Rational(0)));
    for (int a = 0; a < r; ++a) m[a][a] = 1;
    for (const auto& [key, signs] : j.at("involution").at("signs").items()) {
      const int k = std::stoi(key);
      if (k < 0 || k > 2 * n || signs.size() != by_degree[k].size())
        throw ConfigError("model file: involution signs for degree " + key + " have the wrong length");
      for (std::size_t i = 0; i < signs.size(); ++i) {
        int s = signs[i].get<int>();
        if (s != 1 && s != -1) throw ConfigError("model file: involution signs must be +1 or -1");
        m[by_degree[k][i]][by_degree[k][i]] = s;
      }
    }
    d.involution = std::move(m);
  }
  return d;
}

}  // namespace

Data data_from_json_text(std::string_view text) {
  try {
    return parse(ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("model file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model file: bad degree key ") + e.what());
  }
}

std::string to_json_text(const Data& d) {
  const int n = d.dimension;
  const int r = static_cast<int>(d.degrees.size());
  for (int a = 1; a < r; ++a)
    if (d.degrees[a] < d.degrees[a - 1]) throw ConfigError("to_json: basis must be ordered by degree");
  std::vector<std::vector<int>> by_degree(2 * n + 1);
  for (int a = 0; a < r; ++a) by_degree[d.degrees[a]].push_back(a);

  ordered_json j;
  j["name"] = d.name;
  if (!d.description.empty()) j["description"] = d.description;
  j["dimension"] = n;
  j["albanese"] = d.albanese;
  std::vector<int> betti;
  for (const auto& b : by_degree) betti.push_back(static_cast<int>(b.size()));
  j["betti"] = betti;
  j["basis_names"] = d.basis_names;
  ordered_json pairing = ordered_json::object();
  for (int k = 0; k <= n; ++k) {
    if (by_degree[k].empty()) continue;
    ordered_json block = ordered_json::array();
    for (int row : by_degree[k]) {
      ordered_json line = ordered_json::array();
      for (int col : by_degree[2 * n - k]) line.push_back(rational_json(d.pairing[row][col]));
      block.push_back(line);
    }
    pairing[std::to_string(k)] = block;
  }
  j["pairing"] = pairing;
  if (!d.products.empty()) {
    ordered_json prods = ordered_json::array();
    for (const auto& [key, v] : d.products) {
      ordered_json out = ordered_json::object();
      for (const auto& [c, x] : v) out[d.basis_names[c]] = rational_json(x);
      prods.push_back(ordered_json::array({d.basis_names[key.first], d.basis_names[key.second], out}));
    }
    j["products"] = prods;
  }
  ordered_json classes = ordered_json::object();
  for (const auto& [sym, v] : d.classes) {
    ordered_json out = ordered_json::object();
    for (const auto& [c, x] : v) out[d.basis_names[c]] = rational_json(x);
    classes[sym] = out;
  }
  j["classes"] = classes;
  if (d.involution) {
    ordered_json signs = ordered_json::object();
    for (int k = 0; k <= 2 * n; ++k) {
      bool all_plus = true;
      ordered_json list = ordered_json::array();
      for (int a : by_degree[k]) {
        for (int b = 0; b < r; ++b)
          if (b != a && (*d.involution)[b][a] != 0) throw ConfigError("to_json: only diagonal involutions are stored");
        const Rational& s = (*d.involution)[a][a];
        if (s != 1 && s != -1) throw ConfigError("to_json: involution signs must be +1 or -1");
        list.push_back(s == 1 ? 1 : -1);
        all_plus = all_plus && s == 1;
      }
      if (!all_plus) signs[std::to_string(k)] = list;
    }
    j["involution"] = {{"signs", signs}};
  }
  return j.dump(2) + "\n";
}

}  // namespace mdiag::models
