#include "mdiag/model_library.hpp"

#include <fstream>
#include <sstream>

#include "mdiag/errors.hpp"

#ifndef MDIAG_MODEL_DIR
#define MDIAG_MODEL_DIR "data/models"
#endif

namespace mdiag::models {

namespace {

using Data = CohomModel::Data;

struct Builder {
  Data d;
  std::vector<std::tuple<int, int, Rational>> pairs;

  Builder(std::string name, int n, int albanese, std::string description) {
    d.name = std::move(name);
    d.dimension = n;
    d.albanese = albanese;
    d.description = std::move(description);
  }
  int add(std::string name, int degree) {
    d.basis_names.push_back(std::move(name));
    d.degrees.push_back(degree);
    return static_cast<int>(d.degrees.size()) - 1;
  }
  // sets e_a . e_b; the transpose follows by graded symmetry
  void pair(int a, int b, Rational v) { pairs.emplace_back(a, b, std::move(v)); }
  void points(int top) {
    for (const char* s : {"pt", "o", "a", "b"}) d.classes[s] = {{top, 1}};
  }
  Data finish() {
    const int r = static_cast<int>(d.degrees.size());
    d.pairing.assign(r, std::vector<Rational>(r, Rational(0)));
    for (const auto& [a, b, v] : pairs) {
      d.pairing[a][b] = v;
      d.pairing[b][a] = (d.degrees[a] * d.degrees[b]) % 2 ? Rational(-v) : v;
    }
    return std::move(d);
  }
};

Data curve(const std::string& name, int genus, const std::string& description) {
  Builder b(name, 1, genus == 0 ? 0 : 1, description);
  int one = b.add("1", 0);
  std::vector<int> alpha, beta;
  for (int i = 1; i <= genus; ++i) alpha.push_back(b.add("alpha" + std::to_string(i), 1));
  for (int i = 1; i <= genus; ++i) beta.push_back(b.add("beta" + std::to_string(i), 1));
  int pt = b.add("pt", 2);
  b.pair(one, pt, 1);
  for (int i = 0; i < genus; ++i) b.pair(alpha[i], beta[i], 1);
  b.points(pt);
  return b.finish();
}

// q = 0 surface with intersection form `form` on H^2; `canonical` empty means K = 0.
Data surface(const std::string& name, const Matrix& form, const std::vector<Rational>& canonical,
             const std::string& description) {
  Builder b(name, 2, 0, description);
  int one = b.add("1", 0);
  std::vector<int> h;
  for (std::size_t i = 0; i < form.size(); ++i) h.push_back(b.add("h" + std::to_string(i + 1), 2));
  int pt = b.add("pt", 4);
  b.pair(one, pt, 1);
  for (std::size_t i = 0; i < form.size(); ++i)
    for (std::size_t j = i; j < form.size(); ++j)
      if (form[i][j] != 0) b.pair(h[i], h[j], form[i][j]);
  b.points(pt);
  b.d.classes["L"] = {{h[0], 1}};
  if (h.size() > 1) b.d.classes["M"] = {{h[1], 1}};
  if (!canonical.empty()) {
    SparseVec k;
    for (std::size_t i = 0; i < canonical.size(); ++i)
      if (canonical[i] != 0) k[h[i]] = canonical[i];
    b.d.classes["K"] = k;
  }
  return b.finish();
}

Matrix diagonal_form(std::vector<int> entries) {
  Matrix m(entries.size(), std::vector<Rational>(entries.size(), Rational(0)));
  for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
  return m;
}

Data abelian_surface() {
  Builder b("abelian-surface", 2, 2, "exterior algebra on four degree-1 generators");
  // basis: subsets of {1,2,3,4} ordered by size then lexicographically
  std::vector<unsigned> masks;
  for (int size = 0; size <= 4; ++size)
    for (unsigned m = 0; m < 16; ++m)
      if (__builtin_popcount(m) == size) masks.push_back(m);
  std::vector<int> index(16);
  for (unsigned m : masks) {
    std::string nm = m == 0 ? "1" : "e";
    for (int i = 0; i < 4; ++i)
      if (m >> i & 1u) nm += std::to_string(i + 1);
    index[m] = b.add(nm, __builtin_popcount(m));
  }
  // e_S e_T = sign * e_{S u T}: sign counts pairs (s in S, t in T) with s > t
  auto wedge = [](unsigned s, unsigned t) -> int {
    if (s & t) return 0;
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      if (s >> i & 1u)
        for (int j = 0; j < i; ++j) inv += t >> j & 1u;
    return inv % 2 ? -1 : 1;
  };
  for (unsigned s : masks)
    for (unsigned t : masks) {
      int sg = wedge(s, t);
      if (s != 0 && t != 0) {
        auto& cell = b.d.products[{index[s], index[t]}];
        if (sg != 0) cell = {{index[s | t], sg}};
      }
      if (sg == 0) continue;
      if ((s | t) == 15u && index[s] <= index[t]) b.pair(index[s], index[t], sg);
    }
  const int top = index[15];
  b.points(top);
  b.d.classes["L"] = {{index[0b0011], 1}, {index[0b1100], 1}};
  b.d.classes["M"] = {{index[0b0101], 1}, {index[0b1010], -1}};
  return b.finish();
}

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError("bad integer '" + part + "' in model name '" + text + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"p1",           "elliptic",     "genus2",          "surface-b2-2",    "surface-b2-3",
          "surface-b2-4", "k3",           "abelian-surface", "surface-b2-2-k0", "surface-b2-3-k0"};
}

Data builtin_data(const std::string& name) {
  if (name == "p1") return curve(name, 0, "projective line");
  if (name == "elliptic") return curve(name, 1, "genus-1 curve");
  if (name == "genus2") return curve(name, 2, "genus-2 curve");
  if (name == "surface-b2-2") {
    Matrix u = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
    return surface(name, u, {Rational(-2), Rational(-2)}, "P1 x P1: hyperbolic plane, K = (-2,-2), K^2 = 8");
  }
  if (name == "surface-b2-3")
    return surface(name, diagonal_form({1, -1, -1}), {Rational(-3), Rational(1), Rational(1)},
                   "P2 blown up in two points, K = -3H + E1 + E2, K^2 = 7");
  if (name == "surface-b2-4")
    return surface(name, diagonal_form({1, -1, -1, -1}), {Rational(-3), Rational(1), Rational(1), Rational(1)},
                   "P2 blown up in three points, K^2 = 6");
  if (name == "k3") {
    std::vector<int> form(22, -1);
    form[0] = form[1] = form[2] = 1;
    return surface(name, diagonal_form(form), {}, "K3 lattice over Q: signature (3,19), K = 0");
  }
  if (name == "surface-b2-2-k0") return surface(name, diagonal_form({1, -1}), {}, "q = 0 lattice, b2 = 2, K = 0");
  if (name == "surface-b2-3-k0") return surface(name, diagonal_form({1, -1, -1}), {}, "q = 0 lattice, b2 = 3, K = 0");
  if (name == "abelian-surface") return abelian_surface();
  if (name.rfind("involution:", 0) == 0) {
    auto v = parse_ints(name.substr(11), ':');
    if (v.size() != 3) throw ConfigError("expected involution:<n>:<plus>:<minus>, got '" + name + "'");
    return involution_data(v[0], v[1], v[2]);
  }
  throw ConfigError("unknown builtin model '" + name + "'");
}

CohomPtr builtin(const std::string& name) { return CohomModel::build(builtin_data(name)); }

Data involution_data(int n, int plus, int minus) {
  if (n != 1 && n != 2) throw UnsupportedModelError("involution models exist for n = 1 or 2");
  if (plus < 0 || minus < 0) throw ConfigError("involution block dimensions must be nonnegative");
  if (n == 1 && (plus % 2 || minus % 2)) throw ConfigError("on a curve both eigenspaces of H^1 have even dimension");
  const std::string name =
      "involution:" + std::to_string(n) + ":" + std::to_string(plus) + ":" + std::to_string(minus);
  Builder b(name, n, n == 1 ? (plus + minus > 0) : 0, "double cover toy model");
  int one = b.add("1", 0);
  std::vector<int> p, q;
  if (n == 1) {
    for (int i = 0; i < plus; ++i) p.push_back(b.add("u" + std::to_string(i + 1), 1));
    for (int i = 0; i < minus; ++i) q.push_back(b.add("v" + std::to_string(i + 1), 1));
    for (int i = 0; i + 1 < plus; i += 2) b.pair(p[i], p[i + 1], 1);
    for (int i = 0; i + 1 < minus; i += 2) b.pair(q[i], q[i + 1], 1);
  } else {
    for (int i = 0; i < plus; ++i) p.push_back(b.add("u" + std::to_string(i + 1), 2));
    for (int i = 0; i < minus; ++i) q.push_back(b.add("v" + std::to_string(i + 1), 2));
    for (int i = 0; i < plus; ++i) b.pair(p[i], p[i], i == 0 ? 1 : -1);
    for (int i = 0; i < minus; ++i) b.pair(q[i], q[i], -1);
  }
  int pt = b.add("pt", 2 * n);
  b.pair(one, pt, 1);
  b.points(pt);
  Data d = b.finish();
  const int r = static_cast<int>(d.degrees.size());
  Matrix m(r, std::vector<Rational>(r, Rational(0)));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  for (int i : q) m[i][i] = -1;
  d.involution = std::move(m);
  return d;
}

CohomPtr involution_model(int n, int plus, int minus) { return CohomModel::build(involution_data(n, plus, minus)); }

std::filesystem::path data_dir() { return MDIAG_MODEL_DIR; }

CohomPtr load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open model file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return CohomModel::build(data_from_json_text(buf.str()));
}

CohomPtr resolve(const std::string& file_or_name) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(file_or_name, ec)) return load(file_or_name);
  return builtin(file_or_name);
}

}  // namespace mdiag::models
