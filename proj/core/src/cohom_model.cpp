#include "mdiag/cohom_model.hpp"

#include <tuple>

#include "mdiag/errors.hpp"

namespace mdiag {

std::optional<Matrix> invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= p;
      inv[col][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

namespace {

int sign_of(int da, int db) { return (da * db) % 2 ? -1 : 1; }

[[noreturn]] void bad(const std::string& model, const std::string& why) {
  throw ConfigError("cohomology model '" + model + "': " + why);
}

}  // namespace

std::shared_ptr<const CohomModel> CohomModel::build(Data data) {
  std::shared_ptr<CohomModel> m(new CohomModel(std::move(data)));
  m->derive();
  return m;
}

void CohomModel::derive() {
  const std::string& nm = data_.name;
  const int n = data_.dimension;
  const int r = rank();
  if (n < 1) bad(nm, "dimension must be >= 1");
  if (r == 0 || r > 255) bad(nm, "basis size must be in 1..255");
  if (data_.basis_names.empty())
    for (int a = 0; a < r; ++a) data_.basis_names.push_back("e" + std::to_string(a));
  if (static_cast<int>(data_.basis_names.size()) != r) bad(nm, "basis_names and degrees differ in length");
  for (int d : data_.degrees)
    if (d < 0 || d > 2 * n) bad(nm, "basis degree " + std::to_string(d) + " outside 0.." + std::to_string(2 * n));
  for (int a = 0; a < r; ++a)
    if (data_.degrees[a] == 0) {
      if (unit_ >= 0) bad(nm, "more than one degree-0 class (X must be connected)");
      unit_ = a;
    }
  if (unit_ < 0) bad(nm, "no degree-0 class");

  if (static_cast<int>(data_.pairing.size()) != r) bad(nm, "pairing matrix has the wrong size");
  for (const auto& row : data_.pairing)
    if (static_cast<int>(row.size()) != r) bad(nm, "pairing matrix has the wrong size");
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const Rational& p = data_.pairing[a][b];
      if (p != 0 && degree(a) + degree(b) != 2 * n)
        bad(nm, "pairing " + data_.basis_names[a] + "." + data_.basis_names[b] + " is not degree-complementary");
      if (p != sign_of(degree(a), degree(b)) * data_.pairing[b][a]) bad(nm, "pairing is not graded-symmetric");
    }
  auto pinv = invert(data_.pairing);
  if (!pinv) bad(nm, "pairing is degenerate");

  integral_.resize(r);
  int top = -1;
  for (int a = 0; a < r; ++a) {
    integral_[a] = data_.pairing[a][unit_];
    if (degree(a) == 2 * n) {
      if (top >= 0) bad(nm, "top-degree cohomology must be one-dimensional");
      top = a;
    }
  }
  if (top < 0) bad(nm, "no top-degree class");

  table_.assign(static_cast<std::size_t>(r) * r, {});
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      auto& cell = table_[a * r + b];
      auto direct = data_.products.find({a, b});
      auto flipped = data_.products.find({b, a});
      SparseVec v;
      if (direct != data_.products.end()) {
        v = direct->second;
      } else if (flipped != data_.products.end()) {
        for (const auto& [c, x] : flipped->second) v[c] = sign_of(degree(a), degree(b)) * x;
      } else if (a == unit_) {
        v[b] = 1;
      } else if (b == unit_) {
        v[a] = 1;
      } else if (degree(a) + degree(b) > 2 * n) {
      } else if (degree(a) + degree(b) == 2 * n) {
        if (data_.pairing[a][b] != 0) v[top] = data_.pairing[a][b] / integral_[top];
      } else {
        bad(nm, "product " + data_.basis_names[a] + "*" + data_.basis_names[b] + " must be supplied");
      }
      for (const auto& [c, x] : v) {
        if (c < 0 || c >= r) bad(nm, "product refers to a basis index out of range");
        if (x == 0) continue;
        if (degree(c) != degree(a) + degree(b)) bad(nm, "product is not graded");
        cell.emplace_back(c, x);
      }
    }
  }
  auto integrate = [&](const std::vector<std::pair<int, Rational>>& v) {
    Rational s = 0;
    for (const auto& [c, x] : v) s += x * integral_[c];
    return s;
  };
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      if (integrate(product(a, b)) != data_.pairing[a][b])
        bad(nm, "products disagree with the pairing at " + data_.basis_names[a] + "*" + data_.basis_names[b]);
      SparseVec ab, ba;
      for (const auto& [c, x] : product(a, b)) ab[c] += x;
      for (const auto& [c, x] : product(b, a)) ba[c] += sign_of(degree(a), degree(b)) * x;
      if (ab != ba) bad(nm, "product is not graded-commutative");
    }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        SparseVec left, right;
        for (const auto& [u, x] : product(a, b))
          for (const auto& [w, y] : product(u, c)) left[w] += x * y;
        for (const auto& [u, x] : product(b, c))
          for (const auto& [w, y] : product(a, u)) right[w] += x * y;
        std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
        std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
        if (left != right) bad(nm, "product is not associative");
      }

  for (auto& [sym, v] : data_.classes) {
    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
    int deg = -1;
    for (const auto& [c, x] : v) {
      if (c < 0 || c >= r) bad(nm, "class '" + sym + "' refers to a basis index out of range");
      if (deg >= 0 && degree(c) != deg) bad(nm, "class '" + sym + "' is not homogeneous");
      deg = degree(c);
    }
    if (deg == 2 * n) {
      Rational s = 0;
      for (const auto& [c, x] : v) s += x * integral_[c];
      if (s != 1) bad(nm, "point class '" + sym + "' does not have degree 1");
    }
  }

  // C = (P^{-1})^T D
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Rational c = (*pinv)[b][a];
      if (degree(b) % 2) c = -c;
      if (c != 0) diagonal_.emplace_back(a, b, c);
    }

  if (data_.involution) {
    const Matrix& M = *data_.involution;
    if (static_cast<int>(M.size()) != r) bad(nm, "involution matrix has the wrong size");
    for (const auto& row : M)
      if (static_cast<int>(row.size()) != r) bad(nm, "involution matrix has the wrong size");
    invol_.assign(r, {});
    for (int b = 0; b < r; ++b)
      for (int a = 0; a < r; ++a)
        if (M[a][b] != 0) {
          if (degree(a) != degree(b)) bad(nm, "involution does not preserve degrees");
          invol_[b].emplace_back(a, M[a][b]);
        }
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        Rational sq = 0, pr = 0;
        for (int c = 0; c < r; ++c) sq += M[a][c] * M[c][b];
        if (sq != (a == b ? 1 : 0)) bad(nm, "involution does not square to the identity");
        for (const auto& [c, x] : invol_[a])
          for (const auto& [d, y] : invol_[b]) pr += x * y * data_.pairing[c][d];
        if (pr != data_.pairing[a][b]) bad(nm, "involution does not preserve the pairing");
      }
    std::map<std::pair<int, int>, Rational> g;
    for (const auto& [a, b, c] : diagonal_)
      for (const auto& [e, x] : invol_[b]) g[{a, e}] += c * x;
    for (const auto& [key, c] : g)
      if (c != 0) graph_.emplace_back(key.first, key.second, c);
  }

  VarietyModel v;
  v.name = data_.name;
  v.dimension = n;
  for (const auto& [sym, vec] : data_.classes) {
    if (vec.empty()) continue;
    const int deg = degree(vec.begin()->first);
    if (deg == 2 * n)
      v.symbols[sym] = SymbolRole::Point;
    else if (deg == 2 && n >= 2)
      v.symbols[sym] = SymbolRole::Divisor;
  }
  for (const auto& [s1, r1] : v.symbols)
    for (const auto& [s2, r2] : v.symbols) {
      if (r1 != SymbolRole::Divisor || r2 != SymbolRole::Divisor || s2 < s1) continue;
      Rational sum = 0;
      for (const auto& [a, x] : data_.classes.at(s1))
        for (const auto& [b, y] : data_.classes.at(s2)) sum += x * y * data_.pairing[a][b];
      v.set_intersection(s1, s2, sum);
    }
  if (data_.involution) {
    v.has_involution = true;
    v.cover_degree = 2;
    for (const auto& [sym, role] : v.symbols) {
      if (role != SymbolRole::Point) continue;
      SparseVec img;
      for (const auto& [b, x] : data_.classes.at(sym))
        for (const auto& [a, y] : invol_[b]) img[a] += x * y;
      std::erase_if(img, [](const auto& kv) { return kv.second == 0; });
      if (img == data_.classes.at(sym)) v.involution_invariant.insert(sym);
    }
  }
  variety_ = make_variety(std::move(v));
}

const SparseVec& CohomModel::class_vector(const std::string& symbol) const {
  auto it = data_.classes.find(symbol);
  if (it == data_.classes.end())
    throw UnknownSymbolError("symbol '" + symbol + "' has no class in cohomology model '" + name() + "'");
  return it->second;
}

int CohomModel::class_degree(const std::string& symbol) const {
  const auto& v = class_vector(symbol);
  return v.empty() ? 0 : degree(v.begin()->first);
}

const std::vector<std::pair<int, Rational>>& CohomModel::involution_image(int b) const {
  if (!has_involution()) throw UnsupportedModelError("cohomology model '" + name() + "' has no involution");
  return invol_[b];
}

const std::vector<std::tuple<int, int, Rational>>& CohomModel::graph_terms() const {
  if (!has_involution()) throw UnsupportedModelError("cohomology model '" + name() + "' has no involution");
  return graph_;
}

std::vector<int> CohomModel::betti() const {
  std::vector<int> b(2 * dimension() + 1, 0);
  for (int d : data_.degrees) ++b[d];
  return b;
}

Rational CohomModel::euler() const {
  Rational e = 0;
  for (int d : data_.degrees) e += d % 2 ? -1 : 1;
  return e;
}

}  // namespace mdiag
