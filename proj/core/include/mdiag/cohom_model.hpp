#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdiag/rational.hpp"
#include "mdiag/variety.hpp"

namespace mdiag {

using SparseVec = std::map<int, Rational>;
using Matrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gaussian elimination; nullopt when singular.
std::optional<Matrix> invert(const Matrix& m);

/// Graded cohomology ring H*(X, Q) with Poincare pairing, named classes and
/// an optional involution.
///
/// Sign convention: the Kunneth diagonal is Delta = sum C_ab e_a (x) e_b with
/// C = (P^{-1})^T D, P the pairing matrix and D = diag((-1)^deg). This is the
/// unique choice with p_{2*}(Delta . p_1^* x) = x for every class x; tensor
/// products carry the Koszul sign (-1)^{sum_{s<t} |y_s||x_t|}.
class CohomModel {
 public:
  struct Data {
    std::string name;
    std::string description;
    int dimension = 1;
    /// Dimension of the Albanese image.
    int albanese = 0;
    std::vector<int> degrees;
    std::vector<std::string> basis_names;
    Matrix pairing;
    /// Structure constants e_a e_b; pairs left out are derived from the unit
    /// and from the pairing (products landing in top degree).
    std::map<std::pair<int, int>, SparseVec> products;
    std::map<std::string, SparseVec> classes;
    /// iota^* e_b = sum_a involution[a][b] e_a.
    std::optional<Matrix> involution;
  };

  /// Validates: graded nondegenerate pairing, a single degree-0 unit, point
  /// classes integrating to 1, associativity/commutativity of the products,
  /// involution squaring to 1 and preserving pairing and degrees.
  static std::shared_ptr<const CohomModel> build(Data data);

  const Data& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  int dimension() const { return data_.dimension; }
  int albanese() const { return data_.albanese; }
  int rank() const { return static_cast<int>(data_.degrees.size()); }
  int degree(int a) const { return data_.degrees[a]; }
  int unit() const { return unit_; }
  const Rational& pairing(int a, int b) const { return data_.pairing[a][b]; }
  /// e_a e_b as a short list.
  const std::vector<std::pair<int, Rational>>& product(int a, int b) const { return table_[a * rank() + b]; }
  /// integral of e_a over X.
  const Rational& integral(int a) const { return integral_[a]; }

  bool has_class(const std::string& symbol) const { return data_.classes.count(symbol) != 0; }
  const SparseVec& class_vector(const std::string& symbol) const;
  /// Degree of a named class; throws UnknownSymbolError.
  int class_degree(const std::string& symbol) const;

  bool has_involution() const { return data_.involution.has_value(); }
  /// iota^* e_b.
  const std::vector<std::pair<int, Rational>>& involution_image(int b) const;

  /// Kunneth coefficients of the diagonal: (a, b, C_ab), nonzero only.
  const std::vector<std::tuple<int, int, Rational>>& diagonal_terms() const { return diagonal_; }
  /// Same for the graph of the involution: sum C_ab e_a (x) iota^* e_b.
  const std::vector<std::tuple<int, int, Rational>>& graph_terms() const;

  /// Betti numbers b_0..b_{2n}.
  std::vector<int> betti() const;
  /// sum (-1)^k b_k, the self-intersection of the diagonal.
  Rational euler() const;

  /// Symbolic view: point symbols are the top-degree classes, divisor
  /// symbols the degree-2 classes (n >= 2) with their intersection numbers.
  ModelPtr variety() const { return variety_; }

 private:
  explicit CohomModel(Data data) : data_(std::move(data)) {}
  void derive();

  Data data_;
  int unit_ = -1;
  std::vector<std::vector<std::pair<int, Rational>>> table_;
  std::vector<Rational> integral_;
  std::vector<std::vector<std::pair<int, Rational>>> invol_;
  std::vector<std::tuple<int, int, Rational>> diagonal_;
  std::vector<std::tuple<int, int, Rational>> graph_;
  ModelPtr variety_;
};

using CohomPtr = std::shared_ptr<const CohomModel>;

}  // namespace mdiag
