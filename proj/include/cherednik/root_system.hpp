#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <vector>

#include "cherednik/cartan_type.hpp"
#include "cherednik/polynomial.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

using IntVector = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;

/// Lexicographic comparison of equal-length integer vectors.
struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  }
};

/// Cartan matrix of an irreducible factor in Bourbaki numbering, with the
/// convention A(i,j) = <alpha_i^vee, alpha_j>.
IntMatrix cartan_matrix(const Factor& f);
/// Block-diagonal Cartan matrix of a (possibly reducible) type.
IntMatrix cartan_matrix(const CartanType& t);

/// Smallest positive integers d with diag(d) * A symmetric, normalized per
/// connected component so the shortest simple root has d = 1. Long simple
/// roots get the larger entries. Throws ValidationError if A is not
/// symmetrizable.
IntVector symmetrizer(const IntMatrix& a);

/// Reduced root system with integer data.
///
/// Roots are stored in the simple-root basis, coroots in the simple-coroot
/// basis; the pairing <x, alpha> of a coweight-space vector x with a root is
/// x^T A alpha. Roots are ordered by height, ties broken by descending
/// lexicographic order so the simple roots appear as alpha_1, ..., alpha_n.
class RootSystem {
 public:
  explicit RootSystem(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const IntVector& symmetrizer() const { return sym_; }
  /// diag(symmetrizer) * A; the invariant form on the simple-root basis.
  const IntMatrix& form() const { return form_; }

  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& coroots() const { return coroots_; }
  /// Indices into roots() of the positive roots, in root order.
  const std::vector<std::size_t>& positive_indices() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }

  ClassId length_class(std::size_t root) const { return classes_.at(root); }
  int squared_length(const IntVector& root) const { return root.dot(form_ * root); }
  std::optional<std::size_t> find(const IntVector& root) const;

  /// Factor index of simple root i.
  int factor_of_simple(int i) const { return simple_factor_.at(i); }
  /// Root of maximal height in the given factor (always long).
  IntVector highest_root(int factor = 0) const;

  /// s_alpha(x) = x - <x, alpha> alpha^vee for x in the simple-coroot basis.
  IntVector reflect(std::size_t root, const IntVector& x) const;
  /// s_alpha(beta) = beta - <alpha^vee, beta> alpha for beta in the simple-root basis.
  IntVector reflect_root(std::size_t root, const IntVector& beta) const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  IntVector sym_;
  IntMatrix form_;
  std::vector<int> simple_factor_;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<ClassId> classes_;
  std::vector<std::size_t> positive_;
  std::map<IntVector, std::size_t, LexLess> index_;
};

inline int height(const IntVector& root) { return root.sum(); }

/// Degrees of the basic invariants, concatenated over factors.
std::vector<int> degrees(const CartanType& t);
/// |W| as the product of the degrees.
Integer weyl_order(const CartanType& t);
/// Classical root count of the type.
int root_count(const CartanType& t);
/// prod_i (1 + t + ... + t^(d_i - 1))
UnivariatePolynomial<Integer> poincare_polynomial(const CartanType& t);

/// Edge of a Dynkin diagram. `multiplicity` is A(i,j)*A(j,i); for a
/// multiple bond `from` is the longer root. The affine A1 link is stored as
/// an undirected edge of multiplicity 4.
struct DynkinEdge {
  int from = 0;
  int to = 0;
  int multiplicity = 1;
  bool directed = false;
  bool operator==(const DynkinEdge&) const = default;
};

struct DynkinDiagram {
  int num_nodes = 0;
  std::vector<DynkinEdge> edges;
  /// Highest-root coefficients; for an extended diagram node 0 is affine with mark 1.
  std::vector<int> marks;
  /// Node coordinates in the simple-root basis of the finite system (node 0 is -theta when extended).
  std::vector<IntVector> node_roots;
  bool extended = false;

  IntMatrix to_cartan_matrix() const;
};

DynkinDiagram dynkin_diagram(const IntMatrix& cartan);
/// Finite diagram plus the affine node -theta, placed at index 0.
/// Throws ValidationError for reducible types.
DynkinDiagram extended_diagram(const CartanType& t);
/// Cartan matrix restricted to `nodes` of an extended diagram, with
/// entries 2(a,b)/(a,a) computed from the finite invariant form.
IntMatrix cartan_matrix_of(const std::vector<IntVector>& simple_roots, const IntMatrix& form);

/// Classifies a finite-type Cartan matrix. Throws ValidationError when the
/// matrix is malformed or of non-finite type.
CartanType identify_diagram(const IntMatrix& cartan);

/// Connected components of the Dynkin graph, each sorted, ordered by least node.
std::vector<std::vector<int>> connected_components(const IntMatrix& cartan);
/// Classifies one connected component of a Cartan matrix.
Factor identify_component(const IntMatrix& cartan, const std::vector<int>& nodes);

}  // namespace cherednik
