#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klein4/matrix.hpp"
#include "klein4/rational.hpp"
#include "klein4/root_system.hpp"

namespace klein4 {

// sparse vector over the algebra basis, sorted by index
using SparseVec = std::vector<std::pair<int, Rat>>;

void sparse_add(SparseVec& v, int idx, const Rat& c);
Vec sparse_to_dense(const SparseVec& v, int dim);

// complexified element: re + i*im over the rational basis
struct CVec {
  Vec re, im;
};

// Lie algebra over Q in a Chevalley basis [h_1..h_r | x_alpha (alpha > 0) |
// x_{-alpha}], with integer structure constants.
//
// Simply laced types come from a sign cocycle on the root lattice; the other
// types are folded out of a simply laced parent along a diagram symmetry,
// with every step certified (fixed root vectors keep sign +1, folded
// constants are integers, the orbit map hits every target root exactly once,
// brackets of orbit sums reconstruct exactly).
//
// Construction always certifies the Chevalley properties (coroot brackets,
// string-length rule |N| = p+1, integrality). The Jacobi identity is checked
// on all basis triples up to dimension 150 and on a deterministic sample
// beyond that; certify_jacobi_full() runs the complete sweep on demand.
class ChevalleyAlgebra {
 public:
  static ChevalleyAlgebra build(const CartanType& t);

  const RootSystem& roots() const { return *rs_; }
  const CartanType& type() const { return rs_->type(); }
  int rank() const { return rs_->rank(); }
  int num_positive() const { return rs_->num_positive(); }
  int dim() const { return dim_; }

  int h_index(int i) const { return i; }
  int pos_index(int p) const { return rank() + p; }
  int neg_index(int p) const { return rank() + num_positive() + p; }
  bool is_root_vector(int idx) const { return idx >= rank(); }
  bool is_positive_vector(int idx) const {
    return idx >= rank() && idx < rank() + num_positive();
  }
  // x_alpha <-> x_{-alpha}
  int opposite(int idx) const;
  // signed root attached to a root-vector index
  RootVec root_of(int idx) const;
  // basis index of a signed root, -1 if not a root
  int index_of_root(const RootVec& a) const;

  const SparseVec& bracket_basis(int i, int j) const { return table_[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  RatMatrix ad(const Vec& x) const;

  // coroot of the p-th positive root, as h-coordinates (= [x_a, x_{-a}])
  Vec coroot(int p) const;

  const RatMatrix& killing() const;
  Rat killing_form(const Vec& x, const Vec& y) const;

  // throws std::logic_error naming the offending triple
  void certify_jacobi_full() const;
  void certify_jacobi_sample(int triples, unsigned seed) const;

  // extend the diagram permutation to signs on the root vectors:
  // phi(x_alpha) = s[alpha] x_{perm(alpha)}, same sign on x_{-alpha};
  // returns one sign per positive root
  std::vector<int> diagram_signs(const std::vector<int>& node_perm) const;
  // image of a positive root index under a node permutation
  int permute_positive(const std::vector<int>& node_perm, int p) const;

  // one line per nonzero constant between root vectors, deterministic order
  std::string constants_table() const;

  std::string basis_name(int idx) const;

 private:
  ChevalleyAlgebra() = default;

  std::optional<RootSystem> rs_;
  int dim_ = 0;
  std::vector<std::vector<SparseVec>> table_;
  mutable std::optional<RatMatrix> killing_;

  static ChevalleyAlgebra build_simply_laced(const CartanType& t);
  static ChevalleyAlgebra build_folded(const CartanType& t);
  void certify_chevalley_properties() const;
  void certify_policy_jacobi() const;
  void jacobi_triple(int i, int j, int k) const;
};

// compact real form: basis u_p = x_a - x_{-a}, v_p = i(x_a + x_{-a}),
// t_j = i h_j, each kept as a complexified vector over the Chevalley basis.
// closure of the bracket over Q is certified during construction (all
// imaginary bookkeeping must cancel).
struct CompactForm {
  int m = 0;  // number of positive roots
  int r = 0;  // rank
  int dim() const { return 2 * m + r; }

  std::vector<CVec> basis;
  std::vector<std::vector<SparseVec>> table;  // rational constants
  RatMatrix killing;                          // restriction of the ambient form

  int u_index(int p) const { return p; }
  int v_index(int p) const { return m + p; }
  int t_index(int j) const { return 2 * m + j; }
};

CompactForm compact_form(const ChevalleyAlgebra& alg);

// complexified arithmetic over the rational basis
CVec cvec_real(const Vec& re);
CVec cvec_add(const CVec& a, const CVec& b);
CVec cvec_sub(const CVec& a, const CVec& b);
CVec cvec_scale(const CVec& a, const Rat& re, const Rat& im);
bool cvec_is_zero(const CVec& a);
CVec cbracket(const ChevalleyAlgebra& alg, const CVec& a, const CVec& b);

}  // namespace klein4
