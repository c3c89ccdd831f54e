#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klein4/chevalley.hpp"
#include "klein4/matrix.hpp"

namespace klein4 {

// monomial automorphism: every basis vector maps to a scalar multiple of a
// basis vector. covers the whole family used here (sign characters on the
// root lattice, diagram symmetries, the transpose involution, and all their
// products), each certified to preserve the bracket on construction.
class Automorphism {
 public:
  static Automorphism identity(const ChevalleyAlgebra& alg);

  // exp(pi i H) for an integer coweight H, given by its pairing values
  // h[i] = alpha_i(H): x_alpha scales by (-1)^(alpha(H)), Cartan fixed
  static Automorphism torus(const ChevalleyAlgebra& alg, const std::vector<long>& h);

  // node permutation preserving the Cartan matrix, extended over the root
  // vectors with the recursively determined signs
  static Automorphism diagram(const ChevalleyAlgebra& alg, const std::vector<int>& node_perm);

  // x_alpha -> -x_{-alpha}, h -> -h
  static Automorphism transpose_involution(const ChevalleyAlgebra& alg);

  const ChevalleyAlgebra& algebra() const { return *alg_; }

  // this applied after other
  Automorphism compose(const Automorphism& other) const;

  bool operator==(const Automorphism& o) const;
  bool operator!=(const Automorphism& o) const { return !(*this == o); }

  bool is_identity() const;
  bool is_involution() const;  // order exactly 2
  bool commutes_with(const Automorphism& o) const;

  // image of basis vector idx is image_scale(idx) * basis[image_index(idx)]
  int image_index(int idx) const { return perm_[idx]; }
  const Rat& image_scale(int idx) const { return scale_[idx]; }

  Vec apply(const Vec& x) const;
  CVec apply(const CVec& x) const;
  RatMatrix matrix() const;

  std::size_t fixed_dim() const;
  std::size_t cartan_fixed_dim() const;  // dimension of the fixed part of the Cartan
  Subspace fixed_space() const;

  // lies in the identity component (the coset in the diagram-symmetry group
  // is tracked through every factory and composition)
  bool inner() const;

  void certify_bracket_preservation() const;

  const std::string& label() const { return label_; }
  Automorphism with_label(const std::string& l) const;

 private:
  Automorphism(const ChevalleyAlgebra& alg) : alg_(&alg) {}

  const ChevalleyAlgebra* alg_;
  std::vector<int> perm_;
  std::vector<Rat> scale_;
  std::vector<int> outer_coset_;  // node permutation labeling the image in Out
  std::string label_;
};

// pairing values of a coroot-basis vector: h[j] = alpha_j(sum_i c_i H_alpha_i)
std::vector<long> coroot_coweight(const ChevalleyAlgebra& alg, const std::vector<int>& c);

// the diagram involution pi0 with w0 = -pi0 on the root lattice (identity for
// the types whose longest Weyl element is -1)
std::vector<int> w0_twist(const RootSystem& rs);

// deterministic pool of inner monomial involutions: the sign characters, then
// the inner coset diagram(pi0) o transpose composed with symmetric sign
// characters. every entry is certified inner and of order 2.
std::vector<Automorphism> inner_involution_pool(const ChevalleyAlgebra& alg);

struct InvolutionConstraints {
  std::vector<const Automorphism*> commute_with;
  std::optional<std::size_t> fixed_dim;
  std::vector<std::pair<const Automorphism*, std::size_t>> joint_fixed_dim;
  // extra separating invariant: dimension of the fixed part of the Cartan
  std::optional<std::size_t> cartan_fixed_dim;
};

bool satisfies(const Automorphism& a, const InvolutionConstraints& c);

// first pool element meeting the constraints, in pool order
std::optional<Automorphism> involution_search(const ChevalleyAlgebra& alg,
                                              const InvolutionConstraints& c);
std::vector<Automorphism> involution_search_all(const ChevalleyAlgebra& alg,
                                                const InvolutionConstraints& c);

// validated Klein four-group {1, a, b, ab}: a, b commuting involutions with
// distinct nontrivial product. throws std::invalid_argument otherwise.
std::vector<Automorphism> klein_four_group(const Automorphism& a, const Automorphism& b);

// intersection of the fixed spaces
Subspace joint_fixed_space(const std::vector<const Automorphism*>& maps);
std::size_t joint_fixed_dim(const std::vector<const Automorphism*>& maps);

}  // namespace klein4
