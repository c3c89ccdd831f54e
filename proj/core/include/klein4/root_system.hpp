#pragma once

#include <map>
#include <string>
#include <vector>

namespace klein4 {

// a root in simple-root coordinates
using RootVec = std::vector<int>;

struct CartanType {
  char series = 0;  // 'A'..'G'
  int rank = 0;

  static CartanType parse(const std::string& s);
  std::string str() const;
  bool operator==(const CartanType& o) const { return series == o.series && rank == o.rank; }
  bool operator<(const CartanType& o) const {
    return series != o.series ? series < o.series : rank < o.rank;
  }
};

// full root datum of a simple type, built from the Cartan matrix alone.
// positive roots are enumerated by height induction (root strings decide when
// adding a simple root stays inside the system) and stored sorted by
// (height, lexicographic).
class RootSystem {
 public:
  explicit RootSystem(const CartanType& t);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // cartan(i, j) = <alpha_i, alpha_j^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }

  int num_positive() const { return int(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }

  const RootVec& positive(int idx) const { return positive_[idx]; }
  const std::vector<RootVec>& positives() const { return positive_; }

  static int height(const RootVec& a);
  int max_height() const;

  bool is_root(const RootVec& a) const;
  // index into positives(), -1 when a is not a positive root
  int positive_index(const RootVec& a) const;

  const RootVec& highest_root() const { return highest_; }

  // <a, alpha_j^vee> for any lattice vector a
  int pairing_with_simple_coroot(const RootVec& a, int j) const;

  // alpha(H) where H is given by its pairing values with the simple roots,
  // i.e. integer coordinates in the fundamental coweight basis
  long pairing_with_coweight(const RootVec& a, const std::vector<long>& h) const;

  RootVec reflect_simple(const RootVec& a, int j) const;

  // p = steps down, q = steps up: b - p*a ... b + q*a all roots
  void root_string(const RootVec& a, const RootVec& b, int& p, int& q) const;

  // the nontrivial order-2 diagram symmetry where one exists (A_n n>=2, D_n,
  // E6), the identity permutation otherwise; certified against the Cartan
  // matrix either way
  std::vector<int> diagram_involution() const;

  // adjacency of simple nodes i != j
  bool adjacent(int i, int j) const { return cartan_[i][j] != 0; }

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootVec> positive_;  // sorted by (height, lex)
  std::map<RootVec, int> index_;   // positive root -> index
  RootVec highest_;

  void build_cartan();
  void enumerate_positives();
};

}  // namespace klein4
