#include "klein4/automorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace klein4 {

namespace {

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_identity_perm(const std::vector<int>& p) {
  for (int i = 0; i < int(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

std::string parity_label(const std::vector<long>& h) {
  std::string s = "t[";
  for (long v : h) s += char('0' + int(((v % 2) + 2) % 2));
  s += ']';
  return s;
}

}  // namespace

Automorphism Automorphism::identity(const ChevalleyAlgebra& alg) {
  Automorphism a(alg);
  a.perm_ = identity_perm(alg.dim());
  a.scale_.assign(alg.dim(), Rat(1));
  a.outer_coset_ = identity_perm(alg.rank());
  a.label_ = "1";
  return a;
}

Automorphism Automorphism::torus(const ChevalleyAlgebra& alg, const std::vector<long>& h) {
  if (int(h.size()) != alg.rank())
    throw std::invalid_argument("torus: pairing vector length != rank");
  Automorphism a(alg);
  int n = alg.dim();
  a.perm_ = identity_perm(n);
  a.scale_.assign(n, Rat(1));
  for (int idx = alg.rank(); idx < n; ++idx) {
    long pr = alg.roots().pairing_with_coweight(alg.root_of(idx), h);
    if (((pr % 2) + 2) % 2 != 0) a.scale_[idx] = Rat(-1);
  }
  a.outer_coset_ = identity_perm(alg.rank());
  a.label_ = parity_label(h);
  a.certify_bracket_preservation();
  return a;
}

Automorphism Automorphism::diagram(const ChevalleyAlgebra& alg, const std::vector<int>& node_perm) {
  const RootSystem& rs = alg.roots();
  int r = alg.rank();
  if (int(node_perm.size()) != r)
    throw std::invalid_argument("diagram: permutation length != rank");
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rs.cartan(node_perm[i], node_perm[j]) != rs.cartan(i, j))
        throw std::invalid_argument("diagram: permutation does not preserve the Cartan matrix");
  std::vector<int> signs = alg.diagram_signs(node_perm);
  Automorphism a(alg);
  int n = alg.dim();
  a.perm_.assign(n, 0);
  a.scale_.assign(n, Rat(1));
  for (int i = 0; i < r; ++i) a.perm_[i] = node_perm[i];
  for (int p = 0; p < alg.num_positive(); ++p) {
    int q = alg.permute_positive(node_perm, p);
    a.perm_[alg.pos_index(p)] = alg.pos_index(q);
    a.perm_[alg.neg_index(p)] = alg.neg_index(q);
    a.scale_[alg.pos_index(p)] = Rat(signs[p]);
    a.scale_[alg.neg_index(p)] = Rat(signs[p]);
  }
  a.outer_coset_ = node_perm;
  a.label_ = "d[";
  for (int i = 0; i < r; ++i) a.label_ += char('0' + node_perm[i] + 1);
  a.label_ += ']';
  a.certify_bracket_preservation();
  return a;
}

Automorphism Automorphism::transpose_involution(const ChevalleyAlgebra& alg) {
  Automorphism a(alg);
  int n = alg.dim();
  a.perm_.assign(n, 0);
  a.scale_.assign(n, Rat(-1));
  for (int i = 0; i < alg.rank(); ++i) a.perm_[i] = i;
  for (int idx = alg.rank(); idx < n; ++idx) a.perm_[idx] = alg.opposite(idx);
  a.outer_coset_ = w0_twist(alg.roots());
  a.label_ = "c";
  a.certify_bracket_preservation();
  return a;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (alg_ != other.alg_) throw std::invalid_argument("compose: maps live on different algebras");
  Automorphism a(*alg_);
  int n = alg_->dim();
  a.perm_.resize(n);
  a.scale_.resize(n);
  for (int i = 0; i < n; ++i) {
    int mid = other.perm_[i];
    a.perm_[i] = perm_[mid];
    a.scale_[i] = other.scale_[i] * scale_[mid];
  }
  int r = alg_->rank();
  a.outer_coset_.resize(r);
  for (int i = 0; i < r; ++i) a.outer_coset_[i] = outer_coset_[other.outer_coset_[i]];
  a.label_ = label_ + "*" + other.label_;
  // bracket preservation is closed under composition, no recheck
  return a;
}

bool Automorphism::operator==(const Automorphism& o) const {
  return alg_ == o.alg_ && perm_ == o.perm_ && scale_ == o.scale_;
}

bool Automorphism::is_identity() const {
  if (!is_identity_perm(perm_)) return false;
  for (const Rat& s : scale_)
    if (s != 1) return false;
  return true;
}

bool Automorphism::is_involution() const {
  return !is_identity() && compose(*this).is_identity();
}

bool Automorphism::commutes_with(const Automorphism& o) const {
  return compose(o) == o.compose(*this);
}

Vec Automorphism::apply(const Vec& x) const {
  int n = alg_->dim();
  if (int(x.size()) != n) throw std::invalid_argument("apply: wrong vector length");
  Vec y(n, Rat(0));
  for (int i = 0; i < n; ++i)
    if (!is_zero(x[i])) y[perm_[i]] = scale_[i] * x[i];
  return y;
}

CVec Automorphism::apply(const CVec& x) const { return CVec{apply(x.re), apply(x.im)}; }

RatMatrix Automorphism::matrix() const {
  int n = alg_->dim();
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(perm_[i], i) = scale_[i];
  return m;
}

std::size_t Automorphism::fixed_dim() const {
  int n = alg_->dim();
  std::vector<char> seen(n, 0);
  std::size_t d = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Rat prod(1);
    int j = i;
    do {
      seen[j] = 1;
      prod *= scale_[j];
      j = perm_[j];
    } while (j != i);
    if (prod == 1) ++d;
  }
  return d;
}

std::size_t Automorphism::cartan_fixed_dim() const {
  int r = alg_->rank();
  std::vector<char> seen(alg_->dim(), 0);
  std::size_t d = 0;
  for (int i = 0; i < r; ++i) {
    if (seen[i]) continue;
    Rat prod(1);
    bool inside = true;
    int j = i;
    do {
      seen[j] = 1;
      if (j >= r) inside = false;
      prod *= scale_[j];
      j = perm_[j];
    } while (j != i);
    if (inside && prod == 1) ++d;
  }
  return d;
}

Subspace Automorphism::fixed_space() const {
  int n = alg_->dim();
  Subspace s(n);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    Rat prod(1);
    int j = i;
    do {
      seen[j] = 1;
      cycle.push_back(j);
      prod *= scale_[j];
      j = perm_[j];
    } while (j != i);
    if (prod != 1) continue;
    Vec v(n, Rat(0));
    Rat c(1);
    for (int k : cycle) {
      v[k] = c;
      c *= scale_[k];
    }
    s.add(v);
  }
  return s;
}

bool Automorphism::inner() const { return is_identity_perm(outer_coset_); }

void Automorphism::certify_bracket_preservation() const {
  int n = alg_->dim();
  using Entry = std::pair<int, Rat>;
  std::vector<Entry> lhs, rhs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      lhs.clear();
      for (const auto& [k, c] : alg_->bracket_basis(i, j)) lhs.emplace_back(perm_[k], scale_[k] * c);
      std::sort(lhs.begin(), lhs.end(),
                [](const Entry& a, const Entry& b) { return a.first < b.first; });
      rhs.clear();
      Rat f = scale_[i] * scale_[j];
      for (const auto& [k, c] : alg_->bracket_basis(perm_[i], perm_[j])) rhs.emplace_back(k, f * c);
      if (lhs != rhs)
        throw std::logic_error("automorphism does not preserve the bracket at pair " +
                               alg_->basis_name(i) + ", " + alg_->basis_name(j));
    }
  }
}

Automorphism Automorphism::with_label(const std::string& l) const {
  Automorphism a = *this;
  a.label_ = l;
  return a;
}

std::vector<long> coroot_coweight(const ChevalleyAlgebra& alg, const std::vector<int>& c) {
  int r = alg.rank();
  if (int(c.size()) != r) throw std::invalid_argument("coroot vector length != rank");
  std::vector<long> h(r, 0);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) h[j] += long(c[i]) * alg.roots().cartan(j, i);
  return h;
}

std::vector<int> w0_twist(const RootSystem& rs) {
  int r = rs.rank();
  // images of the simple roots under w, grown right-to-left one reflection at
  // a time; each step picks a simple root still sent to a positive root, so
  // the length climbs until w = w0
  std::vector<RootVec> img(r);
  for (int i = 0; i < r; ++i) {
    img[i].assign(r, 0);
    img[i][i] = 1;
  }
  int steps = 0;
  for (;;) {
    int j = -1;
    for (int k = 0; k < r; ++k)
      if (RootSystem::height(img[k]) > 0) {
        j = k;
        break;
      }
    if (j < 0) break;
    if (++steps > rs.num_positive())
      throw std::logic_error("longest-element computation exceeded its length bound");
    RootVec old = img[j];
    for (int i = 0; i < r; ++i) {
      int c = rs.cartan(i, j);
      if (c == 0) continue;
      for (int k = 0; k < r; ++k) img[i][k] -= c * old[k];
    }
  }
  std::vector<int> pi0(r, -1);
  std::vector<char> hit(r, 0);
  for (int i = 0; i < r; ++i) {
    int target = -1;
    for (int k = 0; k < r; ++k) {
      if (img[i][k] == 0) continue;
      if (img[i][k] != -1 || target != -1) throw std::logic_error("-w0 does not permute the simple roots");
      target = k;
    }
    if (target < 0 || hit[target]) throw std::logic_error("-w0 does not permute the simple roots");
    hit[target] = 1;
    pi0[i] = target;
  }
  return pi0;
}

std::vector<Automorphism> inner_involution_pool(const ChevalleyAlgebra& alg) {
  int r = alg.rank();
  if (r > 16) throw std::invalid_argument("sign-character pool too large for this rank");
  std::vector<Automorphism> pool;
  for (unsigned long mask = 1; mask < (1ul << r); ++mask) {
    std::vector<long> h(r, 0);
    for (int i = 0; i < r; ++i) h[i] = long((mask >> i) & 1);
    pool.push_back(Automorphism::torus(alg, h));
  }
  // the other inner coset: the Cartan-matrix symmetry absorbing -w0 times the
  // transpose involution, swept over all sign characters; only the order-2
  // products are kept
  Automorphism base =
      Automorphism::diagram(alg, w0_twist(alg.roots())).compose(Automorphism::transpose_involution(alg));
  for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
    std::vector<long> h(r, 0);
    for (int i = 0; i < r; ++i) h[i] = long((mask >> i) & 1);
    Automorphism cand = base.compose(Automorphism::torus(alg, h));
    if (!cand.is_involution()) continue;
    if (!cand.inner()) throw std::logic_error("involution pool picked up an outer map");
    pool.push_back(cand);
  }
  return pool;
}

bool satisfies(const Automorphism& a, const InvolutionConstraints& c) {
  for (const Automorphism* m : c.commute_with)
    if (!a.commutes_with(*m)) return false;
  if (c.fixed_dim && a.fixed_dim() != *c.fixed_dim) return false;
  if (c.cartan_fixed_dim && a.cartan_fixed_dim() != *c.cartan_fixed_dim) return false;
  for (const auto& [m, d] : c.joint_fixed_dim)
    if (joint_fixed_dim({&a, m}) != d) return false;
  return true;
}

std::optional<Automorphism> involution_search(const ChevalleyAlgebra& alg,
                                              const InvolutionConstraints& c) {
  for (const Automorphism& a : inner_involution_pool(alg))
    if (satisfies(a, c)) return a;
  return std::nullopt;
}

std::vector<Automorphism> involution_search_all(const ChevalleyAlgebra& alg,
                                                const InvolutionConstraints& c) {
  std::vector<Automorphism> out;
  for (const Automorphism& a : inner_involution_pool(alg))
    if (satisfies(a, c)) out.push_back(a);
  return out;
}

std::vector<Automorphism> klein_four_group(const Automorphism& a, const Automorphism& b) {
  if (&a.algebra() != &b.algebra())
    throw std::invalid_argument("klein four-group: generators live on different algebras");
  if (!a.is_involution() || !b.is_involution())
    throw std::invalid_argument("klein four-group: generator is not an involution");
  if (!a.commutes_with(b)) throw std::invalid_argument("klein four-group: generators do not commute");
  if (a == b) throw std::invalid_argument("klein four-group: generators coincide");
  return {Automorphism::identity(a.algebra()), a, b, a.compose(b)};
}

Subspace joint_fixed_space(const std::vector<const Automorphism*>& maps) {
  if (maps.empty()) throw std::invalid_argument("joint fixed space of an empty family");
  Subspace s = maps[0]->fixed_space();
  for (std::size_t i = 1; i < maps.size(); ++i) s = s.intersect(maps[i]->fixed_space());
  return s;
}

std::size_t joint_fixed_dim(const std::vector<const Automorphism*>& maps) {
  return joint_fixed_space(maps).dim();
}

}  // namespace klein4
