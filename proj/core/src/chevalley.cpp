#include "klein4/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klein4 {

void sparse_add(SparseVec& v, int idx, const Rat& c) {
  if (is_zero(c)) return;
  auto it = std::lower_bound(v.begin(), v.end(), idx,
                             [](const std::pair<int, Rat>& e, int i) { return e.first < i; });
  if (it != v.end() && it->first == idx) {
    it->second += c;
    if (is_zero(it->second)) v.erase(it);
  } else {
    v.insert(it, {idx, c});
  }
}

Vec sparse_to_dense(const SparseVec& v, int dim) {
  Vec d(dim, Rat(0));
  for (const auto& e : v) d[e.first] = e.second;
  return d;
}

int ChevalleyAlgebra::opposite(int idx) const {
  int r = rank(), m = num_positive();
  if (idx < r) throw std::logic_error("opposite() wants a root vector index");
  return idx < r + m ? idx + m : idx - m;
}

RootVec ChevalleyAlgebra::root_of(int idx) const {
  int r = rank(), m = num_positive();
  if (idx < r) throw std::logic_error("root_of() wants a root vector index");
  if (idx < r + m) return rs_->positive(idx - r);
  RootVec a = rs_->positive(idx - r - m);
  for (auto& c : a) c = -c;
  return a;
}

int ChevalleyAlgebra::index_of_root(const RootVec& a) const {
  int p = rs_->positive_index(a);
  if (p >= 0) return pos_index(p);
  RootVec neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  p = rs_->positive_index(neg);
  if (p >= 0) return neg_index(p);
  return -1;
}

Vec ChevalleyAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim_, Rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      for (const auto& e : table_[i][j]) out[e.first] += x[i] * y[j] * e.second;
    }
  }
  return out;
}

RatMatrix ChevalleyAlgebra::ad(const Vec& x) const {
  RatMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (const auto& e : table_[i][j]) m.at(e.first, j) += x[i] * e.second;
    }
  }
  return m;
}

Vec ChevalleyAlgebra::coroot(int p) const {
  const SparseVec& sv = table_[pos_index(p)][neg_index(p)];
  Vec h(rank(), Rat(0));
  for (const auto& e : sv) {
    if (e.first >= rank())
      throw std::logic_error("coroot bracket is not contained in the Cartan subalgebra");
    h[e.first] = e.second;
  }
  return h;
}

const RatMatrix& ChevalleyAlgebra::killing() const {
  if (killing_) return *killing_;
  RatMatrix k(dim_, dim_);
  // tr(ad x_i ad x_j) walked over the sparse table
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      Rat s(0);
      for (int m = 0; m < dim_; ++m) {
        for (const auto& e : table_[j][m]) {
          // coefficient of x_m in [x_i, x_t], t = e.first
          for (const auto& f : table_[i][e.first])
            if (f.first == m) s += e.second * f.second;
        }
      }
      k.at(i, j) = s;
      k.at(j, i) = s;
    }
  }
  killing_ = std::move(k);
  return *killing_;
}

Rat ChevalleyAlgebra::killing_form(const Vec& x, const Vec& y) const {
  const RatMatrix& k = killing();
  Rat s(0);
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(y[j])) continue;
      s += x[i] * k.at(i, j) * y[j];
    }
  }
  return s;
}

namespace {

// sparse bracket against a basis vector
SparseVec sparse_bracket_basis(const std::vector<std::vector<SparseVec>>& table,
                               const SparseVec& x, int k) {
  SparseVec out;
  for (const auto& e : x)
    for (const auto& f : table[e.first][k]) sparse_add(out, f.first, e.second * f.second);
  return out;
}

}  // namespace

void ChevalleyAlgebra::jacobi_triple(int i, int j, int k) const {
  SparseVec acc;
  for (const auto& e : sparse_bracket_basis(table_, table_[i][j], k))
    sparse_add(acc, e.first, e.second);
  for (const auto& e : sparse_bracket_basis(table_, table_[j][k], i))
    sparse_add(acc, e.first, e.second);
  for (const auto& e : sparse_bracket_basis(table_, table_[k][i], j))
    sparse_add(acc, e.first, e.second);
  if (!acc.empty())
    throw std::logic_error("Jacobi identity fails on basis triple (" + basis_name(i) + ", " +
                           basis_name(j) + ", " + basis_name(k) + ") in " + type().str());
}

void ChevalleyAlgebra::certify_jacobi_full() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) jacobi_triple(i, j, k);
}

void ChevalleyAlgebra::certify_jacobi_sample(int triples, unsigned seed) const {
  unsigned long long s = seed;
  auto next = [&]() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return int((s >> 33) % dim_);
  };
  for (int t = 0; t < triples; ++t) jacobi_triple(next(), next(), next());
}

void ChevalleyAlgebra::certify_chevalley_properties() const {
  int r = rank(), m = num_positive();
  // integrality of every constant
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (const auto& e : table_[i][j])
        if (e.second.get_den() != 1)
          throw std::logic_error("non-integer structure constant in " + type().str());

  // [x_a, x_{-a}] lies in the Cartan and acts by string-measured pairings
  for (int p = 0; p < m; ++p) {
    Vec h = coroot(p);  // throws if not pure Cartan
    SparseVec hs;
    for (int i = 0; i < r; ++i) sparse_add(hs, i, h[i]);
    const RootVec& alpha = rs_->positive(p);
    for (int idx = r; idx < dim_; ++idx) {
      RootVec beta = root_of(idx);
      SparseVec img = sparse_bracket_basis(table_, hs, idx);
      Rat expected;
      if (idx == pos_index(p) || idx == neg_index(p)) {
        expected = idx == pos_index(p) ? Rat(2) : Rat(-2);
      } else {
        int sp, sq;
        rs_->root_string(alpha, beta, sp, sq);
        expected = Rat(sp - sq);
      }
      SparseVec want;
      sparse_add(want, idx, expected);
      if (img != want)
        throw std::logic_error("coroot of " + basis_name(pos_index(p)) +
                               " acts inconsistently with the root string through " +
                               basis_name(idx) + " in " + type().str());
    }
  }

  // |N(a,b)| = p + 1 for every root pair whose sum is a root
  for (int i = r; i < dim_; ++i) {
    RootVec a = root_of(i);
    for (int j = r; j < dim_; ++j) {
      if (j == i || j == opposite(i)) continue;
      RootVec b = root_of(j);
      RootVec sum(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) sum[t] = a[t] + b[t];
      const SparseVec& br = table_[i][j];
      if (!rs_->is_root(sum)) {
        if (!br.empty())
          throw std::logic_error("bracket lands outside the root system: [" + basis_name(i) +
                                 ", " + basis_name(j) + "]");
        continue;
      }
      int sp, sq;
      rs_->root_string(a, b, sp, sq);
      int target = index_of_root(sum);
      if (br.size() != 1 || br[0].first != target || abs(br[0].second) != Rat(sp + 1))
        throw std::logic_error("structure constant violates |N| = p+1 on [" + basis_name(i) +
                               ", " + basis_name(j) + "] in " + type().str());
    }
  }
}

void ChevalleyAlgebra::certify_policy_jacobi() const {
  if (dim_ <= 150)
    certify_jacobi_full();
  else
    certify_jacobi_sample(30000, 0x5eedu);
}

ChevalleyAlgebra ChevalleyAlgebra::build(const CartanType& t) {
  bool simply_laced = t.series == 'A' || t.series == 'D' || t.series == 'E';
  ChevalleyAlgebra alg = simply_laced ? build_simply_laced(t) : build_folded(t);
  alg.certify_chevalley_properties();
  alg.certify_policy_jacobi();
  return alg;
}

ChevalleyAlgebra ChevalleyAlgebra::build_simply_laced(const CartanType& t) {
  ChevalleyAlgebra alg;
  alg.rs_.emplace(t);
  const RootSystem& rs = *alg.rs_;
  int r = rs.rank(), m = rs.num_positive();
  alg.dim_ = r + 2 * m;
  alg.table_.assign(alg.dim_, std::vector<SparseVec>(alg.dim_));

  // sign cocycle: eps(a, b) = (-1)^(sum a_i B_ij b_j) with B_ii = 1 and
  // B_ij = 1 exactly when i < j are adjacent
  std::vector<std::vector<int>> B(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) B[i][i] = 1;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (rs.adjacent(i, j)) B[i][j] = 1;
  auto eps = [&](const RootVec& a, const RootVec& b) {
    long e = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (B[i][j]) e += long(a[i]) * b[j];
    return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
  };
  auto sgn_of = [](const RootVec& a) {
    for (int c : a)
      if (c != 0) return c > 0 ? 1 : -1;
    return 0;
  };

  // [h_i, x_b] = <b, alpha_i^vee> x_b
  for (int i = 0; i < r; ++i) {
    for (int idx = r; idx < alg.dim_; ++idx) {
      RootVec b = alg.root_of(idx);
      int c = rs.pairing_with_simple_coroot(b, i);
      if (c == 0) continue;
      alg.table_[i][idx].push_back({idx, Rat(c)});
      alg.table_[idx][i].push_back({idx, Rat(-c)});
    }
  }

  // root vector pairs
  for (int i = r; i < alg.dim_; ++i) {
    RootVec a = alg.root_of(i);
    for (int j = r; j < alg.dim_; ++j) {
      if (j == i) continue;
      RootVec b = alg.root_of(j);
      RootVec sum(r, 0);
      for (int k = 0; k < r; ++k) sum[k] = a[k] + b[k];
      bool zero = std::all_of(sum.begin(), sum.end(), [](int c) { return c == 0; });
      if (zero) {
        // [x_a, x_{-a}] = h_a with coroot = root coordinates (all roots share
        // one length here); for a < 0 the same expression yields -h_{|a|}
        for (int k = 0; k < r; ++k)
          if (a[k] != 0) alg.table_[i][j].push_back({k, Rat(a[k])});
        continue;
      }
      if (!rs.is_root(sum)) continue;
      int c = eps(a, b) * sgn_of(a) * sgn_of(b) * sgn_of(sum);
      alg.table_[i][j].push_back({alg.index_of_root(sum), Rat(c)});
    }
  }
  return alg;
}

ChevalleyAlgebra ChevalleyAlgebra::build_folded(const CartanType& t) {
  // parent diagram and the symmetry to fold along
  CartanType parent_type;
  std::vector<int> perm;
  switch (t.series) {
    case 'B': {
      parent_type = {'D', t.rank + 1};
      perm.resize(t.rank + 1);
      for (int i = 0; i <= t.rank; ++i) perm[i] = i;
      std::swap(perm[t.rank - 1], perm[t.rank]);
      break;
    }
    case 'C': {
      parent_type = {'A', 2 * t.rank - 1};
      perm.resize(2 * t.rank - 1);
      for (int i = 0; i < 2 * t.rank - 1; ++i) perm[i] = 2 * t.rank - 2 - i;
      break;
    }
    case 'F': {
      parent_type = {'E', 6};
      perm = {5, 1, 4, 3, 2, 0};
      break;
    }
    case 'G': {
      parent_type = {'D', 4};
      perm = {2, 1, 3, 0};
      break;
    }
    default:
      throw std::logic_error("no folding recipe for " + t.str());
  }

  ChevalleyAlgebra parent = build_simply_laced(parent_type);
  const RootSystem& prs = parent.roots();
  int pr = prs.rank(), pm = prs.num_positive();
  std::vector<int> signs = parent.diagram_signs(perm);

  // orbits of simple nodes
  std::vector<int> node_orbit(pr, -1);
  std::vector<std::vector<int>> node_orbits;
  for (int i = 0; i < pr; ++i) {
    if (node_orbit[i] >= 0) continue;
    std::vector<int> orb;
    int j = i;
    do {
      node_orbit[j] = int(node_orbits.size());
      orb.push_back(j);
      j = perm[j];
    } while (j != i);
    node_orbits.push_back(orb);
  }
  int fr = int(node_orbits.size());
  if (fr != t.rank)
    throw std::logic_error("folding of " + parent_type.str() + " has rank " + std::to_string(fr) +
                           ", wanted " + t.str());

  // orbits of positive roots; certify the signs along each orbit
  std::vector<int> root_orbit(pm, -1);
  std::vector<std::vector<int>> root_orbits;
  for (int p = 0; p < pm; ++p) {
    if (root_orbit[p] >= 0) continue;
    std::vector<int> orb;
    int q = p, sign_product = 1;
    do {
      root_orbit[q] = int(root_orbits.size());
      orb.push_back(q);
      sign_product *= signs[q];
      q = parent.permute_positive(perm, q);
    } while (q != p);
    if (orb.size() == 1 && signs[p] != 1)
      throw std::logic_error("folding: fixed root vector of " + parent_type.str() +
                             " acquires sign -1");
    if (sign_product != 1)
      throw std::logic_error("folding: sign product around a root orbit is -1");
    root_orbits.push_back(orb);
  }

  // folded Cartan matrix on node orbits: sum a parent row over the target
  // orbit; must not depend on the representative
  std::vector<std::vector<int>> fc(fr, std::vector<int>(fr));
  for (int i = 0; i < fr; ++i)
    for (int j = 0; j < fr; ++j) {
      bool first = true;
      int val = 0;
      for (int k : node_orbits[i]) {
        int s = 0;
        for (int l : node_orbits[j]) s += prs.cartan(k, l);
        if (first) {
          val = s;
          first = false;
        } else if (s != val) {
          throw std::logic_error("folded Cartan entry depends on the orbit representative");
        }
      }
      fc[i][j] = val;
    }

  // align node orbits with the Bourbaki numbering of the target type
  RootSystem target(t);
  std::vector<int> align(fr, -1);  // orbit index -> target node
  {
    std::vector<bool> used(fr, false);
    std::function<bool(int)> dfs = [&](int i) -> bool {
      if (i == fr) return true;
      for (int n = 0; n < fr; ++n) {
        if (used[n]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          if (fc[i][j] != target.cartan(n, align[j])) ok = false;
          if (ok && fc[j][i] != target.cartan(align[j], n)) ok = false;
        }
        if (fc[i][i] != 2) ok = false;
        if (!ok) continue;
        align[i] = n;
        used[n] = true;
        if (dfs(i + 1)) return true;
        used[n] = false;
        align[i] = -1;
      }
      return false;
    };
    if (!dfs(0))
      throw std::logic_error("folded Cartan matrix of " + parent_type.str() +
                             " does not match " + t.str());
  }

  // orbit -> target positive root, certified bijective
  int fm = target.num_positive();
  if (int(root_orbits.size()) != fm)
    throw std::logic_error("folding: root orbit count does not match " + t.str());
  std::vector<int> orbit_target(root_orbits.size(), -1);
  std::vector<int> target_orbit(fm, -1);
  for (std::size_t o = 0; o < root_orbits.size(); ++o) {
    const RootVec& rep = prs.positive(root_orbits[o][0]);
    RootVec d(fr, 0);
    for (int j = 0; j < fr; ++j) {
      int s = 0;
      for (int i : node_orbits[j]) s += rep[i];
      d[j] = s;
    }
    RootVec e(fr, 0);
    for (int j = 0; j < fr; ++j) e[align[j]] = d[j];
    int tp = target.positive_index(e);
    if (tp < 0) throw std::logic_error("folding: restricted root is not a root of " + t.str());
    if (target_orbit[tp] >= 0) throw std::logic_error("folding: two orbits restrict equally");
    orbit_target[o] = tp;
    target_orbit[tp] = int(o);
  }

  // folded basis as parent vectors
  int pdim = parent.dim();
  int fdim = fr + 2 * fm;
  std::vector<Vec> fb(fdim, Vec(pdim, Rat(0)));
  for (int j = 0; j < fr; ++j) {
    // H'_(target node align[j]) = sum of parent h over the orbit
    for (int i : node_orbits[j]) fb[align[j]][i] = Rat(1);
  }
  for (std::size_t o = 0; o < root_orbits.size(); ++o) {
    int tp = orbit_target[o];
    int idx_pos = root_orbits[o][0], coeff = 1;
    for (std::size_t k = 0; k < root_orbits[o].size(); ++k) {
      fb[fr + tp][parent.pos_index(idx_pos)] += coeff;
      fb[fr + fm + tp][parent.neg_index(idx_pos)] += coeff;
      coeff *= signs[idx_pos];
      idx_pos = parent.permute_positive(perm, idx_pos);
    }
  }

  // decompose parent brackets of folded basis vectors back into the folded
  // basis and certify the reconstruction exactly
  ChevalleyAlgebra alg;
  alg.rs_.emplace(t);
  alg.dim_ = fdim;
  alg.table_.assign(fdim, std::vector<SparseVec>(fdim));
  for (int i = 0; i < fdim; ++i) {
    for (int j = 0; j < fdim; ++j) {
      if (i == j) continue;
      Vec br = parent.bracket(fb[i], fb[j]);
      SparseVec out;
      Vec recon(pdim, Rat(0));
      // Cartan part: must be constant on node orbits
      for (int fo = 0; fo < fr; ++fo) {
        const Rat& c = br[node_orbits[fo][0]];
        for (int k : node_orbits[fo])
          if (br[k] != c)
            throw std::logic_error("folding: Cartan part of a bracket is not orbit-constant");
        if (!is_zero(c)) {
          sparse_add(out, align[fo], c);
          for (int k : node_orbits[fo]) recon[k] += c;
        }
      }
      // root part: read the coefficient at each orbit representative
      for (std::size_t o = 0; o < root_orbits.size(); ++o) {
        int rep = root_orbits[o][0];
        int tp = orbit_target[o];
        const Rat& cp = br[parent.pos_index(rep)];
        if (!is_zero(cp)) {
          sparse_add(out, fr + tp, cp);
          for (int k = 0; k < pdim; ++k) recon[k] += cp * fb[fr + tp][k];
        }
        const Rat& cn = br[parent.neg_index(rep)];
        if (!is_zero(cn)) {
          sparse_add(out, fr + fm + tp, cn);
          for (int k = 0; k < pdim; ++k) recon[k] += cn * fb[fr + fm + tp][k];
        }
      }
      if (recon != br)
        throw std::logic_error("folding: bracket of orbit sums does not lie in the folded span");
      alg.table_[i][j] = std::move(out);
    }
  }
  return alg;
}

std::vector<int> ChevalleyAlgebra::diagram_signs(const std::vector<int>& node_perm) const {
  const RootSystem& rs = *rs_;
  int r = rank(), m = num_positive();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rs.cartan(node_perm[i], node_perm[j]) != rs.cartan(i, j))
        throw std::invalid_argument("node permutation does not preserve the Cartan matrix");

  std::vector<int> signs(m, 0);
  for (int p = 0; p < m; ++p) {
    const RootVec& g = rs.positive(p);
    if (RootSystem::height(g) == 1) {
      signs[p] = 1;
      continue;
    }
    // peel off the least simple root leaving a positive root; positives are
    // sorted by height so both pieces are already resolved
    int made = 0;
    for (int j = 0; j < r && !made; ++j) {
      if (g[j] == 0) continue;
      RootVec b = g;
      b[j] -= 1;
      int pb = rs.positive_index(b);
      if (pb < 0) continue;
      RootVec aj(r, 0);
      aj[j] = 1;
      int ia = index_of_root(aj), ib = pos_index(pb), ig = pos_index(p);
      const SparseVec& nab = table_[ia][ib];
      if (nab.size() != 1 || nab[0].first != ig)
        throw std::logic_error("unexpected bracket while extending a diagram symmetry");
      // images
      int pj = node_perm[j];
      RootVec bim(r);
      for (int k = 0; k < r; ++k) bim[node_perm[k]] = b[k];
      RootVec ajim(r, 0);
      ajim[pj] = 1;
      int iai = index_of_root(ajim), ibi = index_of_root(bim);
      const SparseVec& nim = table_[iai][ibi];
      int target = permute_positive(node_perm, p);
      if (nim.size() != 1 || nim[0].first != pos_index(target))
        throw std::logic_error("diagram symmetry image bracket missing");
      Rat ratio = nim[0].second / nab[0].second;
      int sb = signs[pb];
      if (abs(ratio) != 1 || sb == 0)
        throw std::logic_error("diagram symmetry extension produced a non-unit ratio");
      signs[p] = sb * (sgn(ratio) > 0 ? 1 : -1);
      made = 1;
    }
    if (!made) throw std::logic_error("positive root has no simple summand decomposition");
  }
  return signs;
}

int ChevalleyAlgebra::permute_positive(const std::vector<int>& node_perm, int p) const {
  const RootVec& a = rs_->positive(p);
  RootVec im(rank());
  for (int i = 0; i < rank(); ++i) im[node_perm[i]] = a[i];
  int q = rs_->positive_index(im);
  if (q < 0) throw std::logic_error("node permutation does not permute the positive roots");
  return q;
}

std::string ChevalleyAlgebra::basis_name(int idx) const {
  if (idx < rank()) return "h" + std::to_string(idx + 1);
  RootVec a = root_of(idx);
  bool pos = is_positive_vector(idx);
  std::string s(pos ? "x[" : "y[");
  for (int c : a) s += std::to_string(pos ? c : -c);
  s += "]";
  return s;
}

std::string ChevalleyAlgebra::constants_table() const {
  std::ostringstream os;
  os << type().str() << " dim " << dim_ << " positive " << num_positive() << "\n";
  for (int i = rank(); i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j) {
      if (j == opposite(i)) continue;
      const SparseVec& br = table_[i][j];
      if (br.empty()) continue;
      os << "[" << basis_name(i) << ", " << basis_name(j) << "] = " << rat_str(br[0].second)
         << " " << basis_name(br[0].first) << "\n";
    }
  return os.str();
}

CompactForm compact_form(const ChevalleyAlgebra& alg) {
  CompactForm cf;
  cf.m = alg.num_positive();
  cf.r = alg.rank();
  int n = alg.dim();
  cf.basis.resize(cf.dim());
  for (int p = 0; p < cf.m; ++p) {
    CVec u{Vec(n, Rat(0)), Vec(n, Rat(0))};
    u.re[alg.pos_index(p)] = 1;
    u.re[alg.neg_index(p)] = -1;
    cf.basis[cf.u_index(p)] = u;
    CVec v{Vec(n, Rat(0)), Vec(n, Rat(0))};
    v.im[alg.pos_index(p)] = 1;
    v.im[alg.neg_index(p)] = 1;
    cf.basis[cf.v_index(p)] = v;
  }
  for (int j = 0; j < cf.r; ++j) {
    CVec t{Vec(n, Rat(0)), Vec(n, Rat(0))};
    t.im[alg.h_index(j)] = 1;
    cf.basis[cf.t_index(j)] = t;
  }

  // decompose a complexified element in the u, v, t basis; everything
  // imaginary must cancel into rational coordinates
  auto decompose = [&](const CVec& w) {
    SparseVec out;
    for (int p = 0; p < cf.m; ++p) {
      int ip = alg.pos_index(p), in = alg.neg_index(p);
      Rat a = (w.re[ip] - w.re[in]) / 2;
      Rat ai = (w.im[ip] - w.im[in]) / 2;
      Rat b = (w.im[ip] + w.im[in]) / 2;
      Rat bi = (w.re[ip] + w.re[in]) / 2;
      if (!is_zero(ai) || !is_zero(bi))
        throw std::logic_error("compact form bracket escapes the real span");
      sparse_add(out, cf.u_index(p), a);
      sparse_add(out, cf.v_index(p), b);
    }
    for (int j = 0; j < cf.r; ++j) {
      if (!is_zero(w.re[alg.h_index(j)]))
        throw std::logic_error("compact form bracket has a real Cartan component");
      sparse_add(out, cf.t_index(j), w.im[alg.h_index(j)]);
    }
    return out;
  };

  cf.table.assign(cf.dim(), std::vector<SparseVec>(cf.dim()));
  for (int i = 0; i < cf.dim(); ++i)
    for (int j = i + 1; j < cf.dim(); ++j) {
      SparseVec br = decompose(cbracket(alg, cf.basis[i], cf.basis[j]));
      cf.table[j][i] = br;
      for (auto& e : cf.table[j][i]) e.second = -e.second;
      cf.table[i][j] = std::move(br);
    }

  cf.killing = RatMatrix(cf.dim(), cf.dim());
  for (int i = 0; i < cf.dim(); ++i)
    for (int j = i; j < cf.dim(); ++j) {
      const CVec& a = cf.basis[i];
      const CVec& b = cf.basis[j];
      Rat re = alg.killing_form(a.re, b.re) - alg.killing_form(a.im, b.im);
      Rat im = alg.killing_form(a.re, b.im) + alg.killing_form(a.im, b.re);
      if (!is_zero(im)) throw std::logic_error("compact Killing form has an imaginary part");
      cf.killing.at(i, j) = re;
      cf.killing.at(j, i) = re;
    }
  return cf;
}

CVec cvec_real(const Vec& re) { return CVec{re, Vec(re.size(), Rat(0))}; }

CVec cvec_add(const CVec& a, const CVec& b) {
  return CVec{vec_add(a.re, b.re), vec_add(a.im, b.im)};
}

CVec cvec_sub(const CVec& a, const CVec& b) {
  return CVec{vec_sub(a.re, b.re), vec_sub(a.im, b.im)};
}

CVec cvec_scale(const CVec& a, const Rat& re, const Rat& im) {
  CVec out{Vec(a.re.size(), Rat(0)), Vec(a.re.size(), Rat(0))};
  for (std::size_t k = 0; k < a.re.size(); ++k) {
    out.re[k] = re * a.re[k] - im * a.im[k];
    out.im[k] = re * a.im[k] + im * a.re[k];
  }
  return out;
}

bool cvec_is_zero(const CVec& a) { return vec_is_zero(a.re) && vec_is_zero(a.im); }

CVec cbracket(const ChevalleyAlgebra& alg, const CVec& a, const CVec& b) {
  Vec rr = alg.bracket(a.re, b.re);
  Vec ii = alg.bracket(a.im, b.im);
  Vec ri = alg.bracket(a.re, b.im);
  Vec ir = alg.bracket(a.im, b.re);
  return CVec{vec_sub(rr, ii), vec_add(ri, ir)};
}

}  // namespace klein4
