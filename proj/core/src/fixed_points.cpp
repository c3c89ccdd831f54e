#include "klein4/fixed_points.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace klein4 {

namespace {

void certify_closure(const ChevalleyAlgebra& alg, const Subspace& space) {
  const auto& basis = space.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!space.contains(alg.bracket(basis[i], basis[j])))
        throw std::logic_error("span is not closed under the bracket");
}

}  // namespace

Subalgebra fixed_subalgebra(const ChevalleyAlgebra& alg,
                            const std::vector<const Automorphism*>& maps) {
  Subalgebra s{&alg, joint_fixed_space(maps)};
  certify_closure(alg, s.space);
  return s;
}

Subalgebra as_subalgebra(const ChevalleyAlgebra& alg) {
  Subspace sp(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    Vec v(alg.dim(), Rat(0));
    v[i] = 1;
    sp.add(v);
  }
  return Subalgebra{&alg, sp};
}

Subalgebra make_subalgebra(const ChevalleyAlgebra& alg, const Subspace& span) {
  certify_closure(alg, span);
  return Subalgebra{&alg, span};
}

RatMatrix ad_in_basis(const Subalgebra& s, const Vec& t) {
  std::size_t d = s.dim();
  RatMatrix m(d, d);
  Vec c;
  for (std::size_t j = 0; j < d; ++j) {
    Vec w = s.parent->bracket(t, s.space.basis()[j]);
    if (!s.space.coords(w, c)) throw std::logic_error("adjoint action leaves the subalgebra");
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = c[i];
  }
  return m;
}

std::vector<TorusGenerator> torus_generator_pool(const Subalgebra& s, bool extended) {
  const ChevalleyAlgebra& alg = *s.parent;
  const RootSystem& rs = alg.roots();
  int r = alg.rank();
  int n = alg.dim();
  int m = alg.num_positive();
  std::vector<TorusGenerator> pool;

  // Cartan part first: real eigenvalues, read off the diagonal ambient action
  Subspace hspan(n);
  for (int i = 0; i < r; ++i) {
    Vec v(n, Rat(0));
    v[i] = 1;
    hspan.add(v);
  }
  Subspace cartan_part = s.space.intersect(hspan);
  for (const Vec& h : cartan_part.basis()) {
    TorusGenerator g;
    g.v = h;
    g.imaginary = false;
    std::set<Rat> vals{Rat(0)};
    for (int p = 0; p < m; ++p) {
      Rat val(0);
      for (int j = 0; j < r; ++j)
        if (!is_zero(h[j])) val += h[j] * Rat(rs.pairing_with_simple_coroot(rs.positive(p), j));
      vals.insert(val);
      vals.insert(-val);
    }
    g.candidates.assign(vals.begin(), vals.end());
    pool.push_back(std::move(g));
  }

  auto string_pairing = [&](const RootVec& beta, int p) {
    if (beta == rs.positive(p)) return 2;  // strings only measure other roots
    int down = 0, up = 0;
    rs.root_string(rs.positive(p), beta, down, up);
    return down - up;
  };
  auto candidates_for = [&](int p, int q, int sign) {
    // ambient eigenvalues of the combination of the two root-pair elements:
    // pairings of the roots against coroot_p + sign*coroot_q
    std::set<Rat> vals{Rat(0)};
    for (int b = 0; b < m; ++b) {
      long v = string_pairing(rs.positive(b), p);
      if (q >= 0) v += sign * string_pairing(rs.positive(b), q);
      vals.insert(Rat(v));
      vals.insert(Rat(-v));
    }
    return std::vector<Rat>(vals.begin(), vals.end());
  };
  auto u_vec = [&](int p) {
    Vec v(n, Rat(0));
    v[alg.pos_index(p)] = 1;
    v[alg.neg_index(p)] = -1;
    return v;
  };
  auto w_vec = [&](int p) {
    Vec v(n, Rat(0));
    v[alg.pos_index(p)] = 1;
    v[alg.neg_index(p)] = 1;
    return v;
  };

  std::vector<char> single(m, 0);
  for (int p = 0; p < m; ++p) {
    Vec v = u_vec(p);
    if (!s.space.contains(v)) continue;
    single[p] = 1;
    TorusGenerator g;
    g.v = std::move(v);
    g.imaginary = true;
    g.candidates = candidates_for(p, -1, 0);
    pool.push_back(std::move(g));
  }

  if (!extended) return pool;

  // sums and differences over strongly orthogonal pairs whose members are not
  // individually inside; these stay semisimple with integer ambient spectrum
  for (int p = 0; p < m; ++p) {
    if (single[p]) continue;
    for (int q = p + 1; q < m; ++q) {
      if (single[q]) continue;
      RootVec sum = rs.positive(p), diff = rs.positive(p);
      for (int i = 0; i < r; ++i) {
        sum[i] += rs.positive(q)[i];
        diff[i] -= rs.positive(q)[i];
      }
      if (rs.is_root(sum) || rs.is_root(diff)) continue;
      for (int sign : {1, -1}) {
        Vec v = u_vec(p);
        Vec other = u_vec(q);
        for (int i = 0; i < n; ++i) v[i] += Rat(sign) * other[i];
        if (!s.space.contains(v)) continue;
        TorusGenerator g;
        g.v = std::move(v);
        g.imaginary = true;
        g.candidates = candidates_for(p, q, sign);
        pool.push_back(std::move(g));
      }
    }
  }

  // hyperbolic root-pair sums: real integer spectrum
  for (int p = 0; p < m; ++p) {
    Vec v = w_vec(p);
    if (!s.space.contains(v)) continue;
    TorusGenerator g;
    g.v = std::move(v);
    g.imaginary = false;
    g.candidates = candidates_for(p, -1, 0);
    pool.push_back(std::move(g));
  }

  return pool;
}

namespace {

struct TorusSearch {
  std::size_t pool_size = 0;
  std::vector<std::vector<char>> commute;
  std::vector<std::vector<int>> leaves;
  long visits = 0;

  bool compatible(const std::vector<int>& family, int j) const {
    for (int i : family)
      if (!commute[i][j]) return false;
    return true;
  }

  void dfs(std::vector<int>& family, int start) {
    if (++visits > 500000) throw std::logic_error("commuting-family search exceeded its budget");
    bool extended = false;
    for (int j = start; j < int(pool_size); ++j) {
      if (!compatible(family, j)) continue;
      extended = true;
      family.push_back(j);
      dfs(family, j + 1);
      family.pop_back();
    }
    if (extended) return;
    for (int j = 0; j < int(pool_size); ++j) {
      if (std::find(family.begin(), family.end(), j) != family.end()) continue;
      if (compatible(family, j)) return;  // maximal elsewhere in the tree
    }
    leaves.push_back(family);
  }
};

std::size_t centralizer_dim(const Subalgebra& s, const std::vector<TorusGenerator>& family) {
  std::size_t d = s.dim();
  std::vector<Vec> cur(d);
  for (std::size_t i = 0; i < d; ++i) {
    cur[i].assign(d, Rat(0));
    cur[i][i] = 1;
  }
  for (const TorusGenerator& g : family) {
    if (cur.empty()) break;
    RatMatrix m = ad_in_basis(s, g.v);
    RatMatrix restricted(d, cur.size());
    for (std::size_t j = 0; j < cur.size(); ++j) {
      Vec w = m.apply(cur[j]);
      for (std::size_t i = 0; i < d; ++i) restricted.at(i, j) = w[i];
    }
    RatMatrix ker = restricted.kernel();
    std::vector<Vec> next;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      Vec v(d, Rat(0));
      for (std::size_t j = 0; j < cur.size(); ++j) {
        const Rat& co = ker.at(j, c);
        if (is_zero(co)) continue;
        for (std::size_t i = 0; i < d; ++i) v[i] += co * cur[j][i];
      }
      next.push_back(std::move(v));
    }
    cur = std::move(next);
  }
  return cur.size();
}

}  // namespace

std::vector<TorusGenerator> maximal_torus(const Subalgebra& s, std::size_t center_dim) {
  for (bool extended : {false, true}) {
    std::vector<TorusGenerator> pool = torus_generator_pool(s, extended);
    TorusSearch search;
    search.pool_size = pool.size();
    search.commute.assign(pool.size(), std::vector<char>(pool.size(), 0));
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j) {
        bool c = vec_is_zero(s.parent->bracket(pool[i].v, pool[j].v));
        search.commute[i][j] = search.commute[j][i] = c;
      }
    std::vector<int> family;
    search.dfs(family, 0);
    std::stable_sort(search.leaves.begin(), search.leaves.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                       if (a.size() != b.size()) return a.size() > b.size();
                       return a < b;
                     });
    for (const std::vector<int>& leaf : search.leaves) {
      std::vector<TorusGenerator> fam;
      Subspace span(s.parent->dim());
      for (int i : leaf) {
        fam.push_back(pool[i]);
        span.add(pool[i].v);
      }
      // the family may be linearly dependent (pool vectors can overlap), so
      // the certificate compares against its span, not its size
      if (centralizer_dim(s, fam) == span.dim() + center_dim) return fam;
    }
  }
  throw std::logic_error("no generator family realized a certified maximal torus");
}

namespace {

// realified helpers: vectors of length 2d hold (real part, imaginary part)
// in the internal coordinates of the subalgebra

Vec realified_apply(const RatMatrix& m, const Vec& x) {
  std::size_t d = m.rows();
  Vec y(2 * d, Rat(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Rat& c = m.at(i, j);
      if (is_zero(c)) continue;
      y[i] += c * x[j];
      y[i + d] += c * x[j + d];
    }
  return y;
}

Vec apply_i(const Vec& x) {
  std::size_t d = x.size() / 2;
  Vec y(x.size());
  for (std::size_t i = 0; i < d; ++i) {
    y[i] = -x[i + d];
    y[i + d] = x[i];
  }
  return y;
}

struct Block {
  std::vector<Rat> weight;
  std::vector<Vec> basis;
};

}  // namespace

bool WeightSpace::zero_weight() const {
  for (const Rat& w : weight)
    if (!is_zero(w)) return false;
  return true;
}

std::vector<WeightSpace> weight_decomposition(const Subalgebra& s,
                                              const std::vector<TorusGenerator>& torus) {
  std::size_t d = s.dim();
  std::vector<Block> blocks(1);
  blocks[0].basis.resize(2 * d);
  for (std::size_t i = 0; i < 2 * d; ++i) {
    blocks[0].basis[i].assign(2 * d, Rat(0));
    blocks[0].basis[i][i] = 1;
  }
  bool whole = true;
  for (const TorusGenerator& g : torus) {
    RatMatrix m = ad_in_basis(s, g.v);
    std::vector<Block> next;
    for (const Block& b : blocks) {
      std::size_t found = 0;
      for (const Rat& k : g.candidates) {
        std::vector<Vec> vecs;
        if (whole) {
          // eigenspaces of the doubled operator reduce to d-dimensional
          // kernels: ker(m - k) doubled for real type, and for imaginary type
          // the pairs (a, -m a / k) over ker(m^2 + k^2)
          if (!g.imaginary || is_zero(k)) {
            RatMatrix shifted = m;
            for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) -= k;
            RatMatrix ker = shifted.kernel();
            for (std::size_t c = 0; c < ker.cols(); ++c) {
              Vec re(2 * d, Rat(0)), im(2 * d, Rat(0));
              for (std::size_t i = 0; i < d; ++i) {
                re[i] = ker.at(i, c);
                im[i + d] = ker.at(i, c);
              }
              vecs.push_back(std::move(re));
              vecs.push_back(std::move(im));
            }
          } else {
            RatMatrix square = m * m;
            Rat k2 = k * k;
            for (std::size_t i = 0; i < d; ++i) square.at(i, i) += k2;
            RatMatrix ker = square.kernel();
            for (std::size_t c = 0; c < ker.cols(); ++c) {
              Vec a(d);
              for (std::size_t i = 0; i < d; ++i) a[i] = ker.at(i, c);
              Vec ma = m.apply(a);
              Vec v(2 * d, Rat(0));
              for (std::size_t i = 0; i < d; ++i) {
                v[i] = a[i];
                v[i + d] = -ma[i] / k;
              }
              vecs.push_back(std::move(v));
            }
          }
        } else {
          RatMatrix op(2 * d, b.basis.size());
          for (std::size_t j = 0; j < b.basis.size(); ++j) {
            Vec w = realified_apply(m, b.basis[j]);
            Vec shift = g.imaginary ? apply_i(b.basis[j]) : b.basis[j];
            for (std::size_t i = 0; i < 2 * d; ++i) op.at(i, j) = w[i] - k * shift[i];
          }
          RatMatrix ker = op.kernel();
          for (std::size_t c = 0; c < ker.cols(); ++c) {
            Vec v(2 * d, Rat(0));
            for (std::size_t j = 0; j < b.basis.size(); ++j) {
              const Rat& co = ker.at(j, c);
              if (is_zero(co)) continue;
              for (std::size_t i = 0; i < 2 * d; ++i) v[i] += co * b.basis[j][i];
            }
            vecs.push_back(std::move(v));
          }
        }
        if (vecs.empty()) continue;
        found += vecs.size();
        Block nb;
        nb.weight = b.weight;
        nb.weight.push_back(k);
        nb.basis = std::move(vecs);
        next.push_back(std::move(nb));
      }
      if (found != b.basis.size())
        throw std::logic_error("eigenvalue refinement did not exhaust the space");
    }
    blocks = std::move(next);
    whole = false;
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) { return a.weight < b.weight; });
  std::vector<WeightSpace> out;
  for (Block& b : blocks) {
    WeightSpace ws;
    ws.weight = std::move(b.weight);
    ws.basis = std::move(b.basis);
    if (ws.basis.size() % 2 != 0)
      throw std::logic_error("weight space is not stable under the complex structure");
    out.push_back(std::move(ws));
  }
  return out;
}

namespace {

// parent-coordinate real and imaginary parts of a realified internal vector
void parent_parts(const Subalgebra& s, const Vec& v, Vec& re, Vec& im) {
  std::size_t d = s.dim();
  std::size_t n = s.parent->dim();
  re.assign(n, Rat(0));
  im.assign(n, Rat(0));
  for (std::size_t j = 0; j < d; ++j) {
    const Vec& b = s.space.basis()[j];
    if (!is_zero(v[j])) vec_axpy(re, v[j], b);
    if (!is_zero(v[j + d])) vec_axpy(im, v[j + d], b);
  }
}

}  // namespace

ReductiveParts reductive_decompose(const Subalgebra& s) {
  const ChevalleyAlgebra& alg = *s.parent;
  std::size_t d = s.dim();
  std::size_t n = alg.dim();

  // center: common kernel of every basis adjoint, refined incrementally
  std::vector<Vec> cur(d);
  for (std::size_t i = 0; i < d; ++i) {
    cur[i].assign(d, Rat(0));
    cur[i][i] = 1;
  }
  for (std::size_t g = 0; g < d && !cur.empty(); ++g) {
    RatMatrix op(n, cur.size());
    for (std::size_t j = 0; j < cur.size(); ++j) {
      Vec x(n, Rat(0));
      for (std::size_t i = 0; i < d; ++i)
        if (!is_zero(cur[j][i])) vec_axpy(x, cur[j][i], s.space.basis()[i]);
      Vec w = alg.bracket(s.space.basis()[g], x);
      for (std::size_t i = 0; i < n; ++i) op.at(i, j) = w[i];
    }
    RatMatrix ker = op.kernel();
    std::vector<Vec> next;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      Vec v(d, Rat(0));
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (!is_zero(ker.at(j, c))) vec_axpy(v, ker.at(j, c), cur[j]);
      next.push_back(std::move(v));
    }
    cur = std::move(next);
  }
  Subspace center(n);
  for (const Vec& c : cur) {
    Vec x(n, Rat(0));
    for (std::size_t i = 0; i < d; ++i)
      if (!is_zero(c[i])) vec_axpy(x, c[i], s.space.basis()[i]);
    center.add(x);
  }

  Subspace derived(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      derived.add(alg.bracket(s.space.basis()[i], s.space.basis()[j]));

  if (center.dim() + derived.dim() != d || center.intersect(derived).dim() != 0)
    throw std::logic_error("subalgebra is not reductive");

  ReductiveParts parts;
  parts.center = center;
  if (derived.dim() == 0) return parts;

  Subalgebra ds = make_subalgebra(alg, derived);
  std::vector<TorusGenerator> torus = maximal_torus(ds, 0);
  std::vector<WeightSpace> weights = weight_decomposition(ds, torus);

  Subspace torus_span(n);
  for (const TorusGenerator& g : torus) torus_span.add(g.v);

  std::size_t dd = ds.dim();
  std::vector<const WeightSpace*> roots;
  for (const WeightSpace& w : weights) {
    if (w.zero_weight()) {
      if (w.complex_dim() != torus_span.dim())
        throw std::logic_error("zero weight space exceeds the torus");
    } else {
      if (w.complex_dim() != 1) throw std::logic_error("multiple root spaces share a weight");
      roots.push_back(&w);
    }
  }

  // parent-coordinate complex representatives of each root line
  std::vector<Vec> re(roots.size()), im(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) parent_parts(ds, roots[i]->basis[0], re[i], im[i]);

  auto complex_bracket = [&](std::size_t i, std::size_t j, Vec& bre, Vec& bim) {
    bre = vec_sub(alg.bracket(re[i], re[j]), alg.bracket(im[i], im[j]));
    bim = vec_add(alg.bracket(re[i], im[j]), alg.bracket(im[i], re[j]));
  };
  auto weights_opposite = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < roots[i]->weight.size(); ++k)
      if (roots[i]->weight[k] != -roots[j]->weight[k]) return false;
    return true;
  };

  // connect root lines through nonvanishing brackets, and opposite pairs
  // through the trace form
  std::vector<int> comp(roots.size(), -1);
  std::vector<std::vector<int>> groups;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (comp[i] >= 0) continue;
    int id = int(groups.size());
    groups.push_back({});
    std::vector<std::size_t> queue{i};
    comp[i] = id;
    while (!queue.empty()) {
      std::size_t a = queue.back();
      queue.pop_back();
      groups[id].push_back(int(a));
      for (std::size_t b = 0; b < roots.size(); ++b) {
        if (comp[b] >= 0) continue;
        Vec bre, bim;
        complex_bracket(a, b, bre, bim);
        bool linked = !vec_is_zero(bre) || !vec_is_zero(bim);
        if (!linked && weights_opposite(a, b)) {
          Rat kre = alg.killing_form(re[a], re[b]) - alg.killing_form(im[a], im[b]);
          Rat kim = alg.killing_form(re[a], im[b]) + alg.killing_form(im[a], re[b]);
          linked = !is_zero(kre) || !is_zero(kim);
        }
        if (linked) {
          comp[b] = id;
          queue.push_back(b);
        }
      }
    }
  }

  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::vector<Subspace> ideals;
  for (const auto& g : groups) {
    Subspace ideal(n);
    for (int a : g) {
      ideal.add(re[a]);
      ideal.add(im[a]);
    }
    for (int a : g)
      for (int b : g) {
        if (a >= b || !weights_opposite(a, b)) continue;
        Vec bre, bim;
        complex_bracket(a, b, bre, bim);
        ideal.add(bre);
        ideal.add(bim);
      }
    ideals.push_back(std::move(ideal));
  }

  std::size_t total = 0;
  for (const Subspace& ideal : ideals) total += ideal.dim();
  if (total != dd) throw std::logic_error("ideal dimensions do not add up");
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    certify_closure(alg, ideals[i]);
    for (std::size_t j = i + 1; j < ideals.size(); ++j)
      for (const Vec& x : ideals[i].basis())
        for (const Vec& y : ideals[j].basis())
          if (!vec_is_zero(alg.bracket(x, y))) throw std::logic_error("ideals fail to commute");
  }
  std::stable_sort(ideals.begin(), ideals.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.pivots() < b.pivots();
  });
  parts.ideals = std::move(ideals);
  parts.torus = std::move(torus);
  return parts;
}

CartanType identify_complex_type(const Subalgebra& s) {
  if (s.dim() < 3) throw std::invalid_argument("identification needs a nonabelian algebra");
  return identify_complex_type(s, maximal_torus(s, 0));
}

CartanType identify_complex_type(const Subalgebra& s,
                                 const std::vector<TorusGenerator>& family) {
  if (s.dim() < 3) throw std::invalid_argument("identification needs a nonabelian algebra");
  const ChevalleyAlgebra& alg = *s.parent;
  std::vector<WeightSpace> weights = weight_decomposition(s, family);

  const WeightSpace* zero = nullptr;
  std::vector<std::vector<Rat>> roots;
  for (const WeightSpace& w : weights) {
    if (w.zero_weight()) {
      zero = &w;
    } else {
      if (w.complex_dim() != 1) throw std::logic_error("multiple root spaces share a weight");
      roots.push_back(w.weight);
    }
  }
  if (!zero) throw std::logic_error("family has no kernel inside the algebra");

  // the zero block is the centralizer of the family, which always contains a
  // full Cartan subalgebra; once it is abelian it is one, and its complex
  // dimension is the rank.  this also certifies the family was regular
  // enough, whether it came from our own pool or from an enclosing algebra.
  {
    std::size_t zb = zero->basis.size();
    std::vector<Vec> zre(zb), zim(zb);
    for (std::size_t i = 0; i < zb; ++i) parent_parts(s, zero->basis[i], zre[i], zim[i]);
    for (std::size_t i = 0; i < zb; ++i)
      for (std::size_t j = i + 1; j < zb; ++j)
        if (!vec_is_zero(vec_sub(alg.bracket(zre[i], zre[j]), alg.bracket(zim[i], zim[j]))) ||
            !vec_is_zero(vec_add(alg.bracket(zre[i], zim[j]), alg.bracket(zim[i], zre[j]))))
          throw std::logic_error("family centralizer is nonabelian");
  }
  std::size_t r = zero->complex_dim();

  std::set<std::vector<Rat>> root_set(roots.begin(), roots.end());
  auto negate = [](const std::vector<Rat>& v) {
    std::vector<Rat> o(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) o[i] = -v[i];
    return o;
  };
  for (const auto& mu : roots)
    if (!root_set.count(negate(mu))) throw std::logic_error("weights do not come in opposite pairs");

  {
    RatMatrix span(roots.size(), family.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j) span.at(i, j) = roots[i][j];
    if (span.rank() != r) throw std::logic_error("weights do not span the torus dual");
  }

  // census of string lengths: a weight is long exactly when some string
  // through it in another root direction has |p - q| at least 2
  auto walk = [&](const std::vector<Rat>& mu, const std::vector<Rat>& nu, int dir) {
    int steps = 0;
    std::vector<Rat> cur = mu;
    for (;;) {
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += Rat(dir) * nu[i];
      if (!root_set.count(cur)) break;
      if (++steps > 3) throw std::logic_error("root string is too long");
    }
    return steps;
  };
  std::size_t long_count = 0;
  for (const auto& mu : roots) {
    int best = 0;
    for (const auto& nu : roots) {
      if (nu == mu || nu == negate(mu)) continue;
      int diff = walk(mu, nu, 1) - walk(mu, nu, -1);
      best = std::max(best, std::abs(diff));
    }
    if (best >= 2) ++long_count;
  }

  std::size_t count = roots.size();
  long rl = long(r);
  if (r == 1) {
    if (count != 2) throw std::logic_error("rank one algebra with extra weights");
    return CartanType{'A', 1};
  }
  if (long_count == 0) {
    if (count == std::size_t(rl * (rl + 1))) return CartanType{'A', int(r)};
    if (count == std::size_t(2 * rl * (rl - 1)) && r >= 4) return CartanType{'D', int(r)};
    if (r == 6 && count == 72) return CartanType{'E', 6};
    if (r == 7 && count == 126) return CartanType{'E', 7};
    if (r == 8 && count == 240) return CartanType{'E', 8};
  } else {
    if (r == 2 && count == 8) return CartanType{'B', 2};
    if (r == 2 && count == 12 && long_count == 6) return CartanType{'G', 2};
    if (count == std::size_t(2 * rl * rl) && long_count == std::size_t(2 * rl))
      return CartanType{'C', int(r)};
    if (count == std::size_t(2 * rl * rl) && long_count == std::size_t(2 * rl * (rl - 1)))
      return CartanType{'B', int(r)};
    if (r == 4 && count == 48 && long_count == 24) return CartanType{'F', 4};
  }
  throw std::logic_error("weight census matches no known type");
}

}  // namespace klein4
