#include "klein4/real_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klein4 {

namespace {

// catalog of the real forms this project can meet, keyed by complex type and
// compact dimension; the compact column is the expected display of k and is
// compared against the computed decomposition so a stale row can only ever
// produce "unidentified", not a wrong name
struct CatalogEntry {
  const char* type;
  unsigned k;
  const char* label;
  const char* compact;
};

constexpr CatalogEntry kCatalog[] = {
    {"A1", 3, "su(2)", "su(2)"},
    {"A1", 1, "sl(2,R)", "so(2)"},
    {"A2", 8, "su(3)", "su(3)"},
    {"A2", 4, "su(2,1)", "su(2)+so(2)"},
    {"A2", 3, "sl(3,R)", "su(2)"},
    {"A3", 15, "su(4)", "su(4)"},
    {"A3", 10, "su*(4)", "so(5)"},
    {"A3", 9, "su(3,1)", "su(3)+so(2)"},
    {"A3", 7, "su(2,2)", "su(2)+su(2)+so(2)"},
    {"A3", 6, "sl(4,R)", "su(2)+su(2)"},
    {"A4", 24, "su(5)", "su(5)"},
    {"A4", 16, "su(4,1)", "su(4)+so(2)"},
    {"A4", 12, "su(3,2)", "su(3)+su(2)+so(2)"},
    {"A4", 10, "sl(5,R)", "so(5)"},
    {"A5", 35, "su(6)", "su(6)"},
    {"A5", 25, "su(5,1)", "su(5)+so(2)"},
    {"A5", 21, "su*(6)", "sp(3)"},
    {"A5", 19, "su(4,2)", "su(4)+su(2)+so(2)"},
    {"A5", 17, "su(3,3)", "su(3)+su(3)+so(2)"},
    {"A5", 15, "sl(6,R)", "su(4)"},
    {"B2", 10, "so(5)", "so(5)"},
    {"B2", 6, "so(4,1)", "su(2)+su(2)"},
    {"B2", 4, "so(3,2)", "su(2)+so(2)"},
    {"B3", 21, "so(7)", "so(7)"},
    {"B3", 15, "so(6,1)", "su(4)"},
    {"B3", 11, "so(5,2)", "so(5)+so(2)"},
    {"B3", 9, "so(4,3)", "su(2)+su(2)+su(2)"},
    {"B4", 36, "so(9)", "so(9)"},
    {"B4", 28, "so(8,1)", "so(8)"},
    {"B4", 22, "so(7,2)", "so(7)+so(2)"},
    {"B4", 18, "so(6,3)", "su(4)+su(2)"},
    {"B4", 16, "so(5,4)", "so(5)+su(2)+su(2)"},
    {"C3", 21, "sp(3)", "sp(3)"},
    {"C3", 13, "sp(2,1)", "so(5)+su(2)"},
    {"C3", 9, "sp(3,R)", "su(3)+so(2)"},
    {"C4", 36, "sp(4)", "sp(4)"},
    {"C4", 24, "sp(3,1)", "sp(3)+su(2)"},
    {"C4", 20, "sp(2,2)", "sp(2)+sp(2)"},
    {"C4", 16, "sp(4,R)", "su(4)+so(2)"},
    {"D4", 28, "so(8)", "so(8)"},
    {"D4", 21, "so(7,1)", "so(7)"},
    {"D4", 16, "so(6,2)", "su(4)+so(2)"},
    {"D4", 13, "so(5,3)", "so(5)+su(2)"},
    {"D4", 12, "so(4,4)", "su(2)+su(2)+su(2)+su(2)"},
    {"D5", 45, "so(10)", "so(10)"},
    {"D5", 36, "so(9,1)", "so(9)"},
    {"D5", 29, "so(8,2)", "so(8)+so(2)"},
    {"D5", 25, "so*(10)", "su(5)+so(2)"},
    {"D5", 24, "so(7,3)", "so(7)+su(2)"},
    {"D5", 21, "so(6,4)", "su(4)+su(2)+su(2)"},
    {"E6", 78, "e6(-78)", "e6(-78)"},
    {"E6", 52, "e6(-26)", "f4(-52)"},
    {"E6", 46, "e6(-14)", "so(10)+so(2)"},
    {"E6", 38, "e6(2)", "su(6)+su(2)"},
    {"E6", 36, "e6(6)", "sp(4)"},
    {"F4", 52, "f4(-52)", "f4(-52)"},
    {"F4", 36, "f4(-20)", "so(9)"},
    {"F4", 24, "f4(4)", "sp(3)+su(2)"},
    {"G2", 14, "g2(-14)", "g2(-14)"},
    {"G2", 6, "g2(2)", "su(2)+su(2)"},
};

const CatalogEntry* catalog_find(const std::string& type, std::size_t k) {
  for (const CatalogEntry& e : kCatalog)
    if (type == e.type && k == e.k) return &e;
  return nullptr;
}

std::size_t type_dim(const CartanType& t) {
  long n = t.rank;
  switch (t.series) {
    case 'A': return std::size_t(n * (n + 2));
    case 'B':
    case 'C': return std::size_t(n * (2 * n + 1));
    case 'D': return std::size_t(n * (2 * n - 1));
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
  }
  throw std::logic_error("unknown series");
}

// display name of the compact form of a complex type
std::string compact_name(const CartanType& t) {
  std::ostringstream os;
  switch (t.series) {
    case 'A': os << "su(" << t.rank + 1 << ")"; break;
    case 'B': os << "so(" << 2 * t.rank + 1 << ")"; break;
    case 'C': os << "sp(" << t.rank << ")"; break;
    case 'D': os << "so(" << 2 * t.rank << ")"; break;
    case 'E': os << "e" << t.rank << "(-" << type_dim(t) << ")"; break;
    case 'F': os << "f4(-52)"; break;
    case 'G': os << "g2(-14)"; break;
  }
  return os.str();
}

std::vector<std::string> split_plus(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find('+', start);
    if (pos == std::string::npos) pos = s.size();
    if (pos > start) out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

bool same_multiset(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// the one naming exception: sp(2,2)'s compact pieces are rank-2 symplectic,
// which the weight census can only see as so(5)
void apply_display_override(const std::string& label, std::vector<std::string>& parts) {
  if (label != "sp(2,2)") return;
  for (std::string& p : parts)
    if (p == "so(5)") p = "sp(2)";
}

void certify_compact_stability(const ChevalleyAlgebra& alg, const Automorphism& a) {
  for (int p = 0; p < alg.num_positive(); ++p) {
    int i = alg.pos_index(p), j = alg.neg_index(p);
    const Rat& si = a.image_scale(i);
    if ((si != Rat(1) && si != Rat(-1)) || si != a.image_scale(j))
      throw std::invalid_argument("map does not restrict to the compact form");
    if (a.image_index(j) != alg.opposite(a.image_index(i)))
      throw std::invalid_argument("map does not respect opposite root pairs");
  }
}

struct CompactPiece {
  std::size_t dim = 0;
  std::string name;
};

void sort_pieces(std::vector<CompactPiece>& pieces) {
  std::stable_sort(pieces.begin(), pieces.end(), [](const CompactPiece& a, const CompactPiece& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.name < b.name;
  });
}

RealFormDescriptor describe(const ChevalleyAlgebra& alg, const Automorphism& theta,
                            const Subalgebra& s) {
  RealFormDescriptor d;
  d.dim = s.dim();

  for (const Vec& b : s.space.basis())
    if (!s.space.contains(theta.apply(b)))
      throw std::invalid_argument("involution does not stabilize the fixed algebra");

  Subspace theta_fix = theta.fixed_space();
  Subspace k_space = s.space.intersect(theta_fix);
  d.compact_dim = k_space.dim();
  d.signature = long(d.dim) - 2 * long(d.compact_dim);

  ReductiveParts ps = reductive_decompose(s);
  d.center_dim = ps.center.dim();
  Subspace center_fix = ps.center.intersect(theta_fix);
  d.center_compact = center_fix.dim();
  {
    // the involution must split the center into fixed and flipped lines
    RatMatrix anti_op = theta.matrix() + RatMatrix::identity(alg.dim());
    RatMatrix ker = anti_op.kernel();
    Subspace anti(alg.dim());
    for (std::size_t c = 0; c < ker.cols(); ++c) anti.add(ker.column(c));
    if (d.center_compact + ps.center.intersect(anti).dim() != d.center_dim)
      throw std::logic_error("center does not split under the involution");
  }

  ReductiveParts pk;
  pk.center = Subspace(alg.dim());
  if (k_space.dim() > 0) pk = reductive_decompose(make_subalgebra(alg, k_space));

  // attribute every compact ideal and every compact center line to the
  // enclosing ideal (or center) it lives in
  struct PerIdeal {
    std::vector<CompactPiece> pieces;
    std::size_t center = 0;
    std::size_t kdim = 0;
  };
  std::vector<PerIdeal> per(ps.ideals.size());
  for (const Subspace& kid : pk.ideals) {
    CartanType t = identify_complex_type(Subalgebra{&alg, kid}, pk.torus);
    bool placed = false;
    for (std::size_t i = 0; i < ps.ideals.size(); ++i)
      if (ps.ideals[i].contains(kid)) {
        per[i].pieces.push_back({kid.dim(), compact_name(t)});
        per[i].kdim += kid.dim();
        placed = true;
        break;
      }
    if (!placed) throw std::logic_error("compact ideal straddles the ideal decomposition");
  }
  {
    std::size_t used = 0;
    for (std::size_t i = 0; i < ps.ideals.size(); ++i) {
      std::size_t ci = pk.center.intersect(ps.ideals[i]).dim();
      per[i].center = ci;
      per[i].kdim += ci;
      used += ci;
    }
    std::size_t shared = pk.center.intersect(ps.center).dim();
    if (used + shared != pk.center.dim())
      throw std::logic_error("compact center does not split along the ideals");
    if (shared != d.center_compact)
      throw std::logic_error("compact center mismatch on the abelian part");
  }
  {
    std::size_t total = d.center_compact;
    for (const PerIdeal& p : per) total += p.kdim;
    if (total != d.compact_dim) throw std::logic_error("compact dimensions do not add up");
  }

  std::vector<CompactPiece> all_pieces;
  bool all_known = true;
  for (std::size_t i = 0; i < ps.ideals.size(); ++i) {
    CartanType t = identify_complex_type(Subalgebra{&alg, ps.ideals[i]}, ps.torus);
    IdealForm f;
    f.complex_type = t;
    f.dim = ps.ideals[i].dim();
    f.compact_dim = per[i].kdim;
    bool stable = true;
    for (const Vec& b : ps.ideals[i].basis())
      if (!ps.ideals[i].contains(theta.apply(b))) stable = false;
    const CatalogEntry* e = stable ? catalog_find(t.str(), f.compact_dim) : nullptr;
    if (e) {
      sort_pieces(per[i].pieces);
      std::vector<std::string> got;
      for (const CompactPiece& p : per[i].pieces) got.push_back(p.name);
      apply_display_override(e->label, got);
      for (std::size_t c = 0; c < per[i].center; ++c) got.push_back("so(2)");
      if (same_multiset(got, split_plus(e->compact))) {
        f.label = e->label;
        for (std::size_t j = 0; j < per[i].pieces.size(); ++j)
          per[i].pieces[j].name = got[j];
      } else {
        f.label = "unidentified";
      }
    } else {
      f.label = "unidentified";
    }
    if (f.label == "unidentified") all_known = false;
    d.ideals.push_back(f);
    for (const CompactPiece& p : per[i].pieces) all_pieces.push_back(p);
    for (std::size_t c = 0; c < per[i].center; ++c) all_pieces.push_back({1, "so(2)"});
  }

  std::stable_sort(d.ideals.begin(), d.ideals.end(), [](const IdealForm& a, const IdealForm& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.label < b.label;
  });

  if (all_known) {
    std::ostringstream os;
    bool first = true;
    for (const IdealForm& f : d.ideals) {
      os << (first ? "" : "+") << f.label;
      first = false;
    }
    for (std::size_t c = 0; c < d.center_compact; ++c) {
      os << (first ? "" : "+") << "so(2)";
      first = false;
    }
    for (std::size_t c = 0; c < d.center_dim - d.center_compact; ++c) {
      os << (first ? "" : "+") << "R";
      first = false;
    }
    d.label = os.str();
  } else {
    d.label = "unidentified";
  }

  sort_pieces(all_pieces);
  std::size_t abelian = d.center_compact;
  for (auto it = all_pieces.begin(); it != all_pieces.end();) {
    if (it->name == "so(2)") {
      ++abelian;
      it = all_pieces.erase(it);
    } else {
      ++it;
    }
  }
  for (const CompactPiece& p : all_pieces) d.compact_parts.push_back(p.name);
  d.compact_center = abelian;
  {
    std::ostringstream os;
    bool first = true;
    for (const std::string& p : d.compact_parts) {
      os << (first ? "" : "+") << p;
      first = false;
    }
    for (std::size_t c = 0; c < d.compact_center; ++c) {
      os << (first ? "" : "+") << "so(2)";
      first = false;
    }
    d.maximal_compact = os.str();
  }

  d.hermitian = d.ideals.size() == 1 && d.center_dim == 0 && d.compact_center == 1;
  return d;
}

}  // namespace

std::string label_real_form(const CartanType& type, long signature,
                            const std::vector<std::string>& compact_parts,
                            std::size_t compact_center) {
  long dim = long(type_dim(type));
  if ((dim - signature) % 2 != 0 || signature > dim || signature < -dim) return "unidentified";
  std::size_t k = std::size_t((dim - signature) / 2);
  const CatalogEntry* e = catalog_find(type.str(), k);
  if (!e) return "unidentified";
  std::vector<std::string> got = compact_parts;
  apply_display_override(e->label, got);
  for (std::size_t c = 0; c < compact_center; ++c) got.push_back("so(2)");
  if (!same_multiset(got, split_plus(e->compact))) return "unidentified";
  return e->label;
}

RealFormDescriptor real_form(const ChevalleyAlgebra& alg, const Automorphism& theta) {
  // order one is allowed: the identity picks out the compact real form
  if (!theta.compose(theta).is_identity())
    throw std::invalid_argument("theta must square to the identity");
  certify_compact_stability(alg, theta);
  return describe(alg, theta, as_subalgebra(alg));
}

RealFormDescriptor real_fixed_form(const ChevalleyAlgebra& alg, const Automorphism& theta,
                                   const std::vector<const Automorphism*>& gamma) {
  if (!theta.compose(theta).is_identity())
    throw std::invalid_argument("theta must square to the identity");
  certify_compact_stability(alg, theta);
  for (const Automorphism* g : gamma)
    if (!g->is_involution())
      throw std::invalid_argument("map " + g->label() + " is not an involution");
  for (std::size_t i = 0; i < gamma.size(); ++i)
    for (std::size_t j = i + 1; j < gamma.size(); ++j)
      if (!gamma[i]->commutes_with(*gamma[j]))
        throw std::invalid_argument("maps " + gamma[i]->label() + " and " + gamma[j]->label() +
                                    " do not commute");
  for (const Automorphism* g : gamma)
    if (!g->commutes_with(theta))
      throw std::invalid_argument("map " + g->label() + " does not commute with " + theta.label());
  Subalgebra s = gamma.empty() ? as_subalgebra(alg) : fixed_subalgebra(alg, gamma);
  return describe(alg, theta, s);
}

bool is_hermitian(const RealFormDescriptor& d) { return d.hermitian; }

Rat coweight_pairing(const RootSystem& rs, const Vec& z, const RootVec& a) {
  Rat out(0);
  for (std::size_t j = 0; j < z.size(); ++j)
    if (!is_zero(z[j])) out += z[j] * Rat(rs.pairing_with_simple_coroot(a, int(j)));
  return out;
}

namespace {

RootVec negate_root(const RootVec& a) {
  RootVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// maximal elements under the componentwise dominance order
std::vector<RootVec> poset_maxima(const std::vector<RootVec>& roots) {
  std::vector<RootVec> out;
  for (const RootVec& a : roots) {
    bool dominated = false;
    for (const RootVec& b : roots) {
      if (b == a) continue;
      bool ge = true;
      for (std::size_t i = 0; i < a.size() && ge; ++i)
        if (b[i] < a[i]) ge = false;
      if (ge) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), std::greater<RootVec>());
  return out;
}

}  // namespace

NoncompactRootData noncompact_root_split(const ChevalleyAlgebra& alg, const Automorphism& theta) {
  if (!theta.is_involution())
    throw std::invalid_argument("cartan involution must square to the identity");
  for (int i = 0; i < alg.dim(); ++i)
    if (theta.image_index(i) != i)
      throw std::invalid_argument("cartan involution must fix the standard torus pointwise");
  const RootSystem& rs = alg.roots();
  int m = alg.num_positive();

  NoncompactRootData data{theta};
  std::vector<char> nc(m, 0);
  std::vector<RootVec> nc_pos;
  for (int p = 0; p < m; ++p) {
    const Rat& s = theta.image_scale(alg.pos_index(p));
    if (s != theta.image_scale(alg.neg_index(p)))
      throw std::logic_error("scales disagree across an opposite pair");
    RootVec a = rs.positive(p);
    auto& bucket = s == Rat(1) ? data.compact_roots : data.noncompact_roots;
    bucket.push_back(negate_root(a));
    bucket.push_back(std::move(a));
    if (s != Rat(1)) {
      nc[p] = 1;
      nc_pos.push_back(rs.positive(p));
    }
  }
  if (data.noncompact_roots.empty())
    throw std::invalid_argument("involution acts trivially on every root: degenerate split");

  data.maxima = poset_maxima(nc_pos);

  Subalgebra k = fixed_subalgebra(alg, {&theta});
  ReductiveParts parts = reductive_decompose(k);
  if (parts.center.dim() == 0) {
    if (data.maxima.size() != 1)
      throw std::logic_error("maximal noncompact root is not unique");
    data.beta = data.maxima.front();
    return data;
  }
  if (parts.center.dim() != 1)
    throw std::logic_error("fixed algebra of an involution has center dimension at most one");

  Vec z = parts.center.basis()[0];
  for (int i = alg.rank(); i < alg.dim(); ++i)
    if (!is_zero(z[i])) throw std::logic_error("central direction leaves the torus");
  z.resize(std::size_t(alg.rank()));
  Rat scale = coweight_pairing(rs, z, data.maxima.front());
  if (is_zero(scale)) throw std::logic_error("maximal noncompact root is blind to the center");
  for (Rat& x : z) x /= scale;

  for (int p = 0; p < m; ++p) {
    Rat v = coweight_pairing(rs, z, rs.positive(p));
    if (!nc[p]) {
      if (!is_zero(v)) throw std::logic_error("compact root pairs with the center");
      continue;
    }
    if (v == Rat(1)) {
      data.p_plus.push_back(rs.positive(p));
      data.p_minus.push_back(negate_root(rs.positive(p)));
    } else if (v == Rat(-1)) {
      data.p_minus.push_back(rs.positive(p));
      data.p_plus.push_back(negate_root(rs.positive(p)));
    } else {
      throw std::logic_error("noncompact pairing is not unimodular");
    }
  }

  data.hermitian = true;
  data.z = z;
  std::vector<RootVec> plus_maxima = poset_maxima(data.p_plus);
  if (plus_maxima.size() != 1)
    throw std::logic_error("distinguished noncompact root is not unique");
  data.beta = plus_maxima.front();
  return data;
}

}  // namespace klein4
