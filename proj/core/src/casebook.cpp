#include "klein4/casebook.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace klein4 {

namespace {

RootVec negated(const RootVec& a) {
  RootVec m(a);
  for (auto& c : m) c = -c;
  return m;
}

std::string root_str(const RootVec& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

// trace of a monomial basis map, read straight off the diagonal. exact for
// any permutation-with-scales matrix, no involution assumption needed
long monomial_trace(const Automorphism& g) {
  Rat t(0);
  int n = g.algebra().dim();
  for (int i = 0; i < n; ++i)
    if (g.image_index(i) == i) t += g.image_scale(i);
  if (t.get_den() != 1) throw std::logic_error("non-integral trace on a monomial map");
  return long(t.get_num().get_si());
}

// joint fixed dimension of the Klein four group {1, a, b, ab} by averaging
// traces over the group. a and b must be distinct commuting involutions
std::size_t klein_joint_dim(const Automorphism& a, const Automorphism& b,
                            const Automorphism& ab) {
  long s = long(a.algebra().dim()) + monomial_trace(a) + monomial_trace(b) + monomial_trace(ab);
  if (s % 4 != 0) throw std::logic_error("trace sum not divisible by the Klein group order");
  return std::size_t(s / 4);
}

std::size_t klein_joint_dim(const Automorphism& a, const Automorphism& b) {
  return klein_joint_dim(a, b, a.compose(b));
}

// same averaging over the order-eight group generated by a, b and a third
// commuting involution theta outside {1, a, b, ab}
std::size_t group8_joint_dim(const Automorphism& a, const Automorphism& b,
                             const Automorphism& ab, const Automorphism& theta) {
  long s = long(a.algebra().dim());
  s += monomial_trace(a) + monomial_trace(b) + monomial_trace(ab);
  s += monomial_trace(theta);
  s += monomial_trace(a.compose(theta)) + monomial_trace(b.compose(theta)) +
       monomial_trace(ab.compose(theta));
  if (s % 8 != 0) throw std::logic_error("trace sum not divisible by the group order");
  return std::size_t(s / 8);
}

// trace of the restriction to the Cartan block
long monomial_cartan_trace(const Automorphism& g) {
  Rat t(0);
  for (int i = 0; i < g.algebra().rank(); ++i)
    if (g.image_index(i) == i) t += g.image_scale(i);
  if (t.get_den() != 1) throw std::logic_error("non-integral trace on a monomial map");
  return long(t.get_num().get_si());
}

std::size_t klein_cartan_dim(const Automorphism& a, const Automorphism& b,
                             const Automorphism& ab) {
  long s = long(a.algebra().rank());
  s += monomial_cartan_trace(a) + monomial_cartan_trace(b) + monomial_cartan_trace(ab);
  if (s % 4 != 0) throw std::logic_error("Cartan trace sum not divisible by the group order");
  return std::size_t(s / 4);
}

// every involution that acts monomially on the chosen basis: sign characters
// of the torus, then each outer coset swept in ascending character order.
// deterministic, and closed under the products used by the scans
std::vector<Automorphism> monomial_involution_pool(const ChevalleyAlgebra& alg) {
  int r = alg.rank();
  std::vector<Automorphism> pool;
  Automorphism flip = Automorphism::diagram(alg, alg.roots().diagram_involution());
  Automorphism transpose = Automorphism::transpose_involution(alg);
  std::vector<const Automorphism*> bases = {nullptr, &flip, &transpose, nullptr};
  Automorphism both = flip.compose(transpose);
  bases[3] = &both;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
      std::vector<long> h(r, 0);
      for (int i = 0; i < r; ++i) h[i] = long((mask >> i) & 1ul);
      Automorphism t = Automorphism::torus(alg, h);
      Automorphism cand = bases[b] ? bases[b]->compose(t) : t;
      if (cand.is_involution()) pool.push_back(std::move(cand));
    }
  }
  return pool;
}

Identification identified_fixed_form(const CaseStudy& cs,
                                     const std::vector<const Automorphism*>& gens,
                                     std::string subject, std::string expected_label,
                                     const std::string& expected_compact) {
  RealFormDescriptor d = real_fixed_form(*cs.alg, cs.x4, gens);
  Identification row;
  row.subject = std::move(subject);
  row.computed = d.label;
  row.expected = std::move(expected_label);
  row.dim = d.dim;
  row.compact_dim = d.compact_dim;
  row.signature = d.signature;
  row.maximal_compact = d.maximal_compact;
  row.match = row.computed == row.expected &&
              (expected_compact.empty() || d.maximal_compact == expected_compact);
  return row;
}

struct PartnerGroup {
  Automorphism a, b;
  RealFormDescriptor desc;
};

// deterministic search for the second Klein four group of the case study:
// first commuting pair in the monomial pool, avoiding the Cartan involution
// but commuting with it, with joint fixed dimension 36, joint Cartan
// dimension 4 and compact part of dimension 28, whose joint fixed form
// identifies as so(8,1)
PartnerGroup find_partner_group(const CaseStudy& cs, std::vector<std::string>* scans) {
  const ChevalleyAlgebra& alg = *cs.alg;
  std::vector<Automorphism> pool = monomial_involution_pool(alg);
  std::size_t commuting = 0, dim36 = 0, cartan4 = 0, compact28 = 0, identified = 0;
  std::optional<PartnerGroup> found;
  for (std::size_t i = 0; i < pool.size() && !found; ++i) {
    const Automorphism& a = pool[i];
    if (a == cs.x4 || !a.commutes_with(cs.x4)) continue;
    for (std::size_t j = i + 1; j < pool.size() && !found; ++j) {
      const Automorphism& b = pool[j];
      if (b == cs.x4 || !b.commutes_with(cs.x4)) continue;
      if (!a.commutes_with(b)) continue;
      Automorphism ab = a.compose(b);
      if (ab == cs.x4) continue;
      ++commuting;
      if (klein_joint_dim(a, b, ab) != 36) continue;
      ++dim36;
      if (klein_cartan_dim(a, b, ab) != 4) continue;
      ++cartan4;
      if (group8_joint_dim(a, b, ab, cs.x4) != 28) continue;
      ++compact28;
      RealFormDescriptor d = real_fixed_form(alg, cs.x4, {&a, &b});
      ++identified;
      if (d.label == "so(8,1)" && d.dim == 36 && d.signature == -20 &&
          d.center_dim == 0 && d.ideals.size() == 1 &&
          d.ideals[0].complex_type.str() == "B4")
        found = PartnerGroup{a, b, std::move(d)};
    }
  }
  if (scans) {
    std::ostringstream os;
    os << "partner-group search over the " << pool.size() << " monomial involutions: " << commuting
       << " commuting pairs avoiding the Cartan involution and compatible with it, " << dim36
       << " with joint fixed dimension 36, " << cartan4 << " also with joint Cartan dimension 4, "
       << compact28 << " also with compact part of dimension 28; " << identified
       << " descriptors computed up to and including the first so(8,1) match "
       << "(scope: pairs of monomial involutions)";
    scans->push_back(os.str());
  }
  if (!found) throw std::logic_error("partner-group search exhausted the monomial pool");
  return std::move(*found);
}

}  // namespace

CaseStudy realize_case_study(const ChevalleyAlgebra& alg) {
  if (alg.type().str() != "E6")
    throw std::invalid_argument("the case study needs the rank-six simply-laced exceptional algebra");

  Automorphism x4_raw = Automorphism::torus(alg, coroot_coweight(alg, {1, 0, 0, 0, 0, 1}));
  std::string x4_structural = x4_raw.label();
  Automorphism x4 = x4_raw.with_label("x4");
  if (x4.fixed_dim() != 46 || !x4.inner())
    throw std::logic_error("the Cartan involution candidate has the wrong fixed dimension");

  Automorphism x0_raw = Automorphism::diagram(alg, alg.roots().diagram_involution());
  std::string x0_structural = x0_raw.label();
  Automorphism x0 = x0_raw.with_label("x0");
  if (x0.fixed_dim() != 52 || x0.inner())
    throw std::logic_error("the diagram flip came out wrong");
  if (!x0.commutes_with(x4))
    throw std::logic_error("the diagram flip must commute with the Cartan involution");

  NoncompactRootData split = noncompact_root_split(alg, x4);

  ReductiveParts compact_parts = reductive_decompose(fixed_subalgebra(alg, {&x4}));
  if (compact_parts.center.dim() != 1)
    throw std::logic_error("the compact subalgebra center is not a line");
  Subalgebra k_center{&alg, compact_parts.center};

  InvolutionConstraints wanted;
  wanted.commute_with = {&x0, &x4};
  wanted.fixed_dim = 38;
  wanted.joint_fixed_dim = {{&x0, 24}};
  std::vector<Automorphism> pooled = involution_search_all(alg, wanted);

  RootVec minus_beta = negated(split.beta);
  std::optional<Automorphism> x1;
  std::string x1_structural;
  std::size_t pattern_rejects = 0;
  for (const Automorphism& cand : pooled) {
    if (root_image(x0.compose(cand), split.beta) == minus_beta) {
      x1_structural = cand.label();
      x1 = cand.with_label("x1");
      break;
    }
    ++pattern_rejects;
  }
  if (!x1)
    throw std::logic_error("no pooled involution realizes the third generator");

  std::vector<Realization> rows;
  {
    std::ostringstream os;
    os << "sign character of the coweight with coroot coordinates [1,0,0,0,0,1]; "
       << "its fixed form is the maximal compact subalgebra";
    rows.push_back({"x4", os.str(), {x4_structural}, x4.fixed_dim(), x4.inner()});
  }
  {
    std::ostringstream os;
    os << "lift of the order-two diagram symmetry with the standard signs";
    rows.push_back({"x0", os.str(), {x0_structural}, x0.fixed_dim(), x0.inner()});
  }
  {
    std::ostringstream os;
    os << "first pooled involution that commutes with x0 and x4, has fixed dimension 38 and "
       << "joint fixed dimension 24 with x0, and whose composition with x0 negates the "
       << "distinguished noncompact root " << root_str(split.beta) << " (" << pattern_rejects
       << " candidates passed the dimension gates but failed the root pattern)";
    rows.push_back({"x1", os.str(), {x1_structural}, x1->fixed_dim(), x1->inner()});
  }

  return CaseStudy{&alg,          std::move(x4),       std::move(x0), std::move(*x1),
                   std::move(split), std::move(k_center), std::move(rows)};
}

std::vector<HolomorphicPair> enumerate_holomorphic_pairs(const CaseStudy& cs,
                                                         std::vector<std::string>* scope) {
  const ChevalleyAlgebra& alg = *cs.alg;
  std::vector<Automorphism> pool = inner_involution_pool(alg);
  // invariant class = (fixed dimension, joint fixed dimension with the Cartan
  // involution). the catalog cross-check inside real_fixed_form rejects any
  // class that mixed two different real forms, so one representative suffices
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> classes;
  std::size_t commuting = 0, aligned = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Automorphism& s = pool[i];
    if (s == cs.x4) continue;
    if (!s.commutes_with(cs.x4)) continue;
    ++commuting;
    if (!holomorphic_type_check(cs.x4, s, cs.k_center)) continue;
    ++aligned;
    classes[{s.fixed_dim(), klein_joint_dim(s, cs.x4)}].push_back(i);
  }
  std::vector<HolomorphicPair> out;
  std::size_t compact_classes = 0;
  for (const auto& [key, members] : classes) {
    RealFormDescriptor d = real_fixed_form(alg, cs.x4, {&pool[members.front()]});
    if (d.dim != key.first || d.compact_dim != key.second)
      throw std::logic_error("class invariants disagree with the identified descriptor");
    if (d.compact_dim == d.dim) {
      ++compact_classes;
      continue;  // compact fixed form, no noncompact symmetric pair here
    }
    out.push_back({pool[members.front()], std::move(d)});
  }
  std::sort(out.begin(), out.end(), [](const HolomorphicPair& a, const HolomorphicPair& b) {
    return a.desc.label < b.desc.label;
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].desc.label == out[i - 1].desc.label)
      throw std::logic_error("two invariant classes identified as the same real form");
  if (scope) {
    std::ostringstream os;
    os << "holomorphic-type scan over the " << pool.size() << " pooled inner involutions: "
       << commuting << " commute with the Cartan involution (itself excluded), " << aligned
       << " of those fix the compact center pointwise, " << classes.size()
       << " invariant classes, " << compact_classes << " compact, " << out.size()
       << " noncompact fixed forms kept (scope: inner involutions of the pool)";
    scope->push_back(os.str());
  }
  return out;
}

std::vector<Identification> verify_fixed_form_identifications(const CaseStudy& cs) {
  std::vector<Identification> rows;
  rows.push_back(identified_fixed_form(cs, {&cs.x0}, "fixed form of x0", "f4(-20)", "so(9)"));
  rows.push_back(identified_fixed_form(cs, {&cs.x1}, "fixed form of x1", "su(4,2)+su(2)", ""));
  Automorphism prod = cs.x0.compose(cs.x1).with_label("x0*x1");
  rows.push_back(
      identified_fixed_form(cs, {&prod}, "fixed form of x0*x1", "sp(2,2)", "sp(2)+sp(2)"));
  return rows;
}

std::vector<Identification> verify_klein_pair(const CaseStudy& cs,
                                              std::vector<std::string>* scans) {
  std::vector<Identification> rows;
  Identification row =
      identified_fixed_form(cs, {&cs.x0, &cs.x1}, "joint fixed form of <x0, x1>",
                            "sp(2,1)+su(2)", "so(5)+su(2)+su(2)");
  row.match = row.match && row.dim == 24 && row.compact_dim == 16 && row.signature == -8;
  rows.push_back(std::move(row));
  if (scans) {
    std::vector<Automorphism> pool = monomial_involution_pool(*cs.alg);
    std::size_t commuting_pairs = 0, dim37 = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (!pool[i].commutes_with(pool[j])) continue;
        ++commuting_pairs;
        if (klein_joint_dim(pool[i], pool[j]) == 37) ++dim37;
      }
    std::ostringstream os;
    os << "joint-dimension scan over the " << pool.size() << " monomial involutions: "
       << commuting_pairs << " commuting pairs, " << dim37
       << " with a joint fixed algebra of dimension 37, the dimension of the compact dual "
       << "so(9)+so(2) (scope: pairs of monomial involutions on the chosen basis)";
    scans->push_back(os.str());
  }
  return rows;
}

CaseReport verify_branching_classification(const ChevalleyAlgebra& alg) {
  CaseStudy cs = realize_case_study(alg);
  CaseReport rep;
  rep.realizations = cs.realizations;
  bool ok = true;

  rep.identifications = verify_fixed_form_identifications(cs);
  Identification klein_row;
  {
    std::vector<Identification> klein = verify_klein_pair(cs, &rep.scans);
    klein_row = klein.front();
    rep.identifications.insert(rep.identifications.end(), klein.begin(), klein.end());
  }

  // single-map admissibility for the three nontrivial elements of <x0, x1>,
  // then the joint verdict
  Automorphism prod = cs.x0.compose(cs.x1).with_label("x0*x1");
  CriterionVerdict v0 = symmetric_pair_verdict(cs.split, cs.x0, "pair carved out by x0");
  CriterionVerdict v1 = symmetric_pair_verdict(cs.split, cs.x1, "pair carved out by x1");
  CriterionVerdict v01 = symmetric_pair_verdict(cs.split, prod, "pair carved out by x0*x1");
  bool a0 = v0.result == Verdict::ADMITS_CANDIDATE;
  bool a1 = v1.result == Verdict::ADMITS_CANDIDATE;
  bool a01 = v01.result == Verdict::ADMITS_CANDIDATE;
  CriterionVerdict joint = joint_verdict(a0, a1, a01);
  joint.subject = "Klein four group <x0, x1>";
  if (!(a0 && a1 && !a01) || joint.result != Verdict::OBSTRUCTED) ok = false;
  rep.criteria = {v0, v1, v01, joint};

  bool pair_obstructed = klein_pair_obstructed(cs.split, cs.x0, cs.x1);
  if (!pair_obstructed) ok = false;
  {
    std::ostringstream os;
    os << "joint obstruction for <x0, x1> " << (pair_obstructed ? "certified" : "NOT certified")
       << ": the distinguished root " << root_str(cs.split.beta) << " maps to "
       << root_str(v0.sigma_beta) << " under x0 and to " << root_str(v1.sigma_beta)
       << " under x1, opposite images off the root's own line";
    rep.certificates.push_back(os.str());
  }

  // the verdicts may not depend on the sign convention for the distinguished root
  {
    NoncompactRootData flipped = cs.split;
    flipped.beta = negated(cs.split.beta);
    bool sign_stable = symmetric_pair_admits(flipped, cs.x0) == a0 &&
                       symmetric_pair_admits(flipped, cs.x1) == a1 &&
                       symmetric_pair_admits(flipped, prod) == a01 &&
                       klein_pair_obstructed(flipped, cs.x0, cs.x1) == pair_obstructed;
    if (!sign_stable) ok = false;
    rep.certificates.push_back(std::string("sign-convention check: every verdict ") +
                               (sign_stable ? "unchanged" : "CHANGED") +
                               " when the distinguished root is negated");
  }

  // averaged witness on the distinguished root line
  {
    ProjectionWitness w = nonnilpotent_projection_witness(alg, cs.x4, cs.x0, cs.x1, cs.split);
    if (w.nilpotent) ok = false;
    Rat re = alg.killing_form(w.projection.re, w.projection.re) -
             alg.killing_form(w.projection.im, w.projection.im);
    Rat im = Rat(2) * alg.killing_form(w.projection.re, w.projection.im);
    std::ostringstream os;
    os << "averaged witness on the distinguished root line is nonzero, lies in the joint "
       << "fixed form of <x0, x1>, is " << (w.nilpotent ? "" : "not ") << "ad-nilpotent, "
       << "and has Killing square " << rat_str(re);
    if (im != 0) os << " + " << rat_str(im) << "i";
    rep.certificates.push_back(os.str());
  }

  // the partner group and its identification
  PartnerGroup partner = find_partner_group(cs, &rep.scans);
  {
    std::size_t gamma_dim = joint_fixed_dim({&cs.x0, &cs.x1});
    rep.realizations.push_back({"gamma", "Klein four group generated by x0 and x1",
                                {"x0", "x1"}, gamma_dim, cs.x0.inner() && cs.x1.inner()});
    std::ostringstream os;
    os << "first monomial involution pair commuting with the Cartan involution and avoiding "
       << "it, with joint fixed dimension 36, joint Cartan dimension 4 and compact part of "
       << "dimension 28, whose joint fixed form identifies as the partner target";
    rep.realizations.push_back({"gamma-prime", os.str(), {partner.a.label(), partner.b.label()},
                                partner.desc.dim, partner.a.inner() && partner.b.inner()});
  }
  {
    Identification prow;
    prow.subject = "joint fixed form of gamma-prime";
    prow.computed = partner.desc.label;
    prow.expected = "so(8,1)";
    prow.dim = partner.desc.dim;
    prow.compact_dim = partner.desc.compact_dim;
    prow.signature = partner.desc.signature;
    prow.maximal_compact = partner.desc.maximal_compact;
    prow.match = prow.computed == prow.expected && prow.dim == 36 && prow.signature == -20 &&
                 prow.maximal_compact == "so(8)";
    rep.identifications.push_back(std::move(prow));
  }

  // single-map admissibility for the partner group: all three must pass
  {
    Automorphism pab = partner.a.compose(partner.b);
    CriterionVerdict p1 = symmetric_pair_verdict(cs.split, partner.a,
                                                 "pair carved out by " + partner.a.label());
    CriterionVerdict p2 = symmetric_pair_verdict(cs.split, partner.b,
                                                 "pair carved out by " + partner.b.label());
    CriterionVerdict p3 = symmetric_pair_verdict(cs.split, pab,
                                                 "pair carved out by " + pab.label());
    bool b1 = p1.result == Verdict::ADMITS_CANDIDATE;
    bool b2 = p2.result == Verdict::ADMITS_CANDIDATE;
    bool b3 = p3.result == Verdict::ADMITS_CANDIDATE;
    CriterionVerdict pj = joint_verdict(b1, b2, b3);
    pj.subject = "Klein four group gamma-prime";
    if (!(b1 && b2 && b3) || pj.result != Verdict::ADMITS_CANDIDATE) ok = false;
    rep.criteria.push_back(std::move(p1));
    rep.criteria.push_back(std::move(p2));
    rep.criteria.push_back(std::move(p3));
    rep.criteria.push_back(std::move(pj));
  }

  // the realized groups against the two forbidden compact duals
  {
    bool clean = klein_row.dim != 37 && klein_row.dim != 22 && partner.desc.dim != 37 &&
                 partner.desc.dim != 22;
    if (!clean) ok = false;
    std::ostringstream os;
    os << "realized groups against the forbidden compact duals so(9)+so(2) (dimension 37) and "
       << "sp(3)+so(2) (dimension 22): <x0, x1> has dimension " << klein_row.dim
       << " and identifies as " << klein_row.computed << ", gamma-prime has dimension "
       << partner.desc.dim << " and identifies as " << partner.desc.label << "; "
       << (clean ? "zero matches" : "MATCH FOUND") << " (scope: the two realized Klein four groups)";
    rep.scans.push_back(os.str());
  }

  // holomorphic enumeration and the center-membership certificates for the
  // two forms whose pairs the obstruction machinery cannot reach
  {
    std::vector<HolomorphicPair> hol = enumerate_holomorphic_pairs(cs, &rep.scans);
    for (const HolomorphicPair& hp : hol) rep.holomorphic_labels.push_back(hp.desc.label);
    const std::vector<std::string> expected_labels = {"so(8,2)+so(2)", "so*(10)+so(2)",
                                                      "su(4,2)+su(2)", "su(5,1)+sl(2,R)"};
    if (rep.holomorphic_labels != expected_labels) ok = false;
    const Vec& z = cs.k_center.space.basis().front();
    for (const HolomorphicPair& hp : hol) {
      if (hp.desc.label != "so*(10)+so(2)" && hp.desc.label != "su(5,1)+sl(2,R)") continue;
      bool inside = joint_fixed_space({&hp.sigma, &cs.x4}).contains(z);
      if (!inside) ok = false;
      std::ostringstream os;
      os << "the compact center lies inside the compact part of the " << hp.desc.label
         << " fixed form: membership " << (inside ? "verified" : "FAILED")
         << " on the joint fixed space";
      rep.certificates.push_back(os.str());
    }
  }

  rep.imported.push_back(
      {"imported, not recomputed: existence of the minimal representation whose restrictions "
       "the criteria concern"});
  rep.imported.push_back(
      {"imported, not recomputed: for the surviving pair (e6(-14), so(8,1)) the restriction "
       "does decompose discretely; only the obstruction direction is recomputed here"});
  rep.imported.push_back(
      {"imported, not recomputed: restrictions to the holomorphic-type pairs in the "
       "enumeration decompose discretely by the general holomorphic branching principle"});
  rep.imported.push_back(
      {"imported, not recomputed: the realized Klein four groups represent the relevant "
       "conjugacy classes; uniqueness up to conjugacy is not recomputed"});

  for (const Identification& row : rep.identifications)
    if (!row.match) ok = false;
  rep.all_match = ok;
  rep.final_verdict =
      ok ? "among the realized Klein four symmetric pairs, (e6(-14), so(8,1)) is the unique "
           "survivor: <x0, x1> is obstructed by the joint root test, with a nonzero "
           "non-nilpotent averaged witness exhibiting the failure, while gamma-prime passes "
           "every single-map test; existence in the admitting direction is imported, not "
           "recomputed"
         : "verification FAILED: at least one computed value differs from its expected "
           "case-study value";
  return rep;
}

}  // namespace klein4
