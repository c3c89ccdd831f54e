#include "klein4/criteria.hpp"

#include <stdexcept>

namespace klein4 {

namespace {

RootVec negate_root(const RootVec& a) {
  RootVec b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = -a[i];
  return b;
}

int root_basis_index(const ChevalleyAlgebra& alg, const RootVec& a) {
  int p = alg.roots().positive_index(a);
  if (p >= 0) return alg.pos_index(p);
  p = alg.roots().positive_index(negate_root(a));
  if (p >= 0) return alg.neg_index(p);
  throw std::invalid_argument("not a root of the algebra");
}

RootVec root_of_basis_index(const ChevalleyAlgebra& alg, int idx) {
  int np = alg.roots().num_positive();
  int j = idx - alg.rank();
  if (j < 0) throw std::logic_error("root space mapped into the Cartan");
  if (j < np) return alg.roots().positive(j);
  return negate_root(alg.roots().positive(j - np));
}

void require_commutes(const Automorphism& sigma, const NoncompactRootData& data) {
  if (!sigma.commutes_with(data.cartan_involution))
    throw std::invalid_argument("probe map does not commute with the cartan involution");
}

bool matrix_nilpotent(const RatMatrix& m) {
  std::size_t n = m.rows();
  Subspace cur(n);
  for (std::size_t j = 0; j < n; ++j) cur.add(m.column(j));
  // images of successive powers descend; stalling at a nonzero space means
  // the map restricts to an automorphism of it, so an eigenvalue survives
  while (cur.dim() > 0) {
    Subspace next(n);
    for (const Vec& b : cur.basis()) next.add(m.apply(b));
    if (next.dim() == cur.dim()) return false;
    cur = std::move(next);
  }
  return true;
}

RatMatrix ad_matrix(const ChevalleyAlgebra& alg, const Vec& x) {
  int n = alg.dim();
  RatMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    Vec col(n);
    col[j] = 1;
    col = alg.bracket(x, col);
    for (int i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

}  // namespace

RootVec root_image(const Automorphism& sigma, const RootVec& a) {
  const ChevalleyAlgebra& alg = sigma.algebra();
  return root_of_basis_index(alg, sigma.image_index(root_basis_index(alg, a)));
}

bool symmetric_pair_admits(const NoncompactRootData& data, const Automorphism& sigma) {
  require_commutes(sigma, data);
  return root_image(sigma, data.beta) != negate_root(data.beta);
}

CriterionVerdict symmetric_pair_verdict(const NoncompactRootData& data, const Automorphism& sigma,
                                        const std::string& subject) {
  CriterionVerdict v;
  v.subject = subject;
  v.sigma_beta = root_image(sigma, data.beta);
  v.result = v.sigma_beta != negate_root(data.beta) ? Verdict::ADMITS_CANDIDATE
                                                    : Verdict::OBSTRUCTED;
  v.rule = "sigma-beta-test";
  return v;
}

bool klein_pair_obstructed(const NoncompactRootData& data, const Automorphism& sigma,
                           const Automorphism& tau) {
  if (!sigma.commutes_with(tau))
    throw std::invalid_argument("the two probe maps do not commute");
  require_commutes(sigma, data);
  require_commutes(tau, data);
  RootVec sb = root_image(sigma, data.beta);
  if (sb != negate_root(root_image(tau, data.beta))) return false;
  return sb != data.beta && sb != negate_root(data.beta);
}

CriterionVerdict joint_verdict(bool admits_sigma, bool admits_tau, bool admits_product) {
  CriterionVerdict v;
  if (admits_sigma && admits_tau && !admits_product) {
    v.result = Verdict::OBSTRUCTED;
    v.rule = "joint-obstruction";
  } else {
    v.result = Verdict::ADMITS_CANDIDATE;
    v.rule = "inconclusive";
  }
  return v;
}

bool is_nilpotent(const ChevalleyAlgebra& alg, const Vec& x) {
  return matrix_nilpotent(ad_matrix(alg, x));
}

bool is_nilpotent(const ChevalleyAlgebra& alg, const CVec& x) {
  bool re0 = true, im0 = true;
  for (const Rat& c : x.re) re0 = re0 && c == 0;
  for (const Rat& c : x.im) im0 = im0 && c == 0;
  // a nonzero complex scalar never changes nilpotency, so a one-part element
  // reduces to the rational test
  if (im0) return matrix_nilpotent(ad_matrix(alg, x.re));
  if (re0) return matrix_nilpotent(ad_matrix(alg, x.im));
  std::size_t n = std::size_t(alg.dim());
  RatMatrix a = ad_matrix(alg, x.re), b = ad_matrix(alg, x.im);
  RatMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = a.at(i, j);
      m.at(n + i, n + j) = a.at(i, j);
      m.at(i, n + j) = -b.at(i, j);
      m.at(n + i, j) = b.at(i, j);
    }
  return matrix_nilpotent(m);
}

ProjectionWitness nonnilpotent_projection_witness(const ChevalleyAlgebra& alg,
                                                  const Automorphism& theta,
                                                  const Automorphism& sigma,
                                                  const Automorphism& tau,
                                                  const NoncompactRootData& data) {
  if (!(theta == data.cartan_involution))
    throw std::invalid_argument("split data belongs to a different cartan involution");
  if (!klein_pair_obstructed(data, sigma, tau))
    throw std::invalid_argument("the joint obstruction hypothesis is not certified");
  if (!sigma.commutes_with(theta) || !tau.commutes_with(theta))
    throw std::invalid_argument("probe maps must commute with the cartan involution");

  Automorphism st = sigma.compose(tau);
  Automorphism transpose = Automorphism::transpose_involution(alg);
  // conjugation with fixed points the noncompact real algebra of theta:
  // antilinear, equal to the compact-form conjugation composed with theta
  auto conj_form = [&](const CVec& v) {
    CVec w{transpose.apply(v.re), transpose.apply(v.im)};
    for (Rat& c : w.im) c = -c;
    return theta.apply(w);
  };

  int bidx = root_basis_index(alg, data.beta);
  Vec e(alg.dim());
  e[bidx] = 1;
  Vec zero(alg.dim());

  CVec y;
  for (int attempt = 0;; ++attempt) {
    // seed directions 1 and i on the distinguished root line; the weight
    // space is one-dimensional, so these exhaust the real possibilities
    CVec x = attempt == 0 ? CVec{e, zero} : CVec{zero, e};
    y = cvec_add(x, conj_form(st.apply(x)));
    if (!cvec_is_zero(y)) break;
    if (attempt == 1)
      throw std::logic_error("seed vanished in both directions on the distinguished line");
  }

  CVec pr = cvec_add(cvec_add(y, sigma.apply(y)), cvec_add(tau.apply(y), st.apply(y)));
  pr = cvec_scale(pr, Rat(1, 4), Rat(0));
  if (cvec_is_zero(pr)) throw std::logic_error("projection of a nonzero seed vanished");
  if (!cvec_is_zero(cvec_sub(sigma.apply(pr), pr)) ||
      !cvec_is_zero(cvec_sub(tau.apply(pr), pr)))
    throw std::logic_error("projection escaped the joint fixed algebra");

  ProjectionWitness w{y, pr, is_nilpotent(alg, pr)};
  return w;
}

bool holomorphic_type_check(const Automorphism& theta, const Automorphism& sigma,
                            const Subalgebra& k_center) {
  if (k_center.dim() != 1)
    throw std::invalid_argument("holomorphic-type test needs a one-dimensional compact center");
  if (!sigma.commutes_with(theta))
    throw std::invalid_argument("probe map does not commute with the cartan involution");
  const Vec& z = k_center.space.basis()[0];
  if (theta.apply(z) != z)
    throw std::invalid_argument("given center is not fixed by the cartan involution");
  return sigma.apply(z) == z;
}

}  // namespace klein4
