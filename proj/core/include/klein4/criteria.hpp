#pragma once

#include <string>

#include "klein4/automorphism.hpp"
#include "klein4/fixed_points.hpp"
#include "klein4/real_form.hpp"

namespace klein4 {

enum class Verdict { ADMITS_CANDIDATE, OBSTRUCTED };

// outcome of one branching test. OBSTRUCTED is only ever set when the cited
// rule's hypothesis has been certified on the spot; a passing test says
// "candidate", never "exists", because no modules are constructed here.
struct CriterionVerdict {
  std::string subject;
  RootVec sigma_beta;  // image of the distinguished root under the probe map
  Verdict result = Verdict::ADMITS_CANDIDATE;
  std::string rule;  // "sigma-beta-test", "joint-obstruction", "inconclusive"
};

// image of a (possibly negated) root under a monomial automorphism, read off
// the permutation it induces on the root spaces
RootVec root_image(const Automorphism& sigma, const RootVec& a);

// single-involution admissibility: the pair passes iff sigma does not send
// the distinguished noncompact root to its negative
bool symmetric_pair_admits(const NoncompactRootData& data, const Automorphism& sigma);

// verdict wrapper around symmetric_pair_admits, rule "sigma-beta-test"
CriterionVerdict symmetric_pair_verdict(const NoncompactRootData& data, const Automorphism& sigma,
                                        const std::string& subject);

// two-involution obstruction: sigma beta = -tau beta and sigma beta != +-beta.
// symmetric in sigma and tau
bool klein_pair_obstructed(const NoncompactRootData& data, const Automorphism& sigma,
                           const Automorphism& tau);

// combine three single-map tests (for sigma, tau, and their product) into a
// verdict: pass, pass, fail forces sigma beta = -tau beta != +-beta, which is
// the joint obstruction; every other pattern stays inconclusive at this level
CriterionVerdict joint_verdict(bool admits_sigma, bool admits_tau, bool admits_product);

// exact nilpotency of ad(x): the descending chain of images of ad(x) either
// reaches zero or stabilizes at a nonzero invariant subspace
bool is_nilpotent(const ChevalleyAlgebra& alg, const Vec& x);
bool is_nilpotent(const ChevalleyAlgebra& alg, const CVec& x);

// explicit element of the joint fixed algebra of {sigma, tau, sigma tau}
// obtained by averaging a distinguished-root vector with its conjugates
struct ProjectionWitness {
  CVec y;           // seed: root vector plus its twisted conjugate
  CVec projection;  // quarter average of y over the four group elements
  bool nilpotent = false;
};

// requires the joint obstruction to hold for (sigma, tau) on data. builds the
// seed on the distinguished root line (rescaling once if the first choice
// cancels), averages, and certifies the projection nonzero and group-fixed.
// the conjugation used is the compact-form transpose twisted by theta, the
// unique one whose fixed points form the real algebra theta describes
ProjectionWitness nonnilpotent_projection_witness(const ChevalleyAlgebra& alg,
                                                  const Automorphism& theta,
                                                  const Automorphism& sigma,
                                                  const Automorphism& tau,
                                                  const NoncompactRootData& data);

// does sigma act trivially on the (one-dimensional) center of the maximal
// compact subalgebra: the alignment that keeps highest-weight branching alive
bool holomorphic_type_check(const Automorphism& theta, const Automorphism& sigma,
                            const Subalgebra& k_center);

}  // namespace klein4
