#pragma once

#include <string>
#include <vector>

#include "klein4/automorphism.hpp"
#include "klein4/chevalley.hpp"
#include "klein4/fixed_points.hpp"

namespace klein4 {

// one simple ideal of a stable fixed algebra together with its compact-part
// data; label falls back to "unidentified" when the catalog has no matching
// entry, never to a guess
struct IdealForm {
  CartanType complex_type;
  std::size_t dim = 0;          // complex dimension of the ideal
  std::size_t compact_dim = 0;  // dimension of its theta-fixed part
  std::string label;            // e.g. "su(4,2)", "sp(2,1)", or "unidentified"
};

struct RealFormDescriptor {
  std::vector<IdealForm> ideals;           // decreasing dimension, then label
  std::size_t center_dim = 0;              // center of the complexified algebra
  std::size_t center_compact = 0;          // theta-fixed center lines (so(2) each; the rest count as R)
  std::size_t dim = 0;                     // real dimension of the form
  std::size_t compact_dim = 0;             // dim k
  long signature = 0;                      // dim p - dim k
  bool hermitian = false;                  // simple with 1-dimensional center of k
  std::string label;                       // e.g. "e6(-14)", "sp(2,1)+su(2)"
  std::vector<std::string> compact_parts;  // simple pieces of k, decreasing dimension
  std::size_t compact_center = 0;          // abelian so(2) lines of k
  std::string maximal_compact;             // display name of k
};

// canonical name of the simple real form with the given complex type and
// Killing signature, cross-checked against the expected compact parts;
// anything outside the catalog comes back "unidentified"
std::string label_real_form(const CartanType& type, long signature,
                            const std::vector<std::string>& compact_parts,
                            std::size_t compact_center);

// real form u^theta + i u^{-theta} carved out of the full algebra
RealFormDescriptor real_form(const ChevalleyAlgebra& alg, const Automorphism& theta);

// real form structure of the joint fixed algebra of gamma, with the compact
// part cut out by theta; gamma maps must commute pairwise and with theta
RealFormDescriptor real_fixed_form(const ChevalleyAlgebra& alg, const Automorphism& theta,
                                   const std::vector<const Automorphism*>& gamma);

bool is_hermitian(const RealFormDescriptor& d);

struct NoncompactRootData {
  Automorphism cartan_involution;
  std::vector<RootVec> compact_roots;     // signed: both a root and its negative appear
  std::vector<RootVec> noncompact_roots;  // signed
  std::vector<RootVec> maxima;            // poset-maximal noncompact positive roots, lex descending
  bool hermitian = false;
  Vec z;                                  // normalized central coweight in coroot coordinates
  std::vector<RootVec> p_plus;            // signed noncompact roots pairing +1 with z
  std::vector<RootVec> p_minus;           // their negatives
  RootVec beta;                           // distinguished maximal noncompact root
};

// split the roots by compactness under an involution fixing the standard
// torus pointwise; in the hermitian case also split into p+- by the sign of
// the central pairing, normalized so the lex-greatest maximal noncompact
// positive root lands in p_plus
NoncompactRootData noncompact_root_split(const ChevalleyAlgebra& alg, const Automorphism& theta);

// pairing of a root with a torus vector written in coroot coordinates
Rat coweight_pairing(const RootSystem& rs, const Vec& z, const RootVec& a);

}  // namespace klein4
