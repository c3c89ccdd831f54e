#pragma once

#include <vector>

#include "klein4/automorphism.hpp"
#include "klein4/chevalley.hpp"
#include "klein4/matrix.hpp"

namespace klein4 {

// subalgebra of a structure-constant algebra, given by its span in the
// ambient coordinates. closure under the bracket is certified by the
// factories below.
struct Subalgebra {
  const ChevalleyAlgebra* parent = nullptr;
  Subspace space;
  std::size_t dim() const { return space.dim(); }
};

// joint fixed points of a family of automorphisms, with a closure certificate
Subalgebra fixed_subalgebra(const ChevalleyAlgebra& alg,
                            const std::vector<const Automorphism*>& maps);

// the whole algebra, packaged the same way
Subalgebra as_subalgebra(const ChevalleyAlgebra& alg);

// wrap an already-known-closed span (certifies closure)
Subalgebra make_subalgebra(const ChevalleyAlgebra& alg, const Subspace& span);

// matrix of ad(t) in the internal basis of s; throws if ad(t) leaves s
RatMatrix ad_in_basis(const Subalgebra& s, const Vec& t);

// semisimple element usable as a torus generator. imaginary ones have purely
// imaginary adjoint eigenvalues; candidates lists the possible eigenvalues
// (divided by i in the imaginary case), always including 0, derived from the
// ambient adjoint action so the list is complete by construction.
struct TorusGenerator {
  Vec v;
  bool imaginary = false;
  std::vector<Rat> candidates;
};

// deterministic generator pool inside s: the Cartan part of s first, then
// single root-pair differences x_a - x_{-a} lying in s; the extended stage
// adds sums/differences over strongly orthogonal pairs and the hyperbolic
// combinations x_a + x_{-a}
std::vector<TorusGenerator> torus_generator_pool(const Subalgebra& s, bool extended);

// maximal commuting family from the pool whose centralizer in s has dimension
// |family| + center_dim. deterministic; throws if no family certifies.
std::vector<TorusGenerator> maximal_torus(const Subalgebra& s, std::size_t center_dim);

// common eigenspace of the torus on the doubled (real-plus-imaginary) copy of
// s; basis vectors have length 2 dim(s), first half the real part in internal
// coordinates, second half the imaginary part
struct WeightSpace {
  std::vector<Rat> weight;  // one entry per generator
  std::vector<Vec> basis;
  bool zero_weight() const;
  std::size_t complex_dim() const { return basis.size() / 2; }
};

std::vector<WeightSpace> weight_decomposition(const Subalgebra& s,
                                              const std::vector<TorusGenerator>& torus);

struct ReductiveParts {
  Subspace center;
  std::vector<Subspace> ideals;  // simple ideals, decreasing dimension
  std::vector<TorusGenerator> torus;  // certified maximal torus of the derived part
};

// split a reductive subalgebra into its center and simple ideals, certifying
// the direct sum, closure of each summand, and vanishing cross brackets
ReductiveParts reductive_decompose(const Subalgebra& s);

// Cartan type of a simple subalgebra, recovered from its own root system:
// maximal torus, weight spaces, then the census of root-string lengths
CartanType identify_complex_type(const Subalgebra& s);

// same, but against a commuting semisimple family from an enclosing algebra
// that acts invariantly here (typically ReductiveParts::torus on an ideal);
// the rank is read off the centralizer block, which is certified abelian
CartanType identify_complex_type(const Subalgebra& s,
                                 const std::vector<TorusGenerator>& family);

}  // namespace klein4
