#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "klein4/real_form.hpp"

using klein4::Automorphism;
using klein4::CartanType;
using klein4::ChevalleyAlgebra;
using klein4::Rat;
using klein4::RootVec;
using klein4::Vec;

namespace {

const ChevalleyAlgebra& e6() {
  static ChevalleyAlgebra alg = ChevalleyAlgebra::build(CartanType::parse("E6"));
  return alg;
}

Automorphism omega() { return Automorphism::diagram(e6(), e6().roots().diagram_involution()); }
Automorphism eta0() { return Automorphism::transpose_involution(e6()); }
Automorphism sigma1() { return Automorphism::torus(e6(), klein4::coroot_coweight(e6(), {0, 1, 0, 0, 0, 0})); }
Automorphism sigma2() { return Automorphism::torus(e6(), klein4::coroot_coweight(e6(), {1, 0, 0, 0, 0, 1})); }

}  // namespace

TEST_CASE("full-algebra real forms by involution") {
  auto id = Automorphism::identity(e6());
  auto d = klein4::real_form(e6(), id);
  CHECK(d.label == "e6(-78)");
  CHECK(d.signature == -78);
  CHECK(d.compact_dim == 78);
  CHECK(d.maximal_compact == "e6(-78)");
  CHECK_FALSE(klein4::is_hermitian(d));

  auto t2 = sigma2();
  d = klein4::real_form(e6(), t2);
  CHECK(d.label == "e6(-14)");
  CHECK(d.compact_dim == 46);
  CHECK(d.signature == -14);
  CHECK(d.maximal_compact == "so(10)+so(2)");
  CHECK(klein4::is_hermitian(d));

  auto w = omega();
  d = klein4::real_form(e6(), w);
  CHECK(d.label == "e6(-26)");
  CHECK(d.compact_dim == 52);
  CHECK(d.maximal_compact == "f4(-52)");
  CHECK_FALSE(d.hermitian);

  auto t1 = sigma1();
  d = klein4::real_form(e6(), t1);
  CHECK(d.label == "e6(2)");
  CHECK(d.signature == 2);
  CHECK(d.maximal_compact == "su(6)+su(2)");
  CHECK_FALSE(d.hermitian);

  auto c = eta0();
  d = klein4::real_form(e6(), c);
  CHECK(d.label == "e6(6)");
  CHECK(d.signature == 6);
  CHECK(d.maximal_compact == "sp(4)");
}

TEST_CASE("signature is invariant under conjugation") {
  auto w = omega();
  auto t = Automorphism::torus(e6(), {1, 0, 0, 0, 0, 0});
  auto conj = w.compose(t).compose(w);  // diagram flip is self-inverse
  auto a = klein4::real_form(e6(), t);
  auto b = klein4::real_form(e6(), conj);
  CHECK(a.label == b.label);
  CHECK(a.signature == b.signature);
  CHECK(a.compact_dim == b.compact_dim);
  CHECK(a.maximal_compact == b.maximal_compact);
}

TEST_CASE("fixed algebras of the involution family") {
  auto theta = sigma2();

  SUBCASE("the compact picker itself gives its own compact dual") {
    auto d = klein4::real_fixed_form(e6(), theta, {&theta});
    CHECK(d.label == "so(10)+so(2)");
    CHECK(d.dim == 46);
    CHECK(d.signature == -46);
    CHECK_FALSE(d.hermitian);
  }

  SUBCASE("diagram flip cuts out the rank-four exceptional form") {
    auto w = omega();
    auto d = klein4::real_fixed_form(e6(), theta, {&w});
    CHECK(d.label == "f4(-20)");
    CHECK(d.dim == 52);
    CHECK(d.compact_dim == 36);
    CHECK(d.signature == -20);
    CHECK(d.maximal_compact == "so(9)");
    CHECK_FALSE(d.hermitian);
  }

  SUBCASE("transpose involution cuts out the rank-four symplectic form") {
    auto c = eta0();
    auto d = klein4::real_fixed_form(e6(), theta, {&c});
    CHECK(d.label == "sp(2,2)");
    CHECK(d.dim == 36);
    CHECK(d.compact_dim == 20);
    CHECK(d.signature == -4);
    CHECK(d.maximal_compact == "sp(2)+sp(2)");
  }

  SUBCASE("flip composed with transpose gives the six-dimensional-center-free pair") {
    auto w = omega();
    auto c = eta0();
    auto wc = w.compose(c);
    auto d = klein4::real_fixed_form(e6(), theta, {&wc});
    CHECK(d.label == "su(4,2)+su(2)");
    CHECK(d.dim == 38);
    CHECK(d.compact_dim == 22);
    CHECK(d.signature == -6);
    REQUIRE(d.ideals.size() == 2);
    CHECK(d.ideals[0].label == "su(4,2)");
    CHECK(d.ideals[1].label == "su(2)");
  }

  SUBCASE("the Klein four fixed algebra") {
    auto w = omega();
    auto wc = w.compose(eta0());
    auto d = klein4::real_fixed_form(e6(), theta, {&w, &wc});
    CHECK(d.label == "sp(2,1)+su(2)");
    CHECK(d.dim == 24);
    CHECK(d.compact_dim == 16);
    CHECK(d.signature == -8);
    CHECK(d.maximal_compact == "so(5)+su(2)+su(2)");
    CHECK_FALSE(d.hermitian);
  }
}

TEST_CASE("rejections name the offending maps") {
  auto theta = sigma2();
  auto w = omega();
  auto t = Automorphism::torus(e6(), {1, 0, 0, 0, 0, 0}).with_label("t-probe");
  CHECK_FALSE(w.commutes_with(t));
  CHECK_THROWS_WITH_AS(klein4::real_fixed_form(e6(), theta, {&w, &t}),
                       doctest::Contains("t-probe"), std::invalid_argument);

  auto non_inv = w.compose(t);
  CHECK_FALSE(non_inv.is_involution());
  CHECK_THROWS_AS(klein4::real_form(e6(), non_inv), std::invalid_argument);
}

TEST_CASE("catalog naming is total on the case data and never guesses") {
  CHECK(klein4::label_real_form(CartanType{'B', 4}, -20, {"so(8)"}, 0) == "so(8,1)");
  CHECK(klein4::label_real_form(CartanType{'C', 4}, -4, {"sp(2)", "sp(2)"}, 0) == "sp(2,2)");
  CHECK(klein4::label_real_form(CartanType{'C', 4}, -4, {"so(5)", "so(5)"}, 0) == "sp(2,2)");
  CHECK(klein4::label_real_form(CartanType{'F', 4}, -52, {"f4(-52)"}, 0) == "f4(-52)");
  CHECK(klein4::label_real_form(CartanType{'A', 1}, 1, {}, 1) == "sl(2,R)");
  CHECK(klein4::label_real_form(CartanType{'D', 5}, -5, {"su(5)"}, 1) == "so*(10)");
  // wrong compact structure, impossible signature parity, unknown dimension
  CHECK(klein4::label_real_form(CartanType{'B', 4}, -20, {"so(7)"}, 0) == "unidentified");
  CHECK(klein4::label_real_form(CartanType{'E', 6}, -13, {}, 0) == "unidentified");
  CHECK(klein4::label_real_form(CartanType{'E', 6}, 0, {}, 0) == "unidentified");
}

TEST_CASE("descriptor bookkeeping adds up") {
  auto theta = sigma2();
  auto w = omega();
  auto wc = w.compose(eta0());
  for (const auto* g : {&w, &wc}) {
    auto d = klein4::real_fixed_form(e6(), theta, {g});
    std::size_t total = d.center_dim, compact = d.center_compact;
    for (const auto& f : d.ideals) {
      total += f.dim;
      compact += f.compact_dim;
    }
    CHECK(total == d.dim);
    CHECK(compact == d.compact_dim);
    CHECK(d.signature == long(d.dim) - 2 * long(d.compact_dim));
  }
}

TEST_CASE("compactness split for the hermitian picker") {
  auto data = klein4::noncompact_root_split(e6(), sigma2());
  CHECK(data.compact_roots.size() == 40);
  CHECK(data.noncompact_roots.size() == 32);
  CHECK(data.hermitian);

  REQUIRE(data.maxima.size() == 2);
  CHECK(data.maxima[0] == RootVec{1, 1, 2, 2, 1, 1});
  CHECK(data.maxima[1] == RootVec{1, 1, 1, 2, 2, 1});
  CHECK(data.beta == RootVec{1, 1, 2, 2, 1, 1});

  // central coweight pairings against the simple roots
  const auto& rs = e6().roots();
  std::vector<Rat> pair;
  for (int i = 0; i < 6; ++i) {
    RootVec simple(6, 0);
    simple[i] = 1;
    pair.push_back(klein4::coweight_pairing(rs, data.z, simple));
  }
  CHECK(pair == std::vector<Rat>{0, 0, 1, 0, -1, 0});

  CHECK(data.p_plus.size() == 16);
  CHECK(data.p_minus.size() == 16);
  std::set<RootVec> plus(data.p_plus.begin(), data.p_plus.end());
  for (const RootVec& a : data.p_minus) {
    RootVec na(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
    CHECK(plus.count(na) == 1);
  }
  CHECK(plus.count(RootVec{1, 1, 2, 2, 1, 1}) == 1);
  CHECK(plus.count(RootVec{1, 1, 1, 2, 2, 1}) == 0);

  // every noncompact root pairs to +-1, every compact root to 0
  for (const RootVec& a : data.noncompact_roots) {
    Rat v = klein4::coweight_pairing(rs, data.z, a);
    CHECK((v == Rat(1) || v == Rat(-1)));
  }
  for (const RootVec& a : data.compact_roots)
    CHECK(klein4::coweight_pairing(rs, data.z, a) == Rat(0));
}

TEST_CASE("compactness split without a hermitian structure") {
  auto data = klein4::noncompact_root_split(e6(), sigma1());
  CHECK_FALSE(data.hermitian);
  CHECK(data.noncompact_roots.size() == 40);
  CHECK(data.beta == e6().roots().highest_root());
  CHECK(data.p_plus.empty());
  CHECK(data.p_minus.empty());
}

TEST_CASE("split on the rank-one algebra") {
  auto a1 = ChevalleyAlgebra::build(CartanType::parse("A1"));
  auto theta = Automorphism::torus(a1, {1});
  auto data = klein4::noncompact_root_split(a1, theta);
  CHECK(data.compact_roots.empty());
  CHECK(data.noncompact_roots.size() == 2);
  CHECK(data.hermitian);
  CHECK(data.beta == RootVec{1});
}

TEST_CASE("degenerate and out-of-scope splits are rejected") {
  CHECK_THROWS_AS(klein4::noncompact_root_split(e6(), Automorphism::torus(e6(), {2, 2, 2, 2, 2, 2})),
                  std::invalid_argument);
  auto w = omega();
  CHECK_THROWS_AS(klein4::noncompact_root_split(e6(), w), std::invalid_argument);
}
