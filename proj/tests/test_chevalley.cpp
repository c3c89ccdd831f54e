#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "klein4/chevalley.hpp"
#include "oracles.hpp"

using klein4::CartanType;
using klein4::ChevalleyAlgebra;
using klein4::Rat;
using klein4::RootVec;
using klein4::Vec;

namespace {

ChevalleyAlgebra build(const std::string& t) {
  return ChevalleyAlgebra::build(CartanType::parse(t));
}

Vec random_sparse(const ChevalleyAlgebra& alg, std::mt19937& rng, int nnz) {
  std::uniform_int_distribution<int> idx(0, alg.dim() - 1);
  std::uniform_int_distribution<int> val(-3, 3);
  Vec v(alg.dim(), Rat(0));
  for (int k = 0; k < nnz; ++k) v[idx(rng)] += Rat(val(rng));
  return v;
}

}  // namespace

TEST_CASE("A1 is the familiar sl2") {
  auto a1 = build("A1");
  CHECK(a1.dim() == 3);
  Vec h(3, Rat(0)), x(3, Rat(0)), y(3, Rat(0));
  h[0] = 1;
  x[a1.pos_index(0)] = 1;
  y[a1.neg_index(0)] = 1;
  CHECK(a1.bracket(h, x) == klein4::vec_scaled(x, Rat(2)));
  CHECK(a1.bracket(h, y) == klein4::vec_scaled(y, Rat(-2)));
  CHECK(a1.bracket(x, y) == h);
}

TEST_CASE("dimensions across the families") {
  CHECK(build("A2").dim() == 8);
  CHECK(build("A5").dim() == 35);
  CHECK(build("B2").dim() == 10);
  CHECK(build("B4").dim() == 36);
  CHECK(build("C2").dim() == 10);
  CHECK(build("C3").dim() == 21);
  CHECK(build("C4").dim() == 36);
  CHECK(build("D4").dim() == 28);
  CHECK(build("D5").dim() == 45);
  CHECK(build("E6").dim() == 78);
  CHECK(build("F4").dim() == 52);
  CHECK(build("G2").dim() == 14);
}

TEST_CASE("construction-time certificates really fire on violations") {
  // certify_jacobi_full on freshly built algebras must pass; the builders for
  // the folded types run their own certificates internally, so reaching here
  // at all is the test for those. run the full sweep on the folded types.
  for (const char* t : {"B2", "B3", "C2", "C3", "C4", "G2", "F4"}) {
    auto alg = build(t);
    CHECK_NOTHROW(alg.certify_jacobi_full());
  }
}

TEST_CASE("structure constants match the root string lengths") {
  // independent re-derivation of |N| = p+1 through the public interface
  for (const char* t : {"E6", "G2", "C3", "F4"}) {
    auto alg = build(t);
    const auto& rs = alg.roots();
    for (int i = alg.rank(); i < alg.dim(); ++i) {
      RootVec a = alg.root_of(i);
      for (int j = alg.rank(); j < alg.dim(); ++j) {
        if (j == i || j == alg.opposite(i)) continue;
        RootVec b = alg.root_of(j);
        RootVec sum(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) sum[k] = a[k] + b[k];
        if (!rs.is_root(sum)) continue;
        int p, q;
        rs.root_string(a, b, p, q);
        const auto& br = alg.bracket_basis(i, j);
        REQUIRE(br.size() == 1);
        CHECK(abs(br[0].second) == Rat(p + 1));
      }
    }
  }
}

TEST_CASE("antisymmetry and the opposite-pair sign rule") {
  auto e6 = build("E6");
  for (int i = 0; i < e6.dim(); ++i)
    for (int j = 0; j < e6.dim(); ++j) {
      auto a = e6.bracket_basis(i, j);
      auto b = e6.bracket_basis(j, i);
      for (auto& e : b) e.second = -e.second;
      CHECK(a == b);
    }
  // N(-a, -b) = -N(a, b)
  int m = e6.num_positive();
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (p == q) continue;
      const auto& ab = e6.bracket_basis(e6.pos_index(p), e6.pos_index(q));
      const auto& nn = e6.bracket_basis(e6.neg_index(p), e6.neg_index(q));
      if (ab.empty()) {
        CHECK(nn.empty());
        continue;
      }
      REQUIRE(nn.size() == ab.size());
      CHECK(nn[0].second == -ab[0].second);
    }
}

TEST_CASE("coroots act like the Cartan matrix says") {
  auto e6 = build("E6");
  // simply laced: coroot coordinates equal root coordinates
  for (int p = 0; p < e6.num_positive(); ++p) {
    Vec h = e6.coroot(p);
    const RootVec& a = e6.roots().positive(p);
    for (int i = 0; i < 6; ++i) CHECK(h[i] == Rat(a[i]));
  }
  // folded: integer coroots, pairing with simples matches the Cartan matrix
  auto f4 = build("F4");
  for (int j = 0; j < f4.rank(); ++j) {
    Vec hj(f4.dim(), Rat(0));
    hj[j] = 1;
    for (int i = 0; i < f4.rank(); ++i) {
      RootVec ai(4, 0);
      ai[i] = 1;
      int idx = f4.index_of_root(ai);
      Vec img = f4.bracket(hj, klein4::sparse_to_dense({{idx, Rat(1)}}, f4.dim()));
      CHECK(img[idx] == Rat(f4.roots().cartan(i, j)));
    }
  }
}

TEST_CASE("Killing form values and structural zeros") {
  auto e6 = build("E6");
  const auto& k = e6.killing();
  // dual Coxeter number 12: kappa(x_a, x_{-a}) = 24
  for (int p = 0; p < e6.num_positive(); ++p)
    CHECK(k.at(e6.pos_index(p), e6.neg_index(p)) == Rat(24));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(k.at(i, j) == Rat(24 * e6.roots().cartan(i, j)));
  // root vectors pair only with their opposites
  for (int i = 6; i < e6.dim(); ++i)
    for (int j = 6; j < e6.dim(); ++j)
      if (j != e6.opposite(i)) CHECK(klein4::is_zero(k.at(i, j)));
  for (int i = 0; i < 6; ++i)
    for (int j = 6; j < e6.dim(); ++j) CHECK(klein4::is_zero(k.at(i, j)));

  auto a2 = build("A2");
  CHECK(a2.killing().at(a2.pos_index(0), a2.neg_index(0)) == Rat(6));
  auto d4 = build("D4");
  CHECK(d4.killing().at(d4.pos_index(0), d4.neg_index(0)) == Rat(12));
}

TEST_CASE("Killing values scale with root length in the folded types") {
  struct Row {
    const char* type;
    int ratio;  // kappa(short pair) / kappa(long pair)
  };
  for (Row row : {Row{"B3", 2}, Row{"C3", 2}, Row{"F4", 2}, Row{"G2", 3}}) {
    auto alg = build(row.type);
    const auto& rs = alg.roots();
    const auto& k = alg.killing();
    // long roots are the ones whose coroot pairing hits -2 or -3 somewhere
    Rat kappa_long(0), kappa_short(0);
    for (int p = 0; p < alg.num_positive(); ++p) {
      int pr, qr;
      bool short_root = false;
      for (int q = 0; q < alg.num_positive(); ++q) {
        if (q == p) continue;
        rs.root_string(rs.positive(p), rs.positive(q), pr, qr);
        (void)pr;
        (void)qr;
        int pair = rs.pairing_with_simple_coroot(rs.positive(q), 0);
        (void)pair;
      }
      // classify by squared length through the string rule: a root is long
      // when no string along it is longer than 2
      int longest = 0;
      for (int q = 0; q < alg.num_positive(); ++q) {
        if (q == p) continue;
        int sp, sq;
        rs.root_string(rs.positive(p), rs.positive(q), sp, sq);
        longest = std::max(longest, sp + sq + 1);
      }
      short_root = longest >= 3;
      Rat v = k.at(alg.pos_index(p), alg.neg_index(p));
      if (short_root) {
        if (klein4::is_zero(kappa_short)) kappa_short = v;
        CHECK(kappa_short == v);
      } else {
        if (klein4::is_zero(kappa_long)) kappa_long = v;
        CHECK(kappa_long == v);
      }
    }
    REQUIRE(!klein4::is_zero(kappa_long));
    REQUIRE(!klein4::is_zero(kappa_short));
    CHECK(kappa_short == kappa_long * Rat(row.ratio));
  }
}

TEST_CASE("Killing form is associative on random elements") {
  std::mt19937 rng(20260817);
  for (const char* t : {"E6", "F4"}) {
    auto alg = build(t);
    for (int trial = 0; trial < 6; ++trial) {
      Vec x = random_sparse(alg, rng, 5);
      Vec y = random_sparse(alg, rng, 5);
      Vec z = random_sparse(alg, rng, 5);
      CHECK(alg.killing_form(alg.bracket(x, y), z) == alg.killing_form(x, alg.bracket(y, z)));
    }
  }
}

TEST_CASE("diagram symmetry extensions square to the identity and fix what they must") {
  auto e6 = build("E6");
  auto perm = e6.roots().diagram_involution();
  auto signs = e6.diagram_signs(perm);
  int fixed = 0;
  for (int p = 0; p < e6.num_positive(); ++p) {
    int ip = e6.permute_positive(perm, p);
    CHECK(signs[p] * signs[ip] == 1);
    if (ip == p) {
      CHECK(signs[p] == 1);
      ++fixed;
    }
  }
  CHECK(fixed == 12);

  auto a5 = build("A5");
  auto aperm = a5.roots().diagram_involution();
  auto asigns = a5.diagram_signs(aperm);
  for (int p = 0; p < a5.num_positive(); ++p)
    CHECK(asigns[p] * asigns[a5.permute_positive(aperm, p)] == 1);
}

TEST_CASE("compact form closes over the rationals with integer constants") {
  for (const char* t : {"A2", "E6"}) {
    auto alg = build(t);
    auto cf = klein4::compact_form(alg);
    CHECK(cf.dim() == alg.dim());
    for (int i = 0; i < cf.dim(); ++i)
      for (int j = 0; j < cf.dim(); ++j)
        for (const auto& e : cf.table[i][j]) CHECK(e.second.get_den() == 1);
    // [t_j, u_p] = alpha(h_j) v_p
    for (int j = 0; j < cf.r; ++j)
      for (int p = 0; p < cf.m; ++p) {
        const auto& br = cf.table[cf.t_index(j)][cf.u_index(p)];
        int pair = alg.roots().pairing_with_simple_coroot(alg.roots().positive(p), j);
        if (pair == 0) {
          CHECK(br.empty());
        } else {
          REQUIRE(br.size() == 1);
          CHECK(br[0].first == cf.v_index(p));
          CHECK(br[0].second == Rat(pair));
        }
      }
  }
}

TEST_CASE("compact Killing form is negative definite") {
  for (const char* t : {"A2", "G2", "E6"}) {
    auto alg = build(t);
    auto cf = klein4::compact_form(alg);
    std::size_t pos = 0, neg = 0, zero = 0;
    klein4::RatMatrix k = cf.killing;
    k.symmetric_signature(pos, neg, zero);
    CHECK(pos == 0);
    CHECK(zero == 0);
    CHECK(neg == std::size_t(alg.dim()));
  }
}

TEST_CASE("complexified bracket agrees with the real bracket on real vectors") {
  auto a2 = build("A2");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Vec x = random_sparse(a2, rng, 4);
    Vec y = random_sparse(a2, rng, 4);
    auto cb = klein4::cbracket(a2, klein4::cvec_real(x), klein4::cvec_real(y));
    CHECK(cb.re == a2.bracket(x, y));
    CHECK(klein4::vec_is_zero(cb.im));
  }
  // i*x bracket i*y = -[x,y]
  Vec x = random_sparse(a2, rng, 4);
  Vec y = random_sparse(a2, rng, 4);
  klein4::CVec ix{Vec(a2.dim(), Rat(0)), x}, iy{Vec(a2.dim(), Rat(0)), y};
  auto cb = klein4::cbracket(a2, ix, iy);
  CHECK(cb.re == klein4::vec_scaled(a2.bracket(x, y), Rat(-1)));
  CHECK(klein4::vec_is_zero(cb.im));
}

TEST_CASE("constants table is deterministic and plausibly sized") {
  auto a2 = build("A2");
  std::string t1 = a2.constants_table();
  std::string t2 = a2.constants_table();
  CHECK(t1 == t2);
  int lines = 0;
  for (char c : t1)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 6);  // header + one line per nonzero root-pair constant
}

TEST_CASE("nilpotency of ad for basis vectors, against the trace oracle") {
  auto e6 = build("E6");
  // root vectors are ad-nilpotent, Cartan elements are not
  for (int idx : {6, 10, 40, 77, 0}) {
    Vec v(e6.dim(), Rat(0));
    v[idx] = 1;
    auto m = e6.ad(v);
    bool nil = klein4::is_nilpotent(m);
    CHECK(nil == oracle::nilpotent_by_traces(m));
    CHECK(nil == (idx >= 6));
  }
}
