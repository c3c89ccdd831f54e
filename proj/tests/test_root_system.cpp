#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "klein4/root_system.hpp"
#include "oracles.hpp"

using klein4::CartanType;
using klein4::RootSystem;
using klein4::RootVec;

TEST_CASE("type parsing accepts the simple types and rejects the rest") {
  CHECK(CartanType::parse("E6").str() == "E6");
  CHECK(CartanType::parse("a1").rank == 1);
  CHECK(CartanType::parse("G2").series == 'G');
  CHECK_THROWS(CartanType::parse("E9"));
  CHECK_THROWS(CartanType::parse("D3"));
  CHECK_THROWS(CartanType::parse("B1"));
  CHECK_THROWS(CartanType::parse("F5"));
  CHECK_THROWS(CartanType::parse("H4"));
  CHECK_THROWS(CartanType::parse("A0"));
  CHECK_THROWS(CartanType::parse("Ax"));
}

TEST_CASE("positive root counts match the classical formulas") {
  auto count = [](const std::string& t) {
    return RootSystem(CartanType::parse(t)).num_positive();
  };
  CHECK(count("A1") == 1);
  CHECK(count("A2") == 3);
  CHECK(count("A5") == 15);
  CHECK(count("B2") == 4);
  CHECK(count("B3") == 9);
  CHECK(count("B4") == 16);
  CHECK(count("C3") == 9);
  CHECK(count("C4") == 16);
  CHECK(count("D4") == 12);
  CHECK(count("D5") == 20);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
  CHECK(count("F4") == 24);
  CHECK(count("G2") == 6);
}

TEST_CASE("enumerated roots agree with the reflection-closure oracle") {
  for (const char* t : {"A1", "A3", "A5", "B2", "B4", "C3", "C4", "D4",
                        "D5", "E6", "E7", "F4", "G2"}) {
    RootSystem rs(CartanType::parse(t));
    auto orbit = oracle::roots_by_reflection_closure(rs);
    CHECK(int(orbit.size()) == rs.num_roots());
    std::set<RootVec> mine;
    for (const auto& a : rs.positives()) {
      mine.insert(a);
      RootVec neg(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
      mine.insert(neg);
    }
    CHECK(mine == orbit);
  }
}

TEST_CASE("highest roots and heights") {
  RootSystem e6(CartanType::parse("E6"));
  CHECK(e6.highest_root() == RootVec{1, 2, 2, 3, 2, 1});
  CHECK(e6.max_height() == 11);

  RootSystem g2(CartanType::parse("G2"));
  CHECK(g2.highest_root() == RootVec{3, 2});

  RootSystem f4(CartanType::parse("F4"));
  CHECK(f4.highest_root() == RootVec{2, 3, 4, 2});

  RootSystem d5(CartanType::parse("D5"));
  CHECK(d5.highest_root() == RootVec{1, 2, 2, 1, 1});

  RootSystem a1(CartanType::parse("A1"));
  CHECK(a1.highest_root() == RootVec{1});
}

TEST_CASE("ordering is by height then lexicographic, negatives are mirrored") {
  RootSystem rs(CartanType::parse("E6"));
  for (int i = 0; i + 1 < rs.num_positive(); ++i) {
    const auto& a = rs.positive(i);
    const auto& b = rs.positive(i + 1);
    int ha = RootSystem::height(a), hb = RootSystem::height(b);
    CHECK(ha <= hb);
    if (ha == hb) CHECK(a < b);
  }
  // index lookup is consistent
  for (int i = 0; i < rs.num_positive(); ++i)
    CHECK(rs.positive_index(rs.positive(i)) == i);
}

TEST_CASE("root strings and coroot pairings satisfy p - q = pairing") {
  for (const char* t : {"A2", "B2", "C3", "G2", "F4", "E6"}) {
    RootSystem rs(CartanType::parse(t));
    int n = rs.rank();
    for (int j = 0; j < n; ++j) {
      RootVec alpha(n, 0);
      alpha[j] = 1;
      for (const auto& b : rs.positives()) {
        if (b == alpha) continue;
        int p, q;
        rs.root_string(alpha, b, p, q);
        CHECK(p - q == rs.pairing_with_simple_coroot(b, j));
        CHECK(p <= 3);
        CHECK(q <= 3);
      }
    }
  }
}

TEST_CASE("reflection by a simple root permutes the other positives") {
  RootSystem rs(CartanType::parse("E6"));
  for (int j = 0; j < rs.rank(); ++j) {
    std::set<RootVec> image;
    for (const auto& a : rs.positives()) {
      RootVec r = rs.reflect_simple(a, j);
      bool neg = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
      if (neg) {
        // only alpha_j itself goes negative
        RootVec alpha(rs.rank(), 0);
        alpha[j] = 1;
        CHECK(a == alpha);
      } else {
        CHECK(rs.positive_index(r) >= 0);
        image.insert(r);
      }
    }
    CHECK(int(image.size()) == rs.num_positive() - 1);
  }
}

TEST_CASE("diagram involutions") {
  RootSystem e6(CartanType::parse("E6"));
  CHECK(e6.diagram_involution() == std::vector<int>{5, 1, 4, 3, 2, 0});

  RootSystem a5(CartanType::parse("A5"));
  CHECK(a5.diagram_involution() == std::vector<int>{4, 3, 2, 1, 0});

  RootSystem d5(CartanType::parse("D5"));
  CHECK(d5.diagram_involution() == std::vector<int>{0, 1, 2, 4, 3});

  RootSystem f4(CartanType::parse("F4"));
  std::vector<int> id{0, 1, 2, 3};
  CHECK(f4.diagram_involution() == id);

  // the involution permutes the root set
  for (const char* t : {"E6", "A5", "D4"}) {
    RootSystem rs(CartanType::parse(t));
    auto perm = rs.diagram_involution();
    for (const auto& a : rs.positives()) {
      RootVec im(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) im[perm[i]] = a[i];
      CHECK(rs.positive_index(im) >= 0);
    }
  }
}

TEST_CASE("non simply laced Cartan matrices have the asymmetric entries in the right place") {
  RootSystem b3(CartanType::parse("B3"));
  CHECK(b3.cartan(1, 2) == -2);
  CHECK(b3.cartan(2, 1) == -1);

  RootSystem c3(CartanType::parse("C3"));
  CHECK(c3.cartan(2, 1) == -2);
  CHECK(c3.cartan(1, 2) == -1);

  RootSystem f4(CartanType::parse("F4"));
  CHECK(f4.cartan(1, 2) == -2);
  CHECK(f4.cartan(2, 1) == -1);

  RootSystem g2(CartanType::parse("G2"));
  CHECK(g2.cartan(0, 1) == -1);
  CHECK(g2.cartan(1, 0) == -3);
}
