#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include <klein4/casebook.hpp>

using klein4::Automorphism;
using klein4::CaseReport;
using klein4::CaseStudy;
using klein4::CartanType;
using klein4::ChevalleyAlgebra;
using klein4::HolomorphicPair;
using klein4::Identification;
using klein4::RootVec;
using klein4::Verdict;

namespace {

const ChevalleyAlgebra& e6() {
  static const ChevalleyAlgebra alg = ChevalleyAlgebra::build(CartanType::parse("E6"));
  return alg;
}

const ChevalleyAlgebra& a2() {
  static const ChevalleyAlgebra alg = ChevalleyAlgebra::build(CartanType::parse("A2"));
  return alg;
}

const CaseStudy& study() {
  static const CaseStudy cs = klein4::realize_case_study(e6());
  return cs;
}

const CaseReport& report() {
  static const CaseReport rep = klein4::verify_branching_classification(e6());
  return rep;
}

bool mentions(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("the case study realizes the three generators") {
  const CaseStudy& cs = study();
  CHECK(cs.alg == &e6());

  CHECK(cs.x4.fixed_dim() == 46);
  CHECK(cs.x4.inner());
  CHECK(cs.x4 == Automorphism::torus(e6(), klein4::coroot_coweight(e6(), {1, 0, 0, 0, 0, 1})));

  CHECK(cs.x0.fixed_dim() == 52);
  CHECK_FALSE(cs.x0.inner());

  CHECK(cs.x1.fixed_dim() == 38);
  CHECK(cs.x1.inner());
  // the search lands on the flip composed with the transpose involution
  Automorphism flip = Automorphism::diagram(e6(), e6().roots().diagram_involution());
  CHECK(cs.x1 == flip.compose(Automorphism::transpose_involution(e6())));

  CHECK(cs.x0.commutes_with(cs.x1));
  CHECK(cs.x0.commutes_with(cs.x4));
  CHECK(cs.x1.commutes_with(cs.x4));
  CHECK(klein4::joint_fixed_dim({&cs.x0, &cs.x1}) == 24);
  CHECK_NOTHROW(klein4::klein_four_group(cs.x0, cs.x1));

  CHECK(cs.split.beta == RootVec{1, 1, 2, 2, 1, 1});
  CHECK(cs.k_center.dim() == 1);

  REQUIRE(cs.realizations.size() == 3);
  CHECK(cs.realizations[0].name == "x4");
  CHECK(cs.realizations[1].name == "x0");
  CHECK(cs.realizations[2].name == "x1");
  CHECK(cs.realizations[0].generators == std::vector<std::string>{"t[001010]"});
  CHECK(cs.realizations[2].fixed_dim == 38);
  CHECK(cs.realizations[2].inner);
}

TEST_CASE("the case study refuses other algebras") {
  CHECK_THROWS_AS(klein4::realize_case_study(a2()), std::invalid_argument);
}

TEST_CASE("single-involution fixed forms identify as expected") {
  std::vector<Identification> rows = klein4::verify_fixed_form_identifications(study());
  REQUIRE(rows.size() == 3);
  for (const Identification& r : rows) CHECK(r.match);

  CHECK(rows[0].computed == "f4(-20)");
  CHECK(rows[0].dim == 52);
  CHECK(rows[0].compact_dim == 36);
  CHECK(rows[0].signature == -20);
  CHECK(rows[0].maximal_compact == "so(9)");

  CHECK(rows[1].computed == "su(4,2)+su(2)");
  CHECK(rows[1].dim == 38);
  CHECK(rows[1].compact_dim == 22);
  CHECK(rows[1].signature == -6);

  CHECK(rows[2].computed == "sp(2,2)");
  CHECK(rows[2].dim == 36);
  CHECK(rows[2].compact_dim == 20);
  CHECK(rows[2].signature == -4);
  CHECK(rows[2].maximal_compact == "sp(2)+sp(2)");
}

TEST_CASE("the Klein four fixed form identifies and no dimension-37 group exists") {
  std::vector<std::string> scans;
  std::vector<Identification> rows = klein4::verify_klein_pair(study(), &scans);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].match);
  CHECK(rows[0].computed == "sp(2,1)+su(2)");
  CHECK(rows[0].dim == 24);
  CHECK(rows[0].compact_dim == 16);
  CHECK(rows[0].signature == -8);
  CHECK(rows[0].maximal_compact == "so(5)+su(2)+su(2)");

  REQUIRE(scans.size() == 1);
  CHECK(mentions(scans[0], "159 monomial involutions"));
  CHECK(mentions(scans[0], "0 with a joint fixed algebra of dimension 37"));
  CHECK(mentions(scans[0], "scope"));
}

TEST_CASE("holomorphic enumeration finds exactly the four noncompact forms") {
  std::vector<std::string> scope;
  std::vector<HolomorphicPair> hol = klein4::enumerate_holomorphic_pairs(study(), &scope);
  REQUIRE(hol.size() == 4);
  const std::vector<std::string> expected = {"so(8,2)+so(2)", "so*(10)+so(2)", "su(4,2)+su(2)",
                                             "su(5,1)+sl(2,R)"};
  for (std::size_t i = 0; i < hol.size(); ++i) {
    CHECK(hol[i].desc.label == expected[i]);
    CHECK(hol[i].sigma.commutes_with(study().x4));
    CHECK(hol[i].sigma.inner());
    CHECK(klein4::holomorphic_type_check(study().x4, hol[i].sigma, study().k_center));
    CHECK(hol[i].desc.compact_dim < hol[i].desc.dim);
  }
  REQUIRE(scope.size() == 1);
  // every commuting inner involution aligns with the center: 78 candidates
  CHECK(mentions(scope[0], "78 commute with the Cartan involution"));
  CHECK(mentions(scope[0], "78 of those fix the compact center"));
  CHECK(mentions(scope[0], "4 noncompact fixed forms kept"));
}

TEST_CASE("the full report reproduces the case study") {
  const CaseReport& rep = report();
  CHECK(rep.all_match);
  CHECK(mentions(rep.final_verdict, "(e6(-14), so(8,1))"));
  CHECK(mentions(rep.final_verdict, "unique"));

  REQUIRE(rep.realizations.size() == 5);
  CHECK(rep.realizations[3].name == "gamma");
  CHECK(rep.realizations[3].fixed_dim == 24);
  CHECK(rep.realizations[4].name == "gamma-prime");
  CHECK(rep.realizations[4].fixed_dim == 36);
  CHECK(rep.realizations[4].generators.size() == 2);

  REQUIRE(rep.identifications.size() == 5);
  for (const Identification& r : rep.identifications) CHECK(r.match);
  CHECK(rep.identifications[4].subject == "joint fixed form of gamma-prime");
  CHECK(rep.identifications[4].computed == "so(8,1)");
  CHECK(rep.identifications[4].dim == 36);
  CHECK(rep.identifications[4].compact_dim == 28);
  CHECK(rep.identifications[4].signature == -20);
  CHECK(rep.identifications[4].maximal_compact == "so(8)");

  REQUIRE(rep.criteria.size() == 8);
  CHECK(rep.criteria[0].result == Verdict::ADMITS_CANDIDATE);
  CHECK(rep.criteria[1].result == Verdict::ADMITS_CANDIDATE);
  CHECK(rep.criteria[2].result == Verdict::OBSTRUCTED);
  CHECK(rep.criteria[3].result == Verdict::OBSTRUCTED);
  CHECK(rep.criteria[3].subject == "Klein four group <x0, x1>");
  CHECK(rep.criteria[3].rule == "joint-obstruction");
  for (std::size_t i = 4; i < 8; ++i) CHECK(rep.criteria[i].result == Verdict::ADMITS_CANDIDATE);
  CHECK(rep.criteria[7].subject == "Klein four group gamma-prime");

  CHECK(rep.holomorphic_labels == std::vector<std::string>{"so(8,2)+so(2)", "so*(10)+so(2)",
                                                           "su(4,2)+su(2)", "su(5,1)+sl(2,R)"});

  REQUIRE(rep.certificates.size() == 5);
  CHECK(mentions(rep.certificates[0], "joint obstruction for <x0, x1> certified"));
  CHECK(mentions(rep.certificates[0], "(1,1,2,2,1,1)"));
  CHECK(mentions(rep.certificates[1], "every verdict unchanged"));
  CHECK(mentions(rep.certificates[2], "not ad-nilpotent"));
  CHECK(mentions(rep.certificates[2], "Killing square 24"));
  CHECK(mentions(rep.certificates[3], "so*(10)+so(2)"));
  CHECK(mentions(rep.certificates[3], "membership verified"));
  CHECK(mentions(rep.certificates[4], "su(5,1)+sl(2,R)"));
  CHECK(mentions(rep.certificates[4], "membership verified"));

  REQUIRE(rep.scans.size() == 4);
  CHECK(mentions(rep.scans[0], "dimension 37"));
  CHECK(mentions(rep.scans[1], "partner-group search"));
  CHECK(mentions(rep.scans[1], "so(8,1)"));
  CHECK(mentions(rep.scans[2], "zero matches"));
  CHECK(mentions(rep.scans[3], "holomorphic-type scan"));

  REQUIRE(rep.imported.size() == 4);
  for (const auto& f : rep.imported) CHECK(mentions(f.statement, "imported, not recomputed"));
}

TEST_CASE("the report is deterministic") {
  CaseReport again = klein4::verify_branching_classification(e6());
  const CaseReport& rep = report();
  CHECK(again.all_match == rep.all_match);
  CHECK(again.final_verdict == rep.final_verdict);
  CHECK(again.holomorphic_labels == rep.holomorphic_labels);
  CHECK(again.scans == rep.scans);
  CHECK(again.certificates == rep.certificates);
  REQUIRE(again.realizations.size() == rep.realizations.size());
  for (std::size_t i = 0; i < rep.realizations.size(); ++i) {
    CHECK(again.realizations[i].description == rep.realizations[i].description);
    CHECK(again.realizations[i].generators == rep.realizations[i].generators);
  }
  REQUIRE(again.criteria.size() == rep.criteria.size());
  for (std::size_t i = 0; i < rep.criteria.size(); ++i) {
    CHECK(again.criteria[i].subject == rep.criteria[i].subject);
    CHECK(again.criteria[i].result == rep.criteria[i].result);
    CHECK(again.criteria[i].rule == rep.criteria[i].rule);
    CHECK(again.criteria[i].sigma_beta == rep.criteria[i].sigma_beta);
  }
}
