#include <algorithm>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dimonoid;
using dimonoid::testing::table;

namespace {

  OpTable sg(std::string_view name) {
    return build_semigroup(name);
  }

  bool contains(std::vector<Element> const& v, Element e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  }

  bool has_left_identity(OpTable const& t) {
    for (std::size_t e = 0; e < t.order(); ++e) {
      if (is_left_identity(t, static_cast<Element>(e))) {
        return true;
      }
    }
    return false;
  }

  bool has_right_identity(OpTable const& t) {
    for (std::size_t e = 0; e < t.order(); ++e) {
      if (is_right_identity(t, static_cast<Element>(e))) {
        return true;
      }
    }
    return false;
  }

  std::vector<Element> left_zeros(OpTable const& t) {
    std::vector<Element> out;
    for (std::size_t e = 0; e < t.order(); ++e) {
      if (is_left_zero(t, static_cast<Element>(e))) {
        out.push_back(static_cast<Element>(e));
      }
    }
    return out;
  }

  std::vector<Element> right_zeros(OpTable const& t) {
    std::vector<Element> out;
    for (std::size_t e = 0; e < t.order(); ++e) {
      if (is_right_zero(t, static_cast<Element>(e))) {
        out.push_back(static_cast<Element>(e));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("associativity examples") {
  CHECK(is_associative(table(3, {0, 1, 2, 1, 2, 0, 2, 0, 1})).holds());
  CHECK(is_associative(OpTable::from_function(3, [](std::size_t x, std::size_t) { return x; }))
            .holds());
  auto const nor = is_associative(table(2, {1, 0, 0, 0}));
  REQUIRE_FALSE(nor.holds());
  CHECK(*nor.witness == Triple{0, 0, 1});
}

TEST_CASE("dimonoid checks") {
  SECTION("(LO_2, RO_2) is a dimonoid") {
    CHECK(is_dimonoid(DiStructure(sg("LO2"), sg("RO2"))));
  }
  SECTION("(O_3, O_3^2) fails D3 at (0,0,0)") {
    auto const v = check_dimonoid(DiStructure(sg("O3"), sg("O(3,2)")));
    CHECK_FALSE(v.passed());
    REQUIRE(v.first_failed() == Axiom::D3);
    CHECK(*v.d3->witness == Triple{0, 0, 0});
    CHECK(v.d1->holds());
    CHECK(v.d2->holds());
    CHECK_FALSE(v.d4.has_value());
  }
  SECTION("(M_{3,1}, O_3) is a dimonoid") {
    CHECK(is_dimonoid(DiStructure(sg("M(3,1)"), sg("O3"))));
  }
  SECTION("mismatched axiom inputs") {
    CHECK_THROWS_AS(check_axiom(Axiom::D1, table(1, {0}), table(2, {0, 0, 0, 0})),
                    DimensionError);
  }
}

TEST_CASE("doppelsemigroup checks") {
  SECTION("(O_3, O_3^2) is a doppelsemigroup") {
    auto const v = check_doppelsemigroup(DiStructure(sg("O3"), sg("O(3,2)")));
    CHECK(v.passed());
    CHECK_FALSE(v.d1.has_value());
    CHECK_FALSE(v.d3.has_value());
  }
  SECTION("(M_{2,2}, C_2^{~1}) is a doppelsemigroup and not a dimonoid") {
    auto const d = build_dimonoid("M(2,2)|C2~1@[2 1 0]", PairMode::Doppelsemigroup);
    CHECK(is_doppelsemigroup(d));
    CHECK_FALSE(is_dimonoid(d));
  }
}

TEST_CASE("verdict flags and witnesses agree") {
  auto const tables = enumerate_associative_tables(2);
  for (auto const& l : tables) {
    for (auto const& r : tables) {
      DiStructure const d(l, r);
      for (auto mode : {CheckMode::Dimonoid, CheckMode::Doppelsemigroup}) {
        auto const v = check(d, mode);
        bool       all = true;
        for (Axiom a : {Axiom::LeftAssociative, Axiom::RightAssociative, Axiom::D1, Axiom::D2,
                        Axiom::D3, Axiom::D4}) {
          if (auto const res = v.result(a)) {
            CHECK(res->holds() == !res->witness.has_value());
            CHECK(res->holds() == check_axiom(a, d).holds());
            all = all && res->holds();
          }
        }
        CHECK(v.passed() == all);
        CHECK(v.first_failed().has_value() == !all);
      }
    }
  }
}

TEST_CASE("trivial pairs of all associative tables pass both modes") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& t : enumerate_associative_tables(n)) {
      CHECK(is_dimonoid(DiStructure(t, t)));
      CHECK(is_doppelsemigroup(DiStructure(t, t)));
    }
  }
}

TEST_CASE("semigroup profile examples") {
  SECTION("LO_3") {
    auto const p = semigroup_profile(sg("LO3"));
    REQUIRE(p);
    CHECK(p->right_commutative);
    CHECK(p->band);
    CHECK(p->left_zeros == std::vector<Element>{0, 1, 2});
    CHECK_FALSE(p->zero);
  }
  SECTION("RO_{2<-3} is not right commutative") {
    auto const p = semigroup_profile(sg("RO(2<-3)"));
    REQUIRE(p);
    CHECK_FALSE(p->right_commutative);
  }
  SECTION("M_{3,1}") {
    auto const p = semigroup_profile(sg("M(3,1)"));
    REQUIRE(p);
    REQUIRE(p->monogenic);
    CHECK(*p->monogenic == Monogenic{3, 1});
    CHECK(p->zero == Element{2});
  }
  SECTION("L_3") {
    auto const p = semigroup_profile(sg("L3"));
    REQUIRE(p);
    CHECK(p->semilattice);
    CHECK(p->identity == Element{2});
    CHECK(p->zero == Element{0});
  }
  SECTION("C_3 is monogenic with index 1 and period 3") {
    auto const p = semigroup_profile(sg("C3"));
    REQUIRE(p);
    CHECK(*p->monogenic == Monogenic{1, 3});
    CHECK(p->identity == Element{0});
  }
  SECTION("non-associative input is refused") {
    CHECK_FALSE(semigroup_profile(table(2, {1, 0, 0, 0})));
  }
}

TEST_CASE("semigroup profile invariants over all tables of order at most 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& t : enumerate_associative_tables(n)) {
      auto const p = semigroup_profile(t);
      REQUIRE(p);
      bool two_sided_identity = false;
      for (Element e : p->left_identities) {
        two_sided_identity = two_sided_identity || contains(p->right_identities, e);
      }
      CHECK(p->identity.has_value() == two_sided_identity);
      bool two_sided_zero = false;
      for (Element e : p->left_zeros) {
        two_sided_zero = two_sided_zero || contains(p->right_zeros, e);
      }
      CHECK(p->zero.has_value() == two_sided_zero);
      if (p->semilattice) {
        CHECK(p->band);
        CHECK(p->commutative);
      }
      if (p->monogenic) {
        CHECK(p->monogenic->index + p->monogenic->period - 1 == n);
      }
    }
  }
}

TEST_CASE("dimonoid profile examples") {
  auto const lo_ro = dimonoid_profile(DiStructure(sg("LO2"), sg("RO2")));
  CHECK(lo_ro.abelian);
  CHECK_FALSE(lo_ro.commutative);
  CHECK_FALSE(lo_ro.trivial);

  auto const o2 = dimonoid_profile(DiStructure(sg("O2"), sg("O2")));
  CHECK(o2.trivial);
  CHECK(o2.commutative);
  CHECK(o2.abelian);

  auto const lo_o = dimonoid_profile(DiStructure(sg("LO2"), sg("O2")));
  CHECK_FALSE(lo_o.abelian);
  CHECK_FALSE(lo_o.commutative);
}

TEST_CASE("dimonoid propositions hold on every labeled dimonoid") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& d : labeled_structures(n, StructureKind::Dimonoid)) {
      OpTable const& l = d.left();
      OpTable const& r = d.right();
      for (Element z : left_zeros(r)) {
        CHECK(is_left_zero(l, z));
      }
      for (Element z : right_zeros(l)) {
        CHECK(is_right_zero(r, z));
      }
      if (has_left_identity(l) || has_right_identity(r)) {
        CHECK(l == r);
      }
      if (is_right_zero_semigroup(l) || is_left_zero_semigroup(r)) {
        CHECK(l == r);
      }
      auto const profile = dimonoid_profile(d);
      if (profile.commutative) {
        CHECK(zero_of(l) == zero_of(r));
        CHECK(is_doppelsemigroup(d));
      }
      if (semigroup_profile(l)->semilattice) {
        CHECK(l == r);
      }
      if (profile.trivial && is_commutative(l)) {
        CHECK(profile.abelian);
      }
    }
  }
}

TEST_CASE("(t, dual t) is a dimonoid exactly when t is right commutative") {
  auto const tables = enumerate_associative_tables(3);
  REQUIRE(tables.size() == 113);
  std::size_t right_commutative = 0;
  for (auto const& t : tables) {
    bool const rc = semigroup_profile(t)->right_commutative;
    right_commutative += rc;
    CHECK(is_dimonoid(DiStructure(t, transpose(t))) == rc);
  }
  CHECK(right_commutative > 0);
  CHECK(right_commutative < tables.size());
}

TEST_CASE("null-coordinate criteria on every labeled doppelsemigroup") {
  std::size_t left_null = 0;
  std::size_t right_null = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& d : labeled_structures(n, StructureKind::Doppelsemigroup)) {
      if (auto const z = null_zero(d.left())) {
        ++left_null;
        CHECK(is_dimonoid(d) == (triple_products(d.right()) == std::vector<Element>{*z}));
      }
      if (auto const z = null_zero(d.right())) {
        ++right_null;
        CHECK(is_dimonoid(d) == (triple_products(d.left()) == std::vector<Element>{*z}));
      }
    }
  }
  CHECK(left_null > 0);
  CHECK(right_null > 0);
}

TEST_CASE("JSON output") {
  auto const v = check_dimonoid(DiStructure(sg("O3"), sg("O(3,2)")));
  auto const j = to_json(v);
  CHECK(j["passed"] == false);
  CHECK(j["d3"] == false);
  CHECK(j["d4"].is_null());
  CHECK(j["first_failure"]["d3"] == nlohmann::json::parse("[0,0,0]"));
  auto const p = to_json(*semigroup_profile(sg("M(3,1)")));
  CHECK(p["monogenic"]["index"] == 3);
  CHECK(p["zero"] == 2);
}
