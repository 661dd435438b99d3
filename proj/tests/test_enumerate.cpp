#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace dimonoid;
using dimonoid::testing::all_permutations;
using dimonoid::testing::table;

namespace {

  std::size_t factorial(std::size_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  // Dedup by pairwise isomorphism tests, independent of canonical keys.
  std::size_t pairwise_classes(std::vector<DiStructure> const& labeled) {
    std::vector<DiStructure const*> reps;
    for (auto const& d : labeled) {
      bool found = false;
      for (auto const* r : reps) {
        if (are_isomorphic(d, *r)) {
          found = true;
          break;
        }
      }
      if (!found) {
        reps.push_back(&d);
      }
    }
    return reps.size();
  }

  bool brute_associative(OpTable const& t) {
    std::size_t const n = t.order();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (t(t(x, y), z) != t(x, t(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("labeled associative tables") {
  CHECK(enumerate_associative_tables(1).size() == 1);
  CHECK(enumerate_associative_tables(2).size() == 8);
  CHECK(enumerate_associative_tables(3).size() == 113);
  CHECK(enumerate_associative_tables(4).size() == 3492);
}

TEST_CASE("order 2 matches a scan of all 16 tables, in lexicographic order") {
  std::vector<OpTable> brute;
  for (unsigned code = 0; code < 16; ++code) {
    auto const t = table(2, {static_cast<Element>(code >> 3 & 1), static_cast<Element>(code >> 2 & 1),
                             static_cast<Element>(code >> 1 & 1), static_cast<Element>(code & 1)});
    if (brute_associative(t)) {
      brute.push_back(t);
    }
  }
  CHECK(enumerate_associative_tables(2) == brute);
}

TEST_CASE("order 3 tables are associative, distinct and sorted") {
  auto const tables = enumerate_associative_tables(3);
  for (std::size_t i = 0; i < tables.size(); ++i) {
    CHECK(brute_associative(tables[i]));
    if (i > 0) {
      CHECK(tables[i - 1] < tables[i]);
    }
  }
}

TEST_CASE("order limits") {
  CHECK_THROWS_AS(enumerate_associative_tables(0), RangeError);
  CHECK_THROWS_AS(enumerate_associative_tables(5), RangeError);
  CHECK_THROWS_AS(enumerate_dimonoids(5), RangeError);
  try {
    enumerate_semigroups(6);
    FAIL("expected a range error");
  } catch (RangeError const& e) {
    CHECK(std::string(e.what()).find("limit of 4") != std::string::npos);
  }
}

TEST_CASE("semigroup classes") {
  auto const s2 = enumerate_semigroups(2);
  CHECK(s2.labeled_count == 8);
  CHECK(s2.class_reps.size() == 5);
  auto const s3 = enumerate_semigroups(3);
  CHECK(s3.labeled_count == 113);
  CHECK(s3.class_reps.size() == 24);
  std::size_t commutative = 0;
  for (auto const& cls : s3.class_reps) {
    commutative += is_commutative(cls.rep.left());
  }
  CHECK(commutative == 12);
  CHECK(enumerate_semigroups(4).class_reps.size() == 188);
}

TEST_CASE("dimonoid and doppelsemigroup class counts") {
  auto const d2 = enumerate_dimonoids(2);
  CHECK(d2.class_reps.size() == 8);
  CHECK(d2.labeled_count == 13);
  auto const d3 = enumerate_dimonoids(3);
  CHECK(d3.labeled_count == 267);
  CHECK(d3.class_reps.size() == 52);
  CHECK(d3.class_reps.size() >= 45);
  auto const p2 = enumerate_doppelsemigroups(2);
  CHECK(p2.class_reps.size() == 8);
  auto const p3 = enumerate_doppelsemigroups(3);
  CHECK(p3.labeled_count == 413);
  CHECK(p3.class_reps.size() == 77);
  std::size_t trivial2 = 0;
  for (auto const& cls : p2.class_reps) {
    trivial2 += cls.rep.left() == cls.rep.right();
  }
  CHECK(trivial2 == 5);
}

TEST_CASE("order 4 counts") {
  auto const d4 = enumerate_dimonoids(4);
  CHECK(d4.labeled_count == 15277);
  CHECK(d4.class_reps.size() == 734);
  auto const p4 = enumerate_doppelsemigroups(4);
  CHECK(p4.labeled_count == 26028);
  CHECK(p4.class_reps.size() == 1217);
}

TEST_CASE("commutative dimonoids are doppelsemigroups") {
  auto const dop = enumerate_doppelsemigroups(3);
  std::set<std::vector<Element>> keys;
  for (auto const& cls : dop.class_reps) {
    keys.insert(cls.key.key);
  }
  for (auto const& cls : enumerate_dimonoids(3).class_reps) {
    if (dimonoid_profile(cls.rep).commutative) {
      CHECK(keys.count(cls.key.key) == 1);
    }
  }
}

TEST_CASE("class lists are sorted, distinct and valid") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto kind : {StructureKind::Semigroup, StructureKind::Dimonoid,
                      StructureKind::Doppelsemigroup}) {
      auto const r = enumerate(n, kind);
      CHECK(r.order == n);
      CHECK(r.kind == kind);
      CHECK(r.labeled_count >= r.class_reps.size());
      for (std::size_t i = 0; i < r.class_reps.size(); ++i) {
        auto const& cls = r.class_reps[i];
        if (i > 0) {
          CHECK(r.class_reps[i - 1].key.key < cls.key.key);
        }
        CHECK(canonical_form(cls.rep).key == cls.key.key);
        switch (kind) {
          case StructureKind::Semigroup: CHECK(cls.rep.left() == cls.rep.right()); break;
          case StructureKind::Dimonoid: CHECK(is_dimonoid(cls.rep)); break;
          case StructureKind::Doppelsemigroup: CHECK(is_doppelsemigroup(cls.rep)); break;
        }
      }
    }
  }
}

TEST_CASE("labeled counts follow orbit-stabilizer") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto kind : {StructureKind::Semigroup, StructureKind::Dimonoid,
                      StructureKind::Doppelsemigroup}) {
      auto const  r   = enumerate(n, kind);
      std::size_t sum = 0;
      for (auto const& cls : r.class_reps) {
        sum += factorial(n) / automorphisms(cls.rep).size();
      }
      CHECK(sum == r.labeled_count);
      CHECK(labeled_structures(n, kind).size() == r.labeled_count);
    }
  }
}

TEST_CASE("key dedup agrees with pairwise isomorphism dedup") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto kind : {StructureKind::Semigroup, StructureKind::Dimonoid,
                      StructureKind::Doppelsemigroup}) {
      auto const labeled = labeled_structures(n, kind);
      CHECK(pairwise_classes(labeled) == enumerate(n, kind).class_reps.size());
    }
  }
}

TEST_CASE("class representatives are pairwise non-isomorphic") {
  auto const reps = enumerate_dimonoids(3).class_reps;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      CHECK_FALSE(are_isomorphic(reps[i].rep, reps[j].rep));
    }
  }
}

TEST_CASE("dimonoid classes are closed under duality") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const r = enumerate_dimonoids(n);
    std::set<std::vector<Element>> keys;
    for (auto const& cls : r.class_reps) {
      keys.insert(cls.key.key);
    }
    for (auto const& cls : r.class_reps) {
      CHECK(keys.count(canonical_form(dual_dimonoid(cls.rep)).key) == 1);
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  for (auto kind : {StructureKind::Semigroup, StructureKind::Dimonoid,
                    StructureKind::Doppelsemigroup}) {
    auto const one = to_json_lines(enumerate(3, kind, 1));
    for (std::size_t workers : {2, 3, 8}) {
      auto const many = enumerate(3, kind, workers);
      CHECK(to_json_lines(many) == one);
    }
  }
  CHECK(to_json_lines(enumerate_dimonoids(4, 4)) == to_json_lines(enumerate_dimonoids(4, 1)));
}

TEST_CASE("JSON lines and summary") {
  auto const r     = enumerate_dimonoids(2);
  auto const lines = to_json_lines(r);
  std::size_t count = 0;
  std::size_t start = 0;
  while (start < lines.size()) {
    auto const end  = lines.find('\n', start);
    auto const line = nlohmann::json::parse(lines.substr(start, end - start));
    CHECK(line["kind"] == "dimonoid");
    CHECK(line["order"] == 2);
    CHECK(line["key"].get<std::string>() == r.class_reps[count].key.hex());
    auto const d = distructure_from_json(line);
    CHECK(d == r.class_reps[count].rep);
    ++count;
    start = end + 1;
  }
  CHECK(count == 8);
  auto const s = summary_json(r);
  CHECK(s["classes"] == 8);
  CHECK(s["labeled_count"] == 13);
  CHECK(parse_kind("doppelsemigroup") == StructureKind::Doppelsemigroup);
  CHECK_THROWS_AS(parse_kind("monoid"), ParameterError);
}
