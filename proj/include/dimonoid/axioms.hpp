#pragma once

// Axiom checks for semigroups, dimonoids and doppelsemigroups, and the
// element roles (identities, zeros, idempotents, ...) used when reasoning
// about them.
//
// With ⊣ the left table L and ⊢ the right table R, the axioms are
//   D1: (x ⊣ y) ⊣ z = x ⊣ (y ⊢ z)
//   D2: (x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)
//   D3: (x ⊣ y) ⊢ z = x ⊢ (y ⊢ z)
//   D4: (x ⊣ y) ⊢ z = x ⊣ (y ⊢ z)
// A dimonoid satisfies associativity of L and R plus D1, D2, D3; a
// doppelsemigroup satisfies associativity plus D2 and D4.

#include <cstddef>   // for std::size_t
#include <optional>  // for std::optional
#include <stdexcept>  // for std::logic_error
#include <string>    // for std::string
#include <vector>    // for std::vector

#include <json.hpp>

#include "tables.hpp"

namespace dimonoid {

  struct Triple {
    Element x;
    Element y;
    Element z;

    friend bool operator==(Triple const&, Triple const&) = default;
  };

  enum class Axiom { LeftAssociative, RightAssociative, D1, D2, D3, D4 };

  inline char const* axiom_name(Axiom a) noexcept {
    switch (a) {
      case Axiom::LeftAssociative: return "left_associative";
      case Axiom::RightAssociative: return "right_associative";
      case Axiom::D1: return "d1";
      case Axiom::D2: return "d2";
      case Axiom::D3: return "d3";
      case Axiom::D4: return "d4";
    }
    return "?";
  }

  // Outcome of one exhaustive triple scan. holds is false exactly when a
  // witness is recorded; the witness is the lexicographically first
  // failing (x, y, z).
  struct AxiomResult {
    std::optional<Triple> witness;

    bool holds() const noexcept {
      return !witness.has_value();
    }
  };

  namespace detail {
    // Evaluates both sides of an axiom on tables `l` (⊣) and `r` (⊢).
    inline std::pair<Element, Element> axiom_sides(Axiom a, OpTable const& l, OpTable const& r,
                                                   std::size_t x, std::size_t y, std::size_t z) {
      switch (a) {
        case Axiom::LeftAssociative: return {l(l(x, y), z), l(x, l(y, z))};
        case Axiom::RightAssociative: return {r(r(x, y), z), r(x, r(y, z))};
        case Axiom::D1: return {l(l(x, y), z), l(x, r(y, z))};
        case Axiom::D2: return {l(r(x, y), z), r(x, l(y, z))};
        case Axiom::D3: return {r(l(x, y), z), r(x, r(y, z))};
        case Axiom::D4: return {r(l(x, y), z), l(x, r(y, z))};
      }
      return {0, 0};
    }
  }  // namespace detail

  // Scans all n^3 triples in lexicographic order, stopping at the first
  // failure.
  inline AxiomResult check_axiom(Axiom a, OpTable const& l, OpTable const& r) {
    if (l.order() != r.order()) {
      throw DimensionError("axiom check on tables of different orders");
    }
    std::size_t const n = l.order();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          auto const [lhs, rhs] = detail::axiom_sides(a, l, r, x, y, z);
          if (lhs != rhs) {
            return {Triple{static_cast<Element>(x), static_cast<Element>(y),
                           static_cast<Element>(z)}};
          }
        }
      }
    }
    return {};
  }

  inline AxiomResult check_axiom(Axiom a, DiStructure const& d) {
    return check_axiom(a, d.left(), d.right());
  }

  inline AxiomResult is_associative(OpTable const& t) {
    return check_axiom(Axiom::LeftAssociative, t, t);
  }

  enum class CheckMode { Dimonoid, Doppelsemigroup };

  // Verdict of a dimonoid-mode or doppel-mode check. Axioms outside the
  // mode (D4 for dimonoids; D1, D3 for doppelsemigroups) are not evaluated
  // and stay empty.
  struct AxiomVerdict {
    CheckMode                  mode;
    AxiomResult                left_associative;
    AxiomResult                right_associative;
    std::optional<AxiomResult> d1;
    std::optional<AxiomResult> d2;
    std::optional<AxiomResult> d3;
    std::optional<AxiomResult> d4;

    // Empty when `a` is not evaluated in this mode.
    std::optional<AxiomResult> result(Axiom a) const {
      switch (a) {
        case Axiom::LeftAssociative: return left_associative;
        case Axiom::RightAssociative: return right_associative;
        case Axiom::D1: return d1;
        case Axiom::D2: return d2;
        case Axiom::D3: return d3;
        case Axiom::D4: return d4;
      }
      return d1;
    }

    bool passed() const noexcept {
      auto ok = [](std::optional<AxiomResult> const& r) { return !r || r->holds(); };
      return left_associative.holds() && right_associative.holds() && ok(d1) && ok(d2) && ok(d3)
             && ok(d4);
    }

    // First failed axiom in the order L-assoc, R-assoc, D1, D2, D3, D4.
    std::optional<Axiom> first_failed() const noexcept {
      if (!left_associative.holds()) {
        return Axiom::LeftAssociative;
      }
      if (!right_associative.holds()) {
        return Axiom::RightAssociative;
      }
      for (Axiom a : {Axiom::D1, Axiom::D2, Axiom::D3, Axiom::D4}) {
        auto const r = result(a);
        if (r && !r->holds()) {
          return a;
        }
      }
      return std::nullopt;
    }
  };

  inline AxiomVerdict check_dimonoid(DiStructure const& d) {
    return {CheckMode::Dimonoid,
            check_axiom(Axiom::LeftAssociative, d),
            check_axiom(Axiom::RightAssociative, d),
            check_axiom(Axiom::D1, d),
            check_axiom(Axiom::D2, d),
            check_axiom(Axiom::D3, d),
            std::nullopt};
  }

  inline AxiomVerdict check_doppelsemigroup(DiStructure const& d) {
    return {CheckMode::Doppelsemigroup,
            check_axiom(Axiom::LeftAssociative, d),
            check_axiom(Axiom::RightAssociative, d),
            std::nullopt,
            check_axiom(Axiom::D2, d),
            std::nullopt,
            check_axiom(Axiom::D4, d)};
  }

  inline AxiomVerdict check(DiStructure const& d, CheckMode mode) {
    return mode == CheckMode::Dimonoid ? check_dimonoid(d) : check_doppelsemigroup(d);
  }

  inline bool is_dimonoid(DiStructure const& d) {
    return check_dimonoid(d).passed();
  }

  inline bool is_doppelsemigroup(DiStructure const& d) {
    return check_doppelsemigroup(d).passed();
  }

  struct Monogenic {
    std::size_t index;
    std::size_t period;

    friend bool operator==(Monogenic const&, Monogenic const&) = default;
  };

  struct SemigroupProfile {
    bool                     commutative;
    bool                     band;
    bool                     semilattice;
    bool                     right_commutative;
    std::vector<Element>     idempotents;
    std::vector<Element>     left_identities;
    std::vector<Element>     right_identities;
    std::optional<Element>   identity;
    std::vector<Element>     left_zeros;
    std::vector<Element>     right_zeros;
    std::optional<Element>   zero;
    std::optional<Monogenic> monogenic;
  };

  inline bool is_left_identity(OpTable const& t, Element e) noexcept {
    for (std::size_t a = 0; a < t.order(); ++a) {
      if (t(e, a) != a) {
        return false;
      }
    }
    return true;
  }

  inline bool is_right_identity(OpTable const& t, Element e) noexcept {
    for (std::size_t a = 0; a < t.order(); ++a) {
      if (t(a, e) != a) {
        return false;
      }
    }
    return true;
  }

  inline bool is_left_zero(OpTable const& t, Element z) noexcept {
    for (std::size_t a = 0; a < t.order(); ++a) {
      if (t(z, a) != z) {
        return false;
      }
    }
    return true;
  }

  inline bool is_right_zero(OpTable const& t, Element z) noexcept {
    for (std::size_t a = 0; a < t.order(); ++a) {
      if (t(a, z) != z) {
        return false;
      }
    }
    return true;
  }

  inline std::optional<Element> identity_of(OpTable const& t) noexcept {
    for (std::size_t e = 0; e < t.order(); ++e) {
      if (is_left_identity(t, e) && is_right_identity(t, e)) {
        return static_cast<Element>(e);
      }
    }
    return std::nullopt;
  }

  inline std::optional<Element> zero_of(OpTable const& t) noexcept {
    for (std::size_t z = 0; z < t.order(); ++z) {
      if (is_left_zero(t, z) && is_right_zero(t, z)) {
        return static_cast<Element>(z);
      }
    }
    return std::nullopt;
  }

  // s * x * y = s * y * x for all s, x, y.
  inline bool is_right_commutative(OpTable const& t) noexcept {
    std::size_t const n = t.order();
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          if (t(t(s, x), y) != t(t(s, y), x)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every element is a left zero: x * y = x.
  inline bool is_left_zero_semigroup(OpTable const& t) noexcept {
    for (std::size_t x = 0; x < t.order(); ++x) {
      if (!is_left_zero(t, x)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_right_zero_semigroup(OpTable const& t) noexcept {
    for (std::size_t x = 0; x < t.order(); ++x) {
      if (!is_right_zero(t, x)) {
        return false;
      }
    }
    return true;
  }

  // The zero of a null semigroup (all products equal), if t is one.
  inline std::optional<Element> null_zero(OpTable const& t) noexcept {
    Element const z = t(0, 0);
    for (Element v : t.entries()) {
      if (v != z) {
        return std::nullopt;
      }
    }
    return z;
  }

  // The set S * S * S of all triple products, as a sorted element list.
  inline std::vector<Element> triple_products(OpTable const& t) {
    std::size_t const n = t.order();
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          hit[t(t(x, y), z)] = true;
        }
      }
    }
    std::vector<Element> out;
    for (std::size_t v = 0; v < n; ++v) {
      if (hit[v]) {
        out.push_back(static_cast<Element>(v));
      }
    }
    return out;
  }

  // Index and period of t if some element generates it; t must be
  // associative.
  inline std::optional<Monogenic> monogenic_type(OpTable const& t) {
    std::size_t const n = t.order();
    for (std::size_t a = 0; a < n; ++a) {
      // powers[k] = a^(k+1)
      std::vector<Element>     powers{static_cast<Element>(a)};
      std::vector<std::size_t> first_seen(n, 0);  // exponent, 0 = unseen
      first_seen[a] = 1;
      while (true) {
        Element const     next     = t(powers.back(), a);
        std::size_t const exponent = powers.size() + 1;
        if (first_seen[next] != 0) {
          if (powers.size() == n) {
            std::size_t const index = first_seen[next];
            return Monogenic{index, exponent - index};
          }
          break;
        }
        first_seen[next] = exponent;
        powers.push_back(next);
      }
    }
    return std::nullopt;
  }

  // Refused (empty) when t is not associative.
  inline std::optional<SemigroupProfile> semigroup_profile(OpTable const& t) {
    if (!is_associative(t).holds()) {
      return std::nullopt;
    }
    std::size_t const n = t.order();
    SemigroupProfile  p{};
    p.commutative = is_commutative(t);
    for (std::size_t x = 0; x < n; ++x) {
      auto const e = static_cast<Element>(x);
      if (t(x, x) == x) {
        p.idempotents.push_back(e);
      }
      if (is_left_identity(t, e)) {
        p.left_identities.push_back(e);
      }
      if (is_right_identity(t, e)) {
        p.right_identities.push_back(e);
      }
      if (is_left_zero(t, e)) {
        p.left_zeros.push_back(e);
      }
      if (is_right_zero(t, e)) {
        p.right_zeros.push_back(e);
      }
    }
    p.band              = p.idempotents.size() == n;
    p.semilattice       = p.band && p.commutative;
    p.right_commutative = is_right_commutative(t);
    p.identity          = identity_of(t);
    p.zero              = zero_of(t);
    p.monogenic         = monogenic_type(t);
    return p;
  }

  struct DimonoidProfile {
    bool trivial;
    bool commutative;
    bool abelian;
    bool self_dual;
  };

  inline DimonoidProfile dimonoid_profile(DiStructure const& d) {
    std::size_t const n       = d.order();
    bool              abelian = true;
    for (std::size_t x = 0; x < n && abelian; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (d.left()(x, y) != d.right()(y, x)) {
          abelian = false;
          break;
        }
      }
    }
    DimonoidProfile p{d.left() == d.right(),
                      is_commutative(d.left()) && is_commutative(d.right()),
                      abelian,
                      dual_dimonoid(d) == d};
    if (p.abelian != p.self_dual) {
      throw std::logic_error("abelian and self-dual flags disagree");
    }
    return p;
  }

  namespace detail {
    inline nlohmann::json elements_json(std::vector<Element> const& v) {
      auto out = nlohmann::json::array();
      for (Element e : v) {
        out.push_back(static_cast<unsigned>(e));
      }
      return out;
    }

    inline nlohmann::json optional_element_json(std::optional<Element> e) {
      return e ? nlohmann::json(static_cast<unsigned>(*e)) : nlohmann::json(nullptr);
    }
  }  // namespace detail

  inline nlohmann::json to_json(AxiomVerdict const& v) {
    nlohmann::json out;
    out["mode"]     = v.mode == CheckMode::Dimonoid ? "dimonoid" : "doppelsemigroup";
    out["passed"]   = v.passed();
    auto failures   = nlohmann::json::object();
    auto put        = [&](Axiom a, std::optional<AxiomResult> const& r) {
      char const* key = axiom_name(a);
      if (!r) {
        out[key] = nullptr;
        return;
      }
      out[key] = r->holds();
      if (r->witness) {
        failures[key] = {r->witness->x, r->witness->y, r->witness->z};
      }
    };
    put(Axiom::LeftAssociative, v.left_associative);
    put(Axiom::RightAssociative, v.right_associative);
    put(Axiom::D1, v.d1);
    put(Axiom::D2, v.d2);
    put(Axiom::D3, v.d3);
    put(Axiom::D4, v.d4);
    out["first_failure"] = failures;
    return out;
  }

  inline nlohmann::json to_json(SemigroupProfile const& p) {
    nlohmann::json out;
    out["commutative"]       = p.commutative;
    out["band"]              = p.band;
    out["semilattice"]       = p.semilattice;
    out["right_commutative"] = p.right_commutative;
    out["idempotents"]       = detail::elements_json(p.idempotents);
    out["left_identities"]   = detail::elements_json(p.left_identities);
    out["right_identities"]  = detail::elements_json(p.right_identities);
    out["identity"]          = detail::optional_element_json(p.identity);
    out["left_zeros"]        = detail::elements_json(p.left_zeros);
    out["right_zeros"]       = detail::elements_json(p.right_zeros);
    out["zero"]              = detail::optional_element_json(p.zero);
    if (p.monogenic) {
      out["monogenic"] = {{"index", p.monogenic->index}, {"period", p.monogenic->period}};
    } else {
      out["monogenic"] = nullptr;
    }
    return out;
  }

  inline nlohmann::json to_json(DimonoidProfile const& p) {
    return {{"trivial", p.trivial},
            {"commutative", p.commutative},
            {"abelian", p.abelian},
            {"self_dual", p.self_dual}};
  }

}  // namespace dimonoid
