#pragma once

// Named semigroups and dimonoids, built from a small textual grammar.
//
//   semigroup := primary { suffix }
//   suffix    := "+0" | "+1" | "~1" | "@[" int { " " int } "]"
//   primary   := "C" int [ "^-1" ] | "L" int | "O" int | "O(" int "," int ")"
//              | "M(" int "," int ")" | "LO" int | "RO" int
//              | "LO(" int "<-" int ")" | "RO(" int "<-" int ")"
//              | "LOt0(" int "<-" int ")" | "ROt0(" int "<-" int ")"
//              | "LOB" int | "ROB" int | "dual(" semigroup ")" | "(" semigroup ")"
//   dimonoid  := dterm { "+0" }
//   dterm     := semigroup "|" semigroup | "triv(" semigroup ")"
//              | "plus0(" dimonoid ")" | "dual(" dimonoid ")" | "(" dimonoid ")"
//              | semigroup                      (read as the trivial dimonoid)
//
// Index conventions (elements are always 0, ..., n - 1):
//   C_n         i <-> g^i, so x * y = x + y mod n
//   C_n^-1      x * y = x + y - 1 mod n, i.e. x g^-1 y in C_n
//   L_n         x * y = min(x, y)
//   O_n         null semigroup with zero n - 1 (same table as O(n,0))
//   O(n,m)      A = {0, ..., m - 1}, zero n - 1
//   M(r,m)      index i <-> a^(i + 1), order r + m - 1
//   LO(m<-n)    A = {0, ..., m - 1}, distinguished a = 0
//   LOt0(m<-n)  S = {0, ..., n - 1}, A = {0, ..., m - 1}, zero n; order n + 1
//   LOB_n       the band x ⊣ y with a = 0, c = 1
//   RO*, ROB    transposes of the LO* tables
//   +0 +1 ~1    the adjoined element is the new last index
//   @[p...]     relabel along the permutation with the given images

#include <algorithm>  // for std::min
#include <cctype>     // for std::isdigit
#include <cstddef>    // for std::size_t
#include <optional>   // for std::optional
#include <stdexcept>  // for std::logic_error
#include <string>     // for std::string
#include <string_view>
#include <utility>  // for std::move
#include <vector>   // for std::vector

#include "axioms.hpp"
#include "error.hpp"
#include "tables.hpp"

namespace dimonoid {

  // A pair refused by a checked pairing; carries the full verdict.
  class AxiomError : public Error {
   public:
    explicit AxiomError(AxiomVerdict verdict) : Error(describe(verdict)), _verdict(verdict) {}

    AxiomVerdict const& verdict() const noexcept {
      return _verdict;
    }

   private:
    static std::string describe(AxiomVerdict const& v) {
      std::string what = v.mode == CheckMode::Dimonoid ? "not a dimonoid" : "not a doppelsemigroup";
      if (auto const a = v.first_failed()) {
        auto const w = v.result(*a)->witness;
        what += ": " + std::string(axiom_name(*a)) + " fails at (" + std::to_string(w->x) + ","
                + std::to_string(w->y) + "," + std::to_string(w->z) + ")";
      }
      return what;
    }

    AxiomVerdict _verdict;
  };

  enum class Family {
    C,
    Cinv,
    L,
    O,
    Omn,
    M,
    LO,
    RO,
    LO_m_n,
    RO_m_n,
    LOtilde0,
    ROtilde0,
    LOB,
    ROB
  };

  enum class Construction { AdjoinZero, AdjoinIdentity, AdjoinTilde, Dual };

  struct Modifier {
    enum class Kind { AdjoinZero, AdjoinIdentity, AdjoinTilde, Dual, Relabel };

    Kind                 kind;
    std::vector<Element> images;  // Relabel only

    friend bool operator==(Modifier const&, Modifier const&) = default;
  };

  struct StructureName {
    Family                   family;
    std::vector<std::size_t> params;
    std::vector<Modifier>    modifiers;

    friend bool operator==(StructureName const&, StructureName const&) = default;
  };

  struct DimonoidName {
    enum class Kind { Pair, Trivial, AdjoinZero, Dual };

    Kind                      kind;
    std::vector<StructureName> components;  // Pair: {left, right}; Trivial: {t}
    std::vector<DimonoidName>  inner;       // AdjoinZero, Dual: exactly one

    friend bool operator==(DimonoidName const&, DimonoidName const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string family_text(Family f, std::vector<std::size_t> const& p) {
      auto s = [](std::size_t v) { return std::to_string(v); };
      switch (f) {
        case Family::C: return "C" + s(p[0]);
        case Family::Cinv: return "C" + s(p[0]) + "^-1";
        case Family::L: return "L" + s(p[0]);
        case Family::O: return "O" + s(p[0]);
        case Family::Omn: return "O(" + s(p[0]) + "," + s(p[1]) + ")";
        case Family::M: return "M(" + s(p[0]) + "," + s(p[1]) + ")";
        case Family::LO: return "LO" + s(p[0]);
        case Family::RO: return "RO" + s(p[0]);
        case Family::LO_m_n: return "LO(" + s(p[0]) + "<-" + s(p[1]) + ")";
        case Family::RO_m_n: return "RO(" + s(p[0]) + "<-" + s(p[1]) + ")";
        case Family::LOtilde0: return "LOt0(" + s(p[0]) + "<-" + s(p[1]) + ")";
        case Family::ROtilde0: return "ROt0(" + s(p[0]) + "<-" + s(p[1]) + ")";
        case Family::LOB: return "LOB" + s(p[0]);
        case Family::ROB: return "ROB" + s(p[0]);
      }
      return "?";
    }
  }  // namespace detail

  inline std::string to_string(StructureName const& name) {
    std::string out = detail::family_text(name.family, name.params);
    for (auto const& m : name.modifiers) {
      switch (m.kind) {
        case Modifier::Kind::AdjoinZero: out += "+0"; break;
        case Modifier::Kind::AdjoinIdentity: out += "+1"; break;
        case Modifier::Kind::AdjoinTilde: out += "~1"; break;
        case Modifier::Kind::Dual: out = "dual(" + out + ")"; break;
        case Modifier::Kind::Relabel: {
          out += "@[";
          for (std::size_t i = 0; i < m.images.size(); ++i) {
            out += (i == 0 ? "" : " ") + std::to_string(m.images[i]);
          }
          out += "]";
          break;
        }
      }
    }
    return out;
  }

  inline std::string to_string(DimonoidName const& name) {
    switch (name.kind) {
      case DimonoidName::Kind::Pair:
        return to_string(name.components[0]) + "|" + to_string(name.components[1]);
      case DimonoidName::Kind::Trivial: return "triv(" + to_string(name.components[0]) + ")";
      case DimonoidName::Kind::AdjoinZero: return "plus0(" + to_string(name.inner[0]) + ")";
      case DimonoidName::Kind::Dual: return "dual(" + to_string(name.inner[0]) + ")";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    class NameParser {
     public:
      explicit NameParser(std::string_view text) : _text(text) {}

      StructureName semigroup_to_end() {
        auto name = semigroup();
        expect_end();
        return name;
      }

      DimonoidName dimonoid_to_end() {
        auto name = dimonoid();
        expect_end();
        return name;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("invalid structure name '" + std::string(_text) + "': " + what
                             + " at offset " + std::to_string(_pos),
                         0, 0);
      }

      void expect_end() const {
        if (_pos != _text.size()) {
          fail("unexpected trailing text");
        }
      }

      bool accept(std::string_view token) {
        if (_text.substr(_pos, token.size()) == token) {
          _pos += token.size();
          return true;
        }
        return false;
      }

      void expect(std::string_view token) {
        if (!accept(token)) {
          fail("expected '" + std::string(token) + "'");
        }
      }

      bool peek(std::string_view token) const {
        return _text.substr(_pos, token.size()) == token;
      }

      std::size_t integer() {
        std::size_t const start = _pos;
        std::size_t       value = 0;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          value = value * 10 + static_cast<std::size_t>(_text[_pos] - '0');
          if (value > 100000) {
            fail("number too large");
          }
          ++_pos;
        }
        if (_pos == start) {
          fail("expected a number");
        }
        return value;
      }

      StructureName two_params(Family f, std::string_view sep) {
        std::size_t const a = integer();
        expect(sep);
        std::size_t const b = integer();
        expect(")");
        return {f, {a, b}, {}};
      }

      StructureName primary() {
        if (accept("dual(")) {
          auto inner = semigroup();
          expect(")");
          inner.modifiers.push_back({Modifier::Kind::Dual, {}});
          return inner;
        }
        if (accept("(")) {
          auto inner = semigroup();
          expect(")");
          return inner;
        }
        if (accept("LOt0(")) {
          return two_params(Family::LOtilde0, "<-");
        }
        if (accept("ROt0(")) {
          return two_params(Family::ROtilde0, "<-");
        }
        if (accept("LOB")) {
          return {Family::LOB, {integer()}, {}};
        }
        if (accept("ROB")) {
          return {Family::ROB, {integer()}, {}};
        }
        if (accept("LO(")) {
          return two_params(Family::LO_m_n, "<-");
        }
        if (accept("RO(")) {
          return two_params(Family::RO_m_n, "<-");
        }
        if (accept("LO")) {
          return {Family::LO, {integer()}, {}};
        }
        if (accept("RO")) {
          return {Family::RO, {integer()}, {}};
        }
        if (accept("L")) {
          return {Family::L, {integer()}, {}};
        }
        if (accept("O(")) {
          return two_params(Family::Omn, ",");
        }
        if (accept("O")) {
          return {Family::O, {integer()}, {}};
        }
        if (accept("M(")) {
          return two_params(Family::M, ",");
        }
        if (accept("C")) {
          std::size_t const n = integer();
          if (accept("^-1")) {
            return {Family::Cinv, {n}, {}};
          }
          return {Family::C, {n}, {}};
        }
        fail("unknown structure");
      }

      StructureName semigroup() {
        auto name = primary();
        while (true) {
          if (accept("+0")) {
            name.modifiers.push_back({Modifier::Kind::AdjoinZero, {}});
          } else if (accept("+1")) {
            name.modifiers.push_back({Modifier::Kind::AdjoinIdentity, {}});
          } else if (accept("~1")) {
            name.modifiers.push_back({Modifier::Kind::AdjoinTilde, {}});
          } else if (accept("@[")) {
            std::vector<Element> images;
            do {
              std::size_t const v = integer();
              if (v >= kMaxOrder) {
                fail("relabeling image out of range");
              }
              images.push_back(static_cast<Element>(v));
            } while (accept(" "));
            expect("]");
            name.modifiers.push_back({Modifier::Kind::Relabel, std::move(images)});
          } else {
            return name;
          }
        }
      }

      DimonoidName dterm() {
        if (accept("triv(")) {
          auto t = semigroup();
          expect(")");
          return {DimonoidName::Kind::Trivial, {std::move(t)}, {}};
        }
        if (accept("plus0(")) {
          auto d = dimonoid();
          expect(")");
          return {DimonoidName::Kind::AdjoinZero, {}, {std::move(d)}};
        }
        std::size_t const start = _pos;
        try {
          auto left = semigroup();
          if (accept("|")) {
            auto right = semigroup();
            return {DimonoidName::Kind::Pair, {std::move(left), std::move(right)}, {}};
          }
          // A lone semigroup must not be followed by something only a
          // dimonoid form could consume.
          if (_pos == _text.size() || peek(")") || peek("+0")) {
            return {DimonoidName::Kind::Trivial, {std::move(left)}, {}};
          }
        } catch (ParseError const&) {
        }
        _pos = start;
        if (accept("dual(")) {
          auto d = dimonoid();
          expect(")");
          return {DimonoidName::Kind::Dual, {}, {std::move(d)}};
        }
        if (accept("(")) {
          auto d = dimonoid();
          expect(")");
          return d;
        }
        fail("expected a dimonoid");
      }

      DimonoidName dimonoid() {
        auto d = dterm();
        while (accept("+0")) {
          d = DimonoidName{DimonoidName::Kind::AdjoinZero, {}, {std::move(d)}};
        }
        return d;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace detail

  inline StructureName parse_structure_name(std::string_view text) {
    return detail::NameParser(text).semigroup_to_end();
  }

  inline DimonoidName parse_dimonoid_name(std::string_view text) {
    return detail::NameParser(text).dimonoid_to_end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  inline OpTable derive_semigroup(OpTable const& t, Construction c) {
    std::size_t const n = t.order();
    if (c == Construction::Dual) {
      return transpose(t);
    }
    std::optional<Element> e;
    if (c == Construction::AdjoinTilde) {
      e = identity_of(t);
      if (!e) {
        throw PreconditionError("~1 can only be adjoined to a monoid");
      }
    }
    auto result = OpTable::from_function(n + 1, [&](std::size_t x, std::size_t y) -> std::size_t {
      if (x < n && y < n) {
        return t(x, y);
      }
      switch (c) {
        case Construction::AdjoinZero: return n;
        case Construction::AdjoinIdentity: return x == n ? y : x;
        case Construction::AdjoinTilde:
          if (x == n && y == n) {
            return *e;
          }
          return x == n ? y : x;
        case Construction::Dual: break;
      }
      return 0;
    });
    if (is_associative(t).holds() && !is_associative(result).holds()) {
      throw std::logic_error("adjunction broke associativity");
    }
    return result;
  }

  namespace detail {
    inline void require(bool ok, std::string const& what) {
      if (!ok) {
        throw ParameterError(what);
      }
    }

    inline void require_order(std::size_t n, std::string const& family) {
      require(n >= 1, family + " requires n >= 1");
      require(n <= kMaxOrder, family + " requires n <= " + std::to_string(kMaxOrder));
    }

    inline OpTable build_family(Family f, std::vector<std::size_t> const& p) {
      auto const name = family_text(f, p);
      switch (f) {
        case Family::C: {
          require_order(p[0], name);
          std::size_t const n = p[0];
          return OpTable::from_function(n, [n](std::size_t x, std::size_t y) { return (x + y) % n; });
        }
        case Family::Cinv: {
          require_order(p[0], name);
          std::size_t const n = p[0];
          return OpTable::from_function(
              n, [n](std::size_t x, std::size_t y) { return (x + y + n - 1) % n; });
        }
        case Family::L:
          require_order(p[0], name);
          return OpTable::from_function(p[0],
                                        [](std::size_t x, std::size_t y) { return std::min(x, y); });
        case Family::O:
        case Family::Omn: {
          std::size_t const n = p[0];
          std::size_t const m = f == Family::O ? 0 : p[1];
          require_order(n, name);
          require(m <= n - 1, name + " requires 0 <= m <= n - 1");
          return OpTable::from_function(n, [n, m](std::size_t x, std::size_t y) {
            return x == y && x < m ? x : n - 1;
          });
        }
        case Family::M: {
          std::size_t const r = p[0];
          std::size_t const m = p[1];
          require(r >= 1, name + " requires index r >= 1");
          require(m >= 1, name + " requires period m >= 1");
          require_order(r + m - 1, name);
          std::size_t const n = r + m - 1;
          return OpTable::from_function(n, [n, r, m](std::size_t x, std::size_t y) {
            std::size_t e = x + y + 2;  // exponent of a^(x+1) a^(y+1)
            if (e > n) {
              e = r + (e - r) % m;
            }
            return e - 1;
          });
        }
        case Family::LO:
        case Family::RO: {
          require_order(p[0], name);
          auto t = OpTable::from_function(p[0], [](std::size_t x, std::size_t) { return x; });
          return f == Family::LO ? t : transpose(t);
        }
        case Family::LO_m_n:
        case Family::RO_m_n: {
          std::size_t const m = p[0];
          std::size_t const n = p[1];
          require_order(n, name);
          require(1 <= m && m <= n, name + " requires 1 <= m <= n");
          auto t = OpTable::from_function(
              n, [m](std::size_t x, std::size_t) -> std::size_t { return x < m ? x : 0; });
          return f == Family::LO_m_n ? t : transpose(t);
        }
        case Family::LOtilde0:
        case Family::ROtilde0: {
          std::size_t const m = p[0];
          std::size_t const n = p[1];
          require(n >= 1, name + " requires n >= 1");
          require_order(n + 1, name);
          require(m <= n, name + " requires 0 <= m <= n");
          auto t = OpTable::from_function(
              n + 1, [m, n](std::size_t x, std::size_t y) { return y < m ? x : n; });
          return f == Family::LOtilde0 ? t : transpose(t);
        }
        case Family::LOB:
        case Family::ROB: {
          require_order(p[0], name);
          require(p[0] >= 2, name + " requires n >= 2");
          auto t = OpTable::from_function(p[0], [](std::size_t x, std::size_t y) -> std::size_t {
            if (x == 0) {
              return y == 0 ? 0 : 1;
            }
            return x;
          });
          return f == Family::LOB ? t : transpose(t);
        }
      }
      throw ParameterError("unknown family");
    }
  }  // namespace detail

  inline OpTable build_semigroup(StructureName const& name) {
    OpTable t = detail::build_family(name.family, name.params);
    for (auto const& m : name.modifiers) {
      switch (m.kind) {
        case Modifier::Kind::AdjoinZero: t = derive_semigroup(t, Construction::AdjoinZero); break;
        case Modifier::Kind::AdjoinIdentity:
          t = derive_semigroup(t, Construction::AdjoinIdentity);
          break;
        case Modifier::Kind::AdjoinTilde: t = derive_semigroup(t, Construction::AdjoinTilde); break;
        case Modifier::Kind::Dual: t = derive_semigroup(t, Construction::Dual); break;
        case Modifier::Kind::Relabel: {
          if (m.images.size() != t.order()) {
            throw ParameterError("relabeling @[...] needs " + std::to_string(t.order())
                                 + " images");
          }
          try {
            t = apply_permutation(t, Permutation(m.images));
          } catch (DimensionError const& e) {
            throw ParameterError(std::string("relabeling @[...]: ") + e.what());
          }
          break;
        }
      }
    }
    return t;
  }

  inline OpTable build_semigroup(std::string_view name) {
    return build_semigroup(parse_structure_name(name));
  }

  enum class PairMode { Dimonoid, Doppelsemigroup, Unchecked };

  // Pairs two tables; the checked modes refuse pairs failing their axioms
  // with an AxiomError carrying the verdict.
  inline DiStructure pair_dimonoid(OpTable left, OpTable right, PairMode mode = PairMode::Dimonoid) {
    DiStructure d(std::move(left), std::move(right));
    if (mode != PairMode::Unchecked) {
      auto verdict = check(d, mode == PairMode::Dimonoid ? CheckMode::Dimonoid
                                                         : CheckMode::Doppelsemigroup);
      if (!verdict.passed()) {
        throw AxiomError(std::move(verdict));
      }
    }
    return d;
  }

  inline DiStructure trivial_dimonoid(OpTable const& t) {
    auto const assoc = is_associative(t);
    if (!assoc.holds()) {
      AxiomVerdict v{CheckMode::Dimonoid, assoc, assoc, std::nullopt, std::nullopt, std::nullopt,
                     std::nullopt};
      throw AxiomError(v);
    }
    return DiStructure(t, t);
  }

  // Adjoins a new element n that is a zero of both operations.
  inline DiStructure adjoin_zero_dimonoid(DiStructure const& d) {
    DiStructure out(derive_semigroup(d.left(), Construction::AdjoinZero),
                    derive_semigroup(d.right(), Construction::AdjoinZero));
    if (is_dimonoid(d) && !is_dimonoid(out)) {
      throw std::logic_error("adjoining a zero broke the dimonoid axioms");
    }
    return out;
  }

  inline DiStructure build_dimonoid(DimonoidName const& name, PairMode mode = PairMode::Dimonoid) {
    switch (name.kind) {
      case DimonoidName::Kind::Pair:
        return pair_dimonoid(build_semigroup(name.components[0]),
                             build_semigroup(name.components[1]), mode);
      case DimonoidName::Kind::Trivial: return trivial_dimonoid(build_semigroup(name.components[0]));
      case DimonoidName::Kind::AdjoinZero:
        return adjoin_zero_dimonoid(build_dimonoid(name.inner[0], mode));
      case DimonoidName::Kind::Dual: return dual_dimonoid(build_dimonoid(name.inner[0], mode));
    }
    throw ParameterError("unknown dimonoid form");
  }

  inline DiStructure build_dimonoid(std::string_view name, PairMode mode = PairMode::Dimonoid) {
    return build_dimonoid(parse_dimonoid_name(name), mode);
  }

  ////////////////////////////////////////////////////////////////////////
  // The named structures of orders 2 and 3
  ////////////////////////////////////////////////////////////////////////

  enum class NamedKind { Semigroup, Dimonoid, Doppelsemigroup };

  struct NamedStructure {
    std::string display;  // conventional notation
    std::string expr;     // grammar expression
    NamedKind   kind;
    std::size_t order;
  };

  // Semigroups (as trivial dimonoids), the nontrivial dimonoids and the
  // nontrivial commutative doppelsemigroups that carry conventional names.
  // Where the two components must share a zero or identity, the ⊢ side is
  // relabeled with @[...] so that the pair satisfies its axioms.
  inline std::vector<NamedStructure> const& named_structures() {
    using K = NamedKind;
    static std::vector<NamedStructure> const all = {
        // order 2 semigroups
        {"C_2", "C2", K::Semigroup, 2},
        {"L_2", "L2", K::Semigroup, 2},
        {"O_2", "O2", K::Semigroup, 2},
        {"LO_2", "LO2", K::Semigroup, 2},
        {"RO_2", "RO2", K::Semigroup, 2},
        // order 2 dimonoids
        {"LO_2⊣⊢RO_2", "LO2|RO2", K::Dimonoid, 2},
        {"LO_2⊣⊢O_2", "LO2|O2", K::Dimonoid, 2},
        {"O_2⊣⊢RO_2", "O2|RO2", K::Dimonoid, 2},
        // order 3 commutative semigroups
        {"C_3", "C3", K::Semigroup, 3},
        {"O_3", "O3", K::Semigroup, 3},
        {"M_{2,2}", "M(2,2)", K::Semigroup, 3},
        {"C_2^{+1}", "C2+1", K::Semigroup, 3},
        {"C_2^{~1}", "C2~1", K::Semigroup, 3},
        {"M_{3,1}", "M(3,1)", K::Semigroup, 3},
        {"O_2^{+1}", "O2+1", K::Semigroup, 3},
        {"O_2^{+0}", "O2+0", K::Semigroup, 3},
        {"L_3", "L3", K::Semigroup, 3},
        {"C_2^{+0}", "C2+0", K::Semigroup, 3},
        {"O_3^2", "O(3,2)", K::Semigroup, 3},
        {"O_3^1", "O(3,1)", K::Semigroup, 3},
        // order 3 noncommutative semigroups
        {"LO_3", "LO3", K::Semigroup, 3},
        {"RO_3", "RO3", K::Semigroup, 3},
        {"LO_2^{+0}", "LO2+0", K::Semigroup, 3},
        {"RO_2^{+0}", "RO2+0", K::Semigroup, 3},
        {"LO^{~0}_{1←2}", "LOt0(1<-2)", K::Semigroup, 3},
        {"RO^{~0}_{1←2}", "ROt0(1<-2)", K::Semigroup, 3},
        {"LO_2^{+1}", "LO2+1", K::Semigroup, 3},
        {"RO_2^{+1}", "RO2+1", K::Semigroup, 3},
        {"LOB_3", "LOB3", K::Semigroup, 3},
        {"ROB_3", "ROB3", K::Semigroup, 3},
        {"LO_{2←3}", "LO(2<-3)", K::Semigroup, 3},
        {"RO_{2←3}", "RO(2<-3)", K::Semigroup, 3},
        // order 3 commutative nontrivial dimonoids
        {"M_{3,1}⊣⊢O_3", "M(3,1)|O3", K::Dimonoid, 3},
        {"O_3⊣⊢M_{3,1}", "O3|M(3,1)", K::Dimonoid, 3},
        // order 3 abelian noncommutative dimonoids
        {"LO_3⊣⊢RO_3", "LO3|RO3", K::Dimonoid, 3},
        {"LO_{2←3}⊣⊢RO_{2←3}", "LO(2<-3)|RO(2<-3)", K::Dimonoid, 3},
        {"LOB_3⊣⊢ROB_3", "LOB3|ROB3", K::Dimonoid, 3},
        {"LO^{~0}_{1←2}⊣⊢RO^{~0}_{1←2}", "LOt0(1<-2)|ROt0(1<-2)", K::Dimonoid, 3},
        {"(LO_2⊣⊢RO_2)^{+0}", "plus0(LO2|RO2)", K::Dimonoid, 3},
        // order 3 nonabelian noncommutative nontrivial dimonoids
        {"LO_3⊣⊢O_3", "LO3|O3", K::Dimonoid, 3},
        {"LO_{2←3}⊣⊢O_3", "LO(2<-3)|O3@[1 2 0]", K::Dimonoid, 3},
        {"LO_3⊣⊢RO_{2←3}", "LO3|RO(2<-3)", K::Dimonoid, 3},
        {"LO_3⊣⊢LO_{2←3}", "LO3|LO(2<-3)", K::Dimonoid, 3},
        {"LOB_3⊣⊢O_3^1", "LOB3|O(3,1)@[0 2 1]", K::Dimonoid, 3},
        {"LO^{~0}_{1←2}⊣⊢O_3^1", "LOt0(1<-2)|O(3,1)", K::Dimonoid, 3},
        {"(LO_2⊣⊢O_2)^{+0}", "plus0(LO2|O2)", K::Dimonoid, 3},
        {"O_3⊣⊢RO_3", "O3|RO3", K::Dimonoid, 3},
        {"O_3⊣⊢RO_{2←3}", "O3@[1 2 0]|RO(2<-3)", K::Dimonoid, 3},
        {"LO_{2←3}⊣⊢RO_3", "LO(2<-3)|RO3", K::Dimonoid, 3},
        {"RO_{2←3}⊣⊢RO_3", "RO(2<-3)|RO3", K::Dimonoid, 3},
        {"O_3^1⊣⊢ROB_3", "O(3,1)@[0 2 1]|ROB3", K::Dimonoid, 3},
        {"O_3^1⊣⊢RO^{~0}_{1←2}", "O(3,1)|ROt0(1<-2)", K::Dimonoid, 3},
        {"(O_2⊣⊢RO_2)^{+0}", "plus0(O2|RO2)", K::Dimonoid, 3},
        // order 3 nontrivial commutative doppelsemigroups
        {"C_3⋈C_3^{-1}", "C3|C3^-1", K::Doppelsemigroup, 3},
        {"O_3⋈M_{3,1}", "O3|M(3,1)", K::Doppelsemigroup, 3},
        {"O_3⋈O_2^{+1}", "O3|O2+1@[0 2 1]", K::Doppelsemigroup, 3},
        {"O_3⋈O_2^{+0}", "O3|O2+0", K::Doppelsemigroup, 3},
        {"O_3⋈L_3", "O3|L3@[2 0 1]", K::Doppelsemigroup, 3},
        {"O_3⋈C_2^{+0}", "O3|C2+0", K::Doppelsemigroup, 3},
        {"O_3⋈O_3^2", "O3|O(3,2)", K::Doppelsemigroup, 3},
        {"O_3⋈O_3^1", "O3|O(3,1)", K::Doppelsemigroup, 3},
        {"M_{2,2}⋈C_2^{+1}", "M(2,2)|C2+1@[2 1 0]", K::Doppelsemigroup, 3},
        {"M_{2,2}⋈C_2^{~1}", "M(2,2)|C2~1@[2 1 0]", K::Doppelsemigroup, 3},
        {"C_2^{+1}⋈C_2^{~1}", "C2+1|C2~1", K::Doppelsemigroup, 3},
        {"C_2^{+1}⋈M_{2,2}", "C2+1|M(2,2)@[2 1 0]", K::Doppelsemigroup, 3},
        {"C_2^{~1}⋈M_{2,2}", "C2~1|M(2,2)@[2 1 0]", K::Doppelsemigroup, 3},
        {"C_2^{~1}⋈C_2^{+1}", "C2~1|C2+1", K::Doppelsemigroup, 3},
        {"M_{3,1}⋈O_2^{+1}", "M(3,1)|O2+1@[1 2 0]", K::Doppelsemigroup, 3},
        {"M_{3,1}⋈O_3", "M(3,1)|O3", K::Doppelsemigroup, 3},
        {"O_2^{+1}⋈M_{3,1}", "O2+1|M(3,1)@[2 0 1]", K::Doppelsemigroup, 3},
        {"O_2^{+1}⋈O_3", "O2+1|O3@[0 2 1]", K::Doppelsemigroup, 3},
        {"(O_2⋈L_2)^{+0}", "plus0(O2|L2@[1 0])", K::Doppelsemigroup, 3},
        {"O_2^{+0}⋈O_3", "O2+0|O3", K::Doppelsemigroup, 3},
        {"L_3⋈O_3", "L3|O3@[1 2 0]", K::Doppelsemigroup, 3},
        {"(L_2⋈O_2)^{+0}", "plus0(L2|O2@[1 0])", K::Doppelsemigroup, 3},
        {"(C_2⋈C_2^{-1})^{+0}", "plus0(C2|C2^-1)", K::Doppelsemigroup, 3},
        {"C_2^{+0}⋈O_3", "C2+0|O3", K::Doppelsemigroup, 3},
        {"O_3^2⋈O_3^1", "O(3,2)|O(3,1)", K::Doppelsemigroup, 3},
        {"O_3^2⋈O_3", "O(3,2)|O3", K::Doppelsemigroup, 3},
        {"O_3^a⋈O_3^b", "O(3,1)|O(3,1)@[1 0 2]", K::Doppelsemigroup, 3},
        {"O_3^1⋈O_3^2", "O(3,1)|O(3,2)", K::Doppelsemigroup, 3},
        {"O_3^1⋈O_3", "O(3,1)|O3", K::Doppelsemigroup, 3},
    };
    return all;
  }

  // Builds a named entry as a DiStructure (semigroups as trivial pairs),
  // validating it against the axioms of its kind.
  inline DiStructure build_named(NamedStructure const& entry) {
    switch (entry.kind) {
      case NamedKind::Semigroup: return trivial_dimonoid(build_semigroup(entry.expr));
      case NamedKind::Dimonoid: return build_dimonoid(entry.expr, PairMode::Dimonoid);
      case NamedKind::Doppelsemigroup: return build_dimonoid(entry.expr, PairMode::Doppelsemigroup);
    }
    throw ParameterError("unknown named kind");
  }

}  // namespace dimonoid
