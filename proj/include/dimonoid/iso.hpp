#pragma once

// Canonical forms, isomorphism tests and automorphism groups of tables and
// table pairs, plus identification of small permutation groups.

#include <algorithm>  // for std::next_permutation, std::sort
#include <cstddef>    // for std::size_t
#include <numeric>    // for std::iota
#include <optional>   // for std::optional
#include <stdexcept>  // for std::logic_error
#include <string>     // for std::string
#include <vector>     // for std::vector

#include <json.hpp>

#include "error.hpp"
#include "tables.hpp"

namespace dimonoid {

  // Lexicographically least serialization (left table then right table,
  // row-major) over all relabelings of a structure. `witness` is the
  // lexicographically smallest permutation producing it.
  struct CanonicalKey {
    std::size_t          order;
    std::vector<Element> key;
    Permutation          witness;

    std::string hex() const {
      static constexpr char digits[] = "0123456789abcdef";
      std::string           out;
      out.reserve(2 * key.size());
      for (Element v : key) {
        out.push_back(digits[v >> 4]);
        out.push_back(digits[v & 0xF]);
      }
      return out;
    }
  };

  namespace detail {
    // Enumerates all relabelings in lexicographic order, abandoning each as
    // soon as its partial serialization exceeds the best so far.
    inline CanonicalKey canonical_of(std::vector<OpTable const*> const& tables) {
      std::size_t const n     = tables.front()->order();
      std::size_t const cells = n * n;
      std::size_t const total = cells * tables.size();

      std::vector<Element> perm(n), inv(n);
      std::iota(perm.begin(), perm.end(), Element{0});
      std::vector<Element> best, best_perm, candidate(total);

      do {
        for (std::size_t x = 0; x < n; ++x) {
          inv[perm[x]] = static_cast<Element>(x);
        }
        bool smaller = best.empty();
        bool abandon = false;
        for (std::size_t c = 0; c < total; ++c) {
          OpTable const&    t = *tables[c / cells];
          std::size_t const i = (c % cells) / n;
          std::size_t const j = c % n;
          Element const     v = perm[t(inv[i], inv[j])];
          if (!smaller) {
            if (v > best[c]) {
              abandon = true;
              break;
            }
            if (v < best[c]) {
              smaller = true;
            }
          }
          candidate[c] = v;
        }
        if (!abandon && smaller) {
          best      = candidate;
          best_perm = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));

      return {n, std::move(best), Permutation(std::move(best_perm))};
    }
  }  // namespace detail

  inline CanonicalKey canonical_form(DiStructure const& d) {
    return detail::canonical_of({&d.left(), &d.right()});
  }

  inline CanonicalKey canonical_form(OpTable const& t) {
    return detail::canonical_of({&t});
  }

  namespace detail {
    // Backtracking search for the lexicographically first bijection psi
    // with psi(a * b) = psi(a) *' psi(b) in every table pair. Independent
    // of canonical_of.
    class IsoSearch {
     public:
      IsoSearch(std::vector<OpTable const*> from, std::vector<OpTable const*> to)
          : _from(std::move(from)),
            _to(std::move(to)),
            _n(_from.front()->order()),
            _image(_n, kUnset),
            _used(_n, false) {}

      std::optional<Permutation> run() {
        if (extend(0)) {
          return Permutation(_image);
        }
        return std::nullopt;
      }

     private:
      static constexpr Element kUnset = 255;

      // Checks every product among the first k + 1 assigned elements.
      bool consistent(std::size_t k) const {
        for (std::size_t t = 0; t < _from.size(); ++t) {
          OpTable const& a = *_from[t];
          OpTable const& b = *_to[t];
          for (std::size_t x = 0; x <= k; ++x) {
            for (std::size_t y = 0; y <= k; ++y) {
              if (x != k && y != k) {
                continue;
              }
              Element const v      = a(x, y);
              Element const target = b(_image[x], _image[y]);
              if (v <= k) {
                if (_image[v] != target) {
                  return false;
                }
              } else if (_used[target]) {
                // target already taken by an element other than v
                return false;
              }
            }
          }
        }
        return true;
      }

      bool extend(std::size_t k) {
        if (k == _n) {
          return full_check();
        }
        for (std::size_t v = 0; v < _n; ++v) {
          if (_used[v]) {
            continue;
          }
          _image[k] = static_cast<Element>(v);
          _used[v]  = true;
          if (consistent(k) && extend(k + 1)) {
            return true;
          }
          _used[v]  = false;
          _image[k] = kUnset;
        }
        return false;
      }

      bool full_check() const {
        for (std::size_t t = 0; t < _from.size(); ++t) {
          for (std::size_t x = 0; x < _n; ++x) {
            for (std::size_t y = 0; y < _n; ++y) {
              if (_image[(*_from[t])(x, y)] != (*_to[t])(_image[x], _image[y])) {
                return false;
              }
            }
          }
        }
        return true;
      }

      std::vector<OpTable const*> _from;
      std::vector<OpTable const*> _to;
      std::size_t                 _n;
      std::vector<Element>        _image;
      std::vector<bool>           _used;
    };
  }  // namespace detail

  // An isomorphism psi from d1 to d2 (psi(x ⊣1 y) = psi(x) ⊣2 psi(y) and
  // likewise for ⊢), or nothing. Orders that differ are never isomorphic.
  inline std::optional<Permutation> are_isomorphic(DiStructure const& d1, DiStructure const& d2) {
    if (d1.order() != d2.order()) {
      return std::nullopt;
    }
    return detail::IsoSearch({&d1.left(), &d1.right()}, {&d2.left(), &d2.right()}).run();
  }

  inline std::optional<Permutation> are_isomorphic(OpTable const& t1, OpTable const& t2) {
    if (t1.order() != t2.order()) {
      return std::nullopt;
    }
    return detail::IsoSearch({&t1}, {&t2}).run();
  }

  namespace detail {
    inline void require_group(std::vector<Permutation> const& perms) {
      if (perms.empty()) {
        throw StructureError("an empty set is not a group");
      }
      std::size_t const n = perms.front().size();
      for (auto const& p : perms) {
        if (p.size() != n) {
          throw StructureError("permutations of different degrees");
        }
      }
      auto contains = [&perms](Permutation const& p) {
        return std::find(perms.begin(), perms.end(), p) != perms.end();
      };
      if (!contains(Permutation::identity(n))) {
        throw StructureError("set does not contain the identity");
      }
      for (auto const& p : perms) {
        if (!contains(p.inverse())) {
          throw StructureError("set is not closed under inverses");
        }
        for (auto const& q : perms) {
          if (!contains(compose(p, q))) {
            throw StructureError("set is not closed under composition");
          }
        }
      }
    }

    template <typename Fixes>
    std::vector<Permutation> automorphisms_of(std::size_t n, Fixes&& fixes) {
      std::vector<Element> images(n);
      std::iota(images.begin(), images.end(), Element{0});
      std::vector<Permutation> out;
      do {
        Permutation p(images);
        if (fixes(p)) {
          out.push_back(std::move(p));
        }
      } while (std::next_permutation(images.begin(), images.end()));
      try {
        require_group(out);
      } catch (StructureError const& e) {
        throw std::logic_error(std::string("automorphisms do not form a group: ") + e.what());
      }
      return out;
    }
  }  // namespace detail

  // All permutations fixing both tables, in lexicographic order.
  inline std::vector<Permutation> automorphisms(DiStructure const& d) {
    return detail::automorphisms_of(
        d.order(), [&d](Permutation const& p) { return apply_permutation(d, p) == d; });
  }

  inline std::vector<Permutation> automorphisms(OpTable const& t) {
    return detail::automorphisms_of(
        t.order(), [&t](Permutation const& p) { return apply_permutation(t, p) == t; });
  }

  enum class GroupName { C1, C2, C3, C4, V4, C5, C6, S3, Other };

  // Abstract group type of a permutation group, decided by its order,
  // commutativity and the multiset of element orders.
  struct GroupId {
    std::size_t              order;
    bool                     abelian;
    std::vector<std::size_t> element_orders;  // sorted ascending
    GroupName                name;

    friend bool operator==(GroupId const&, GroupId const&) = default;
  };

  inline std::string to_string(GroupId const& g) {
    switch (g.name) {
      case GroupName::C1: return "C1";
      case GroupName::C2: return "C2";
      case GroupName::C3: return "C3";
      case GroupName::C4: return "C4";
      case GroupName::V4: return "V4";
      case GroupName::C5: return "C5";
      case GroupName::C6: return "C6";
      case GroupName::S3: return "S3";
      case GroupName::Other: break;
    }
    std::string orders;
    for (std::size_t i = 0; i < g.element_orders.size(); ++i) {
      orders += (i == 0 ? "" : ",") + std::to_string(g.element_orders[i]);
    }
    return "other(" + std::to_string(g.order) + "," + (g.abelian ? "abelian" : "nonabelian")
           + ",[" + orders + "])";
  }

  inline GroupId identify_group(std::vector<Permutation> const& perms) {
    detail::require_group(perms);
    std::size_t const n     = perms.front().size();
    auto const        id    = Permutation::identity(n);
    std::size_t const order = perms.size();

    std::vector<std::size_t> orders;
    for (auto const& p : perms) {
      std::size_t k = 1;
      for (Permutation q = p; q != id; q = compose(p, q)) {
        ++k;
      }
      orders.push_back(k);
    }
    std::sort(orders.begin(), orders.end());

    bool abelian = true;
    for (std::size_t i = 0; i < perms.size() && abelian; ++i) {
      for (std::size_t j = i + 1; j < perms.size(); ++j) {
        if (compose(perms[i], perms[j]) != compose(perms[j], perms[i])) {
          abelian = false;
          break;
        }
      }
    }

    std::size_t const max_order = orders.back();
    GroupName         name      = GroupName::Other;
    switch (order) {
      case 1: name = GroupName::C1; break;
      case 2: name = GroupName::C2; break;
      case 3: name = GroupName::C3; break;
      case 4: name = max_order == 4 ? GroupName::C4 : GroupName::V4; break;
      case 5: name = GroupName::C5; break;
      case 6: name = abelian ? GroupName::C6 : GroupName::S3; break;
      default: break;
    }
    return {order, abelian, std::move(orders), name};
  }

  inline nlohmann::json to_json(CanonicalKey const& k) {
    auto witness = nlohmann::json::array();
    for (Element v : k.witness.images()) {
      witness.push_back(static_cast<unsigned>(v));
    }
    return {{"order", k.order}, {"key", k.hex()}, {"witness", witness}};
  }

  inline nlohmann::json to_json(GroupId const& g) {
    return {{"name", to_string(g)},
            {"order", g.order},
            {"abelian", g.abelian},
            {"element_orders", g.element_orders}};
  }

}  // namespace dimonoid
