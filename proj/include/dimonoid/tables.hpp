#pragma once

// Value types shared by every other module: Cayley tables, pairs of
// tables, and permutations of the carrier {0, ..., n - 1}.

#include <compare>    // for std::strong_ordering
#include <cstddef>    // for std::size_t
#include <cstdint>    // for std::uint8_t
#include <numeric>    // for std::iota
#include <span>       // for std::span
#include <string>     // for std::to_string
#include <utility>    // for std::move
#include <vector>     // for std::vector

#include "error.hpp"

namespace dimonoid {

  using Element = std::uint8_t;

  // Largest order representable with Element entries.
  inline constexpr std::size_t kMaxOrder = 255;

  namespace detail {
    inline void validate_order(std::size_t n) {
      if (n == 0) {
        throw DimensionError("order must be positive, found 0");
      }
      if (n > kMaxOrder) {
        throw DimensionError("order must be at most " + std::to_string(kMaxOrder) + ", found "
                             + std::to_string(n));
      }
    }
  }  // namespace detail

  // A binary operation on {0, ..., n - 1}, stored row-major: the entry at
  // (x, y) is the product x * y.
  class OpTable {
   public:
    OpTable(std::size_t order, std::vector<Element> entries)
        : _order(order), _entries(std::move(entries)) {
      detail::validate_order(_order);
      if (_entries.size() != _order * _order) {
        throw DimensionError("a table of order " + std::to_string(_order) + " needs "
                             + std::to_string(_order * _order) + " entries, found "
                             + std::to_string(_entries.size()));
      }
      for (std::size_t i = 0; i < _entries.size(); ++i) {
        if (_entries[i] >= _order) {
          throw DimensionError("entry (" + std::to_string(i / _order) + ","
                               + std::to_string(i % _order) + ") = "
                               + std::to_string(_entries[i]) + " is not below the order "
                               + std::to_string(_order));
        }
      }
    }

    template <typename Func>
    static OpTable from_function(std::size_t order, Func&& f) {
      detail::validate_order(order);
      std::vector<Element> entries(order * order);
      for (std::size_t x = 0; x < order; ++x) {
        for (std::size_t y = 0; y < order; ++y) {
          entries[x * order + y] = static_cast<Element>(f(x, y));
        }
      }
      return OpTable(order, std::move(entries));
    }

    std::size_t order() const noexcept {
      return _order;
    }

    Element operator()(std::size_t x, std::size_t y) const noexcept {
      return _entries[x * _order + y];
    }

    std::span<Element const> entries() const noexcept {
      return _entries;
    }

    std::span<Element const> row(std::size_t x) const noexcept {
      return std::span<Element const>(_entries).subspan(x * _order, _order);
    }

    friend bool operator==(OpTable const&, OpTable const&) = default;
    friend auto operator<=>(OpTable const&, OpTable const&) = default;

   private:
    std::size_t          _order;
    std::vector<Element> _entries;
  };

  // A candidate dimonoid or doppelsemigroup: `left` is the table of ⊣ and
  // `right` the table of ⊢.
  class DiStructure {
   public:
    DiStructure(OpTable left, OpTable right) : _left(std::move(left)), _right(std::move(right)) {
      if (_left.order() != _right.order()) {
        throw DimensionError("left table has order " + std::to_string(_left.order())
                             + " but right table has order " + std::to_string(_right.order()));
      }
    }

    std::size_t order() const noexcept {
      return _left.order();
    }
    OpTable const& left() const noexcept {
      return _left;
    }
    OpTable const& right() const noexcept {
      return _right;
    }

    friend bool operator==(DiStructure const&, DiStructure const&) = default;
    friend auto operator<=>(DiStructure const&, DiStructure const&) = default;

   private:
    OpTable _left;
    OpTable _right;
  };

  // A bijection of {0, ..., n - 1}; images[x] is the image of x.
  class Permutation {
   public:
    explicit Permutation(std::vector<Element> images) : _images(std::move(images)) {
      detail::validate_order(_images.size());
      std::vector<bool> seen(_images.size(), false);
      for (Element v : _images) {
        if (v >= _images.size() || seen[v]) {
          throw DimensionError("image sequence is not a bijection of {0,...,"
                               + std::to_string(_images.size() - 1) + "}");
        }
        seen[v] = true;
      }
    }

    static Permutation identity(std::size_t n) {
      detail::validate_order(n);
      std::vector<Element> images(n);
      std::iota(images.begin(), images.end(), Element{0});
      return Permutation(std::move(images));
    }

    std::size_t size() const noexcept {
      return _images.size();
    }

    Element operator[](std::size_t x) const noexcept {
      return _images[x];
    }

    std::span<Element const> images() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept {
      for (std::size_t x = 0; x < _images.size(); ++x) {
        if (_images[x] != x) {
          return false;
        }
      }
      return true;
    }

    Permutation inverse() const {
      std::vector<Element> inv(_images.size());
      for (std::size_t x = 0; x < _images.size(); ++x) {
        inv[_images[x]] = static_cast<Element>(x);
      }
      return Permutation(std::move(inv));
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<Element> _images;
  };

  // compose(q, p) is "q after p": x -> q(p(x)).
  inline Permutation compose(Permutation const& q, Permutation const& p) {
    if (q.size() != p.size()) {
      throw DimensionError("cannot compose permutations of degree " + std::to_string(q.size())
                           + " and " + std::to_string(p.size()));
    }
    std::vector<Element> images(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      images[x] = q[p[x]];
    }
    return Permutation(std::move(images));
  }

  // Relabels t along p: the result r satisfies r(p(x), p(y)) = p(t(x, y)),
  // so p is an isomorphism from t onto r. Applying p and then q equals
  // applying compose(q, p) once.
  inline OpTable apply_permutation(OpTable const& t, Permutation const& p) {
    std::size_t const n = t.order();
    if (p.size() != n) {
      throw DimensionError("permutation of degree " + std::to_string(p.size())
                           + " cannot relabel a table of order " + std::to_string(n));
    }
    std::vector<Element> entries(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        entries[p[x] * n + p[y]] = p[t(x, y)];
      }
    }
    return OpTable(n, std::move(entries));
  }

  inline DiStructure apply_permutation(DiStructure const& d, Permutation const& p) {
    return DiStructure(apply_permutation(d.left(), p), apply_permutation(d.right(), p));
  }

  // The dual operation x *d y = y * x.
  inline OpTable transpose(OpTable const& t) {
    return OpTable::from_function(t.order(), [&t](std::size_t x, std::size_t y) { return t(y, x); });
  }

  // x ⊣d y = y ⊢ x and x ⊢d y = y ⊣ x.
  inline DiStructure dual_dimonoid(DiStructure const& d) {
    return DiStructure(transpose(d.right()), transpose(d.left()));
  }

  inline bool is_commutative(OpTable const& t) noexcept {
    std::size_t const n = t.order();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (t(x, y) != t(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace dimonoid
