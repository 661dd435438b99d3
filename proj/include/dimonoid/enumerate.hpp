#pragma once

// Exhaustive enumeration of associative tables, and of semigroups,
// doppelsemigroups and dimonoids up to isomorphism.

#include <algorithm>  // for std::min
#include <atomic>     // for std::atomic
#include <cstddef>    // for std::size_t
#include <map>        // for std::map
#include <mutex>      // for std::mutex, std::lock_guard
#include <string>     // for std::string
#include <thread>     // for std::thread
#include <vector>     // for std::vector

#include <json.hpp>

#include "axioms.hpp"
#include "codec.hpp"
#include "error.hpp"
#include "iso.hpp"
#include "tables.hpp"

namespace dimonoid {

  // Largest order enumerated without an explicit opt-in.
  inline constexpr std::size_t kMaxEnumerationOrder = 4;

  enum class StructureKind { Semigroup, Doppelsemigroup, Dimonoid };

  inline std::string to_string(StructureKind k) {
    switch (k) {
      case StructureKind::Semigroup: return "semigroup";
      case StructureKind::Doppelsemigroup: return "doppelsemigroup";
      case StructureKind::Dimonoid: return "dimonoid";
    }
    return "?";
  }

  inline StructureKind parse_kind(std::string const& text) {
    if (text == "semigroup") {
      return StructureKind::Semigroup;
    }
    if (text == "doppelsemigroup") {
      return StructureKind::Doppelsemigroup;
    }
    if (text == "dimonoid") {
      return StructureKind::Dimonoid;
    }
    throw ParameterError("unknown structure kind '" + text
                         + "' (expected semigroup, doppelsemigroup or dimonoid)");
  }

  // One isomorphism class: its key and the canonically relabeled
  // representative. Semigroups are stored as trivial pairs (t, t).
  struct ClassRep {
    CanonicalKey key;
    DiStructure  rep;
  };

  struct EnumerationResult {
    std::size_t           order;
    StructureKind         kind;
    std::size_t           labeled_count;
    std::vector<ClassRep> class_reps;  // ascending by key
  };

  namespace detail {
    inline void validate_enumeration_order(std::size_t n, bool allow_large) {
      if (n == 0) {
        throw RangeError("order must be at least 1");
      }
      if (n > kMaxEnumerationOrder && !allow_large) {
        throw RangeError("order " + std::to_string(n) + " exceeds the supported limit of "
                         + std::to_string(kMaxEnumerationOrder)
                         + "; pass the allow-large flag to attempt it anyway");
      }
      if (n > kMaxOrder) {
        throw RangeError("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
      }
    }

    // Cell-by-cell backtracking in row-major order. After each assignment
    // every triple whose four cells are already set is checked.
    class AssociativeSearch {
     public:
      explicit AssociativeSearch(std::size_t n) : _n(n), _cells(n * n, 0) {}

      std::vector<OpTable> run() {
        extend(0);
        return std::move(_found);
      }

     private:
      bool set(std::size_t x, std::size_t y, std::size_t filled) const {
        return x * _n + y < filled;
      }

      bool consistent(std::size_t filled) const {
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            if (!set(x, y, filled)) {
              continue;
            }
            std::size_t const xy = _cells[x * _n + y];
            for (std::size_t z = 0; z < _n; ++z) {
              if (!set(y, z, filled) || !set(xy, z, filled)) {
                continue;
              }
              std::size_t const yz = _cells[y * _n + z];
              if (!set(x, yz, filled)) {
                continue;
              }
              if (_cells[xy * _n + z] != _cells[x * _n + yz]) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void extend(std::size_t cell) {
        if (cell == _cells.size()) {
          _found.emplace_back(_n, _cells);
          return;
        }
        for (std::size_t v = 0; v < _n; ++v) {
          _cells[cell] = static_cast<Element>(v);
          if (consistent(cell + 1)) {
            extend(cell + 1);
          }
        }
        _cells[cell] = 0;
      }

      std::size_t          _n;
      std::vector<Element> _cells;
      std::vector<OpTable> _found;
    };

    inline bool pair_passes(OpTable const& l, OpTable const& r, StructureKind kind) {
      if (check_axiom(Axiom::D2, l, r).witness) {
        return false;
      }
      if (kind == StructureKind::Doppelsemigroup) {
        return !check_axiom(Axiom::D4, l, r).witness;
      }
      return !check_axiom(Axiom::D1, l, r).witness && !check_axiom(Axiom::D3, l, r).witness;
    }

    using ClassMap = std::map<std::vector<Element>, ClassRep>;

    inline void add_class(ClassMap& classes, DiStructure const& d) {
      auto key = canonical_form(d);
      if (classes.find(key.key) != classes.end()) {
        return;
      }
      DiStructure rep = apply_permutation(d, key.witness);
      auto        raw = key.key;
      classes.emplace(std::move(raw), ClassRep{std::move(key), std::move(rep)});
    }

    inline EnumerationResult finish(std::size_t n, StructureKind kind, std::size_t labeled,
                                    ClassMap&& classes) {
      EnumerationResult out{n, kind, labeled, {}};
      out.class_reps.reserve(classes.size());
      for (auto& [raw, cls] : classes) {
        out.class_reps.push_back(std::move(cls));
      }
      return out;
    }

    // Runs body(i, local_map, local_count) for i in [0, count) across
    // workers, then merges the per-worker maps.
    template <typename Body>
    std::pair<std::size_t, ClassMap> parallel_classes(std::size_t count, std::size_t workers,
                                                      Body&& body) {
      workers = std::max<std::size_t>(1, std::min(workers, count));
      std::size_t const chunk = std::max<std::size_t>(1, count / (workers * 8));
      std::atomic<std::size_t> next{0};
      std::mutex               merge_lock;
      std::size_t              labeled = 0;
      ClassMap                 merged;

      auto work = [&] {
        ClassMap    local;
        std::size_t local_count = 0;
        for (;;) {
          std::size_t const begin = next.fetch_add(chunk);
          if (begin >= count) {
            break;
          }
          for (std::size_t i = begin; i < std::min(count, begin + chunk); ++i) {
            body(i, local, local_count);
          }
        }
        std::lock_guard<std::mutex> guard(merge_lock);
        labeled += local_count;
        merged.merge(local);
      };

      if (workers == 1) {
        work();
      } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
          threads.emplace_back(work);
        }
        for (auto& t : threads) {
          t.join();
        }
      }
      return {labeled, std::move(merged)};
    }
  }  // namespace detail

  // Every associative table of order n, in lexicographic order of entries.
  inline std::vector<OpTable> enumerate_associative_tables(std::size_t n, bool allow_large = false) {
    detail::validate_enumeration_order(n, allow_large);
    return detail::AssociativeSearch(n).run();
  }

  inline EnumerationResult enumerate_semigroups(std::size_t n, std::size_t workers = 1,
                                                bool allow_large = false) {
    auto const tables = enumerate_associative_tables(n, allow_large);
    auto [labeled, classes] = detail::parallel_classes(
        tables.size(), workers, [&](std::size_t i, detail::ClassMap& local, std::size_t& count) {
          ++count;
          detail::add_class(local, DiStructure(tables[i], tables[i]));
        });
    return detail::finish(n, StructureKind::Semigroup, labeled, std::move(classes));
  }

  namespace detail {
    inline EnumerationResult enumerate_pairs(std::size_t n, StructureKind kind, std::size_t workers,
                                             bool allow_large) {
      auto const tables = enumerate_associative_tables(n, allow_large);
      auto [labeled, classes] = parallel_classes(
          tables.size(), workers, [&](std::size_t i, ClassMap& local, std::size_t& count) {
            for (auto const& right : tables) {
              if (pair_passes(tables[i], right, kind)) {
                ++count;
                add_class(local, DiStructure(tables[i], right));
              }
            }
          });
      return finish(n, kind, labeled, std::move(classes));
    }
  }  // namespace detail

  // Pairs of associative tables satisfying D1, D2 and D3.
  inline EnumerationResult enumerate_dimonoids(std::size_t n, std::size_t workers = 1,
                                               bool allow_large = false) {
    return detail::enumerate_pairs(n, StructureKind::Dimonoid, workers, allow_large);
  }

  // Pairs of associative tables satisfying D2 and D4.
  inline EnumerationResult enumerate_doppelsemigroups(std::size_t n, std::size_t workers = 1,
                                                      bool allow_large = false) {
    return detail::enumerate_pairs(n, StructureKind::Doppelsemigroup, workers, allow_large);
  }

  inline EnumerationResult enumerate(std::size_t n, StructureKind kind, std::size_t workers = 1,
                                     bool allow_large = false) {
    if (kind == StructureKind::Semigroup) {
      return enumerate_semigroups(n, workers, allow_large);
    }
    return detail::enumerate_pairs(n, kind, workers, allow_large);
  }

  // All labeled structures of a kind (semigroups as trivial pairs), in
  // lexicographic order of (left, right).
  inline std::vector<DiStructure> labeled_structures(std::size_t n, StructureKind kind,
                                                     bool allow_large = false) {
    auto const               tables = enumerate_associative_tables(n, allow_large);
    std::vector<DiStructure> out;
    for (auto const& left : tables) {
      if (kind == StructureKind::Semigroup) {
        out.emplace_back(left, left);
        continue;
      }
      for (auto const& right : tables) {
        if (detail::pair_passes(left, right, kind)) {
          out.emplace_back(left, right);
        }
      }
    }
    return out;
  }

  // One JSON object per class, each on its own line.
  inline std::string to_json_lines(EnumerationResult const& r) {
    std::string out;
    for (auto const& cls : r.class_reps) {
      nlohmann::json line = {{"key", cls.key.hex()},
                             {"kind", to_string(r.kind)},
                             {"order", r.order},
                             {"left", detail::rows_of(cls.rep.left())},
                             {"right", detail::rows_of(cls.rep.right())}};
      out += line.dump() + "\n";
    }
    return out;
  }

  inline nlohmann::json summary_json(EnumerationResult const& r) {
    return {{"order", r.order},
            {"kind", to_string(r.kind)},
            {"labeled_count", r.labeled_count},
            {"classes", r.class_reps.size()}};
  }

}  // namespace dimonoid
