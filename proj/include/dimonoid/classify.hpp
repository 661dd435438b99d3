#pragma once

// Classification reports built from enumeration output: property flags,
// dual pairing, automorphism groups and conventional names.

#include <cstddef>   // for std::size_t
#include <map>       // for std::map
#include <optional>  // for std::optional
#include <set>       // for std::set
#include <sstream>   // for std::ostringstream
#include <string>    // for std::string
#include <vector>    // for std::vector

#include <json.hpp>

#include "axioms.hpp"
#include "catalog.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "iso.hpp"
#include "tables.hpp"

namespace dimonoid {

  inline constexpr int kReportSchemaVersion = 1;

  struct ClassRow {
    CanonicalKey               key;
    DiStructure                rep;
    std::optional<std::string> name;   // conventional name, if any
    std::string                label;  // name, or unnamed-<order>-<seq>
    bool                       trivial;
    bool                       commutative;
    bool                       abelian;
    GroupId                    aut;
    std::string                dual_key;  // hex key of the dual class
  };

  struct ReportSummary {
    std::size_t total                    = 0;
    std::size_t trivial                  = 0;
    std::size_t commutative              = 0;
    std::size_t abelian                  = 0;
    std::size_t nonabelian               = 0;
    std::size_t nonabelian_noncommutative = 0;
    std::size_t dual_pairs               = 0;  // unordered pairs of distinct classes
    std::size_t trivial_dual_pairs       = 0;
    std::size_t nontrivial_dual_pairs    = 0;
    std::size_t self_paired_nonabelian   = 0;
    std::size_t unnamed                  = 0;
    // Counts per combination of the trivial/commutative/abelian flags.
    std::map<std::string, std::size_t> cells;
  };

  struct ClassificationReport {
    std::size_t           order;
    StructureKind         kind;
    std::vector<ClassRow> rows;  // by key, each dual partner right after its mate
    ReportSummary         summary;
  };

  namespace detail {
    struct NamedKey {
      std::vector<Element> key;
      std::string          display;
    };

    inline std::vector<NamedKey> const& named_keys(NamedKind kind) {
      auto build = [](NamedKind k) {
        std::vector<NamedKey> out;
        for (auto const& entry : named_structures()) {
          if (entry.kind == k) {
            out.push_back({canonical_form(build_named(entry)).key, entry.display});
          }
        }
        return out;
      };
      static std::vector<NamedKey> const semigroups = build(NamedKind::Semigroup);
      static std::vector<NamedKey> const dimonoids  = build(NamedKind::Dimonoid);
      static std::vector<NamedKey> const doppel     = build(NamedKind::Doppelsemigroup);
      switch (kind) {
        case NamedKind::Semigroup: return semigroups;
        case NamedKind::Dimonoid: return dimonoids;
        case NamedKind::Doppelsemigroup: return doppel;
      }
      return semigroups;
    }

    inline std::string cell_name(bool trivial, bool commutative, bool abelian) {
      return std::string(trivial ? "trivial" : "nontrivial") + ","
             + (commutative ? "commutative" : "noncommutative") + ","
             + (abelian ? "abelian" : "nonabelian");
    }
  }  // namespace detail

  // The conventional name of d's isomorphism class. Semigroup names apply
  // to trivial pairs; pair names come from the dimonoid list or, for
  // doppelsemigroup reports, from the doppelsemigroup list.
  inline std::optional<std::string> match_names(DiStructure const& d,
                                                StructureKind kind = StructureKind::Dimonoid) {
    auto const key    = canonical_form(d).key;
    auto       lookup = [&key](NamedKind k) -> std::optional<std::string> {
      for (auto const& entry : detail::named_keys(k)) {
        if (entry.key == key) {
          return entry.display;
        }
      }
      return std::nullopt;
    };
    if (auto name = lookup(NamedKind::Semigroup)) {
      return name;
    }
    switch (kind) {
      case StructureKind::Semigroup: return std::nullopt;
      case StructureKind::Dimonoid: return lookup(NamedKind::Dimonoid);
      case StructureKind::Doppelsemigroup: return lookup(NamedKind::Doppelsemigroup);
    }
    return std::nullopt;
  }

  inline ReportSummary summarize(std::vector<ClassRow> const& rows) {
    ReportSummary s;
    std::set<std::string> keys;
    for (auto const& row : rows) {
      keys.insert(row.key.hex());
    }
    for (auto const& row : rows) {
      ++s.total;
      s.trivial += row.trivial;
      s.commutative += row.commutative;
      s.abelian += row.abelian;
      s.nonabelian += !row.abelian;
      s.nonabelian_noncommutative += !row.abelian && !row.commutative;
      s.unnamed += !row.name.has_value();
      ++s.cells[detail::cell_name(row.trivial, row.commutative, row.abelian)];
      std::string const own = row.key.hex();
      if (row.dual_key == own) {
        s.self_paired_nonabelian += !row.abelian;
      } else if (own < row.dual_key && keys.count(row.dual_key) != 0) {
        ++s.dual_pairs;
        if (row.trivial) {
          ++s.trivial_dual_pairs;
        } else {
          ++s.nontrivial_dual_pairs;
        }
      }
    }
    return s;
  }

  namespace detail {
    // Orders rows by key, moving each dual partner directly after the
    // first member of its pair.
    inline std::vector<ClassRow> pair_order(std::vector<ClassRow> rows) {
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        index[rows[i].key.hex()] = i;
      }
      std::vector<ClassRow> out;
      std::vector<bool>     emitted(rows.size(), false);
      for (auto const& [hex, i] : index) {
        if (emitted[i]) {
          continue;
        }
        emitted[i] = true;
        out.push_back(rows[i]);
        auto partner = index.find(rows[i].dual_key);
        if (partner != index.end() && !emitted[partner->second]) {
          emitted[partner->second] = true;
          out.push_back(rows[partner->second]);
        }
      }
      return out;
    }

    inline ClassificationReport make_report(std::size_t order, StructureKind kind,
                                            std::vector<ClassRow> rows) {
      ClassificationReport report{order, kind, pair_order(std::move(rows)), {}};
      report.summary = summarize(report.rows);
      return report;
    }
  }  // namespace detail

  inline ClassificationReport classify(EnumerationResult const& result) {
    std::vector<ClassRow> rows;
    rows.reserve(result.class_reps.size());
    std::size_t unnamed = 0;
    for (auto const& cls : result.class_reps) {  // ascending key order
      DiStructure const& d       = cls.rep;
      auto const         profile = dimonoid_profile(d);
      auto               name    = match_names(d, result.kind);
      std::string        label =
          name ? *name
                        : "unnamed-" + std::to_string(result.order) + "-" + std::to_string(++unnamed);
      rows.push_back(ClassRow{cls.key,
                              d,
                              std::move(name),
                              std::move(label),
                              profile.trivial,
                              profile.commutative,
                              profile.abelian,
                              identify_group(automorphisms(d)),
                              canonical_form(dual_dimonoid(d)).hex()});
    }
    return detail::make_report(result.order, result.kind, std::move(rows));
  }

  inline ClassificationReport classify_dimonoids(EnumerationResult const& result) {
    if (result.kind != StructureKind::Dimonoid) {
      throw PreconditionError("expected a dimonoid enumeration, found "
                              + to_string(result.kind));
    }
    return classify(result);
  }

  // Keeps the rows satisfying pred; the summary is recomputed.
  template <typename Pred>
  ClassificationReport restrict_report(ClassificationReport const& report, Pred&& pred) {
    std::vector<ClassRow> rows;
    for (auto const& row : report.rows) {
      if (pred(row)) {
        rows.push_back(row);
      }
    }
    return detail::make_report(report.order, report.kind, std::move(rows));
  }

  // All nontrivial, noncommutative, nonabelian dimonoids of order 3.
  inline ClassificationReport solve_problem1(std::size_t workers = 1) {
    auto const full = classify_dimonoids(enumerate_dimonoids(3, workers));
    return restrict_report(full, [](ClassRow const& row) {
      return !row.trivial && !row.commutative && !row.abelian;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  enum class ReportFormat { Markdown, Csv, Json };

  inline ReportFormat parse_format(std::string const& text) {
    if (text == "markdown" || text == "md") {
      return ReportFormat::Markdown;
    }
    if (text == "csv") {
      return ReportFormat::Csv;
    }
    if (text == "json") {
      return ReportFormat::Json;
    }
    throw ParameterError("unknown report format '" + text + "' (expected markdown, csv or json)");
  }

  namespace detail {
    inline std::string label_of_key(ClassificationReport const& report, std::string const& hex) {
      for (auto const& row : report.rows) {
        if (row.key.hex() == hex) {
          return row.label;
        }
      }
      return "";
    }

    inline std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') {
          out += '"';
        }
        out += c;
      }
      return out + "\"";
    }

    inline std::string render_markdown(ClassificationReport const& r) {
      std::ostringstream out;
      out << "| Name |";
      for (auto const& row : r.rows) {
        out << ' ' << row.label << " |";
      }
      out << "\n|---|";
      for (std::size_t i = 0; i < r.rows.size(); ++i) {
        out << "---|";
      }
      out << '\n';
      if (!r.rows.empty()) {
        out << "| Aut |";
        for (auto const& row : r.rows) {
          out << ' ' << to_string(row.aut) << " |";
        }
        out << '\n';
      }
      ReportSummary const& s = r.summary;
      out << "\n- total: " << s.total << "\n- trivial: " << s.trivial
          << "\n- commutative: " << s.commutative << "\n- abelian: " << s.abelian
          << "\n- nonabelian noncommutative: " << s.nonabelian_noncommutative
          << "\n- dual pairs: " << s.dual_pairs << " (trivial " << s.trivial_dual_pairs
          << ", nontrivial " << s.nontrivial_dual_pairs << ")"
          << "\n- self-paired nonabelian: " << s.self_paired_nonabelian
          << "\n- unnamed: " << s.unnamed << '\n';
      return out.str();
    }

    inline std::string render_csv(ClassificationReport const& r) {
      std::ostringstream out;
      out << "key,name,trivial,commutative,abelian,aut,dual_key,dual_name\n";
      for (auto const& row : r.rows) {
        out << row.key.hex() << ',' << csv_field(row.label) << ',' << row.trivial << ','
            << row.commutative << ',' << row.abelian << ',' << csv_field(to_string(row.aut)) << ','
            << row.dual_key << ',' << csv_field(label_of_key(r, row.dual_key)) << '\n';
      }
      return out.str();
    }
  }  // namespace detail

  inline nlohmann::json to_json(ReportSummary const& s) {
    return {{"total", s.total},
            {"trivial", s.trivial},
            {"commutative", s.commutative},
            {"abelian", s.abelian},
            {"nonabelian", s.nonabelian},
            {"nonabelian_noncommutative", s.nonabelian_noncommutative},
            {"dual_pairs", s.dual_pairs},
            {"trivial_dual_pairs", s.trivial_dual_pairs},
            {"nontrivial_dual_pairs", s.nontrivial_dual_pairs},
            {"self_paired_nonabelian", s.self_paired_nonabelian},
            {"unnamed", s.unnamed},
            {"cells", s.cells}};
  }

  inline nlohmann::json to_json(ClassificationReport const& r) {
    auto rows = nlohmann::json::array();
    for (auto const& row : r.rows) {
      rows.push_back({{"key", row.key.hex()},
                      {"name", row.name ? nlohmann::json(*row.name) : nlohmann::json(nullptr)},
                      {"label", row.label},
                      {"trivial", row.trivial},
                      {"commutative", row.commutative},
                      {"abelian", row.abelian},
                      {"aut", to_json(row.aut)},
                      {"dual_key", row.dual_key},
                      {"left", detail::rows_of(row.rep.left())},
                      {"right", detail::rows_of(row.rep.right())}});
    }
    return {{"schema_version", kReportSchemaVersion},
            {"order", r.order},
            {"kind", to_string(r.kind)},
            {"rows", rows},
            {"summary", to_json(r.summary)}};
  }

  inline std::string render_report(ClassificationReport const& r, ReportFormat format) {
    switch (format) {
      case ReportFormat::Markdown: return detail::render_markdown(r);
      case ReportFormat::Csv: return detail::render_csv(r);
      case ReportFormat::Json: return to_json(r).dump(2) + "\n";
    }
    throw ParameterError("unknown report format");
  }

  inline std::string render_report(ClassificationReport const& r, std::string const& format) {
    return render_report(r, parse_format(format));
  }

}  // namespace dimonoid
