#pragma once

// Command-line front end. Data goes to the output stream (or --out),
// diagnostics to the error stream. Exit status: 0 success, 1 negative
// verdict, 2 usage or input error.

#include <charconv>  // for std::from_chars
#include <cstdlib>   // for std::getenv
#include <fstream>   // for std::ifstream, std::ofstream
#include <iostream>  // for std::ostream
#include <optional>  // for std::optional
#include <sstream>   // for std::ostringstream
#include <string>    // for std::string
#include <string_view>
#include <type_traits>  // for std::is_same_v
#include <variant>   // for std::visit
#include <vector>    // for std::vector

#include <CLI11.hpp>
#include <json.hpp>

#include "axioms.hpp"
#include "catalog.hpp"
#include "classify.hpp"
#include "codec.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "iso.hpp"
#include "tables.hpp"

namespace dimonoid::cli {

  inline constexpr int kExitOk       = 0;
  inline constexpr int kExitNegative = 1;
  inline constexpr int kExitUsage    = 2;

  // Environment variable supplying the worker count when --workers is
  // not given.
  inline constexpr char const* kWorkersEnv = "DIMONOID_WORKERS";

  enum class Command { Check, CatalogList, CatalogBuild, Iso, Aut, Dual, Enumerate, Classify, Problem1 };

  struct RunConfig {
    Command                    command = Command::Check;
    std::size_t                order   = 0;
    StructureKind              kind    = StructureKind::Dimonoid;
    std::string                format;  // empty: the command's default
    std::size_t                workers = 1;
    std::vector<std::string>   inputs;
    std::optional<std::string> output;
    std::optional<std::string> summary_output;
    std::string                name;
    std::string                mode = "dimonoid";
    bool                       allow_large = false;
  };

  namespace detail {
    class UsageError : public Error {
     public:
      using Error::Error;
    };

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UsageError("cannot read '" + path + "'");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    inline std::variant<OpTable, DiStructure> read_structure(std::string const& path) {
      std::string const text = read_file(path);
      try {
        return parse_structure(text);
      } catch (ParseError const& e) {
        throw ParseError(path + ": " + e.what());
      }
    }

    inline char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    inline std::string triple_text(Triple const& t) {
      return "(" + std::to_string(t.x) + ", " + std::to_string(t.y) + ", " + std::to_string(t.z)
             + ")";
    }

    inline std::string permutation_text(Permutation const& p) {
      std::string out = "[";
      for (std::size_t i = 0; i < p.size(); ++i) {
        out += (i == 0 ? "" : " ") + std::to_string(p[i]);
      }
      return out + "]";
    }

    inline CheckMode check_mode(std::string const& mode) {
      if (mode == "dimonoid") {
        return CheckMode::Dimonoid;
      }
      if (mode == "doppelsemigroup") {
        return CheckMode::Doppelsemigroup;
      }
      throw UsageError("unknown mode '" + mode + "' (expected dimonoid or doppelsemigroup)");
    }

    inline PairMode pair_mode(std::string const& mode) {
      if (mode == "unchecked") {
        return PairMode::Unchecked;
      }
      return check_mode(mode) == CheckMode::Dimonoid ? PairMode::Dimonoid
                                                     : PairMode::Doppelsemigroup;
    }

    inline bool json_format(RunConfig const& c) {
      if (c.format.empty() || c.format == "text") {
        return false;
      }
      if (c.format == "json") {
        return true;
      }
      throw UsageError("unknown format '" + c.format + "' (expected text or json)");
    }

    inline void write_profile(std::ostream& out, char const* label, OpTable const& t) {
      auto const p = semigroup_profile(t);
      if (!p) {
        out << label << ": not associative\n";
        return;
      }
      out << label << ": commutative " << yes_no(p->commutative) << ", band " << yes_no(p->band)
          << ", semilattice " << yes_no(p->semilattice) << ", right commutative "
          << yes_no(p->right_commutative) << ", identity "
          << (p->identity ? std::to_string(*p->identity) : "none") << ", zero "
          << (p->zero ? std::to_string(*p->zero) : "none") << '\n';
    }

    inline void write_verdict(std::ostream& out, AxiomVerdict const& v) {
      for (Axiom a : {Axiom::LeftAssociative, Axiom::RightAssociative, Axiom::D1, Axiom::D2,
                      Axiom::D3, Axiom::D4}) {
        auto const r = v.result(a);
        if (!r) {
          continue;
        }
        out << "  " << axiom_name(a) << ": "
            << (r->holds() ? std::string("holds") : "fails at " + triple_text(*r->witness))
            << '\n';
      }
    }

    inline int run_check(RunConfig const& c, std::ostream& out) {
      bool const json      = json_format(c);
      auto const structure = read_structure(c.inputs.at(0));
      if (auto const* t = std::get_if<OpTable>(&structure)) {
        auto const assoc = is_associative(*t);
        if (json) {
          nlohmann::json j = {{"associative", assoc.holds()}};
          if (auto p = semigroup_profile(*t)) {
            j["profile"] = to_json(*p);
          } else {
            auto const& w        = *assoc.witness;
            j["first_failure"] = {w.x, w.y, w.z};
          }
          out << j.dump(2) << '\n';
        } else {
          out << "associative: " << yes_no(assoc.holds());
          if (!assoc.holds()) {
            out << " (fails at " << triple_text(*assoc.witness) << ")";
          }
          out << '\n';
          write_profile(out, "profile", *t);
        }
        return assoc.holds() ? kExitOk : kExitNegative;
      }

      auto const& d         = std::get<DiStructure>(structure);
      auto const  dim       = check_dimonoid(d);
      auto const  dop       = check_doppelsemigroup(d);
      auto const  profile   = dimonoid_profile(d);
      bool const  passed    = check_mode(c.mode) == CheckMode::Dimonoid ? dim.passed() : dop.passed();
      if (json) {
        nlohmann::json j = {{"dimonoid", to_json(dim)},
                            {"doppelsemigroup", to_json(dop)},
                            {"profile", to_json(profile)}};
        if (auto p = semigroup_profile(d.left())) {
          j["left_profile"] = to_json(*p);
        }
        if (auto p = semigroup_profile(d.right())) {
          j["right_profile"] = to_json(*p);
        }
        out << j.dump(2) << '\n';
      } else {
        out << "dimonoid: " << yes_no(dim.passed()) << "; abelian: " << yes_no(profile.abelian)
            << "; commutative: " << yes_no(profile.commutative) << '\n';
        out << "doppelsemigroup: " << yes_no(dop.passed()) << "; trivial: "
            << yes_no(profile.trivial) << '\n';
        out << "dimonoid axioms:\n";
        write_verdict(out, dim);
        out << "doppelsemigroup axioms:\n";
        write_verdict(out, dop);
        write_profile(out, "left", d.left());
        write_profile(out, "right", d.right());
      }
      return passed ? kExitOk : kExitNegative;
    }

    inline char const* kind_text(NamedKind k) {
      switch (k) {
        case NamedKind::Semigroup: return "semigroup";
        case NamedKind::Dimonoid: return "dimonoid";
        case NamedKind::Doppelsemigroup: return "doppelsemigroup";
      }
      return "?";
    }

    inline int run_catalog_list(RunConfig const& c, std::ostream& out) {
      bool const json = json_format(c);
      auto       all  = nlohmann::json::array();
      for (auto const& e : named_structures()) {
        if (json) {
          all.push_back({{"name", e.display},
                         {"expr", e.expr},
                         {"kind", kind_text(e.kind)},
                         {"order", e.order}});
        } else {
          out << e.display << '\t' << e.expr << '\t' << kind_text(e.kind) << '\t' << e.order
              << '\n';
        }
      }
      if (json) {
        out << all.dump(2) << '\n';
      }
      return kExitOk;
    }

    inline int run_catalog_build(RunConfig const& c, std::ostream& out) {
      bool const json = json_format(c);
      auto       emit = [&](auto const& value) {
        out << (json ? to_json(value).dump(2) + "\n" : serialize(value));
      };
      for (auto const& e : named_structures()) {
        if (e.display == c.name) {
          emit(build_named(e));
          return kExitOk;
        }
      }
      std::optional<StructureName> semigroup;
      try {
        semigroup = parse_structure_name(c.name);
      } catch (ParseError const&) {
      }
      if (semigroup) {
        emit(build_semigroup(*semigroup));
      } else {
        emit(build_dimonoid(c.name, pair_mode(c.mode)));
      }
      return kExitOk;
    }

    inline int run_iso(RunConfig const& c, std::ostream& out) {
      auto const a = read_structure(c.inputs.at(0));
      auto const b = read_structure(c.inputs.at(1));
      if (a.index() != b.index()) {
        throw UsageError("cannot compare a single table with a pair of tables");
      }
      std::optional<Permutation> psi;
      if (a.index() == 0) {
        psi = are_isomorphic(std::get<OpTable>(a), std::get<OpTable>(b));
      } else {
        psi = are_isomorphic(std::get<DiStructure>(a), std::get<DiStructure>(b));
      }
      if (json_format(c)) {
        out << nlohmann::json{{"isomorphic", psi.has_value()},
                              {"witness", psi ? to_json(*psi) : nlohmann::json(nullptr)}}
                   .dump(2)
            << '\n';
      } else {
        out << "isomorphic: " << yes_no(psi.has_value()) << '\n';
        if (psi) {
          out << "witness: " << permutation_text(*psi) << '\n';
        }
      }
      return psi ? kExitOk : kExitNegative;
    }

    inline int run_aut(RunConfig const& c, std::ostream& out) {
      auto const structure = read_structure(c.inputs.at(0));
      auto const perms     = std::visit([](auto const& s) { return automorphisms(s); }, structure);
      auto const group     = identify_group(perms);
      if (json_format(c)) {
        auto list = nlohmann::json::array();
        for (auto const& p : perms) {
          list.push_back(to_json(p));
        }
        out << nlohmann::json{{"group", to_json(group)}, {"automorphisms", list}}.dump(2) << '\n';
      } else {
        out << "group: " << to_string(group) << " (order " << group.order << ")\n";
        for (auto const& p : perms) {
          out << permutation_text(p) << '\n';
        }
      }
      return kExitOk;
    }

    inline int run_dual(RunConfig const& c, std::ostream& out) {
      auto const structure = read_structure(c.inputs.at(0));
      bool const json      = json_format(c);
      std::visit(
          [&](auto const& s) {
            auto const d = [&] {
              if constexpr (std::is_same_v<std::decay_t<decltype(s)>, OpTable>) {
                return transpose(s);
              } else {
                return dual_dimonoid(s);
              }
            }();
            out << (json ? to_json(d).dump(2) + "\n" : serialize(d));
          },
          structure);
      return kExitOk;
    }

    inline int run_enumerate(RunConfig const& c, std::ostream& out, std::ostream& err,
                             std::ostream* summary) {
      auto const result = enumerate(c.order, c.kind, c.workers, c.allow_large);
      out << to_json_lines(result);
      auto const s = summary_json(result);
      if (summary != nullptr) {
        *summary << s.dump(2) << '\n';
      }
      err << "enumerated " << s["classes"] << " " << to_string(c.kind) << " classes of order "
          << c.order << " from " << s["labeled_count"] << " labeled structures\n";
      return kExitOk;
    }

    inline int run_classify(RunConfig const& c, std::ostream& out) {
      auto const format = parse_format(c.format.empty() ? "markdown" : c.format);
      auto const report = classify(enumerate(c.order, c.kind, c.workers, c.allow_large));
      out << render_report(report, format);
      return kExitOk;
    }

    inline int run_problem1(RunConfig const& c, std::ostream& out) {
      auto const format = parse_format(c.format.empty() ? "markdown" : c.format);
      out << render_report(solve_problem1(c.workers), format);
      return kExitOk;
    }
  }  // namespace detail

  // Runs one validated configuration.
  inline int dispatch(RunConfig const& config, std::ostream& out, std::ostream& err) {
    try {
      if (config.workers == 0) {
        throw detail::UsageError("workers must be at least 1");
      }
      std::ofstream file;
      std::ofstream summary_file;
      if (config.output) {
        file.open(*config.output, std::ios::binary | std::ios::trunc);
        if (!file) {
          throw detail::UsageError("cannot write '" + *config.output + "'");
        }
      }
      if (config.summary_output) {
        summary_file.open(*config.summary_output, std::ios::binary | std::ios::trunc);
        if (!summary_file) {
          throw detail::UsageError("cannot write '" + *config.summary_output + "'");
        }
      }
      std::ostream& sink = config.output ? static_cast<std::ostream&>(file) : out;
      switch (config.command) {
        case Command::Check: return detail::run_check(config, sink);
        case Command::CatalogList: return detail::run_catalog_list(config, sink);
        case Command::CatalogBuild: return detail::run_catalog_build(config, sink);
        case Command::Iso: return detail::run_iso(config, sink);
        case Command::Aut: return detail::run_aut(config, sink);
        case Command::Dual: return detail::run_dual(config, sink);
        case Command::Enumerate:
          return detail::run_enumerate(config, sink, err,
                                       config.summary_output ? &summary_file : nullptr);
        case Command::Classify: return detail::run_classify(config, sink);
        case Command::Problem1: return detail::run_problem1(config, sink);
      }
      throw detail::UsageError("no command given");
    } catch (AxiomError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitNegative;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  namespace detail {
    inline std::optional<std::size_t> workers_from_env() {
      char const* value = std::getenv(kWorkersEnv);
      if (value == nullptr || *value == '\0') {
        return std::nullopt;
      }
      std::size_t parsed = 0;
      auto const  text   = std::string_view(value);
      auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
      if (ec != std::errc{} || ptr != text.data() + text.size() || parsed == 0) {
        throw UsageError(std::string(kWorkersEnv) + " must be a positive integer, found '" + value
                         + "'");
      }
      return parsed;
    }
  }  // namespace detail

  // Parses argv-style arguments (without the program name) and runs them.
  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig                  config;
    std::optional<std::size_t> workers;
    std::string                kind = "dimonoid";

    CLI::App app{"Check, canonicalize, enumerate and classify small dimonoids"};
    app.name("dimonoid");
    app.require_subcommand(1);

    auto add_format = [&config](CLI::App* sub, std::string const& choices) {
      sub->add_option("--format", config.format, "Output format (" + choices + ")");
    };
    auto add_out = [&config](CLI::App* sub) {
      sub->add_option("--out", config.output, "Write data to this file instead of stdout");
    };

    auto* check = app.add_subcommand("check", "Verify the axioms of a table or table pair");
    check->add_option("file", config.inputs, "Input file")->required()->expected(1);
    check->add_option("--mode", config.mode, "dimonoid or doppelsemigroup");
    add_format(check, "text, json");
    add_out(check);

    auto* catalog = app.add_subcommand("catalog", "Named structures");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "List the named structures");
    add_format(list, "text, json");
    add_out(list);
    auto* build = catalog->add_subcommand("build", "Build a structure from its name");
    build->add_option("name", config.name, "Name or grammar expression")->required();
    build->add_option("--mode", config.mode, "dimonoid, doppelsemigroup or unchecked");
    add_format(build, "text, json");
    add_out(build);

    auto* iso = app.add_subcommand("iso", "Test two structures for isomorphism");
    iso->add_option("files", config.inputs, "Two input files")->required()->expected(2);
    add_format(iso, "text, json");
    add_out(iso);

    auto* aut = app.add_subcommand("aut", "Automorphism group of a structure");
    aut->add_option("file", config.inputs, "Input file")->required()->expected(1);
    add_format(aut, "text, json");
    add_out(aut);

    auto* dual = app.add_subcommand("dual", "Dual of a table or table pair");
    dual->add_option("file", config.inputs, "Input file")->required()->expected(1);
    add_format(dual, "text, json");
    add_out(dual);

    auto add_enumeration = [&](CLI::App* sub, bool with_order) {
      if (with_order) {
        sub->add_option("--order", config.order, "Order n")->required()->check(CLI::PositiveNumber);
        sub->add_option("--kind", kind, "semigroup, doppelsemigroup or dimonoid");
        sub->add_flag("--allow-large-n", config.allow_large, "Attempt orders above the limit");
      }
      sub->add_option("--workers", workers, "Worker threads (default from " + std::string(kWorkersEnv) + " or 1)");
      add_out(sub);
    };

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate classes as JSON lines");
    add_enumeration(enumerate_cmd, true);
    enumerate_cmd->add_option("--summary", config.summary_output, "Write a summary JSON file");

    auto* classify_cmd = app.add_subcommand("classify", "Classification report for one order");
    add_enumeration(classify_cmd, true);
    add_format(classify_cmd, "markdown, csv, json");

    auto* problem1 = app.add_subcommand(
        "problem1", "Nontrivial noncommutative nonabelian dimonoids of order 3");
    add_enumeration(problem1, false);
    add_format(problem1, "markdown, csv, json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kExitOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }

    if (check->parsed()) {
      config.command = Command::Check;
    } else if (list->parsed()) {
      config.command = Command::CatalogList;
    } else if (build->parsed()) {
      config.command = Command::CatalogBuild;
    } else if (iso->parsed()) {
      config.command = Command::Iso;
    } else if (aut->parsed()) {
      config.command = Command::Aut;
    } else if (dual->parsed()) {
      config.command = Command::Dual;
    } else if (enumerate_cmd->parsed()) {
      config.command = Command::Enumerate;
    } else if (classify_cmd->parsed()) {
      config.command = Command::Classify;
    } else {
      config.command = Command::Problem1;
    }

    try {
      config.kind    = parse_kind(kind);
      config.workers = workers ? *workers : detail::workers_from_env().value_or(1);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return dispatch(config, out, err);
  }

  inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
      args.emplace_back(argv[i]);
    }
    return run(std::move(args), out, err);
  }

}  // namespace dimonoid::cli
