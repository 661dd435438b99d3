#pragma once

// Text and JSON forms of tables and table pairs.
//
// Text form: n lines of n space-separated base-10 integers. A DiStructure
// is the ⊣ block, one blank line, then the ⊢ block. serialize() always
// writes this canonical form, with every line terminated by '\n'.
//
// JSON form: {"order": n, "table": [[...], ...]} for a table and
// {"order": n, "left": [[...]], "right": [[...]]} for a pair.

#include <charconv>  // for std::from_chars
#include <cstddef>   // for std::size_t
#include <optional>  // for std::optional
#include <sstream>   // for std::ostringstream
#include <string>    // for std::string
#include <string_view>
#include <variant>  // for std::variant
#include <vector>   // for std::vector

#include <json.hpp>

#include "error.hpp"
#include "tables.hpp"

namespace dimonoid {

  namespace detail {
    struct TextLine {
      std::size_t      number;  // 1-based line number in the input
      std::string_view text;
    };

    inline std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }

    // Splits text into blocks of consecutive non-blank lines.
    inline std::vector<std::vector<TextLine>> split_blocks(std::string_view text) {
      std::vector<std::vector<TextLine>> blocks;
      std::vector<TextLine>              current;
      std::size_t                        number = 0;
      while (!text.empty() || number == 0) {
        ++number;
        auto const       nl   = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line = trim(line);
        if (line.empty()) {
          if (!current.empty()) {
            blocks.push_back(std::move(current));
            current.clear();
          }
        } else {
          current.push_back({number, line});
        }
        if (text.empty()) {
          break;
        }
      }
      if (!current.empty()) {
        blocks.push_back(std::move(current));
      }
      return blocks;
    }

    inline OpTable parse_block(std::vector<TextLine> const& lines,
                               std::optional<std::size_t> declared_order) {
      std::size_t const n = declared_order.value_or(lines.size());
      if (n == 0) {
        throw ParseError("order must be positive");
      }
      if (n > kMaxOrder) {
        throw ParseError("order " + std::to_string(n) + " exceeds the supported maximum "
                         + std::to_string(kMaxOrder));
      }
      if (lines.size() != n) {
        std::size_t const where = lines.empty() ? 0 : lines.back().number;
        throw ParseError("expected " + std::to_string(n) + " rows, found "
                             + std::to_string(lines.size()),
                         where);
      }
      std::vector<Element> entries;
      entries.reserve(n * n);
      for (auto const& line : lines) {
        std::string_view rest = line.text;
        std::size_t      col  = 0;
        while (!rest.empty()) {
          auto const       sep   = rest.find_first_of(" \t");
          std::string_view token = rest.substr(0, sep);
          rest = sep == std::string_view::npos ? std::string_view{}
                                               : trim(rest.substr(sep + 1));
          ++col;
          if (col > n) {
            throw ParseError("row has more than " + std::to_string(n) + " values", line.number,
                             col);
          }
          unsigned long value = 0;
          auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
          if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("malformed value '" + std::string(token) + "'", line.number, col);
          }
          if (value >= n) {
            throw ParseError("value " + std::to_string(value) + " is out of range for order "
                                 + std::to_string(n),
                             line.number, col);
          }
          entries.push_back(static_cast<Element>(value));
        }
        if (col != n) {
          throw ParseError("row has " + std::to_string(col) + " values, expected "
                               + std::to_string(n),
                           line.number);
        }
      }
      return OpTable(n, std::move(entries));
    }

    inline std::optional<std::size_t> json_order(nlohmann::json const& j) {
      if (!j.contains("order")) {
        return std::nullopt;
      }
      if (!j.at("order").is_number_unsigned()) {
        throw ParseError("field 'order' must be a positive integer");
      }
      return j.at("order").get<std::size_t>();
    }

    inline OpTable table_from_rows(nlohmann::json const& rows, std::optional<std::size_t> order,
                                   std::string const& field) {
      if (!rows.is_array()) {
        throw ParseError("field '" + field + "' must be an array of rows");
      }
      std::size_t const n = order.value_or(rows.size());
      if (n == 0 || n > kMaxOrder || rows.size() != n) {
        throw ParseError("field '" + field + "' must have " + std::to_string(n) + " rows");
      }
      std::vector<Element> entries;
      entries.reserve(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        auto const& row = rows[r];
        if (!row.is_array() || row.size() != n) {
          throw ParseError("field '" + field + "' row must hold " + std::to_string(n) + " values",
                           r + 1);
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (!row[c].is_number_unsigned() || row[c].get<std::size_t>() >= n) {
            throw ParseError("field '" + field + "' value out of range", r + 1, c + 1);
          }
          entries.push_back(static_cast<Element>(row[c].get<std::size_t>()));
        }
      }
      return OpTable(n, std::move(entries));
    }

    inline nlohmann::json rows_of(OpTable const& t) {
      auto rows = nlohmann::json::array();
      for (std::size_t x = 0; x < t.order(); ++x) {
        auto row = nlohmann::json::array();
        for (Element v : t.row(x)) {
          row.push_back(static_cast<unsigned>(v));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }
  }  // namespace detail

  // Parses one table. When declared_order is given the text must contain
  // exactly that many rows; otherwise the row count defines the order.
  inline OpTable parse_table(std::string_view text,
                             std::optional<std::size_t> declared_order = std::nullopt) {
    auto const blocks = detail::split_blocks(text);
    if (blocks.empty()) {
      throw ParseError("empty input");
    }
    if (blocks.size() != 1) {
      throw ParseError("expected a single table, found " + std::to_string(blocks.size())
                           + " blocks",
                       blocks[1].front().number);
    }
    return detail::parse_block(blocks.front(), declared_order);
  }

  // Parses two blocks separated by a blank line.
  inline DiStructure parse_distructure(std::string_view text,
                                       std::optional<std::size_t> declared_order = std::nullopt) {
    auto const blocks = detail::split_blocks(text);
    if (blocks.size() != 2) {
      throw ParseError("expected two tables separated by a blank line, found "
                       + std::to_string(blocks.size()) + " blocks");
    }
    OpTable left  = detail::parse_block(blocks[0], declared_order);
    OpTable right = detail::parse_block(blocks[1], declared_order.value_or(left.order()));
    return DiStructure(std::move(left), std::move(right));
  }

  inline std::string serialize(OpTable const& t) {
    std::ostringstream out;
    for (std::size_t x = 0; x < t.order(); ++x) {
      for (std::size_t y = 0; y < t.order(); ++y) {
        if (y != 0) {
          out << ' ';
        }
        out << static_cast<unsigned>(t(x, y));
      }
      out << '\n';
    }
    return out.str();
  }

  inline std::string serialize(DiStructure const& d) {
    return serialize(d.left()) + "\n" + serialize(d.right());
  }

  inline nlohmann::json to_json(OpTable const& t) {
    return {{"order", t.order()}, {"table", detail::rows_of(t)}};
  }

  inline nlohmann::json to_json(DiStructure const& d) {
    return {{"order", d.order()},
            {"left", detail::rows_of(d.left())},
            {"right", detail::rows_of(d.right())}};
  }

  inline nlohmann::json to_json(Permutation const& p) {
    auto out = nlohmann::json::array();
    for (Element v : p.images()) {
      out.push_back(static_cast<unsigned>(v));
    }
    return out;
  }

  inline OpTable table_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("table")) {
      throw ParseError("expected an object with a 'table' field");
    }
    return detail::table_from_rows(j.at("table"), detail::json_order(j), "table");
  }

  inline DiStructure distructure_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("left") || !j.contains("right")) {
      throw ParseError("expected an object with 'left' and 'right' fields");
    }
    auto const order = detail::json_order(j);
    return DiStructure(detail::table_from_rows(j.at("left"), order, "left"),
                       detail::table_from_rows(j.at("right"), order, "right"));
  }

  // Reads either form; a single table comes back as an OpTable, a pair as
  // a DiStructure.
  inline std::variant<OpTable, DiStructure> parse_structure(std::string_view text) {
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      if (j.contains("left")) {
        return distructure_from_json(j);
      }
      return table_from_json(j);
    }
    auto const blocks = detail::split_blocks(text);
    if (blocks.size() == 1) {
      return parse_table(text);
    }
    return parse_distructure(text);
  }

}  // namespace dimonoid
