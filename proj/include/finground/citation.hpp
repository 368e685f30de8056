#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "finground/domain.hpp"
#include "finground/errors.hpp"

namespace finground {

// Inline citation, rendered in exactly one of two forms:
//   [Doc:<id>, §<section>, p.<page>]
//   [Doc:<id>, Table <table>, Row: <row_label>, Col: <col_label>]
// Row/Col use header labels; the numeric indices travel alongside so
// resolution can cross-check labels against the cited positions.
struct Citation {
  enum class Kind { paragraph, table_cell };

  Kind kind = Kind::paragraph;
  std::string document_id;
  // paragraph form
  std::string section_id;
  int page = 1;
  // table_cell form
  std::string table_id;
  std::string row_label;
  std::string col_label;
  std::optional<int> row_index;
  std::optional<int> col_index;

  static Citation paragraph(std::string doc, std::string section, int page) {
    Citation c;
    c.kind = Kind::paragraph;
    c.document_id = std::move(doc);
    c.section_id = std::move(section);
    c.page = page;
    return c;
  }

  static Citation table_cell(std::string doc, std::string table, std::string row, std::string col,
                             std::optional<int> row_index = std::nullopt,
                             std::optional<int> col_index = std::nullopt) {
    Citation c;
    c.kind = Kind::table_cell;
    c.document_id = std::move(doc);
    c.table_id = std::move(table);
    c.row_label = std::move(row);
    c.col_label = std::move(col);
    c.row_index = row_index;
    c.col_index = col_index;
    return c;
  }

  static Citation from_provenance(const ProvenanceTuple& p) {
    if (p.element_type == ElementType::table_cell) {
      const CellAddress& a = *p.cell;
      return table_cell(p.document_id, a.table_id, a.row_label, a.col_label, a.row_index,
                        a.col_index);
    }
    return paragraph(p.document_id, p.section_id, p.page);
  }

  std::string rendered() const {
    if (kind == Kind::paragraph)
      return "[Doc:" + document_id + ", §" + section_id + ", p." + std::to_string(page) + "]";
    return "[Doc:" + document_id + ", Table " + table_id + ", Row: " + row_label +
           ", Col: " + col_label + "]";
  }

  // Identity key used when comparing emitted vs gold citations.
  std::string identity() const {
    if (kind == Kind::paragraph) return "p|" + document_id + "|" + section_id + "|" + std::to_string(page);
    return "t|" + document_id + "|" + table_id + "|" + row_label + "|" + col_label;
  }

  friend bool operator==(const Citation& a, const Citation& b) { return a.identity() == b.identity(); }

  // Parses a rendered citation; tolerates an optional space after "Doc:".
  static Citation parse(std::string_view s) {
    auto fail = [&] { throw DanglingCitation("unparseable citation: " + std::string(s)); };
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail();
    std::string_view body = s.substr(1, s.size() - 2);
    if (body.substr(0, 4) != "Doc:") fail();
    body.remove_prefix(4);
    if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    std::size_t comma = body.find(", ");
    if (comma == std::string_view::npos) fail();
    std::string doc(body.substr(0, comma));
    std::string_view rest = body.substr(comma + 2);

    if (rest.rfind("Table ", 0) == 0) {
      rest.remove_prefix(6);
      std::size_t row_at = rest.find(", Row: ");
      if (row_at == std::string_view::npos) fail();
      std::string table(rest.substr(0, row_at));
      std::string_view labels = rest.substr(row_at + 7);
      std::size_t col_at = labels.rfind(", Col: ");
      if (col_at == std::string_view::npos) fail();
      return table_cell(doc, table, std::string(labels.substr(0, col_at)),
                        std::string(labels.substr(col_at + 7)));
    }

    // "§<section>, p.<page>"  (§ is two bytes in UTF-8)
    if (rest.size() < 2 || static_cast<unsigned char>(rest[0]) != 0xC2 ||
        static_cast<unsigned char>(rest[1]) != 0xA7)
      fail();
    rest.remove_prefix(2);
    std::size_t p_at = rest.rfind(", p.");
    if (p_at == std::string_view::npos) fail();
    std::string section(rest.substr(0, p_at));
    int page = 0;
    for (char c : rest.substr(p_at + 4)) {
      if (!is_digit(c)) fail();
      page = page * 10 + (c - '0');
    }
    if (page < 1) fail();
    return paragraph(doc, section, page);
  }
};

inline void to_json(nlohmann::json& j, const Citation& c) {
  j = {{"rendered", c.rendered()}, {"document", c.document_id}};
  if (c.kind == Citation::Kind::paragraph) {
    j["kind"] = "paragraph";
    j["section"] = c.section_id;
    j["page"] = c.page;
  } else {
    j["kind"] = "table_cell";
    j["table"] = c.table_id;
    j["row_label"] = c.row_label;
    j["col_label"] = c.col_label;
    if (c.row_index) j["row"] = *c.row_index;
    if (c.col_index) j["col"] = *c.col_index;
  }
}

inline void from_json(const nlohmann::json& j, Citation& c) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "paragraph") {
    c = Citation::paragraph(j.at("document").get<std::string>(), j.at("section").get<std::string>(),
                            j.at("page").get<int>());
  } else {
    c = Citation::table_cell(j.at("document").get<std::string>(), j.at("table").get<std::string>(),
                             j.at("row_label").get<std::string>(),
                             j.at("col_label").get<std::string>());
    if (j.contains("row")) c.row_index = j.at("row").get<int>();
    if (j.contains("col")) c.col_index = j.at("col").get<int>();
  }
}

}  // namespace finground
