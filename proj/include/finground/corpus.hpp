#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "finground/citation.hpp"
#include "finground/domain.hpp"
#include "finground/errors.hpp"
#include "finground/text.hpp"
#include "finground/util.hpp"

namespace finground {

inline constexpr const char* kCorpusSchemaVersion = "finground-corpus/1";

// ---------------------------------------------------------------------------
// Chunks
// ---------------------------------------------------------------------------

struct Chunk {
  std::string chunk_id;
  std::string text;
  ProvenanceTuple provenance;
  std::optional<CellAddress> cell;   // table-cell chunks only
  std::string header_context;        // "row_label | col_label" for table chunks

  bool is_cell() const { return cell.has_value(); }
};

struct ChunkPolicy {
  int max_tokens = 128;               // whitespace tokens per text chunk
  bool include_table_summary = true;  // emit one summary chunk per table
};

// ---------------------------------------------------------------------------
// Document parsing (corpus JSONL schema "finground-corpus/1")
// ---------------------------------------------------------------------------

namespace detail {

inline std::string flatten_header(const nlohmann::json& h) {
  if (h.is_string()) return h.get<std::string>();
  if (h.is_array()) {
    std::vector<std::string> parts;
    for (const auto& p : h) {
      if (!p.is_string()) throw SchemaError("header path element must be a string");
      parts.push_back(p.get<std::string>());
    }
    return join(parts, " / ");
  }
  throw SchemaError("header must be a string or an array of strings");
}

}  // namespace detail

// Parses one filing object. Tables are rectangularized: with column headers
// present, short rows are padded on the right (the only unambiguous
// alignment); rows longer than the header count, or ragged rows in a
// headerless table, raise TableShapeError. Numeric cells are pre-parsed and
// periods inferred from column headers.
inline Document parse_document(const nlohmann::json& raw) {
  if (!raw.is_object()) throw SchemaError("document must be a JSON object");
  if (raw.contains("schema")) {
    std::string v = raw.at("schema").get<std::string>();
    if (v != kCorpusSchemaVersion) throw SchemaError("unsupported corpus schema: " + v);
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!raw.contains(key)) throw SchemaError(std::string("missing required field: ") + key);
    return raw.at(key);
  };

  Document doc;
  doc.id = require("id").get<std::string>();
  if (doc.id.empty()) throw SchemaError("document id must be non-empty");
  doc.title = require("title").get<std::string>();
  auto fd = Date::parse(require("filing_date").get<std::string>());
  if (!fd) throw SchemaError("bad filing_date in document " + doc.id);
  doc.filing_date = *fd;

  for (const auto& js : require("sections")) {
    Section sec;
    if (!js.contains("id")) throw SchemaError("missing required field: sections[].id");
    sec.section_id = js.at("id").get<std::string>();
    if (sec.section_id.empty()) throw SchemaError("empty section id in " + doc.id);
    sec.heading = js.value("heading", "");
    sec.page = js.value("page", 1);
    if (sec.page < 1) throw SchemaError("section page must be positive");
    for (const auto& jp : js.value("paragraphs", nlohmann::json::array()))
      sec.paragraphs.push_back({jp.get<std::string>()});
    for (const auto& prev : doc.sections)
      if (prev.section_id == sec.section_id)
        throw SchemaError("duplicate section id " + sec.section_id + " in " + doc.id);
    doc.sections.push_back(std::move(sec));
  }

  for (const auto& jt : require("tables")) {
    TableStructure t;
    if (!jt.contains("id")) throw SchemaError("missing required field: tables[].id");
    t.table_id = jt.at("id").get<std::string>();
    if (t.table_id.empty()) throw SchemaError("empty table id in " + doc.id);
    t.caption = jt.value("caption", "");
    t.page = jt.value("page", 1);
    for (const auto& h : jt.value("col_headers", nlohmann::json::array()))
      t.col_headers.push_back(detail::flatten_header(h));
    for (const auto& h : jt.value("row_headers", nlohmann::json::array()))
      t.row_headers.push_back(detail::flatten_header(h));

    const auto& jcells = jt.value("cells", nlohmann::json::array());
    if (jcells.size() != t.row_headers.size())
      throw TableShapeError("table " + t.table_id + ": " + std::to_string(jcells.size()) +
                            " cell rows for " + std::to_string(t.row_headers.size()) +
                            " row headers");

    std::size_t ncols = t.col_headers.size();
    if (ncols == 0) {
      for (const auto& row : jcells) ncols = std::max(ncols, row.size());
      for (const auto& row : jcells)
        if (row.size() != ncols)
          throw TableShapeError("table " + t.table_id +
                                ": ragged rows without column headers cannot be aligned");
      for (std::size_t c = 0; c < ncols; ++c) t.col_headers.push_back("col" + std::to_string(c));
    }

    for (std::size_t r = 0; r < jcells.size(); ++r) {
      const auto& jrow = jcells[r];
      if (jrow.size() > ncols)
        throw TableShapeError("table " + t.table_id + " row " + std::to_string(r) +
                              " has more cells than column headers");
      std::vector<TableCell> row;
      for (std::size_t c = 0; c < ncols; ++c) {
        TableCell cell;
        cell.raw_text = c < jrow.size() ? jrow[c].get<std::string>() : "";
        if (!trim(cell.raw_text).empty()) {
          try {
            cell.parsed = normalize_number(cell.raw_text);
          } catch (const NotNumeric&) {
          }
          FiscalPeriod p = parse_period(t.col_headers[c]);
          if (p.specified()) cell.period = p;
        }
        row.push_back(std::move(cell));
      }
      t.cells.push_back(std::move(row));
    }
    for (const auto& prev : doc.tables)
      if (prev.table_id == t.table_id)
        throw SchemaError("duplicate table id " + t.table_id + " in " + doc.id);
    t.validate();
    doc.tables.push_back(std::move(t));
  }
  return doc;
}

inline nlohmann::json document_to_json(const Document& doc) {
  nlohmann::json sections = nlohmann::json::array();
  for (const auto& s : doc.sections) {
    nlohmann::json paras = nlohmann::json::array();
    for (const auto& p : s.paragraphs) paras.push_back(p.text);
    sections.push_back(
        {{"id", s.section_id}, {"heading", s.heading}, {"page", s.page}, {"paragraphs", paras}});
  }
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& t : doc.tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.cells) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& c : row) jr.push_back(c.raw_text);
      rows.push_back(jr);
    }
    tables.push_back({{"id", t.table_id},
                      {"page", t.page},
                      {"caption", t.caption},
                      {"col_headers", t.col_headers},
                      {"row_headers", t.row_headers},
                      {"cells", rows}});
  }
  return {{"schema", kCorpusSchemaVersion},
          {"id", doc.id},
          {"title", doc.title},
          {"filing_date", doc.filing_date.to_string()},
          {"sections", sections},
          {"tables", tables}};
}

// ---------------------------------------------------------------------------
// Chunking
// ---------------------------------------------------------------------------

namespace detail {

// Splits a paragraph at the policy token budget, preferring sentence
// boundaries. Pieces are exact substrings; joining them with single spaces
// reproduces single-spaced source text.
inline std::vector<TokenSpan> split_paragraph(std::string_view text, int max_tokens) {
  auto tokens = ws_tokens(text);
  if (tokens.empty()) return {};
  if (static_cast<int>(tokens.size()) <= max_tokens)
    return {{tokens.front().begin, tokens.back().end}};

  // Token index just after each sentence end.
  auto sentences = sentence_spans(text);
  std::vector<std::size_t> sentence_breaks;
  for (const auto& s : sentences) {
    std::size_t after = 0;
    while (after < tokens.size() && tokens[after].begin < s.end) ++after;
    if (after > 0 && after < tokens.size()) sentence_breaks.push_back(after);
  }

  std::vector<TokenSpan> pieces;
  std::size_t start = 0;
  while (start < tokens.size()) {
    std::size_t limit = std::min(tokens.size(), start + static_cast<std::size_t>(max_tokens));
    std::size_t cut = limit;
    if (limit < tokens.size()) {
      for (auto it = sentence_breaks.rbegin(); it != sentence_breaks.rend(); ++it) {
        if (*it > start && *it <= limit) {
          cut = *it;
          break;
        }
      }
    }
    pieces.push_back({tokens[start].begin, tokens[cut - 1].end});
    start = cut;
  }
  return pieces;
}

}  // namespace detail

// One chunk per paragraph piece, one chunk per table cell
// ("row | col | value"), plus an optional per-table summary chunk. Chunk ids
// and contents are a pure function of (document, policy).
inline std::vector<Chunk> chunk_document(const Document& doc, const ChunkPolicy& policy = {}) {
  std::vector<Chunk> chunks;

  for (const auto& sec : doc.sections) {
    int para_no = 0;
    for (const auto& para : sec.paragraphs) {
      auto pieces = detail::split_paragraph(para.text, policy.max_tokens);
      int piece_no = 0;
      for (const auto& piece : pieces) {
        Chunk c;
        c.chunk_id = doc.id + ":" + sec.section_id + ":p" + std::to_string(para_no);
        if (pieces.size() > 1) c.chunk_id += ":s" + std::to_string(piece_no);
        c.text = std::string(piece.view(para.text));
        c.provenance = {doc.id, sec.section_id, sec.page, ElementType::paragraph, {}};
        chunks.push_back(std::move(c));
        ++piece_no;
      }
      ++para_no;
    }
  }

  for (const auto& table : doc.tables) {
    for (int r = 0; r < table.rows(); ++r) {
      for (int col = 0; col < table.cols(); ++col) {
        const TableCell& cell = table.at(r, col);
        Chunk c;
        c.chunk_id = doc.id + ":" + table.table_id + ":r" + std::to_string(r) + ":c" +
                     std::to_string(col);
        c.header_context = table.row_headers[static_cast<std::size_t>(r)] + " | " +
                           table.col_headers[static_cast<std::size_t>(col)];
        c.text = c.header_context + " | " + cell.raw_text;
        CellAddress addr{table.table_id, table.row_headers[static_cast<std::size_t>(r)],
                         table.col_headers[static_cast<std::size_t>(col)], r, col};
        c.cell = addr;
        c.provenance = {doc.id, table.table_id, table.page, ElementType::table_cell, addr};
        chunks.push_back(std::move(c));
      }
    }
    if (policy.include_table_summary) {
      Chunk c;
      c.chunk_id = doc.id + ":" + table.table_id + ":summary";
      c.header_context = join(table.row_headers, ", ") + " | " + join(table.col_headers, ", ");
      c.text = "Table " + table.table_id + (table.caption.empty() ? "" : ": " + table.caption) +
               ". Rows: " + join(table.row_headers, ", ") +
               ". Columns: " + join(table.col_headers, ", ") + ".";
      c.provenance = {doc.id, table.table_id, table.page, ElementType::table, {}};
      chunks.push_back(std::move(c));
    }
  }
  return chunks;
}

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

struct CorpusMetadata {
  std::string schema_version = kCorpusSchemaVersion;
  std::string built_at;  // informational; excluded from the content hash
};

class Corpus {
 public:
  Corpus() = default;

  static Corpus build(std::vector<Document> documents, const ChunkPolicy& policy = {},
                      std::string built_at = "") {
    Corpus c;
    c.policy_ = policy;
    c.meta_.built_at = std::move(built_at);
    c.documents_ = std::move(documents);
    for (std::size_t i = 0; i < c.documents_.size(); ++i) {
      const Document& d = c.documents_[i];
      if (c.doc_index_.count(d.id)) throw SchemaError("duplicate document id " + d.id);
      c.doc_index_[d.id] = i;
      for (auto& ch : chunk_document(d, policy)) {
        if (c.chunk_index_.count(ch.chunk_id))
          throw SchemaError("duplicate chunk id " + ch.chunk_id);
        c.chunk_index_[ch.chunk_id] = c.chunks_.size();
        c.chunks_.push_back(std::move(ch));
      }
    }
    return c;
  }

  const std::vector<Document>& documents() const { return documents_; }
  const std::vector<Chunk>& chunks() const { return chunks_; }
  const ChunkPolicy& policy() const { return policy_; }
  const CorpusMetadata& metadata() const { return meta_; }

  const Document* document(std::string_view id) const {
    auto it = doc_index_.find(std::string(id));
    return it == doc_index_.end() ? nullptr : &documents_[it->second];
  }
  const Chunk* chunk(std::string_view id) const {
    auto it = chunk_index_.find(std::string(id));
    return it == chunk_index_.end() ? nullptr : &chunks_[it->second];
  }

  // Deterministic content hash over documents and chunks (not build time).
  std::string content_hash() const {
    std::uint64_t h = fnv1a64(kCorpusSchemaVersion);
    for (const auto& d : documents_) h = fnv1a64(document_to_json(d).dump(), h);
    for (const auto& c : chunks_) h = fnv1a64(c.chunk_id + "\x1f" + c.text, h);
    return to_hex(h);
  }

 private:
  std::vector<Document> documents_;
  std::vector<Chunk> chunks_;
  std::map<std::string, std::size_t> doc_index_;
  std::map<std::string, std::size_t> chunk_index_;
  ChunkPolicy policy_;
  CorpusMetadata meta_;
};

// Resolves a citation against the corpus, verifying that cited labels match
// the table's headers at the cited indices. Throws DanglingCitation when the
// target does not exist and LabelMismatch when positions and labels disagree.
inline ProvenanceTuple resolve_citation(const Corpus& corpus, const Citation& citation) {
  const Document* doc = corpus.document(citation.document_id);
  if (!doc) throw DanglingCitation("no such document: " + citation.document_id);

  if (citation.kind == Citation::Kind::paragraph) {
    const Section* sec = doc->section(citation.section_id);
    if (!sec) throw DanglingCitation("no such section: " + citation.document_id + "/" + citation.section_id);
    if (sec->page != citation.page)
      throw LabelMismatch("section " + citation.section_id + " is on page " +
                          std::to_string(sec->page) + ", not p." + std::to_string(citation.page));
    return {doc->id, sec->section_id, sec->page, ElementType::paragraph, {}};
  }

  const TableStructure* table = doc->table(citation.table_id);
  if (!table) throw DanglingCitation("no such table: " + citation.document_id + "/Table " + citation.table_id);

  int r = -1, c = -1;
  if (citation.row_index && citation.col_index) {
    r = *citation.row_index;
    c = *citation.col_index;
    if (r < 0 || r >= table->rows() || c < 0 || c >= table->cols())
      throw DanglingCitation("cell indices out of range in Table " + citation.table_id);
    if (table->row_headers[static_cast<std::size_t>(r)] != citation.row_label ||
        table->col_headers[static_cast<std::size_t>(c)] != citation.col_label)
      throw LabelMismatch("cited labels (" + citation.row_label + ", " + citation.col_label +
                          ") do not match headers at (" + std::to_string(r) + ", " +
                          std::to_string(c) + ")");
  } else {
    for (int i = 0; i < table->rows(); ++i)
      if (table->row_headers[static_cast<std::size_t>(i)] == citation.row_label) r = i;
    for (int j = 0; j < table->cols(); ++j)
      if (table->col_headers[static_cast<std::size_t>(j)] == citation.col_label) c = j;
    if (r < 0)
      throw DanglingCitation("no row labeled '" + citation.row_label + "' in Table " + citation.table_id);
    if (c < 0)
      throw DanglingCitation("no column labeled '" + citation.col_label + "' in Table " + citation.table_id);
  }

  CellAddress addr{table->table_id, table->row_headers[static_cast<std::size_t>(r)],
                   table->col_headers[static_cast<std::size_t>(c)], r, c};
  return {doc->id, table->table_id, table->page, ElementType::table_cell, addr};
}

// ---------------------------------------------------------------------------
// JSONL ingestion
// ---------------------------------------------------------------------------

struct IngestIssue {
  std::size_t line_no;
  std::string message;
};

struct IngestResult {
  std::vector<Document> documents;
  std::vector<IngestIssue> issues;
};

// One JSON document per non-empty line. In strict mode the first bad line
// throws; in lenient mode bad lines are collected as issues and skipped.
inline IngestResult load_corpus_jsonl(std::string_view text, bool lenient = false) {
  IngestResult out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (trim(line).empty()) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      out.documents.push_back(parse_document(j));
    } catch (const std::exception& e) {
      if (!lenient) throw SchemaError("line " + std::to_string(line_no) + ": " + e.what());
      out.issues.push_back({line_no, e.what()});
    }
  }
  return out;
}

inline std::string corpus_to_jsonl(const std::vector<Document>& docs) {
  std::string out;
  for (const auto& d : docs) {
    out += document_to_json(d).dump();
    out += '\n';
  }
  return out;
}

}  // namespace finground
