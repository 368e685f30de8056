#pragma once

// Hand-written mini filing shared by several suites. Table "2" carries a
// Gross Margin row consistent with Revenue/COGS by construction
// (45.2% = (125,000,000 - 68,500,000) / 125,000,000).
#include <json.hpp>

#include "finground/corpus.hpp"

inline nlohmann::json aapl_10k_json() {
  return nlohmann::json{
      {"schema", "finground-corpus/1"},
      {"id", "AAPL-10K"},
      {"title", "Apple Inc. Annual Report"},
      {"filing_date", "2023-11-03"},
      {"sections",
       nlohmann::json::array(
           {{{"id", "item7"},
             {"heading", "Management Discussion"},
             {"page", 21},
             {"paragraphs",
              nlohmann::json::array(
                  {"Revenue declined in Q2 2024 due to softer demand in the services segment.",
                   "Jane Smith is the COO of Apple Inc. and oversees worldwide operations.",
                   "Tim Cook is the CEO of Apple Inc.",
                   "The company files reports in accordance with SEC Rule 10b-5 requirements."})}}})},
      {"tables",
       nlohmann::json::array(
           {{{"id", "2"},
             {"page", 34},
             {"caption", "Condensed statement of operations"},
             {"col_headers", nlohmann::json::array({"Q4 2023", "Q3 2023"})},
             {"row_headers",
              nlohmann::json::array({"Revenue", "Cost of Goods Sold", "Gross Margin", "Net Income"})},
             {"cells",
              nlohmann::json::array({nlohmann::json::array({"$125,000,000", "$118,000,000"}),
                                     nlohmann::json::array({"$68,500,000", "$66,080,000"}),
                                     nlohmann::json::array({"45.2%", "44%"}),
                                     nlohmann::json::array({"$38,700,000", "$31,000,000"})})}}})}};
}

inline finground::Corpus aapl_corpus() {
  return finground::Corpus::build({finground::parse_document(aapl_10k_json())});
}
