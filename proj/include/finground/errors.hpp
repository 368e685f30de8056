#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finground {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- parsing / domain ---
struct NotNumeric : Error {
  using Error::Error;
};
struct UnitMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};

// --- corpus ---
struct SchemaError : Error {
  using Error::Error;
};
struct TableShapeError : Error {
  using Error::Error;
};
struct DanglingCitation : Error {
  using Error::Error;
};
struct LabelMismatch : Error {
  using Error::Error;
};

// --- retrieval ---
struct EmptyCorpus : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct RetrievalUnavailable : Error {
  using Error::Error;
};

// --- backends ---
struct BackendUnavailable : Error {
  using Error::Error;
};
struct EmbeddingUnavailable : BackendUnavailable {
  using BackendUnavailable::BackendUnavailable;
};
struct MalformedBackendOutput : Error {
  using Error::Error;
};

// --- verification ---
struct AmbiguousFormula : Error {
  using Error::Error;
};
struct MissingOperands : Error {
  explicit MissingOperands(std::vector<std::string> slots)
      : Error("missing operands: " + join(slots)), missing_slots(std::move(slots)) {}
  std::vector<std::string> missing_slots;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += ", ";
      out += s;
    }
    return out;
  }
};

// --- regeneration ---
struct SpanNotFound : Error {
  using Error::Error;
};
struct NoEvidenceAvailable : Error {
  using Error::Error;
};

// --- metrics ---
struct EmptyInput : Error {
  using Error::Error;
};
struct FingerprintMismatch : Error {
  using Error::Error;
};
struct TargetBelowAnchor : Error {
  using Error::Error;
};

// --- service ---
struct UnknownClaim : Error {
  using Error::Error;
};

// Violated precondition on a public operation.
struct ContractViolation : Error {
  using Error::Error;
};

}  // namespace finground
