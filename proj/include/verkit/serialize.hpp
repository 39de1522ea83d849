#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "verkit/catalog.hpp"
#include "verkit/grring.hpp"
#include "verkit/matrix.hpp"

namespace verkit::io {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

/// Integers that fit in 62 bits become JSON numbers, larger ones decimal strings.
json to_json(const Integer& x);
Integer integer_from_json(const json& j);

struct LabeledMatrix {
  IntMatrix m;
  std::vector<std::string> row_labels, col_labels;
};

json to_json(const LabeledMatrix& lm);
LabeledMatrix matrix_from_json(const json& j);

json to_json(const GrElement& e);
GrElement gr_from_json(const json& j);

json to_json(const VerificationReport& r);

/// {"schema_version", "kind", "p", "n", "payload"}
json document(const std::string& kind, long p, int n, json payload);

/// Deterministic text form of a document (2-space indent, trailing newline).
std::string dump(const json& doc);

/// Parses, decodes every typed payload node, re-encodes and compares.
bool check_roundtrip(const std::string& text, std::string* why = nullptr);

std::string to_csv(const LabeledMatrix& lm);
/// Right-aligned grid with row and column labels.
std::string to_text(const LabeledMatrix& lm);

/// Cartan matrix indexed by simple labels; only even labels when even_only.
LabeledMatrix cartan_labeled(const CategoryData& d, bool even_only);
LabeledMatrix decomposition_labeled(const CategoryData& d);

json report_payload(const CategoryData& d);
std::string report_text(const json& doc);

}  // namespace verkit::io
