#pragma once

#include <string>
#include <string_view>

#include "plurality/model.hpp"
#include "plurality/sweep.hpp"
#include "plurality/taxonomy.hpp"

namespace plurality {

enum class ReportFormat { text, json };

/// Parses a frame spec "NxM", e.g. "3x2": N questions, M answers, default
/// labels. Surrounding whitespace is ignored.
Space parse_space_spec(std::string_view text);

/// Parses a compact model spec "NxM:{i,j,...}" naming positions by canonical
/// index, e.g. "3x2:{1,8}". Indices must be distinct and within 1..M^N;
/// labels are the defaults.
Model parse_compact_spec(std::string_view text);

/// Parses a UTF-8 JSON model document:
///
///   {
///     "questions": ["Q1", "Q2", "Q3"],
///     "answers":   ["A1", "A2"],
///     "positions": [["A1", "A1", "A1"],
///                   {"name": "mine", "answers": ["A2", "A2", "A2"]}],
///     "syncretic": false
///   }
///
/// Each position row is an array of answer labels, or an object carrying an
/// optional "name". In syncretic mode cells are arrays of labels (a plain
/// label still reads as a singleton). Duplicate rows collapse into one
/// position; the model's duplicates_removed() reports how many. Malformed
/// input raises Error with line/field context.
Model parse_model_document(std::string_view text);

/// Canonical JSON serialization of a model: fixed key order, positions in
/// canonical order, cells as plain labels (arrays of labels when syncretic),
/// row objects only where a custom name exists. parse ∘ serialize is the
/// identity on models, and serialize ∘ parse is idempotent on documents.
std::string serialize_model_document(const Model& model);

/// Renders a classification report. Text form is exactly explain(); JSON
/// form carries the taxon, every flag, every condition value and every
/// witness under stable keys.
std::string emit_report(const Model& model, const TaxonReport& report, ReportFormat format);

/// Renders a sweep report: counts per taxon and flag, violations, timing.
std::string emit_report(const SweepReport& report, ReportFormat format);

} // namespace plurality
