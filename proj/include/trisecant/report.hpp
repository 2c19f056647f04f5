#pragma once

// Renderers for search results and reports. Output is a pure function of the
// input, so repeated runs are byte-identical.

#include "trisecant/catalog.hpp"
#include "trisecant/enumeration.hpp"
#include "trisecant/picard.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trisecant {

enum class Format { text, json, csv };

std::optional<Format> parse_format(const std::string& name);

/// CSV columns n,e,k,c,r,flags; r is empty when absent.
std::string render_csv(const EnumerationResult& result);
/// JSON array of row objects with the CSV keys (r is null when absent); extras
/// also carry "survives".
std::string render_json(const EnumerationResult& result);
/// Aligned table with header "n e k c" (and "r" when rows carry it), row
/// labels from the published table, then extras and missing rows.
std::string render_text(const EnumerationResult& result);
std::string render(const EnumerationResult& result, Format format);

/// Scan report. JSON is an object whose "extras" array lists tuples outside
/// the published tables.
std::string render_scan(const EnumerationResult& result, int r_max, Format format);

std::string render_conic_bundle(const Polynomial& cubic, const std::vector<Integer>& degrees, Format format);

std::string render_line_classes(const Polarization& pol, const LineClassResult& result, Format format);
std::string render_decompositions(const Polarization& pol, const std::vector<Decomposition>& result, Format format);
std::string render_invariants(const std::string& name, const Polarization& pol, const InvariantTuple& t,
                              Format format);

std::string render_verification(const std::vector<VerificationReport>& reports, Format format);
std::string render_cross_check(const CrossCheckReport& report, Format format);

/// Evaluation of every formula and predicate on one tuple.
std::string render_formulas(const InvariantTuple& t, Format format);

}  // namespace trisecant
