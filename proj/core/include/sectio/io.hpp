#pragma once

#include <string>

#include "sectio/annihilator.hpp"
#include "sectio/automaton.hpp"

namespace sectio::io {

// JSON text interfaces. Schemas are strict: unknown object keys are rejected
// with MalformedInput. Integer coefficients are accepted anywhere a field
// element is expected and reduce mod p. Emitters are deterministic: keys are
// sorted and polynomial terms appear in graded lexicographic order.

Field import_field(const std::string& json_text);
std::string export_field(const Field& F);

/// {"field": ..., "n": ..., "terms": [{"e": [...], "c": [...]}]}
MultiPoly import_poly(const std::string& json_text);
std::string export_poly(const MultiPoly& A);

/// {"field": ..., "n": ..., "prec": ..., "terms": [...]}
TruncatedSeries import_series(const std::string& json_text);
std::string export_series(const TruncatedSeries& f);

/// {"field": ..., "E": {"n": ..., "terms": [...]}, "y0": [...]}
Branch import_branch(const std::string& json_text);
std::string export_branch(const Branch& b);

/// {"field": ..., "N": ..., "coeffs": [[[...], ...], ...],
///  "verified_order": ..., "search_degree": ..., "bound": {...}}
AnnihilatorCertificate import_certificate(const std::string& json_text);
std::string export_certificate(const AnnihilatorCertificate& cert,
                               const BoundReport* bounds = nullptr);

BoundReport import_bound_report(const std::string& json_text);
std::string export_bound_report(const BoundReport& r);

/// {"field": ..., "p": ..., "n": ..., "initial": ..., "states": [...],
///  "transitions": [[from, [digits], to], ...]}
Dfao import_dfao(const std::string& json_text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace sectio::io
