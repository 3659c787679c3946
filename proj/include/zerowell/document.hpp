#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "zerowell/jeopardy.hpp"
#include "zerowell/model.hpp"
#include "zerowell/probgen.hpp"
#include "zerowell/spectrum.hpp"

namespace zerowell {

// JSON interchange. Every file is an envelope
//
//   {"kind": "...", "version": "1", "payload": {...}}
//
// Exact scalars are strings in lowest terms ("-9/4", "2", never "2/4" or
// "1/-3"); float scalars are JSON numbers. Knots are [x, psi] pairs and spikes
// are {"x": ..., "c": ...}. Unknown or missing fields are parse errors.

inline constexpr std::string_view kSchemaVersion = "1";

enum class DocumentKind { kProblem, kState, kPotential, kSpectrum, kGradeReport, kEnergyReport };

std::string_view kind_name(DocumentKind kind);

using Payload = std::variant<Problem, PiecewiseLinearState, DeltaPotential, SpectrumResult, GradeReport, EnergyReport>;

struct Document {
  Payload payload;
  DocumentKind kind() const;
  friend bool operator==(const Document&, const Document&) = default;
};

/// Compact JSON followed by a newline. Output is a pure function of the input.
std::string render(const Document& doc);

/// Throws ParseError naming the offending JSON pointer (or byte offset for
/// syntax errors).
Document parse_document(std::string_view text);

}  // namespace zerowell
