#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cfkit/cfn.hpp"

namespace cfkit {

/// Parses "⟨u,v,j⟩", "<u,v,j>" or bare "u,v,j" (whitespace allowed), then
/// validates. Throws Error{ParseError} on malformed text.
Cfn parse_cfn(std::string_view text);

/// "⟨u,v,j⟩" using the shortest decimal form that reads back to the same
/// doubles.
std::string format_cfn(const Cfn& f);

/// Shortest round-trip decimal form of a double.
std::string format_real(double x);

/// Fixed six-decimal form used by plain-text output.
std::string format_fixed6(double x);

/// Parses a whole string as a finite double; throws Error{ParseError}.
double parse_real(std::string_view text);

nlohmann::json to_json(const Cfn& f);
/// Accepts {"u":..,"v":..,"j":..}; throws Error{ParseError} on missing keys.
Cfn cfn_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const Cfn& f);

}  // namespace cfkit
