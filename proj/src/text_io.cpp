#include "cfkit/text_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "cfkit/error.hpp"

namespace cfkit {
namespace {

constexpr std::string_view kOpen = "⟨";
constexpr std::string_view kClose = "⟩";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool strip_delimiters(std::string_view& s, std::string_view open, std::string_view close) {
  if (s.starts_with(open) && s.ends_with(close) && s.size() >= open.size() + close.size()) {
    s = s.substr(open.size(), s.size() - open.size() - close.size());
    return true;
  }
  return false;
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

Cfn parse_cfn(std::string_view text) {
  std::string_view body = trim(text);
  strip_delimiters(body, kOpen, kClose) || strip_delimiters(body, "<", ">") ||
      strip_delimiters(body, "(", ")");

  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = body.find(',');
    parts.push_back(body.substr(0, comma));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::ParseError,
                "expected a CFN of the form u,v,j or ⟨u,v,j⟩, got '" + std::string(text) + "'");
  }
  return Cfn::make(parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]));
}

std::string format_real(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ec == std::errc{} ? ptr : buf.data());
}

std::string format_fixed6(double x) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6f", x);
  return buf.data();
}

std::string format_cfn(const Cfn& f) {
  std::string out(kOpen);
  out += format_real(f.u()) + "," + format_real(f.v()) + "," + format_real(f.j());
  out += kClose;
  return out;
}

nlohmann::json to_json(const Cfn& f) { return {{"u", f.u()}, {"v", f.v()}, {"j", f.j()}}; }

Cfn cfn_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "CFN JSON must be an object");
  const auto field = [&](const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number()) {
      throw Error(ErrorCode::ParseError, std::string("CFN JSON needs numeric field '") + key + "'");
    }
    return it->get<double>();
  };
  return Cfn::make(field("u"), field("v"), field("j"));
}

std::ostream& operator<<(std::ostream& os, const Cfn& f) { return os << format_cfn(f); }

}  // namespace cfkit
