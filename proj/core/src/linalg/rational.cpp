#include "koszul/linalg/rational.hpp"

#include <cctype>

#include "koszul/error.hpp"

namespace koszul::linalg {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw ModelError("malformed rational: \"" + std::string(text) + "\"");
  }
  Rat value(parse_int(num), parse_int(den));
  if (value.get_den() == 0) {
    throw ModelError("zero denominator: \"" + std::string(text) + "\"");
  }
  value.canonicalize();
  return value;
}

std::string format_rat(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace koszul::linalg
