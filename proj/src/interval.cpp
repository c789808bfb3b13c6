#include "ivopt/interval.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace ivopt {

std::string to_string(const Interval& a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "[%.17g,%.17g]", a.lo(), a.hi());
  return buf;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

double parse_number(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  // strtod needs a terminated buffer; intervals are short, copy the tail.
  std::string tail(s.substr(i));
  char* end = nullptr;
  double v = std::strtod(tail.c_str(), &end);
  if (end == tail.c_str())
    throw ParseError("expected a number", i);
  i += static_cast<std::size_t>(end - tail.c_str());
  return v;
}

}  // namespace

Interval parse_interval(std::string_view text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '[')
    throw ParseError("expected '['", i);
  ++i;
  double a = parse_number(text, i);
  skip_ws(text, i);
  if (i >= text.size() || text[i] != ',')
    throw ParseError("expected ','", i);
  ++i;
  double b = parse_number(text, i);
  skip_ws(text, i);
  if (i >= text.size() || text[i] != ']')
    throw ParseError("expected ']'", i);
  ++i;
  skip_ws(text, i);
  if (i != text.size())
    throw ParseError("trailing characters after interval", i);
  return Interval(a, b);
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << to_string(a);
}

}  // namespace ivopt
