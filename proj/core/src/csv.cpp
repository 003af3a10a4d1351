#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "regshannon/harness.hpp"

namespace regshannon {
namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// notes can carry commas from exception texts
std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + '"';
}

}  // namespace

void write_error_csv(std::ostream& out, const ErrorReport& report) {
  out << "# schema=1\n";
  out << "family,delta,m,alpha,lambda,max_error,bound,bound_ok,note,runtime_ms\n";
  for (const auto& r : report.rows) {
    out << family_name(r.family) << ',' << num(r.delta) << ',' << r.m << ',' << num(r.alpha) << ','
        << num(r.lambda) << ',' << num(r.max_error) << ',' << (r.bound ? num(*r.bound) : "") << ','
        << (r.bound_ok ? (*r.bound_ok ? "true" : "false") : "") << ',' << quoted(r.note) << ','
        << r.runtime_ms << '\n';
  }
}

}  // namespace regshannon
