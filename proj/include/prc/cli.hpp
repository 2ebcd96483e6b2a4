#pragma once

#include "prc/qsqrt3.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace prc::cli {

// Runs one command line (without the program name). Returns the exit status:
// 0 on success or a domain verdict, 1 when `verify` finds a failure, 2 on
// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "7/6", "-0.25", "3" parsed exactly; a leading U+2212 minus is accepted.
// Throws std::invalid_argument.
Rational parse_rational(const std::string& s);
std::vector<Rational> parse_list(const std::string& s, std::size_t expected);

struct Range {
  Rational lo, hi, step;
  std::vector<Rational> points() const;  // lo, lo + step, ... <= hi; empty when hi < lo
};
Range parse_range(const std::string& s);  // "lo:hi:step", step > 0

std::string fmt12(double x);  // %.12g

}  // namespace prc::cli
