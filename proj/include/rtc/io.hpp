#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "rtc/tensor_code.hpp"

namespace rtc {

/// Raised for malformed input files; the CLI maps it to exit code 3.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Code-spec file: `key=value` lines.
///   q=2
///   n=3
///   m=2
///   modulus=1,1,0,1              (optional; constant term first, monic)
///   basis=1,1,0;1,0,1;1,1,1      (optional; n rows of n ground coefficients)
///   support=(0,0);(0,1);(1,0)
CodeSpec parse_code_spec(std::istream& in);
CodeSpec load_code_spec(const std::string& path);
std::string emit_code_spec(const CodeSpec& spec);

/// Word file: header `order=m n=<n>`, then n^m lines of n ground
/// coefficients (row-major, last index fastest).
Word parse_word(std::istream& in, const ExtField& F);
Word load_word(const std::string& path, const ExtField& F);
std::string emit_word(const Word& w);

/// Term format `[c0,c1,...]*X^q^a*Y^q^b`; variables are X for order 1,
/// X and Y for order 2, X1..Xm above. Terms joined by " + ", zero is "0".
std::string emit_poly(const ExtField& F, const MultilinPoly& f);
MultilinPoly parse_poly(const std::string& text, const ExtField& F, int m);
MultilinPoly load_poly(const std::string& path, const ExtField& F, int m);

void write_file(const std::string& path, const std::string& content);

}  // namespace rtc
