#pragma once

// Command-line front end: function grammar, report serialization, commands.

#include <iosfwd>
#include <string>
#include <vector>

#include "qnat/function_spec.hpp"
#include "qnat/verify.hpp"

namespace qnat {

/// Syntax error in a function expression.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& text);
  const char* kind() const noexcept override { return "ParseError"; }
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Parses
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := number | number '*' atom | atom
///   atom := 't' | 't^' number | 'H(t-' number ')'
///         | 'ps(' number ';' number (',' number)* ')'
///         | name '(' [number '*'] 't' ')'
///   name := eq | Eq | sinq2 | cosq2 | sinq1 | cosq1 | coshq | sinhq | exp
/// Whitespace is ignored. Suffix 2 marks the second kind, 1 the first.
FunctionSpec parse_function(const std::string& text);

/// Canonical grammar string; parse_function(format_function(f)) is
/// equivalent to f. Throws UnknownForm for specs with no grammar string.
std::string format_function(const FunctionSpec& f);

/// Shortest decimal string that reads back to exactly x.
std::string format_number(double x);

/// CSV header and one row per report:
/// identityId,q,u,v,extraParams,lhs,rhs,relErr,mode,verdict
std::string csv_header();
std::string csv_row(const IdentityReport& r);

/// Runs one command line (argv[0] is the program name). Results go to
/// `out` as JSON or CSV; errors as a JSON error object. Returns the exit
/// status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qnat
