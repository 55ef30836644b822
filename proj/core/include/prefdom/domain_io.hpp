#pragma once

#include <iosfwd>
#include <string>

#include "prefdom/domain.hpp"

namespace prefdom {

/// Domain text format: '#'-prefixed comment lines; optional header line
/// "n=<int>" fixing the alternative set to {1..n}; one order per line with
/// labels separated by whitespace or commas; a bare digit string per line is
/// accepted when every label is a single digit. Without a header the first
/// order defines the alternative set. Parse errors carry line numbers.
Domain read_domain(std::istream& in);
Domain read_domain_file(const std::string& path);

/// Emits the header (when the alternative set is {1..n}) and one order per
/// line, labels separated by single spaces.
void write_domain(std::ostream& out, const Domain& d);
std::string domain_to_text(const Domain& d);

}  // namespace prefdom
