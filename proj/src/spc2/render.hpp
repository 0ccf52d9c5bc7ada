#pragma once

#include <ostream>
#include <vector>

#include "adjoint.hpp"

namespace spc2 {

enum class OutputFormat { csv, md, latex, json };

OutputFormat parse_format(const std::string& s);  // throws std::invalid_argument
Kind parse_kind(const std::string& s);            // throws std::invalid_argument

// "a..b" or a single number.
std::pair<long, long> parse_range(const std::string& s);

// Reports for every class of rank lo..hi, in enumeration order.
std::vector<AdjointReport> table_rows(long lo, long hi, Kind kind);

// The same report but with the three algebra types recomputed by the explicit
// matrix oracle instead of the closed-form rules.
AdjointReport oracle_report(const AnyClass& cls);

void emit_rows(const std::vector<AdjointReport>& rows, OutputFormat fmt, std::ostream& os);

}  // namespace spc2
