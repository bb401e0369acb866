#ifndef SKORO_TRACE_IO_HPP
#define SKORO_TRACE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "skoro/core_types.hpp"

namespace skoro {

// CSV format: header "t,x1,...,xn", one row per sample, '.' decimal
// separator. JSON format: {"samples":[{"t":0.0,"x":[...]}, ...]}.
SampledTrace read_trace_csv(std::istream& in, const std::string& source_name = "<csv>");
SampledTrace read_trace_json(std::istream& in, const std::string& source_name = "<json>");

// Dispatches on the file extension (.json vs anything else = CSV).
SampledTrace read_trace_file(const std::string& path);

std::string write_trace_json(const SampledTrace& trace);
std::string write_trace_csv(const SampledTrace& trace);

// Per-coordinate ingestion scaling: n value factors followed by one time
// factor. Factors must be positive (time order must survive).
SampledTrace apply_scale(const SampledTrace& trace, const std::vector<double>& factors);

}  // namespace skoro

#endif
