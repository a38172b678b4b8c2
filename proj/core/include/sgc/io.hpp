#pragma once

#include "sgc/compiler.hpp"
#include "sgc/pattern.hpp"
#include "sgc/search.hpp"

#include <string>
#include <vector>

namespace sgc {

// Plain text: header "n m" then one "u v" line per edge, 0-indexed, LF
// line ends. The reader rejects loops, duplicate edges, out-of-range
// labels, and malformed lines.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// Edge list followed by one "S: u1 u2 ..." line listing the marked
// vertices (possibly none).
std::string write_signed_state(const SignedGraphState& st);
SignedGraphState parse_signed_state(const std::string& text);

// All JSON artifacts are emitted with sorted keys and a trailing newline,
// so equal values serialize byte-identically.
std::string pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const std::string& text);

std::string schedule_to_json(const std::vector<ScheduleStep>& schedule);
std::vector<ScheduleStep> schedule_from_json(const std::string& text);

std::string witness_to_json(const PivotMinorWitness& w);
PivotMinorWitness witness_from_json(const std::string& text);

std::string compilation_to_json(const GridCompilation& comp);
GridCompilation compilation_from_json(const std::string& text);

std::string transcript_to_json(const std::vector<TranscriptEntry>& transcript);

} // namespace sgc
