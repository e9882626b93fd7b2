#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mcsp/formula.hpp"
#include "mcsp/reductions.hpp"
#include "mcsp/report.hpp"
#include "mcsp/structure.hpp"

namespace mcsp {

// Line-oriented instance format:
//   c <comment>
//   p mcsp <nvars> <nconstraints>
//   o <lit>* 0      OR
//   a <lit>* 0      AND
//   x <b> <lit>* 0  PARITY with right-hand side b
//   t <T> <lit>* 0  THRESHOLD T
//   m <lit>* 0      MAJORITY
// Throws ParseError.
Formula parse_instance(std::string_view text);
std::string serialize_instance(const Formula& f);

// Graph format: "p mcc <k> <n>" then "e <i> <u> <j> <v>" lines.
MccGraph parse_mcc(std::string_view text);
std::string serialize_mcc(const MccGraph& g);

// FNV-1a over the canonical serialization.
std::uint64_t instance_digest(const Formula& f);
std::string digest_hex(std::uint64_t digest);

// "-" reads standard input / writes standard output.
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

// Pretty JSON, stable key order. Wall time is only written when requested.
std::string report_json(const SolveReport& r, const Formula& f, bool with_timing);
std::string analysis_json(const Formula& f, const ParamReport& p);

}  // namespace mcsp
