#pragma once

#include <string>
#include <vector>

#include "seqcorr/expsums.hpp"
#include "seqcorr/sequences.hpp"
#include "seqcorr/verifier.hpp"

namespace seqcorr {

/// Renderers for every CLI-facing output. JSON is emitted with a fixed key
/// order and 2-space indentation, so identical inputs yield byte-identical
/// documents; tables mirror the values/frequencies layout of the published
/// distribution table.

std::string distribution_json(const SeqParams& p, const CorrelationDistribution& dist);
std::string distribution_table(const SeqParams& p, const CorrelationDistribution& dist);

std::string report_json(const VerificationReport& rep);
std::string report_table(const VerificationReport& rep);

std::string form_reports_json(const Field& f, const SeqParams& p,
                              const std::vector<FormReport>& reports);
std::string form_reports_table(const Field& f, const SeqParams& p,
                               const std::vector<FormReport>& reports);

std::string sequence_json(const SeqParams& p, const char* name, const BinarySequence& seq);
std::string sequence_table(const SeqParams& p, const char* name, const BinarySequence& seq);

std::string field_info_json(const Field& f);
std::string field_info_table(const Field& f);

std::string elem_hex(Elem x);

} // namespace seqcorr
