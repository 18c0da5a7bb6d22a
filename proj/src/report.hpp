#pragma once

#include <optional>
#include <string>

#include "analysis.hpp"
#include "theorems.hpp"
#include "torsion.hpp"

namespace tc::report {

// One survey line: the per-ring numbers the open matrix-ring questions ask
// for, with both indices reported side by side (no divisibility assumed
// between them).
struct SurveyRow {
    std::string spec;
    std::uint64_t cardinality = 0;
    std::uint64_t unit_count = 0;
    std::uint64_t unit_exponent = 1;
    std::optional<std::uint64_t> plain_index;
    std::optional<std::uint64_t> strong_index;  // empty = no strong decomposition
    std::uint64_t characteristic = 0;
    std::uint32_t jacobson_nil_index = 0;
    analysis::Flags flags;
    double elapsed_ms = 0.0;
};

SurveyRow survey(const RingPtr& ring, bool conjugacy_reduction, int jobs);

std::string structure_json(const analysis::StructureReport& rep, bool pretty);
std::string index_json(const torsion::IndexReport& rep, bool with_timing, bool pretty);
std::string certificate_json(const torsion::Certificate& cert, bool pretty);
std::string absent_json(const RingPtr& ring, std::uint64_t element, std::uint64_t n, bool strong,
                        bool pretty);
std::string checks_json(const std::vector<theorems::CheckResult>& results, bool pretty);
std::string survey_row_json(const SurveyRow& row, bool with_timing, bool pretty);

}  // namespace tc::report
