#include "report.hpp"

#include <chrono>

#include "json.hpp"

namespace tc::report {

using nlohmann::json;

namespace {

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump(); }

json flags_json(const analysis::Flags& f) {
    return json{{"abelian", f.abelian},
                {"reduced", f.reduced},
                {"boolean", f.boolean_ring},
                {"commutative", f.commutative},
                {"units_equal_one_plus_j", f.units_equal_one_plus_j}};
}

}  // namespace

SurveyRow survey(const RingPtr& ring, bool conjugacy_reduction, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    SurveyRow row;
    row.spec = ring->spec();
    row.cardinality = ring->cardinality();
    row.characteristic = ring->characteristic();
    const UnitTable& units = ring->units(jobs);
    row.unit_count = units.units.size();
    row.unit_exponent = units.exponent;
    row.plain_index = torsion::torsion_clean_index(ring, false, conjugacy_reduction, jobs).index;
    row.strong_index = torsion::torsion_clean_index(ring, true, conjugacy_reduction, jobs).index;
    row.jacobson_nil_index = analysis::nil_index(*ring, ring->jacobson(jobs));
    row.flags = analysis::flags(*ring, jobs);
    const auto t1 = std::chrono::steady_clock::now();
    row.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

std::string structure_json(const analysis::StructureReport& rep, bool pretty) {
    json j;
    j["ring"] = rep.ring->spec();
    j["cardinality"] = rep.ring->cardinality();
    j["characteristic"] = rep.ring->characteristic();
    j["idempotents"] = rep.idempotents;
    json units = json::array();
    for (const auto& [enc, order] : rep.units) {
        units.push_back(json{{"element", enc}, {"order", order}});
    }
    j["units"] = std::move(units);
    j["unit_group_exponent"] = rep.unit_group_exponent;
    j["jacobson"] = rep.jacobson;
    j["nil_index_of_jacobson"] = rep.nil_index_of_jacobson;
    j["center_size"] = rep.center_size;
    j["flags"] = flags_json(rep.flags);
    return dump(j, pretty);
}

std::string index_json(const torsion::IndexReport& rep, bool with_timing, bool pretty) {
    json j;
    j["ring"] = rep.ring->spec();
    j["mode"] = rep.strong ? "strong" : "plain";
    if (rep.index) {
        j["index"] = *rep.index;
    } else {
        j["index"] = "none";
        j["no_decomposition_witness"] = *rep.no_decomposition_witness;
    }
    json witnesses = json::array();
    for (const auto& w : rep.witnesses) {
        witnesses.push_back(json{{"element", w.element}, {"order", w.order}});
    }
    j["witnesses"] = std::move(witnesses);
    j["exponent_of_units"] = rep.exponent_of_units;
    j["element_count"] = rep.element_count;
    j["reduction"] = json{{"enabled", rep.conjugacy_reduction},
                          {"classes_scanned", rep.classes_scanned},
                          {"carrier_size", rep.element_count}};
    if (with_timing) j["elapsed_ms"] = rep.elapsed_ms;
    return dump(j, pretty);
}

std::string certificate_json(const torsion::Certificate& cert, bool pretty) {
    const Ring& r = *cert.ring;
    json j;
    j["ring"] = r.spec();
    j["element"] = cert.element;
    j["idempotent"] = cert.idempotent;
    j["unit"] = cert.unit;
    j["order"] = cert.order;
    j["strong"] = cert.strong;
    j["element_literal"] = r.format_element(cert.element);
    j["idempotent_literal"] = r.format_element(cert.idempotent);
    j["unit_literal"] = r.format_element(cert.unit);
    return dump(j, pretty);
}

std::string absent_json(const RingPtr& ring, std::uint64_t element, std::uint64_t n, bool strong,
                        bool pretty) {
    json j;
    j["ring"] = ring->spec();
    j["element"] = element;
    j["n"] = n;
    j["strong"] = strong;
    j["decomposition"] = "absent";
    return dump(j, pretty);
}

std::string checks_json(const std::vector<theorems::CheckResult>& results, bool pretty) {
    json arr = json::array();
    for (const auto& r : results) {
        json j;
        j["check"] = r.check;
        j["ring"] = r.ring_spec;
        switch (r.status) {
            case theorems::CheckStatus::Pass:
                j["status"] = "pass";
                break;
            case theorems::CheckStatus::Fail:
                j["status"] = "fail";
                break;
            case theorems::CheckStatus::NotApplicable:
                j["status"] = "not-applicable";
                break;
        }
        if (!r.witness.empty()) j["witness"] = r.witness;
        j["detail"] = r.detail;
        arr.push_back(std::move(j));
    }
    return dump(arr, pretty);
}

std::string survey_row_json(const SurveyRow& row, bool with_timing, bool pretty) {
    json j;
    j["spec"] = row.spec;
    j["cardinality"] = row.cardinality;
    j["units"] = row.unit_count;
    j["unit_exponent"] = row.unit_exponent;
    if (row.plain_index) {
        j["plain_index"] = *row.plain_index;
    } else {
        j["plain_index"] = "none";
    }
    if (row.strong_index) {
        j["strong_index"] = *row.strong_index;
    } else {
        j["strong_index"] = "none";
    }
    j["characteristic"] = row.characteristic;
    j["jacobson_nil_index"] = row.jacobson_nil_index;
    j["flags"] = flags_json(row.flags);
    if (with_timing) j["elapsed_ms"] = row.elapsed_ms;
    return dump(j, pretty);
}

}  // namespace tc::report
