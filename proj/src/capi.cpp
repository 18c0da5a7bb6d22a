#include "torsionclean.h"

#include <cstring>
#include <string>

#include "analysis.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "theorems.hpp"
#include "torsion.hpp"

using namespace tc;

struct tc_ring {
    RingPtr ring;
};

namespace {

thread_local std::string g_last_error;

int fail(Status status, const std::string& message) {
    g_last_error = message;
    return static_cast<int>(status);
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return fail(e.status(), e.what());
    } catch (const std::exception& e) {
        return fail(Status::Internal, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int require(bool ok, const char* message) {
    return ok ? TC_OK : fail(Status::Argument, message);
}

int check_enc(const tc_ring* ring, uint64_t enc) {
    if (enc >= ring->ring->cardinality()) {
        return fail(Status::Argument, "element encoding " + std::to_string(enc) +
                                          " out of range for " + ring->ring->spec());
    }
    return TC_OK;
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "1.0.0"; }

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_string_free(char* s) { delete[] s; }

int tc_ring_new(const char* spec, uint64_t max_cardinality, tc_ring** out) {
    if (int rc = require(spec != nullptr && out != nullptr, "null argument")) return rc;
    return guarded([&] {
        const uint64_t guard = max_cardinality == 0 ? Ring::kDefaultMaxCardinality : max_cardinality;
        *out = new tc_ring{Ring::parse(spec, guard)};
        return TC_OK;
    });
}

void tc_ring_free(tc_ring* ring) { delete ring; }

const char* tc_ring_spec(const tc_ring* ring) { return ring->ring->spec().c_str(); }

uint64_t tc_ring_cardinality(const tc_ring* ring) { return ring->ring->cardinality(); }

uint64_t tc_ring_characteristic(const tc_ring* ring) { return ring->ring->characteristic(); }

int tc_ring_zero(const tc_ring* ring, uint64_t* out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    *out = 0;
    return TC_OK;
}

int tc_ring_one(const tc_ring* ring, uint64_t* out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    *out = ring->ring->one_enc();
    return TC_OK;
}

int tc_ring_add(const tc_ring* ring, uint64_t a, uint64_t b, uint64_t* out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    if (int rc = check_enc(ring, a)) return rc;
    if (int rc = check_enc(ring, b)) return rc;
    *out = ring->ring->add_enc(a, b);
    return TC_OK;
}

int tc_ring_sub(const tc_ring* ring, uint64_t a, uint64_t b, uint64_t* out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    if (int rc = check_enc(ring, a)) return rc;
    if (int rc = check_enc(ring, b)) return rc;
    *out = ring->ring->sub_enc(a, b);
    return TC_OK;
}

int tc_ring_mul(const tc_ring* ring, uint64_t a, uint64_t b, uint64_t* out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    if (int rc = check_enc(ring, a)) return rc;
    if (int rc = check_enc(ring, b)) return rc;
    *out = ring->ring->mul_enc(a, b);
    return TC_OK;
}

int tc_ring_neg(const tc_ring* ring, uint64_t a, uint64_t* out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    if (int rc = check_enc(ring, a)) return rc;
    *out = ring->ring->neg_enc(a);
    return TC_OK;
}

int tc_element_parse(const tc_ring* ring, const char* text, uint64_t* out) {
    if (int rc = require(ring && text && out, "null argument")) return rc;
    return guarded([&] {
        *out = ring->ring->parse_element(text);
        return TC_OK;
    });
}

int tc_element_format(const tc_ring* ring, uint64_t enc, char** out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    return guarded([&] {
        *out = copy_string(ring->ring->format_element(enc));
        return TC_OK;
    });
}

tc_index_options tc_index_options_default(void) {
    tc_index_options o;
    o.strong = 0;
    o.conjugacy_reduction = 1;
    o.jobs = 0;
    o.with_timing = 1;
    return o;
}

int tc_analyze_json(const tc_ring* ring, int jobs, char** out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    return guarded([&] {
        const auto rep = analysis::analyze(ring->ring, jobs);
        *out = copy_string(report::structure_json(rep, true));
        return TC_OK;
    });
}

int tc_index_json(const tc_ring* ring, const tc_index_options* options, char** out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    const tc_index_options opts = options ? *options : tc_index_options_default();
    return guarded([&] {
        const auto rep = torsion::torsion_clean_index(ring->ring, opts.strong != 0,
                                                      opts.conjugacy_reduction != 0, opts.jobs);
        *out = copy_string(report::index_json(rep, opts.with_timing != 0, true));
        if (!rep.index) {
            return fail(Status::Absent,
                        "no strong torsion-clean index exists for " + ring->ring->spec());
        }
        return TC_OK;
    });
}

int tc_decompose_json(const tc_ring* ring, uint64_t element, uint64_t n, int strong, char** out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    return guarded([&] {
        const auto cert = torsion::decompose(ring->ring, element, n, strong != 0);
        if (!cert) {
            *out = copy_string(report::absent_json(ring->ring, element, n, strong != 0, true));
            return fail(Status::Absent, "element " + std::to_string(element) + " of " +
                                            ring->ring->spec() + " has no " +
                                            (strong ? "strong " : "") + std::to_string(n) +
                                            "-torsion clean decomposition");
        }
        *out = copy_string(report::certificate_json(*cert, true));
        return TC_OK;
    });
}

int tc_verify_json(const tc_ring* ring, const char* check_id, int jobs, char** out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    return guarded([&] {
        std::vector<theorems::CheckResult> results;
        if (check_id == nullptr) {
            results = theorems::run_suite(ring->ring, jobs);
        } else {
            results.push_back(theorems::run_check(ring->ring, check_id, jobs));
        }
        *out = copy_string(report::checks_json(results, true));
        return TC_OK;
    });
}

const char* tc_check_ids(void) {
    static const std::string ids = [] {
        std::string s;
        for (const auto& [id, description] : theorems::check_catalog()) {
            if (!s.empty()) s += ",";
            s += id;
        }
        return s;
    }();
    return ids.c_str();
}

int tc_survey_json(const tc_ring* ring, int conjugacy_reduction, int jobs, int with_timing,
                   char** out) {
    if (int rc = require(ring && out, "null argument")) return rc;
    return guarded([&] {
        const auto row = report::survey(ring->ring, conjugacy_reduction != 0, jobs);
        *out = copy_string(report::survey_row_json(row, with_timing != 0, true));
        return TC_OK;
    });
}

}  // extern "C"
