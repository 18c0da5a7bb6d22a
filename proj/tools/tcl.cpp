// tcl — torsion-clean index computations over finite rings, on top of the
// torsionclean C API. Exit codes: 0 ok, 1 runtime/verification failure,
// 2 usage or parse error, 3 absent decomposition / no strong index,
// 4 size guard.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "torsionclean.h"

using nlohmann::json;

namespace {

int exit_code_for(int status) {
    switch (status) {
        case TC_OK:
            return 0;
        case TC_ERR_PARSE:
        case TC_ERR_ARGUMENT:
            return 2;
        case TC_ABSENT:
            return 3;
        case TC_ERR_SIZE_GUARD:
            return 4;
        default:
            return 1;
    }
}

struct RingHandle {
    tc_ring* ptr = nullptr;
    ~RingHandle() { tc_ring_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { tc_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int open_ring(const std::string& spec, std::uint64_t max_size, RingHandle& out) {
    const int rc = tc_ring_new(spec.c_str(), max_size, &out.ptr);
    if (rc != TC_OK) std::cerr << "error: " << tc_last_error() << "\n";
    return rc;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 1;
    }
    f << text;
    return 0;
}

std::string format_element(tc_ring* ring, std::uint64_t enc) {
    OwnedString s;
    if (tc_element_format(ring, enc, &s.ptr) != TC_OK) return "?";
    return s.str();
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string index_or_none(const json& value) {
    return value.is_string() ? value.get<std::string>() : std::to_string(value.get<std::uint64_t>());
}

// ---- subcommand bodies -----------------------------------------------------

struct CommonOpts {
    std::uint64_t max_size = 0;  // 0 = library default
    int jobs = 0;
    std::string out_path;
};

int cmd_analyze(const std::string& spec, const CommonOpts& common) {
    RingHandle ring;
    if (int rc = open_ring(spec, common.max_size, ring)) return exit_code_for(rc);
    OwnedString s;
    const int rc = tc_analyze_json(ring.ptr, common.jobs, &s.ptr);
    if (rc != TC_OK) {
        std::cerr << "error: " << tc_last_error() << "\n";
        return exit_code_for(rc);
    }
    return emit(s.str(), common.out_path);
}

int cmd_index(const std::string& spec, bool strong, bool no_reduction, bool as_json,
              bool no_timing, const CommonOpts& common) {
    RingHandle ring;
    if (int rc = open_ring(spec, common.max_size, ring)) return exit_code_for(rc);
    tc_index_options opts = tc_index_options_default();
    opts.strong = strong ? 1 : 0;
    opts.conjugacy_reduction = no_reduction ? 0 : 1;
    opts.jobs = common.jobs;
    opts.with_timing = no_timing ? 0 : 1;
    OwnedString s;
    const int rc = tc_index_json(ring.ptr, &opts, &s.ptr);
    if (rc != TC_OK && rc != TC_ABSENT) {
        std::cerr << "error: " << tc_last_error() << "\n";
        return exit_code_for(rc);
    }
    if (as_json) {
        if (int e = emit(s.str(), common.out_path)) return e;
        return exit_code_for(rc);
    }
    const json j = json::parse(s.str());
    std::ostringstream text;
    text << "ring:            " << j["ring"].get<std::string>() << "\n";
    text << "mode:            " << j["mode"].get<std::string>() << "\n";
    text << "index:           " << index_or_none(j["index"]) << "\n";
    text << "exp(U(R)):       " << j["exponent_of_units"].get<std::uint64_t>() << "\n";
    if (j.contains("no_decomposition_witness")) {
        const auto w = j["no_decomposition_witness"].get<std::uint64_t>();
        text << "witness:         enc " << w << " = " << format_element(ring.ptr, w)
             << " has no strong decomposition\n";
    }
    for (const auto& w : j["witnesses"]) {
        const auto enc = w["element"].get<std::uint64_t>();
        text << "witness:         enc " << enc << " = " << format_element(ring.ptr, enc)
             << ", chosen order " << w["order"].get<std::uint64_t>() << "\n";
    }
    text << "elements:        " << j["element_count"].get<std::uint64_t>()
         << " (classes scanned: " << j["reduction"]["classes_scanned"].get<std::uint64_t>()
         << ")\n";
    if (j.contains("elapsed_ms")) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", j["elapsed_ms"].get<double>());
        text << "elapsed:         " << buf << " ms\n";
    }
    if (int e = emit(text.str(), common.out_path)) return e;
    return exit_code_for(rc);
}

int cmd_decompose(const std::string& spec, const std::string& element_text, std::uint64_t n,
                  bool strong, bool as_json, const CommonOpts& common) {
    RingHandle ring;
    if (int rc = open_ring(spec, common.max_size, ring)) return exit_code_for(rc);
    std::uint64_t element = 0;
    if (int rc = tc_element_parse(ring.ptr, element_text.c_str(), &element)) {
        std::cerr << "error: " << tc_last_error() << "\n";
        return exit_code_for(rc);
    }
    OwnedString s;
    const int rc = tc_decompose_json(ring.ptr, element, n, strong ? 1 : 0, &s.ptr);
    if (rc != TC_OK && rc != TC_ABSENT) {
        std::cerr << "error: " << tc_last_error() << "\n";
        return exit_code_for(rc);
    }
    if (as_json) {
        if (int e = emit(s.str(), common.out_path)) return e;
        return exit_code_for(rc);
    }
    std::ostringstream text;
    if (rc == TC_ABSENT) {
        text << "no " << (strong ? "strong " : "") << n << "-torsion clean decomposition of "
             << format_element(ring.ptr, element) << " in " << tc_ring_spec(ring.ptr) << "\n";
    } else {
        const json j = json::parse(s.str());
        text << j["element_literal"].get<std::string>() << " = "
             << j["idempotent_literal"].get<std::string>() << " + "
             << j["unit_literal"].get<std::string>() << "   in " << j["ring"].get<std::string>()
             << "\n";
        text << "idempotent: enc " << j["idempotent"].get<std::uint64_t>() << "\n";
        text << "unit:       enc " << j["unit"].get<std::uint64_t>() << ", order "
             << j["order"].get<std::uint64_t>() << ", strong: "
             << (j["strong"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (int e = emit(text.str(), common.out_path)) return e;
    return exit_code_for(rc);
}

int cmd_verify(const std::string& spec, const std::string& check_id, bool as_json,
               const CommonOpts& common) {
    RingHandle ring;
    if (int rc = open_ring(spec, common.max_size, ring)) return exit_code_for(rc);
    OwnedString s;
    const int rc = tc_verify_json(ring.ptr, check_id.empty() ? nullptr : check_id.c_str(),
                                  common.jobs, &s.ptr);
    if (rc != TC_OK) {
        std::cerr << "error: " << tc_last_error() << "\n";
        return exit_code_for(rc);
    }
    bool any_fail = false;
    const json results = json::parse(s.str());
    for (const auto& r : results) any_fail |= r["status"].get<std::string>() == "fail";
    if (as_json) {
        if (int e = emit(s.str(), common.out_path)) return e;
        return any_fail ? 1 : 0;
    }
    std::ostringstream text;
    for (const auto& r : results) {
        std::string id = r["check"].get<std::string>();
        id.resize(24, ' ');
        std::string status = r["status"].get<std::string>();
        status.resize(16, ' ');
        text << id << status << r["detail"].get<std::string>() << "\n";
    }
    if (int e = emit(text.str(), common.out_path)) return e;
    return any_fail ? 1 : 0;
}

struct SurveyResult {
    int status = TC_OK;
    std::string payload;  // row JSON or error message
};

int cmd_survey(const std::vector<std::string>& specs, bool as_json, bool as_csv, bool no_timing,
               bool no_reduction, const CommonOpts& common) {
    // All specs must parse and pass the guard before any computation starts.
    std::vector<std::unique_ptr<RingHandle>> rings;
    for (const auto& spec : specs) {
        auto ring = std::make_unique<RingHandle>();
        if (int rc = open_ring(spec, common.max_size, *ring)) return exit_code_for(rc);
        rings.push_back(std::move(ring));
    }

    std::vector<SurveyResult> rows(specs.size());
    const int pool = std::min<int>(
        specs.size(), common.jobs > 0 ? common.jobs
                                      : std::max(1u, std::thread::hardware_concurrency()));
    const int row_jobs = pool > 1 ? 1 : common.jobs;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= rows.size()) return;
            OwnedString s;
            const int rc = tc_survey_json(rings[i]->ptr, no_reduction ? 0 : 1, row_jobs,
                                          no_timing ? 0 : 1, &s.ptr);
            rows[i].status = rc;
            rows[i].payload = rc == TC_OK ? s.str() : std::string(tc_last_error());
        }
    };
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    std::ostringstream text;
    if (as_json) {
        json arr = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].status == TC_OK) {
                arr.push_back(json::parse(rows[i].payload));
            } else {
                arr.push_back(json{{"spec", specs[i]}, {"error", rows[i].payload}});
            }
        }
        text << arr.dump(2) << "\n";
    } else if (as_csv) {
        text << "spec,cardinality,units,unit_exponent,plain_index,strong_index,characteristic,"
                "jacobson_nil_index,abelian,reduced,boolean,commutative,units_equal_one_plus_j";
        if (!no_timing) text << ",elapsed_ms";
        text << ",error\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].status != TC_OK) {
                text << csv_quote(specs[i]) << ",,,,,,,,,,,,";
                if (!no_timing) text << ",";
                text << "," << csv_quote(rows[i].payload) << "\n";
                continue;
            }
            const json j = json::parse(rows[i].payload);
            const auto& f = j["flags"];
            text << csv_quote(j["spec"].get<std::string>()) << ","
                 << j["cardinality"].get<std::uint64_t>() << ","
                 << j["units"].get<std::uint64_t>() << ","
                 << j["unit_exponent"].get<std::uint64_t>() << ","
                 << index_or_none(j["plain_index"]) << "," << index_or_none(j["strong_index"])
                 << "," << j["characteristic"].get<std::uint64_t>() << ","
                 << j["jacobson_nil_index"].get<std::uint64_t>() << ","
                 << (f["abelian"].get<bool>() ? "true" : "false") << ","
                 << (f["reduced"].get<bool>() ? "true" : "false") << ","
                 << (f["boolean"].get<bool>() ? "true" : "false") << ","
                 << (f["commutative"].get<bool>() ? "true" : "false") << ","
                 << (f["units_equal_one_plus_j"].get<bool>() ? "true" : "false");
            if (!no_timing) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.1f", j["elapsed_ms"].get<double>());
                text << "," << buf;
            }
            text << ",\n";
        }
    } else {
        text << "spec                      |R|     |U|    exp   plain  strong  char  nilJ  flags\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].status != TC_OK) {
                text << specs[i] << "  error: " << rows[i].payload << "\n";
                continue;
            }
            const json j = json::parse(rows[i].payload);
            const auto& f = j["flags"];
            std::string flags;
            flags += f["abelian"].get<bool>() ? 'a' : '-';
            flags += f["reduced"].get<bool>() ? 'r' : '-';
            flags += f["boolean"].get<bool>() ? 'b' : '-';
            flags += f["commutative"].get<bool>() ? 'c' : '-';
            flags += f["units_equal_one_plus_j"].get<bool>() ? 'u' : '-';
            char line[256];
            std::snprintf(line, sizeof line, "%-24s %7llu %7llu %6llu %6s %7s %5llu %5llu  %s\n",
                          j["spec"].get<std::string>().c_str(),
                          static_cast<unsigned long long>(j["cardinality"].get<std::uint64_t>()),
                          static_cast<unsigned long long>(j["units"].get<std::uint64_t>()),
                          static_cast<unsigned long long>(j["unit_exponent"].get<std::uint64_t>()),
                          index_or_none(j["plain_index"]).c_str(),
                          index_or_none(j["strong_index"]).c_str(),
                          static_cast<unsigned long long>(j["characteristic"].get<std::uint64_t>()),
                          static_cast<unsigned long long>(
                              j["jacobson_nil_index"].get<std::uint64_t>()),
                          flags.c_str());
            text << line;
        }
    }
    if (int e = emit(text.str(), common.out_path)) return e;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tcl — torsion-clean index engine for finite rings"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string spec, element_text, check_id;
    std::vector<std::string> specs;
    std::uint64_t n = 1;
    bool strong = false, as_json = false, as_csv = false, no_timing = false, no_reduction = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-size", common.max_size,
                        "carrier size guard (default 2^20; env TCL_MAX_SIZE)")
            ->envname("TCL_MAX_SIZE");
        cmd->add_option("--jobs", common.jobs, "parallel workers (0 = all logical CPUs)");
        cmd->add_option("--out", common.out_path, "write output to a file instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "structure report for a ring (JSON)");
    analyze->add_option("ring-spec", spec, "ring spec, e.g. M(2,GF(2))")->required();
    add_common(analyze);

    CLI::App* index = app.add_subcommand("index", "minimal (strong) torsion-clean index");
    index->add_option("ring-spec", spec)->required();
    index->add_flag("--strong", strong, "require the idempotent and unit to commute");
    index->add_flag("--no-conjugacy-reduction", no_reduction,
                    "scan every element instead of one per similarity class");
    index->add_flag("--json", as_json, "emit the JSON report");
    index->add_flag("--no-timing", no_timing, "omit elapsed_ms from the report");
    add_common(index);

    CLI::App* decompose = app.add_subcommand("decompose", "probe one element for a decomposition");
    decompose->add_option("ring-spec", spec)->required();
    decompose->add_option("element", element_text, "decimal encoding or bracket literal")
        ->required();
    decompose->add_option("n", n, "torsion bound: the unit must satisfy u^n = 1")->required();
    decompose->add_flag("--strong", strong);
    decompose->add_flag("--json", as_json);
    add_common(decompose);

    std::string check_help = "run a single check; one of: ";
    check_help += tc_check_ids();
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite against a ring");
    verify->add_option("ring-spec", spec)->required();
    verify->add_option("--check", check_id, check_help);
    verify->add_flag("--json", as_json);
    add_common(verify);

    CLI::App* survey = app.add_subcommand("survey", "index/structure survey over several rings");
    survey->add_option("ring-specs", specs, "ring specs (one row each)")->required();
    survey->add_flag("--json", as_json);
    survey->add_flag("--csv", as_csv);
    survey->add_flag("--no-timing", no_timing, "omit elapsed_ms (stable output for diffs)");
    survey->add_flag("--no-conjugacy-reduction", no_reduction);
    add_common(survey);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (analyze->parsed()) return cmd_analyze(spec, common);
    if (index->parsed()) return cmd_index(spec, strong, no_reduction, as_json, no_timing, common);
    if (decompose->parsed()) return cmd_decompose(spec, element_text, n, strong, as_json, common);
    if (verify->parsed()) return cmd_verify(spec, check_id, as_json, common);
    if (survey->parsed()) return cmd_survey(specs, as_json, as_csv, no_timing, no_reduction, common);
    return 2;
}
