#include "analysis.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "parallel.hpp"

namespace tc {

namespace {

// In a finite ring, x is a unit iff some power x^m equals 1; then
// x^{m-1} is the (two-sided) inverse and the smallest such m is o(x).
// Walks the power orbit, stamping visited encs to stop on a cycle.
struct OrbitScan {
    std::uint32_t order = 0;  // 0 when not a unit
    std::uint32_t inverse = 0;
};

OrbitScan scan_power_orbit(const Ring& r, std::uint64_t enc, std::vector<std::uint32_t>& stamp,
                           std::uint32_t epoch) {
    const std::uint64_t one = r.one_enc();
    DigitBuf base, cur, tmp;
    r.decode(enc, base.data());
    std::copy_n(base.data(), r.digit_count(), cur.data());
    std::uint64_t cur_enc = enc;
    std::uint64_t prev_enc = one;  // x^0
    const std::uint64_t n = r.cardinality();
    for (std::uint64_t steps = 1; steps <= n; ++steps) {
        if (cur_enc == one) {
            return {static_cast<std::uint32_t>(steps), static_cast<std::uint32_t>(prev_enc)};
        }
        if (stamp[cur_enc] == epoch) return {};  // cycled without reaching 1
        stamp[cur_enc] = epoch;
        r.mul(cur.data(), base.data(), tmp.data());
        std::copy_n(tmp.data(), r.digit_count(), cur.data());
        prev_enc = cur_enc;
        cur_enc = r.encode(cur.data());
    }
    throw internal_error("power orbit exceeded the carrier size in " + r.spec());
}

UnitTable build_units(const Ring& r, int jobs) {
    const std::uint64_t n = r.cardinality();
    if (n > 0xffffffffull) {
        throw size_guard_error("structure tables require cardinality below 2^32");
    }
    UnitTable t;
    t.order.assign(n, 0);
    t.inverse.assign(n, 0);
    parallel_chunks(n, jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint32_t> stamp(n, 0);
        for (std::uint64_t enc = begin; enc < end; ++enc) {
            const OrbitScan s =
                scan_power_orbit(r, enc, stamp, static_cast<std::uint32_t>(enc) + 1);
            t.order[enc] = s.order;
            t.inverse[enc] = s.inverse;
        }
    });
    for (std::uint64_t enc = 0; enc < n; ++enc) {
        if (t.order[enc] == 0) continue;
        t.units.push_back(static_cast<std::uint32_t>(enc));
        t.exponent = std::lcm<std::uint64_t>(t.exponent, t.order[enc]);
    }
    // One-sided invertibility must be two-sided here; check both products.
    for (std::uint32_t u : t.units) {
        if (r.mul_enc(u, t.inverse[u]) != r.one_enc() ||
            r.mul_enc(t.inverse[u], u) != r.one_enc()) {
            throw internal_error("one-sided inverse disagreement at element " +
                                 std::to_string(u) + " in " + r.spec());
        }
    }
    return t;
}

std::vector<std::uint32_t> build_idempotents(const Ring& r, int jobs) {
    const std::uint64_t n = r.cardinality();
    std::vector<std::vector<std::uint32_t>> parts(resolve_jobs(jobs));
    parallel_chunks(n, jobs, [&](int w, std::uint64_t begin, std::uint64_t end) {
        DigitBuf x, sq;
        auto& out = parts[w];
        for (std::uint64_t enc = begin; enc < end; ++enc) {
            r.decode(enc, x.data());
            r.mul(x.data(), x.data(), sq.data());
            if (std::equal(x.data(), x.data() + r.digit_count(), sq.data())) {
                out.push_back(static_cast<std::uint32_t>(enc));
            }
        }
    });
    std::vector<std::uint32_t> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
}

// x is in J(R) iff 1 - y is a unit for every y in Rx. Rx is the additive
// span of { b*x : b in the additive basis }, so the span is walked directly
// instead of looping over every r in R.
bool quasi_regular_all(const Ring& r, std::uint64_t x, const UnitTable& units,
                       std::vector<std::uint32_t>& span_mark, std::uint32_t epoch,
                       std::vector<std::uint32_t>& span_list) {
    const auto& basis = r.additive_basis();
    span_list.clear();
    span_list.push_back(0);
    span_mark[0] = epoch;
    const std::uint32_t p = static_cast<std::uint32_t>(r.characteristic());
    for (std::uint64_t b : basis) {
        const std::uint64_t g = r.mul_enc(b, x);
        if (span_mark[g] == epoch) continue;
        const std::size_t snapshot = span_list.size();
        std::uint64_t cg = 0;
        for (std::uint32_t c = 1; c < p + 1; ++c) {
            cg = r.add_enc(cg, g);
            if (cg == 0) break;  // reached the additive order of g
            for (std::size_t i = 0; i < snapshot; ++i) {
                const std::uint64_t y = r.add_enc(span_list[i], cg);
                if (span_mark[y] == epoch) continue;
                span_mark[y] = epoch;
                span_list.push_back(static_cast<std::uint32_t>(y));
                if (units.order[r.sub_enc(r.one_enc(), y)] == 0) return false;
            }
        }
    }
    return true;
}

std::vector<std::uint32_t> build_jacobson(const Ring& r, int jobs) {
    const std::uint64_t n = r.cardinality();
    const UnitTable& units = r.units(jobs);
    std::vector<std::uint8_t> member(n, 0);
    parallel_chunks(n, jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint32_t> span_mark(n, 0);
        std::vector<std::uint32_t> span_list;
        for (std::uint64_t enc = begin; enc < end; ++enc) {
            if (units.order[enc] != 0) continue;  // J contains no units
            member[enc] = quasi_regular_all(r, enc, units, span_mark,
                                            static_cast<std::uint32_t>(enc) + 1, span_list)
                              ? 1
                              : 0;
        }
    });
    std::vector<std::uint32_t> out;
    for (std::uint64_t enc = 0; enc < n; ++enc) {
        if (member[enc]) out.push_back(static_cast<std::uint32_t>(enc));
    }

    // Self-checks: ideal closure (additive closure plus closure under basis
    // multiples suffices, products being additive in each argument) and the
    // 1 + J units property.
    std::vector<bool> mask(n, false);
    for (std::uint32_t j : out) mask[j] = true;
    const std::size_t pair_cap = out.size() <= 2048 ? out.size() : 2048;
    for (std::size_t i = 0; i < pair_cap; ++i) {
        for (std::uint32_t j2 : out) {
            if (!mask[r.add_enc(out[i], j2)]) {
                throw internal_error("radical not additively closed in " + r.spec());
            }
        }
    }
    for (std::uint32_t j : out) {
        for (std::uint64_t b : r.additive_basis()) {
            if (!mask[r.mul_enc(b, j)] || !mask[r.mul_enc(j, b)]) {
                throw internal_error("radical not an ideal in " + r.spec());
            }
        }
        if (units.order[r.add_enc(r.one_enc(), j)] == 0) {
            throw internal_error("1 + radical element is not a unit in " + r.spec());
        }
    }
    return out;
}

}  // namespace

// Lazily built Ring caches: build outside the lock (racing builders produce
// identical results), publish under it.

const UnitTable& Ring::units(int jobs) const {
    {
        std::lock_guard<std::mutex> g(cache_mutex_);
        if (units_) return *units_;
    }
    UnitTable t = build_units(*this, jobs);
    std::lock_guard<std::mutex> g(cache_mutex_);
    if (!units_) units_ = std::move(t);
    return *units_;
}

const std::vector<std::uint32_t>& Ring::idempotents(int jobs) const {
    {
        std::lock_guard<std::mutex> g(cache_mutex_);
        if (idempotents_) return *idempotents_;
    }
    auto ids = build_idempotents(*this, jobs);
    std::lock_guard<std::mutex> g(cache_mutex_);
    if (!idempotents_) idempotents_ = std::move(ids);
    return *idempotents_;
}

const std::vector<Digit>& Ring::idempotent_payloads(int jobs) const {
    const auto& ids = idempotents(jobs);
    {
        std::lock_guard<std::mutex> g(cache_mutex_);
        if (idempotent_payloads_) return *idempotent_payloads_;
    }
    std::vector<Digit> payloads(ids.size() * digit_count_);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        decode(ids[i], payloads.data() + i * digit_count_);
    }
    std::lock_guard<std::mutex> g(cache_mutex_);
    if (!idempotent_payloads_) idempotent_payloads_ = std::move(payloads);
    return *idempotent_payloads_;
}

const std::vector<std::uint32_t>& Ring::jacobson(int jobs) const {
    {
        std::lock_guard<std::mutex> g(cache_mutex_);
        if (jacobson_) return *jacobson_;
    }
    auto j = build_jacobson(*this, jobs);
    std::lock_guard<std::mutex> g(cache_mutex_);
    if (!jacobson_) jacobson_ = std::move(j);
    return *jacobson_;
}

const std::vector<bool>& Ring::jacobson_mask(int jobs) const {
    const auto& j = jacobson(jobs);
    {
        std::lock_guard<std::mutex> g(cache_mutex_);
        if (jacobson_mask_) return *jacobson_mask_;
    }
    std::vector<bool> mask(cardinality_, false);
    for (std::uint32_t enc : j) mask[enc] = true;
    std::lock_guard<std::mutex> g(cache_mutex_);
    if (!jacobson_mask_) jacobson_mask_ = std::move(mask);
    return *jacobson_mask_;
}

namespace analysis {

std::uint32_t nil_index(const Ring& r, const std::vector<std::uint32_t>& ideal) {
    std::uint32_t max_index = 0;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint32_t x : ideal) {
        seen.clear();
        std::uint64_t cur = x;
        std::uint32_t k = 1;
        for (;;) {
            if (cur == 0) break;
            if (!seen.insert(cur).second) {
                throw argument_error("element " + std::to_string(x) + " of " + r.spec() +
                                     " is not nilpotent");
            }
            cur = r.mul_enc(cur, x);
            ++k;
        }
        max_index = std::max(max_index, k);
    }
    return max_index;
}

bool is_commutative(const Ring& r) {
    const auto& basis = r.additive_basis();
    for (std::uint64_t a : basis) {
        for (std::uint64_t b : basis) {
            if (r.mul_enc(a, b) != r.mul_enc(b, a)) return false;
        }
    }
    return true;
}

namespace {

bool commutes_with_basis(const Ring& r, std::uint64_t x) {
    for (std::uint64_t b : r.additive_basis()) {
        if (r.mul_enc(x, b) != r.mul_enc(b, x)) return false;
    }
    return true;
}

}  // namespace

bool is_abelian(const Ring& r, int jobs) {
    for (std::uint32_t e : r.idempotents(jobs)) {
        if (!commutes_with_basis(r, e)) return false;
    }
    return true;
}

bool is_reduced(const Ring& r, int jobs) {
    const std::uint64_t n = r.cardinality();
    std::atomic<bool> reduced{true};
    parallel_chunks(n, jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
        DigitBuf x, sq;
        for (std::uint64_t enc = begin; enc < end && reduced.load(); ++enc) {
            if (enc == 0) continue;
            r.decode(enc, x.data());
            r.mul(x.data(), x.data(), sq.data());
            if (std::all_of(sq.data(), sq.data() + r.digit_count(),
                            [](Digit d) { return d == 0; })) {
                reduced.store(false);
            }
        }
    });
    return reduced.load();
}

bool is_boolean(const Ring& r, int jobs) {
    return r.idempotents(jobs).size() == r.cardinality();
}

std::uint64_t center_size(const Ring& r, int jobs) {
    const std::uint64_t n = r.cardinality();
    std::atomic<std::uint64_t> count{0};
    parallel_chunks(n, jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        for (std::uint64_t enc = begin; enc < end; ++enc) {
            if (commutes_with_basis(r, enc)) ++local;
        }
        count.fetch_add(local);
    });
    return count.load();
}

std::vector<std::uint32_t> central_idempotents(const Ring& r, int jobs) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e : r.idempotents(jobs)) {
        if (commutes_with_basis(r, e)) out.push_back(e);
    }
    return out;
}

std::vector<std::uint32_t> primitive_central_idempotents(const Ring& r, int jobs) {
    const auto central = central_idempotents(r, jobs);
    std::vector<std::uint32_t> out;
    for (std::uint32_t e : central) {
        if (e == 0) continue;
        bool primitive = true;
        for (std::uint32_t f : central) {
            if (f == 0 || f == e) continue;
            if (r.mul_enc(f, e) == f) {  // f <= e in the idempotent order
                primitive = false;
                break;
            }
        }
        if (primitive) out.push_back(e);
    }
    // The block idempotents must be orthogonal and sum to 1.
    std::uint64_t sum = 0;
    for (std::uint32_t e : out) sum = r.add_enc(sum, e);
    if (sum != r.one_enc()) {
        throw internal_error("primitive central idempotents do not sum to 1 in " + r.spec());
    }
    for (std::uint32_t e : out) {
        for (std::uint32_t f : out) {
            if (e != f && r.mul_enc(e, f) != 0) {
                throw internal_error("primitive central idempotents not orthogonal in " +
                                     r.spec());
            }
        }
    }
    return out;
}

bool corner_is_field(const Ring& r, std::uint64_t e_enc) {
    if (r.mul_enc(e_enc, e_enc) != e_enc || !commutes_with_basis(r, e_enc)) {
        throw argument_error("element " + std::to_string(e_enc) + " is not a central idempotent of " +
                             r.spec());
    }
    if (e_enc == 0) return false;
    // e is central, so the corner eRe = eR; collect it.
    std::vector<std::uint64_t> corner;
    {
        std::vector<bool> seen(r.cardinality(), false);
        for (std::uint64_t x = 0; x < r.cardinality(); ++x) {
            const std::uint64_t y = r.mul_enc(e_enc, x);
            if (!seen[y]) {
                seen[y] = true;
                corner.push_back(y);
            }
        }
    }
    // Commutativity of the corner via its additive generators e*b.
    std::vector<std::uint64_t> gens;
    for (std::uint64_t b : r.additive_basis()) gens.push_back(r.mul_enc(e_enc, b));
    for (std::uint64_t a : gens) {
        for (std::uint64_t b : gens) {
            if (r.mul_enc(a, b) != r.mul_enc(b, a)) return false;
        }
    }
    // Every nonzero corner element must be invertible within the corner:
    // its power orbit has to reach the corner identity e.
    for (std::uint64_t x : corner) {
        if (x == 0) continue;
        std::unordered_set<std::uint64_t> seen;
        std::uint64_t cur = x;
        for (;;) {
            if (cur == e_enc) break;
            if (!seen.insert(cur).second) return false;  // cycled below e
            cur = r.mul_enc(cur, x);
        }
    }
    return true;
}

Flags flags(const Ring& r, int jobs) {
    Flags f;
    f.commutative = is_commutative(r);
    f.abelian = f.commutative ? true : is_abelian(r, jobs);
    f.reduced = is_reduced(r, jobs);
    f.boolean_ring = is_boolean(r, jobs);
    const UnitTable& units = r.units(jobs);
    const auto& jac = r.jacobson(jobs);
    f.units_equal_one_plus_j = units.units.size() == jac.size();
    if (f.units_equal_one_plus_j) {
        for (std::uint32_t j : jac) {
            if (units.order[r.add_enc(r.one_enc(), j)] == 0) {
                f.units_equal_one_plus_j = false;
                break;
            }
        }
    }
    return f;
}

StructureReport analyze(const RingPtr& r, int jobs) {
    StructureReport rep;
    rep.ring = r;
    rep.idempotents = r->idempotents(jobs);
    const UnitTable& units = r->units(jobs);
    for (std::uint32_t u : units.units) rep.units.emplace_back(u, units.order[u]);
    rep.unit_group_exponent = units.exponent;
    rep.jacobson = r->jacobson(jobs);
    rep.nil_index_of_jacobson = nil_index(*r, rep.jacobson);
    rep.center_size = center_size(*r, jobs);
    rep.flags = flags(*r, jobs);
    return rep;
}

}  // namespace analysis
}  // namespace tc
