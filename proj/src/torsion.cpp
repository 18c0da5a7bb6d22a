#include "torsion.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "parallel.hpp"

namespace tc {

namespace {

// Subgroup generators found by incremental closure over the unit list in enc
// order: whenever a unit is not yet generated, adopt it and re-close.
std::vector<std::uint32_t> unit_generators(const Ring& r, const UnitTable& units) {
    std::vector<bool> known(r.cardinality(), false);
    std::vector<std::uint32_t> members{static_cast<std::uint32_t>(r.one_enc())};
    known[r.one_enc()] = true;
    std::vector<std::uint32_t> gens;
    for (std::uint32_t u : units.units) {
        if (known[u]) continue;
        gens.push_back(u);
        std::vector<std::uint32_t> queue = members;
        if (!known[u]) {
            known[u] = true;
            members.push_back(u);
            queue.push_back(u);
        }
        while (!queue.empty()) {
            const std::uint32_t s = queue.back();
            queue.pop_back();
            for (std::uint32_t g : gens) {
                const std::uint64_t t = r.mul_enc(s, g);
                if (!known[t]) {
                    known[t] = true;
                    members.push_back(static_cast<std::uint32_t>(t));
                    queue.push_back(static_cast<std::uint32_t>(t));
                }
            }
        }
        if (members.size() == units.units.size()) break;
    }
    return gens;
}

SimilarityClasses build_similarity_classes(const Ring& r, int jobs) {
    const std::uint64_t n = r.cardinality();
    const UnitTable& units = r.units(jobs);
    SimilarityClasses out;
    out.representative.assign(n, 0);

    const std::vector<std::uint32_t> gens = unit_generators(r, units);
    if (gens.empty()) {  // trivial unit group: every class is a singleton
        for (std::uint64_t i = 0; i < n; ++i) {
            out.representative[i] = static_cast<std::uint32_t>(i);
            out.classes.emplace_back(static_cast<std::uint32_t>(i), 1);
        }
        return out;
    }

    const int digits = r.digit_count();
    std::vector<Digit> gen_payload(gens.size() * digits);
    std::vector<Digit> inv_payload(gens.size() * digits);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        r.decode(gens[i], gen_payload.data() + i * digits);
        r.decode(units.inverse[gens[i]], inv_payload.data() + i * digits);
    }

    std::vector<bool> visited(n, false);
    std::vector<std::uint32_t> orbit;
    DigitBuf x, tmp, conj;
    for (std::uint64_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        orbit.clear();
        orbit.push_back(static_cast<std::uint32_t>(start));
        visited[start] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            r.decode(orbit[head], x.data());
            for (std::size_t g = 0; g < gens.size(); ++g) {
                r.mul(gen_payload.data() + g * digits, x.data(), tmp.data());
                r.mul(tmp.data(), inv_payload.data() + g * digits, conj.data());
                const std::uint64_t y = r.encode(conj.data());
                if (!visited[y]) {
                    visited[y] = true;
                    orbit.push_back(static_cast<std::uint32_t>(y));
                }
            }
        }
        for (std::uint32_t member : orbit) {
            out.representative[member] = static_cast<std::uint32_t>(start);
        }
        out.classes.emplace_back(static_cast<std::uint32_t>(start),
                                 static_cast<std::uint32_t>(orbit.size()));
    }

    std::uint64_t total = 0;
    for (const auto& [rep, size] : out.classes) total += size;
    if (total != n) throw internal_error("similarity classes do not partition " + r.spec());
    return out;
}

}  // namespace

const SimilarityClasses& Ring::similarity_classes(int jobs) const {
    {
        std::lock_guard<std::mutex> g(cache_mutex_);
        if (classes_) return *classes_;
    }
    SimilarityClasses c = build_similarity_classes(*this, jobs);
    std::lock_guard<std::mutex> g(cache_mutex_);
    if (!classes_) classes_ = std::move(c);
    return *classes_;
}

namespace torsion {

namespace {

std::vector<std::uint64_t> divisors_ascending(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_power_factors(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;  // (prime, p^a exactly dividing)
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::uint64_t pp = 1;
            while (n % p == 0) {
                n /= p;
                pp *= p;
            }
            out.emplace_back(p, pp);
        }
    }
    if (n > 1) out.emplace_back(n, n);
    return out;
}

// Multi-word bitmask over divisor indices.
class DivisorMask {
  public:
    explicit DivisorMask(std::size_t bits) : words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= 1ull << (i % 64); }
    bool any_and(const DivisorMask& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w] & o.words_[w]) return true;
        }
        return false;
    }
    bool and_contained_in(const DivisorMask& filter, const DivisorMask& allowed) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if ((words_[w] & filter.words_[w]) & ~allowed.words_[w]) return false;
        }
        return true;
    }
    int lowest_common_bit(const DivisorMask& o) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t both = words_[w] & o.words_[w];
            if (both) return static_cast<int>(w * 64 + std::countr_zero(both));
        }
        return -1;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

  private:
    std::vector<std::uint64_t> words_;
};

struct SearchContext {
    const Ring& ring;
    const UnitTable& units;
    const std::vector<Digit>& idem_payloads;
    std::size_t idem_count;
    bool strong;
};

// Unit orders reachable from decompositions of one element, as a mask over
// divisor indices of exp(U(R)).
DivisorMask element_order_mask(const SearchContext& ctx, std::uint64_t element,
                               const std::vector<std::uint32_t>& div_index, std::size_t bits) {
    const Ring& r = ctx.ring;
    const int digits = r.digit_count();
    DivisorMask mask(bits);
    DigitBuf elem, u, eu, ue;
    r.decode(element, elem.data());
    for (std::size_t i = 0; i < ctx.idem_count; ++i) {
        const Digit* e = ctx.idem_payloads.data() + i * digits;
        r.sub(elem.data(), e, u.data());
        const std::uint64_t u_enc = r.encode(u.data());
        const std::uint32_t order = ctx.units.order[u_enc];
        if (order == 0) continue;
        if (ctx.strong) {
            r.mul(e, u.data(), eu.data());
            r.mul(u.data(), e, ue.data());
            if (!std::equal(eu.data(), eu.data() + digits, ue.data())) continue;
        }
        mask.set(div_index[order]);
    }
    return mask;
}

}  // namespace

std::optional<Certificate> decompose(const RingPtr& ring, std::uint64_t element, std::uint64_t n,
                                     bool strong, int jobs) {
    if (element >= ring->cardinality()) {
        throw argument_error("element encoding out of range for " + ring->spec());
    }
    if (n < 1) throw argument_error("torsion bound n must be >= 1");
    const Ring& r = *ring;
    const UnitTable& units = r.units(jobs);
    const auto& idems = r.idempotents(jobs);
    const auto& payloads = r.idempotent_payloads(jobs);
    const int digits = r.digit_count();
    DigitBuf elem, u, eu, ue;
    r.decode(element, elem.data());
    // u is determined by e, so scanning idempotents in enc order yields the
    // (enc(e), enc(u))-lexicographic minimum.
    for (std::size_t i = 0; i < idems.size(); ++i) {
        const Digit* e = payloads.data() + i * digits;
        r.sub(elem.data(), e, u.data());
        const std::uint64_t u_enc = r.encode(u.data());
        const std::uint32_t order = units.order[u_enc];
        if (order == 0 || n % order != 0) continue;
        if (strong) {
            r.mul(e, u.data(), eu.data());
            r.mul(u.data(), e, ue.data());
            if (!std::equal(eu.data(), eu.data() + digits, ue.data())) continue;
        }
        return Certificate{ring, element, idems[i], u_enc, order, strong};
    }
    return std::nullopt;
}

OrderSet order_set(const RingPtr& ring, std::uint64_t element, bool strong, int jobs) {
    if (element >= ring->cardinality()) {
        throw argument_error("element encoding out of range for " + ring->spec());
    }
    const Ring& r = *ring;
    const UnitTable& units = r.units(jobs);
    const auto& idems = r.idempotents(jobs);
    const auto& payloads = r.idempotent_payloads(jobs);
    const int digits = r.digit_count();
    OrderSet out{element, strong, {}};
    DigitBuf elem, u, eu, ue;
    r.decode(element, elem.data());
    for (std::size_t i = 0; i < idems.size(); ++i) {
        const Digit* e = payloads.data() + i * digits;
        r.sub(elem.data(), e, u.data());
        const std::uint64_t u_enc = r.encode(u.data());
        const std::uint32_t order = units.order[u_enc];
        if (order == 0) continue;
        if (strong) {
            r.mul(e, u.data(), eu.data());
            r.mul(u.data(), e, ue.data());
            if (!std::equal(eu.data(), eu.data() + digits, ue.data())) continue;
        }
        out.orders.push_back(order);
    }
    std::sort(out.orders.begin(), out.orders.end());
    out.orders.erase(std::unique(out.orders.begin(), out.orders.end()), out.orders.end());
    return out;
}

IndexReport torsion_clean_index(const RingPtr& ring, bool strong, bool conjugacy_reduction,
                                int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    const Ring& r = *ring;
    IndexReport report;
    report.ring = ring;
    report.strong = strong;
    report.conjugacy_reduction = conjugacy_reduction;
    report.element_count = r.cardinality();

    const UnitTable& units = r.units(jobs);
    report.exponent_of_units = units.exponent;
    const auto& idems = r.idempotents(jobs);
    const auto& idem_payloads = r.idempotent_payloads(jobs);
    if (strong) r.ensure_mul_table();

    std::vector<std::uint64_t> reps;
    if (conjugacy_reduction) {
        for (const auto& [rep, size] : r.similarity_classes(jobs).classes) reps.push_back(rep);
    } else {
        reps.resize(r.cardinality());
        std::iota(reps.begin(), reps.end(), 0);
    }
    report.classes_scanned = reps.size();

    const std::uint64_t exponent = units.exponent;
    const std::vector<std::uint64_t> divisors = divisors_ascending(exponent);
    std::vector<std::uint32_t> div_index(exponent + 1, 0);
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        div_index[divisors[i]] = static_cast<std::uint32_t>(i);
    }

    const SearchContext ctx{r, units, idem_payloads, idems.size(), strong};
    std::vector<DivisorMask> masks(reps.size(), DivisorMask(divisors.size()));
    parallel_indexed(reps.size(), jobs, [&](int, std::uint64_t i) {
        masks[i] = element_order_mask(ctx, reps[i], div_index, divisors.size());
    });

    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (masks[i].empty()) {
            if (!strong) {
                throw internal_error("element " + std::to_string(reps[i]) + " of " + r.spec() +
                                     " has no clean decomposition");
            }
            report.no_decomposition_witness = reps[i];
            const auto t1 = std::chrono::steady_clock::now();
            report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            return report;
        }
    }

    // Precompute, per candidate divisor d, which divisor indices divide d.
    for (std::uint64_t d : divisors) {
        DivisorMask allowed(divisors.size());
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (d % divisors[i] == 0) allowed.set(i);
        }
        bool feasible = true;
        for (const auto& mask : masks) {
            if (!mask.any_and(allowed)) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        report.index = d;
        // Greedy witnesses: for each prime power p^a exactly dividing d, the
        // enc-smallest representative all of whose d-compatible orders are
        // multiples of p^a. One exists per prime by minimality of d.
        for (const auto& [p, pp] : prime_power_factors(d)) {
            DivisorMask multiples(divisors.size());
            for (std::size_t i = 0; i < divisors.size(); ++i) {
                if (d % divisors[i] == 0 && divisors[i] % pp == 0) multiples.set(i);
            }
            for (std::size_t i = 0; i < reps.size(); ++i) {
                if (!masks[i].and_contained_in(allowed, multiples)) continue;
                const int bit = masks[i].lowest_common_bit(allowed);
                const Witness w{reps[i], static_cast<std::uint32_t>(divisors[bit])};
                const bool dup = std::any_of(report.witnesses.begin(), report.witnesses.end(),
                                             [&](const Witness& x) { return x.element == w.element; });
                if (!dup) report.witnesses.push_back(w);
                break;
            }
        }
        break;
    }

    if (!report.index) {
        throw internal_error("no divisor of the unit exponent is feasible in " + r.spec());
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

bool verify_certificate(const Certificate& cert) {
    const Ring& r = *cert.ring;
    const std::uint64_t n = r.cardinality();
    if (cert.element >= n || cert.idempotent >= n || cert.unit >= n) return false;
    if (r.mul_enc(cert.idempotent, cert.idempotent) != cert.idempotent) return false;
    if (r.add_enc(cert.idempotent, cert.unit) != cert.element) return false;
    // Recompute the unit order by walking powers; a non-unit never reaches 1.
    if (cert.order == 0) return false;
    std::uint64_t cur = cert.unit;
    std::uint32_t steps = 1;
    while (cur != r.one_enc()) {
        cur = r.mul_enc(cur, cert.unit);
        ++steps;
        if (steps > cert.order) return false;
    }
    if (steps != cert.order) return false;
    if (cert.strong &&
        r.mul_enc(cert.idempotent, cert.unit) != r.mul_enc(cert.unit, cert.idempotent)) {
        return false;
    }
    return true;
}

}  // namespace torsion
}  // namespace tc
