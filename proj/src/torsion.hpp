#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ring.hpp"

namespace tc::torsion {

// One decomposition r = e + u with e idempotent, u a unit of the given
// order; strong means e and u commute.
struct Certificate {
    RingPtr ring;
    std::uint64_t element = 0;
    std::uint64_t idempotent = 0;
    std::uint64_t unit = 0;
    std::uint32_t order = 0;
    bool strong = false;
};

// D(r): all unit orders achievable over valid (strong) decompositions of r.
struct OrderSet {
    std::uint64_t element = 0;
    bool strong = false;
    std::vector<std::uint32_t> orders;  // ascending
};

struct Witness {
    std::uint64_t element = 0;
    std::uint32_t order = 0;
};

struct IndexReport {
    RingPtr ring;
    bool strong = false;
    bool conjugacy_reduction = true;
    // Empty iff no index exists (strong mode only); the witness element then
    // has no strong decomposition at all.
    std::optional<std::uint64_t> index;
    std::optional<std::uint64_t> no_decomposition_witness;
    std::vector<Witness> witnesses;  // orders' LCM = index
    std::uint64_t exponent_of_units = 1;
    std::uint64_t element_count = 0;
    std::uint64_t classes_scanned = 0;
    double elapsed_ms = 0.0;
};

// Deterministic single-element probe: the decomposition minimizing
// (enc(e), enc(u)) whose unit order divides n, if any.
std::optional<Certificate> decompose(const RingPtr& ring, std::uint64_t element, std::uint64_t n,
                                     bool strong, int jobs = 1);

OrderSet order_set(const RingPtr& ring, std::uint64_t element, bool strong, int jobs = 1);

// Minimal index search: candidates are the divisors of exp(U(R)) in
// increasing order; a candidate d works iff every element's achievable-order
// set contains a divisor of d.
IndexReport torsion_clean_index(const RingPtr& ring, bool strong, bool conjugacy_reduction = true,
                                int jobs = 1);

// Recomputes every certificate invariant from scratch.
bool verify_certificate(const Certificate& cert);

}  // namespace tc::torsion
