#pragma once

#include <cstdint>
#include <vector>

#include "ring.hpp"

namespace tc::analysis {

struct Flags {
    bool abelian = false;
    bool reduced = false;
    bool boolean_ring = false;
    bool commutative = false;
    bool units_equal_one_plus_j = false;
};

struct StructureReport {
    RingPtr ring;
    std::vector<std::uint32_t> idempotents;               // encs, ascending
    std::vector<std::pair<std::uint32_t, std::uint32_t>> units;  // (enc, order)
    std::uint64_t unit_group_exponent = 1;
    std::vector<std::uint32_t> jacobson;                  // encs, ascending
    std::uint32_t nil_index_of_jacobson = 0;
    std::uint64_t center_size = 0;
    Flags flags;
};

// Minimal k with x^k = 0 for every x in the ideal; 1 for {0}, 0 for an empty
// list. Throws Argument with a witness if some element is not nilpotent.
std::uint32_t nil_index(const Ring& r, const std::vector<std::uint32_t>& ideal);

bool is_abelian(const Ring& r, int jobs = 1);
bool is_reduced(const Ring& r, int jobs = 1);
bool is_boolean(const Ring& r, int jobs = 1);
bool is_commutative(const Ring& r);

std::uint64_t center_size(const Ring& r, int jobs = 1);

std::vector<std::uint32_t> central_idempotents(const Ring& r, int jobs = 1);
// The complete orthogonal set of primitive central idempotents (they are
// checked to be pairwise orthogonal and to sum to 1).
std::vector<std::uint32_t> primitive_central_idempotents(const Ring& r, int jobs = 1);

// True iff the corner eRe (unit e) is a field. Throws Argument when e is not
// a central idempotent.
bool corner_is_field(const Ring& r, std::uint64_t e_enc);

Flags flags(const Ring& r, int jobs = 1);

StructureReport analyze(const RingPtr& r, int jobs = 1);

}  // namespace tc::analysis
