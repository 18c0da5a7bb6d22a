#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace tc {

bool is_prime(std::uint64_t n);

// Splits n into (p, k) with n = p^k, p prime. Throws Argument if n is not a
// prime power >= 2.
std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t n);

namespace poly {

// Dense little-endian coefficient vectors over F_p. Leading zeros allowed on
// input; results are trimmed.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly f);
Poly mul_mod_p(const Poly& a, const Poly& b, std::uint32_t p);
// Remainder of a by monic divisor d over F_p.
Poly rem_mod_p(Poly a, const Poly& d, std::uint32_t p);
bool is_irreducible(const Poly& f, std::uint32_t p);
// Lexicographically smallest monic irreducible of degree k over F_p, where
// coefficient tuples (c_0, ..., c_{k-1}) are compared low-degree-first.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t k);

}  // namespace poly

struct FieldTables;

// F_{p^k} with a fixed monic irreducible modulus. Elements are integer codes
// in [0, q): code = sum coeffs[i] * p^i over the residue's coefficients.
// Immutable after construction; copies share the arithmetic tables.
class Field {
  public:
    static constexpr std::uint64_t kMaxCardinality = 1 << 20;

    Field(std::uint32_t p, std::uint32_t k);
    Field(std::uint32_t p, std::uint32_t k, poly::Poly modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    const poly::Poly& modulus() const { return modulus_; }
    std::string name() const;  // "GF(q)"

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws on a == 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    // Multiplicative order; throws on a == 0.
    std::uint32_t order(std::uint32_t a) const;

    std::vector<std::uint32_t> coeffs(std::uint32_t code) const;
    std::uint32_t code(const std::vector<std::uint32_t>& coeffs) const;

    bool same_spec(const Field& other) const;

  private:
    void init_tables();

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t q_ = 0;
    poly::Poly modulus_;
    std::shared_ptr<const FieldTables> tables_;
};

// A field element tied to its field; mixing fields raises Argument.
class FieldElem {
  public:
    FieldElem(const Field& field, std::uint32_t code);

    std::uint32_t code() const { return code_; }
    const Field& field() const { return *field_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;
    std::uint32_t order() const;

  private:
    const Field* check_same(const FieldElem& o) const;

    const Field* field_;
    std::uint32_t code_;
};

}  // namespace tc
