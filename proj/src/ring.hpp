#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace tc {

enum class Kind { Field, Matrix, Triangular, Product, PolyQuot };

using Digit = std::uint32_t;

// Every construction has <= 64 digits: each digit has radix >= 2 and the
// carrier fits in a uint64_t.
inline constexpr int kMaxDigits = 64;
using DigitBuf = std::array<Digit, kMaxDigits>;

struct UnitTable {
    std::vector<std::uint32_t> order;    // indexed by enc; 0 = not a unit
    std::vector<std::uint32_t> inverse;  // valid where order != 0
    std::vector<std::uint32_t> units;    // unit encs, ascending
    std::uint64_t exponent = 1;          // exp(U(R)) = LCM of unit orders
};

struct SimilarityClasses {
    // enc -> enc of the smallest element similar to it (under u r u^-1).
    std::vector<std::uint32_t> representative;
    // (representative enc, class size), ascending by representative.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> classes;
};

// An immutable finite ring with exact arithmetic over a canonical integer
// encoding of its carrier: enc is a mixed-radix little-endian readout of the
// element's digit vector, so encs enumerate the carrier as [0, cardinality).
//
// Digit order: matrices are row-major; triangular rings store the upper
// triangle row-major; products concatenate factor digits in factor order;
// truncated polynomial rings index coefficients by monomial in graded
// lexicographic order (total degree, then the exponent tuple).
class Ring : public std::enable_shared_from_this<Ring> {
  public:
    static constexpr std::uint64_t kDefaultMaxCardinality = 1ull << 20;
    static constexpr std::uint64_t kMulTableLimit = 1ull << 12;

    // Parses the spec grammar:
    //   ring  := field | "M(" int "," ring ")" | "T(" int "," ring ")"
    //          | "P(" ring {"," ring} ")" | "Q(" field "," int "," int ")"
    //   field := "GF(" int ")"          (argument must be a prime power)
    static std::shared_ptr<const Ring> parse(std::string_view spec,
                                             std::uint64_t max_cardinality = kDefaultMaxCardinality);

    static std::shared_ptr<const Ring> make_field(
        Field f, std::uint64_t max_cardinality = kDefaultMaxCardinality);
    static std::shared_ptr<const Ring> make_matrix(
        std::uint32_t n, Field f, std::uint64_t max_cardinality = kDefaultMaxCardinality);
    static std::shared_ptr<const Ring> make_triangular(
        std::uint32_t m, Field f, std::uint64_t max_cardinality = kDefaultMaxCardinality);
    static std::shared_ptr<const Ring> make_product(
        std::vector<std::shared_ptr<const Ring>> factors,
        std::uint64_t max_cardinality = kDefaultMaxCardinality);
    static std::shared_ptr<const Ring> make_poly_quot(
        Field f, std::uint32_t e, std::uint32_t v,
        std::uint64_t max_cardinality = kDefaultMaxCardinality);

    Kind kind() const { return kind_; }
    std::uint64_t cardinality() const { return cardinality_; }
    std::uint64_t characteristic() const { return characteristic_; }
    const std::string& spec() const { return spec_; }
    int digit_count() const { return digit_count_; }
    const Field& base_field() const;  // Field/Matrix/Triangular/PolyQuot only
    std::uint32_t matrix_dim() const { return dim_; }
    const std::vector<std::shared_ptr<const Ring>>& factors() const { return factors_; }
    std::uint32_t quot_exponent() const { return quot_e_; }
    std::uint32_t quot_variables() const { return quot_v_; }

    // Payload arithmetic on digit vectors of digit_count() entries.
    // For mul, out must not alias a or b.
    void add(const Digit* a, const Digit* b, Digit* out) const;
    void sub(const Digit* a, const Digit* b, Digit* out) const;
    void neg(const Digit* a, Digit* out) const;
    void mul(const Digit* a, const Digit* b, Digit* out) const;
    void zero(Digit* out) const;
    void one(Digit* out) const;

    std::uint64_t encode(const Digit* a) const;
    void decode(std::uint64_t enc, Digit* out) const;

    // enc-level convenience (mul_enc uses the memoized table when built).
    std::uint64_t add_enc(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub_enc(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg_enc(std::uint64_t a) const;
    std::uint64_t mul_enc(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow_enc(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t one_enc() const { return one_enc_; }

    // Element literals: a decimal enc, or a nested bracket literal with
    // field-element codes at the leaves.
    std::uint64_t parse_element(std::string_view text) const;
    std::string format_element(std::uint64_t enc) const;

    // An F_p-additive basis of the carrier (one nonzero digit, that digit a
    // power of p); commutators are additive in each argument, so commuting
    // with the basis is equivalent to commuting with the whole ring.
    const std::vector<std::uint64_t>& additive_basis() const;

    // Memoized multiplication table; built only for cardinality <= 2^12.
    void ensure_mul_table() const;

    // --- structural analysis, lazily computed and cached (analysis.cpp) ---
    const UnitTable& units(int jobs = 1) const;
    const std::vector<std::uint32_t>& idempotents(int jobs = 1) const;  // encs, ascending
    const std::vector<Digit>& idempotent_payloads(int jobs = 1) const;  // digit_count-strided
    const std::vector<std::uint32_t>& jacobson(int jobs = 1) const;     // encs, ascending
    const std::vector<bool>& jacobson_mask(int jobs = 1) const;

    // --- similarity classes under unit conjugation (torsion.cpp) ---
    const SimilarityClasses& similarity_classes(int jobs = 1) const;

    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

  private:
    Ring() = default;
    static std::shared_ptr<const Ring> finish(std::shared_ptr<Ring> r,
                                              std::uint64_t max_cardinality);

    friend struct RingBuilder;

    Kind kind_ = Kind::Field;
    std::uint64_t cardinality_ = 0;
    std::uint64_t characteristic_ = 0;
    std::string spec_;
    int digit_count_ = 0;
    std::uint64_t one_enc_ = 0;

    std::optional<Field> base_;                         // non-product kinds
    std::uint32_t dim_ = 0;                             // Matrix n / Triangular m
    std::vector<std::uint32_t> tri_index_;              // (i*m + j) -> digit index
    std::vector<std::shared_ptr<const Ring>> factors_;  // Product
    std::vector<int> factor_offset_;
    std::uint32_t quot_e_ = 0, quot_v_ = 0;             // PolyQuot
    std::vector<std::uint32_t> mono_mul_;               // monomial product or kNoMonomial

    std::vector<const Field*> digit_field_;
    std::vector<std::uint64_t> place_;  // mixed-radix place values

    mutable std::mutex cache_mutex_;
    mutable std::atomic<const std::vector<std::uint32_t>*> mul_table_ptr_{nullptr};
    mutable std::optional<std::vector<std::uint32_t>> mul_table_;
    mutable std::optional<std::vector<std::uint64_t>> additive_basis_;
    mutable std::optional<UnitTable> units_;
    mutable std::optional<std::vector<std::uint32_t>> idempotents_;
    mutable std::optional<std::vector<Digit>> idempotent_payloads_;
    mutable std::optional<std::vector<std::uint32_t>> jacobson_;
    mutable std::optional<std::vector<bool>> jacobson_mask_;
    mutable std::optional<SimilarityClasses> classes_;
};

inline constexpr std::uint32_t kNoMonomial = 0xffffffffu;

using RingPtr = std::shared_ptr<const Ring>;

// A ring element as (handle, enc); operations check handle identity.
class RingElem {
  public:
    RingElem(RingPtr ring, std::uint64_t enc);

    std::uint64_t enc() const { return enc_; }
    const RingPtr& ring() const { return ring_; }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }
    RingElem pow(std::uint64_t e) const;

  private:
    void check_same(const RingElem& o) const;

    RingPtr ring_;
    std::uint64_t enc_;
};

}  // namespace tc
