#include "theorems.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "analysis.hpp"
#include "parallel.hpp"

namespace tc::theorems {

namespace {

CheckResult make(const RingPtr& ring, std::string id, CheckStatus status, std::string detail,
                 std::vector<std::uint64_t> witness = {}) {
    return CheckResult{std::move(id), ring->spec(), status, std::move(witness), std::move(detail)};
}

// Smallest violating element of (a^n - 1)((a-1)^n - 1) = 0, if any.
std::optional<std::uint64_t> identity_violation(const Ring& r, std::uint64_t n, int jobs) {
    std::atomic<std::uint64_t> worst{r.cardinality()};
    parallel_chunks(r.cardinality(), jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
        DigitBuf a, am1, lhs, rhs, prod, one, pw, scratch;
        r.one(one.data());
        for (std::uint64_t enc = begin; enc < end; ++enc) {
            if (enc >= worst.load(std::memory_order_relaxed)) break;  // chunks are ascending
            r.decode(enc, a.data());
            r.sub(a.data(), one.data(), am1.data());
            // lhs = a^n - 1, rhs = (a-1)^n - 1
            auto pow_into = [&](const Digit* base, Digit* out) {
                DigitBuf b;
                std::copy_n(base, r.digit_count(), b.data());
                r.one(out);
                std::uint64_t e = n;
                while (e > 0) {
                    if (e & 1) {
                        r.mul(out, b.data(), scratch.data());
                        std::copy_n(scratch.data(), r.digit_count(), out);
                    }
                    e >>= 1;
                    if (e > 0) {
                        r.mul(b.data(), b.data(), scratch.data());
                        std::copy_n(scratch.data(), r.digit_count(), b.data());
                    }
                }
            };
            pow_into(a.data(), pw.data());
            r.sub(pw.data(), one.data(), lhs.data());
            pow_into(am1.data(), pw.data());
            r.sub(pw.data(), one.data(), rhs.data());
            r.mul(lhs.data(), rhs.data(), prod.data());
            if (!std::all_of(prod.data(), prod.data() + r.digit_count(),
                             [](Digit d) { return d == 0; })) {
                std::uint64_t cur = worst.load();
                while (enc < cur && !worst.compare_exchange_weak(cur, enc)) {
                }
                break;
            }
        }
    });
    const std::uint64_t w = worst.load();
    if (w == r.cardinality()) return std::nullopt;
    return w;
}

// Number of clean decompositions x = e + u (u any unit).
std::uint64_t clean_decomposition_count(const Ring& r, std::uint64_t x,
                                        std::optional<std::uint64_t>* extra_idempotent,
                                        int jobs) {
    const UnitTable& units = r.units(jobs);
    const auto& idems = r.idempotents(jobs);
    std::uint64_t count = 0;
    for (std::uint32_t e : idems) {
        const std::uint64_t u = r.sub_enc(x, e);
        if (units.order[u] != 0) {
            ++count;
            if (count > 1 && extra_idempotent && !*extra_idempotent) *extra_idempotent = e;
        }
    }
    return count;
}

bool nil_below_char_power(std::uint32_t nil, std::uint64_t chr, std::uint64_t n) {
    // nil < chr^n without overflowing: nil <= 2^32 and chr >= 2.
    if (n >= 64) return true;
    std::uint64_t power = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (power >= (1ull << 62) / chr) return true;
        power *= chr;
    }
    return nil < power;
}

// Representative-normalized view of R/J; cosets are named by their smallest
// member.
class CosetView {
  public:
    CosetView(const Ring& r, int jobs) : r_(r), jmask_(r.jacobson_mask(jobs)) {
        const std::uint64_t n = r.cardinality();
        rep_.assign(n, 0);
        std::vector<bool> assigned(n, false);
        const auto& jac = r.jacobson(jobs);
        for (std::uint64_t x = 0; x < n; ++x) {
            if (assigned[x]) continue;
            reps_.push_back(static_cast<std::uint32_t>(x));
            for (std::uint32_t j : jac) {
                const std::uint64_t y = r.add_enc(x, j);
                rep_[y] = static_cast<std::uint32_t>(x);
                assigned[y] = true;
            }
        }
    }

    const Ring& ring() const { return r_; }
    const std::vector<std::uint32_t>& reps() const { return reps_; }
    std::uint32_t rep(std::uint64_t x) const { return rep_[x]; }
    std::uint32_t mul(std::uint64_t a, std::uint64_t b) const { return rep_[r_.mul_enc(a, b)]; }
    std::uint32_t add(std::uint64_t a, std::uint64_t b) const { return rep_[r_.add_enc(a, b)]; }
    std::uint32_t one() const { return rep_[r_.one_enc()]; }

    bool central(std::uint64_t a) const {
        for (std::uint64_t b : r_.additive_basis()) {
            if (mul(a, b) != mul(b, a)) return false;
        }
        return true;
    }

    // The quotient is semisimple; true iff it splits into field corners
    // through its primitive central idempotents.
    bool is_product_of_fields() const {
        std::vector<std::uint32_t> central_idems;
        for (std::uint32_t a : reps_) {
            if (mul(a, a) == a && central(a)) central_idems.push_back(a);
        }
        std::vector<std::uint32_t> primitive;
        for (std::uint32_t e : central_idems) {
            if (e == rep_[0]) continue;
            bool minimal = true;
            for (std::uint32_t f : central_idems) {
                if (f == rep_[0] || f == e) continue;
                if (mul(f, e) == f) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) primitive.push_back(e);
        }
        std::uint32_t sum = rep_[0];
        for (std::uint32_t e : primitive) sum = add(sum, e);
        if (sum != one()) return false;
        for (std::uint32_t e : primitive) {
            if (!corner_is_field(e)) return false;
        }
        return true;
    }

    bool corner_is_field(std::uint32_t e) const {
        std::vector<std::uint32_t> corner;
        {
            std::unordered_set<std::uint32_t> seen;
            for (std::uint32_t x : reps_) {
                const std::uint32_t y = mul(e, x);
                if (seen.insert(y).second) corner.push_back(y);
            }
        }
        std::vector<std::uint32_t> gens;
        for (std::uint64_t b : r_.additive_basis()) gens.push_back(mul(e, rep_[b]));
        for (std::uint32_t a : gens) {
            for (std::uint32_t b : gens) {
                if (mul(a, b) != mul(b, a)) return false;
            }
        }
        for (std::uint32_t x : corner) {
            if (x == rep_[0]) continue;
            std::unordered_set<std::uint32_t> seen;
            std::uint32_t cur = x;
            for (;;) {
                if (cur == e) break;
                if (!seen.insert(cur).second) return false;
                cur = mul(cur, x);
            }
        }
        return true;
    }

  private:
    const Ring& r_;
    const std::vector<bool>& jmask_;
    std::vector<std::uint32_t> rep_;
    std::vector<std::uint32_t> reps_;
};

// Idempotents lift uniquely mod J: every a with a^2 - a in J is within J of
// exactly one idempotent. Returns a violating a if any.
std::optional<std::uint64_t> non_unique_lift(const Ring& r, int jobs) {
    const auto& jmask = r.jacobson_mask(jobs);
    const auto& idems = r.idempotents(jobs);
    const std::uint64_t n = r.cardinality();
    for (std::uint64_t a = 0; a < n; ++a) {
        const std::uint64_t d = r.sub_enc(r.mul_enc(a, a), a);
        if (!jmask[d]) continue;
        std::uint32_t count = 0;
        for (std::uint32_t e : idems) {
            if (jmask[r.sub_enc(e, a)] && ++count > 1) break;
        }
        if (count != 1) return a;
    }
    return std::nullopt;
}

// Every idempotent of R/J central there, tested on quotient idempotent
// representatives against the additive basis.
std::optional<std::uint64_t> quotient_non_abelian_witness(const Ring& r, int jobs) {
    const auto& jmask = r.jacobson_mask(jobs);
    const std::uint64_t n = r.cardinality();
    for (std::uint64_t a = 0; a < n; ++a) {
        if (!jmask[r.sub_enc(r.mul_enc(a, a), a)]) continue;
        for (std::uint64_t b : r.additive_basis()) {
            if (!jmask[r.sub_enc(r.mul_enc(a, b), r.mul_enc(b, a))]) return a;
        }
    }
    return std::nullopt;
}

std::vector<Field> field_leaves(const Ring& r) {
    std::vector<Field> out;
    if (r.kind() == Kind::Field) {
        out.push_back(r.base_field());
        return out;
    }
    if (r.kind() != Kind::Product) return {};
    for (const auto& f : r.factors()) {
        auto sub = field_leaves(*f);
        if (sub.empty()) return {};
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::uint64_t additive_order(const Ring& r, std::uint64_t x) {
    std::uint64_t cur = x;
    std::uint64_t c = 1;
    while (cur != 0) {
        cur = r.add_enc(cur, x);
        ++c;
    }
    return c;
}

// ---- individual checks -----------------------------------------------------

CheckResult identity_eq(CheckContext& ctx, std::uint64_t n) {
    const RingPtr& ring = ctx.ring();
    auto violation = identity_violation(*ring, n, ctx.jobs());
    if (violation) {
        return make(ring, "identity-eq", CheckStatus::Fail,
                    "(a^" + std::to_string(n) + "-1)((a-1)^" + std::to_string(n) +
                        "-1) != 0 at element " + std::to_string(*violation),
                    {*violation});
    }
    return make(ring, "identity-eq", CheckStatus::Pass,
                "(a^n-1)((a-1)^n-1) = 0 for all " + std::to_string(ring->cardinality()) +
                    " elements at n=" + std::to_string(n));
}

CheckResult unique_clean_radical(CheckContext& ctx) {
    const RingPtr& ring = ctx.ring();
    const auto& jac = ring->jacobson(ctx.jobs());
    for (std::uint32_t j : jac) {
        const std::uint64_t x = ring->add_enc(ring->one_enc(), j);
        std::optional<std::uint64_t> extra;
        const std::uint64_t count = clean_decomposition_count(*ring, x, &extra, ctx.jobs());
        if (count != 1) {
            std::vector<std::uint64_t> witness{x};
            if (extra) witness.push_back(*extra);
            return make(ring, "unique-clean-radical", CheckStatus::Fail,
                        "unit 1+" + std::to_string(j) + " has " + std::to_string(count) +
                            " clean decompositions",
                        std::move(witness));
        }
    }
    return make(ring, "unique-clean-radical", CheckStatus::Pass,
                std::to_string(jac.size()) +
                    " radical units, each with exactly one clean decomposition");
}

CheckResult odd_reduced(CheckContext& ctx, std::uint64_t n) {
    const RingPtr& ring = ctx.ring();
    if (n % 2 == 0) {
        return make(ring, "odd-reduced", CheckStatus::NotApplicable,
                    "n=" + std::to_string(n) + " is even");
    }
    if (identity_violation(*ring, n, ctx.jobs())) {
        return make(ring, "odd-reduced", CheckStatus::NotApplicable,
                    "the degree-2n identity does not hold at n=" + std::to_string(n));
    }
    const bool char2 = ring->characteristic() == 2;
    const bool reduced = analysis::is_reduced(*ring, ctx.jobs());
    const bool jzero = ring->jacobson(ctx.jobs()).size() == 1;
    if (char2 && reduced && jzero) {
        return make(ring, "odd-reduced", CheckStatus::Pass,
                    "odd n=" + std::to_string(n) + ": char 2, reduced, J = 0");
    }
    return make(ring, "odd-reduced", CheckStatus::Fail,
                std::string("odd identity holds but ") +
                    (!char2 ? "char != 2" : !reduced ? "ring not reduced" : "J != 0"));
}

CheckResult radical_nil_index(CheckContext& ctx) {
    const RingPtr& ring = ctx.ring();
    const auto& strong = ctx.strong();
    if (!strong.index) {
        return make(ring, "radical-nil-index", CheckStatus::NotApplicable,
                    "no strong index exists");
    }
    const std::uint64_t n = *strong.index;
    const std::uint32_t nil = analysis::nil_index(*ring, ring->jacobson(ctx.jobs()));
    const std::uint64_t chr = ring->characteristic();
    if (!nil_below_char_power(nil, chr, n)) {
        return make(ring, "radical-nil-index", CheckStatus::Fail,
                    "nil index " + std::to_string(nil) + " >= char^n");
    }
    if (is_prime(chr) && nil > n) {
        return make(ring, "radical-nil-index", CheckStatus::Fail,
                    "prime characteristic but nil index " + std::to_string(nil) + " > n = " +
                        std::to_string(n));
    }
    return make(ring, "radical-nil-index", CheckStatus::Pass,
                "J(R) nil of index " + std::to_string(nil) + " at strong n=" + std::to_string(n));
}

CheckResult idempotent_lifting(CheckContext& ctx) {
    const RingPtr& ring = ctx.ring();
    const bool lhs = analysis::is_abelian(*ring, ctx.jobs());
    const auto bad_lift = non_unique_lift(*ring, ctx.jobs());
    const auto bad_central = quotient_non_abelian_witness(*ring, ctx.jobs());
    const bool rhs = !bad_lift && !bad_central;
    if (lhs == rhs) {
        return make(ring, "idempotent-lifting", CheckStatus::Pass,
                    lhs ? "abelian; idempotents lift uniquely and R/J is abelian"
                        : "not abelian; unique lifting + abelian quotient fails as expected");
    }
    std::vector<std::uint64_t> witness;
    if (bad_lift) witness.push_back(*bad_lift);
    if (bad_central) witness.push_back(*bad_central);
    return make(ring, "idempotent-lifting", CheckStatus::Fail,
                std::string("equivalence broken: abelian=") + (lhs ? "yes" : "no") +
                    ", unique-lift+abelian-quotient=" + (rhs ? "yes" : "no"),
                std::move(witness));
}

CheckResult prop_fields(CheckContext& ctx) {
    const RingPtr& ring = ctx.ring();
    const auto leaves = field_leaves(*ring);
    if (leaves.empty()) {
        return make(ring, "prop-fields", CheckStatus::NotApplicable,
                    "not a (product of) field(s)");
    }
    std::uint64_t formula = 1;
    std::string parts;
    for (const auto& f : leaves) {
        formula = std::lcm<std::uint64_t>(formula, f.q() - 1);
        if (!parts.empty()) parts += ",";
        parts += std::to_string(f.q() - 1);
    }
    const auto& plain = ctx.plain();
    const auto& strong = ctx.strong();
    if (plain.index == formula && strong.index == formula) {
        return make(ring, "prop-fields", CheckStatus::Pass,
                    "index = LCM(" + parts + ") = " + std::to_string(formula) + " in both modes");
    }
    return make(ring, "prop-fields", CheckStatus::Fail,
                "LCM formula gives " + std::to_string(formula) + " but engine found plain=" +
                    std::to_string(plain.index.value_or(0)) + " strong=" +
                    std::to_string(strong.index.value_or(0)));
}

CheckResult thm_comm(CheckContext& ctx) {
    const RingPtr& ring = ctx.ring();
    const auto& strong = ctx.strong();
    if (!strong.index) {
        return make(ring, "thm-comm", CheckStatus::NotApplicable, "no strong index exists");
    }
    const std::uint64_t n = *strong.index;
    const UnitTable& units = ring->units(ctx.jobs());
    std::uint32_t max_order = 0;
    std::optional<std::uint64_t> even_unit;
    for (std::uint32_t u : units.units) {
        const std::uint32_t o = units.order[u];
        max_order = std::max(max_order, o);
        if (o % 2 == 0 && !even_unit) even_unit = u;
    }
    const bool all_odd = !even_unit;
    if (n % 2 == 0 && !all_odd) {
        return make(ring, "thm-comm", CheckStatus::NotApplicable,
                    "strong index even and a unit of even order exists");
    }
    const bool cond1 = n % 2 == 1;
    const bool cond3 = all_odd && units.exponent == n && max_order == n;
    bool cond2 = true;
    std::uint64_t corner_lcm = 1;
    std::vector<std::uint64_t> witness;
    for (std::uint32_t e : analysis::primitive_central_idempotents(*ring, ctx.jobs())) {
        std::unordered_set<std::uint64_t> corner;
        for (std::uint64_t x = 0; x < ring->cardinality(); ++x) {
            corner.insert(ring->mul_enc(e, x));
        }
        if (!analysis::corner_is_field(*ring, e) || additive_order(*ring, e) != 2) {
            cond2 = false;
            witness.push_back(e);
            break;
        }
        corner_lcm = std::lcm<std::uint64_t>(corner_lcm, corner.size() - 1);
    }
    cond2 = cond2 && corner_lcm == n;
    if (cond1 && cond2 && cond3) {
        return make(ring, "thm-comm", CheckStatus::Pass,
                    "odd strong n=" + std::to_string(n) +
                        ": all unit orders odd, exp(U)=n, splits into char-2 field corners with "
                        "LCM(|F_i|-1)=n");
    }
    if (even_unit) witness.push_back(*even_unit);
    return make(ring, "thm-comm", CheckStatus::Fail,
                std::string("odd-case equivalence broken: odd-index=") + (cond1 ? "yes" : "no") +
                    " field-product=" + (cond2 ? "yes" : "no") + " odd-orders-with-max=" +
                    (cond3 ? "yes" : "no"),
                std::move(witness));
}

CheckResult thm_ab(CheckContext& ctx) {
    const RingPtr& ring = ctx.ring();
    const bool lhs = analysis::is_abelian(*ring, ctx.jobs());
    const auto bad_lift = non_unique_lift(*ring, ctx.jobs());
    bool rhs = !bad_lift;
    if (rhs) {
        CosetView quotient(*ring, ctx.jobs());
        rhs = quotient.is_product_of_fields();
    }
    if (lhs == rhs) {
        return make(ring, "thm-ab", CheckStatus::Pass,
                    lhs ? "abelian; unique lifting and R/J splits into fields"
                        : "not abelian; the structural conditions fail as expected");
    }
    std::vector<std::uint64_t> witness;
    if (bad_lift) witness.push_back(*bad_lift);
    return make(ring, "thm-ab", CheckStatus::Fail,
                std::string("equivalence broken: abelian=") + (lhs ? "yes" : "no") +
                    ", unique-lift+field-quotient=" + (rhs ? "yes" : "no"),
                std::move(witness));
}

CheckResult radical_unit_power(CheckContext& ctx) {
    const RingPtr& ring = ctx.ring();
    const UnitTable& units = ring->units(ctx.jobs());
    const auto& jmask = ring->jacobson_mask(ctx.jobs());
    const std::uint64_t m = ring->characteristic();
    const std::uint32_t nil = analysis::nil_index(*ring, ring->jacobson(ctx.jobs()));
    const std::uint32_t s = nil > 0 ? nil - 1 : 0;
    for (std::uint32_t u : units.units) {
        std::uint64_t power = u;  // u^t, stepped incrementally
        for (std::uint64_t t = 1; t <= units.exponent; ++t) {
            if (jmask[ring->sub_enc(power, ring->one_enc())]) {
                std::uint64_t w = power;
                for (std::uint32_t i = 0; i < s; ++i) w = ring->pow_enc(w, m);
                if (w != ring->one_enc()) {
                    return make(ring, "radical-unit-power", CheckStatus::Fail,
                                "u^t - 1 in J but u^(t*m^s) != 1 at u=" + std::to_string(u) +
                                    ", t=" + std::to_string(t),
                                {u});
                }
            }
            power = ring->mul_enc(power, u);
        }
    }
    return make(ring, "radical-unit-power", CheckStatus::Pass,
                "u^t-1 in J implies u^(t*m^s)=1 for all " + std::to_string(units.units.size()) +
                    " units (m=" + std::to_string(m) + ", s=" + std::to_string(s) + ")");
}

CheckResult uu_exponent(CheckContext& ctx) {
    const RingPtr& ring = ctx.ring();
    const auto& jmask = ring->jacobson_mask(ctx.jobs());
    for (std::uint64_t x = 0; x < ring->cardinality(); ++x) {
        if (!jmask[ring->sub_enc(ring->mul_enc(x, x), x)]) {
            return make(ring, "uu-exponent", CheckStatus::NotApplicable,
                        "R/J is not boolean (x^2 - x not in J at " + std::to_string(x) + ")");
        }
    }
    const UnitTable& units = ring->units(ctx.jobs());
    const bool pow2 = (units.exponent & (units.exponent - 1)) == 0;
    const auto& plain = ctx.plain();
    if (pow2 && plain.index == units.exponent) {
        return make(ring, "uu-exponent", CheckStatus::Pass,
                    "R/J boolean: index = exp(U) = " + std::to_string(units.exponent) +
                        ", a power of 2");
    }
    return make(ring, "uu-exponent", CheckStatus::Fail,
                "R/J boolean but exp(U)=" + std::to_string(units.exponent) + " (plain index " +
                    std::to_string(plain.index.value_or(0)) + ")");
}

CheckResult strong_exponent(CheckContext& ctx) {
    return make(ctx.ring(), "strong-exponent-finite", CheckStatus::NotApplicable,
                "finite unit groups always have finite exponent; the statement only has content "
                "for infinite rings");
}

}  // namespace

const torsion::IndexReport& CheckContext::plain() {
    if (!plain_) plain_ = torsion::torsion_clean_index(ring_, false, true, jobs_);
    return *plain_;
}

const torsion::IndexReport& CheckContext::strong() {
    if (!strong_) strong_ = torsion::torsion_clean_index(ring_, true, true, jobs_);
    return *strong_;
}

const std::vector<std::pair<std::string, std::string>>& check_catalog() {
    static const std::vector<std::pair<std::string, std::string>> catalog = {
        {"identity-eq", "(a^n-1)((a-1)^n-1) = 0 for every element, at the strong index n"},
        {"unique-clean-radical", "every unit 1+j, j in J(R), has exactly one clean decomposition"},
        {"odd-reduced", "odd strong index forces char 2, reduced, J(R) = 0"},
        {"radical-nil-index", "J(R) is nil of index < char^n (and <= n over a prime field)"},
        {"idempotent-lifting",
         "abelian iff idempotents lift uniquely mod J and R/J is abelian"},
        {"prop-fields", "a product of fields has index LCM(|F_i|-1) in both modes"},
        {"thm-comm",
         "odd strong index iff all unit orders odd (max attained) iff splits into char-2 field "
         "corners"},
        {"thm-ab", "abelian iff idempotents lift uniquely mod J and R/J splits into fields"},
        {"radical-unit-power", "u^t - 1 in J(R) implies u^(t*char^s) = 1, s+1 = nil index"},
        {"uu-exponent", "R/J boolean forces index = exp(U(R)), a power of 2"},
        {"strong-exponent-finite", "strong torsion-cleanness forces exp(U(R)) finite"},
    };
    return catalog;
}

CheckResult run_check(CheckContext& ctx, const std::string& id) {
    if (id == "identity-eq") {
        const auto& strong = ctx.strong();
        if (!strong.index) {
            return make(ctx.ring(), id, CheckStatus::NotApplicable, "no strong index exists");
        }
        return identity_eq(ctx, *strong.index);
    }
    if (id == "unique-clean-radical") return unique_clean_radical(ctx);
    if (id == "odd-reduced") {
        const auto& strong = ctx.strong();
        if (!strong.index) {
            return make(ctx.ring(), id, CheckStatus::NotApplicable, "no strong index exists");
        }
        return odd_reduced(ctx, *strong.index);
    }
    if (id == "radical-nil-index") return radical_nil_index(ctx);
    if (id == "idempotent-lifting") return idempotent_lifting(ctx);
    if (id == "prop-fields") return prop_fields(ctx);
    if (id == "thm-comm") return thm_comm(ctx);
    if (id == "thm-ab") return thm_ab(ctx);
    if (id == "radical-unit-power") return radical_unit_power(ctx);
    if (id == "uu-exponent") return uu_exponent(ctx);
    if (id == "strong-exponent-finite") return strong_exponent(ctx);
    throw argument_error("unknown check id: " + id);
}

CheckResult run_check(const RingPtr& ring, const std::string& id, int jobs) {
    CheckContext ctx(ring, jobs);
    return run_check(ctx, id);
}

std::vector<CheckResult> run_suite(const RingPtr& ring, int jobs) {
    CheckContext ctx(ring, jobs);
    std::vector<CheckResult> out;
    for (const auto& [id, description] : check_catalog()) {
        out.push_back(run_check(ctx, id));
    }
    return out;
}

CheckResult check_identity_eq(const RingPtr& ring, std::uint64_t n, int jobs) {
    CheckContext ctx(ring, jobs);
    return identity_eq(ctx, n);
}

CheckResult check_odd_reduced(const RingPtr& ring, std::uint64_t n, int jobs) {
    CheckContext ctx(ring, jobs);
    return odd_reduced(ctx, n);
}

CheckResult check_unique_clean_radical(const RingPtr& ring, int jobs) {
    CheckContext ctx(ring, jobs);
    return unique_clean_radical(ctx);
}

CheckResult check_prop_fields(const std::vector<Field>& fields, int jobs) {
    std::vector<RingPtr> factors;
    for (const auto& f : fields) factors.push_back(Ring::make_field(f));
    const RingPtr product = fields.size() == 1 ? factors[0] : Ring::make_product(factors);
    CheckContext ctx(product, jobs);
    return prop_fields(ctx);
}

}  // namespace theorems
