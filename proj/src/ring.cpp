#include "ring.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace tc {

namespace {

// q^e capped at limit; nullopt when the power exceeds it.
std::optional<std::uint64_t> pow_capped(std::uint64_t base, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (base != 0 && out > limit / base) return std::nullopt;
        out *= base;
        if (out > limit) return std::nullopt;
    }
    return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

std::shared_ptr<const Ring> Ring::finish(std::shared_ptr<Ring> r, std::uint64_t max_cardinality) {
    max_cardinality = std::min<std::uint64_t>(max_cardinality, 1ull << 62);
    if (r->cardinality_ < 2) {
        throw argument_error("zero ring rejected: " + r->spec_ + " has one element");
    }
    if (r->cardinality_ > max_cardinality) {
        throw size_guard_error(r->spec_ + " has " + std::to_string(r->cardinality_) +
                               " elements, above the size guard " +
                               std::to_string(max_cardinality));
    }
    r->digit_count_ = static_cast<int>(r->digit_field_.size());
    r->place_.resize(r->digit_field_.size());
    std::uint64_t place = 1;
    for (std::size_t d = 0; d < r->digit_field_.size(); ++d) {
        r->place_[d] = place;
        place *= r->digit_field_[d]->q();
    }
    DigitBuf buf;
    r->one(buf.data());
    r->one_enc_ = r->encode(buf.data());
    return r;
}

std::shared_ptr<const Ring> Ring::make_field(Field f, std::uint64_t max_cardinality) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Field;
    r->cardinality_ = f.q();
    r->characteristic_ = f.p();
    r->spec_ = f.name();
    r->base_ = std::move(f);
    r->digit_field_ = {&*r->base_};
    return finish(std::move(r), max_cardinality);
}

std::shared_ptr<const Ring> Ring::make_matrix(std::uint32_t n, Field f,
                                              std::uint64_t max_cardinality) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Matrix;
    r->spec_ = "M(" + std::to_string(n) + "," + f.name() + ")";
    if (n == 0) throw argument_error("zero ring rejected: " + r->spec_);
    auto card = pow_capped(f.q(), static_cast<std::uint64_t>(n) * n, 1ull << 62);
    if (!card) throw size_guard_error(r->spec_ + " exceeds the size guard");
    r->cardinality_ = *card;
    r->characteristic_ = f.p();
    r->dim_ = n;
    r->base_ = std::move(f);
    r->digit_field_.assign(static_cast<std::size_t>(n) * n, &*r->base_);
    return finish(std::move(r), max_cardinality);
}

std::shared_ptr<const Ring> Ring::make_triangular(std::uint32_t m, Field f,
                                                  std::uint64_t max_cardinality) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Triangular;
    r->spec_ = "T(" + std::to_string(m) + "," + f.name() + ")";
    if (m == 0) throw argument_error("zero ring rejected: " + r->spec_);
    const std::uint64_t entries = static_cast<std::uint64_t>(m) * (m + 1) / 2;
    auto card = pow_capped(f.q(), entries, 1ull << 62);
    if (!card) throw size_guard_error(r->spec_ + " exceeds the size guard");
    r->cardinality_ = *card;
    r->characteristic_ = f.p();
    r->dim_ = m;
    r->base_ = std::move(f);
    r->tri_index_.assign(static_cast<std::size_t>(m) * m, kNoMonomial);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = i; j < m; ++j) r->tri_index_[i * m + j] = next++;
    }
    r->digit_field_.assign(entries, &*r->base_);
    return finish(std::move(r), max_cardinality);
}

std::shared_ptr<const Ring> Ring::make_product(std::vector<std::shared_ptr<const Ring>> factors,
                                               std::uint64_t max_cardinality) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Product;
    std::string spec = "P(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) spec += ",";
        spec += factors[i]->spec();
    }
    spec += ")";
    r->spec_ = std::move(spec);
    if (factors.empty()) throw argument_error("zero ring rejected: product of no factors");
    std::uint64_t card = 1;
    std::uint64_t chr = 1;
    for (const auto& f : factors) {
        if (card > (1ull << 62) / f->cardinality()) {
            card = (1ull << 62) + 1;
            break;
        }
        card *= f->cardinality();
        chr = lcm_u64(chr, f->characteristic());
    }
    r->cardinality_ = card;
    r->characteristic_ = chr;
    r->factors_ = std::move(factors);
    for (const auto& f : r->factors_) {
        r->factor_offset_.push_back(static_cast<int>(r->digit_field_.size()));
        r->digit_field_.insert(r->digit_field_.end(), f->digit_field_.begin(),
                               f->digit_field_.end());
    }
    return finish(std::move(r), max_cardinality);
}

std::shared_ptr<const Ring> Ring::make_poly_quot(Field f, std::uint32_t e, std::uint32_t v,
                                                 std::uint64_t max_cardinality) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::PolyQuot;
    r->spec_ = "Q(" + f.name() + "," + std::to_string(e) + "," + std::to_string(v) + ")";
    auto monomial_count = pow_capped(e, v, 64);
    if (!monomial_count) {
        throw size_guard_error(r->spec_ + " exceeds the size guard (too many monomials)");
    }
    auto card = pow_capped(f.q(), *monomial_count, 1ull << 62);
    r->cardinality_ = card.value_or((1ull << 62) + 1);
    r->characteristic_ = f.p();
    r->quot_e_ = e;
    r->quot_v_ = v;
    r->base_ = std::move(f);
    if (r->cardinality_ < 2) throw argument_error("zero ring rejected: " + r->spec_);

    // Monomials ascending by (total degree, exponent tuple).
    std::vector<std::vector<std::uint32_t>> monos;
    std::vector<std::uint32_t> cur(v, 0);
    const std::uint64_t n = *monomial_count;
    for (std::uint64_t i = 0; i < n; ++i) {
        monos.push_back(cur);
        for (std::uint32_t d = v; d-- > 0;) {
            if (++cur[d] < e) break;
            cur[d] = 0;
        }
    }
    auto degree = [](const std::vector<std::uint32_t>& m) {
        return std::accumulate(m.begin(), m.end(), 0u);
    };
    std::sort(monos.begin(), monos.end(),
              [&](const auto& a, const auto& b) {
                  const auto da = degree(a), db = degree(b);
                  return da != db ? da < db : a < b;
              });
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
    r->mono_mul_.assign(n * n, kNoMonomial);
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = 0; j < n; ++j) {
            std::vector<std::uint32_t> s(v);
            bool dead = false;
            for (std::uint32_t d = 0; d < v; ++d) {
                s[d] = monos[i][d] + monos[j][d];
                if (s[d] >= e) dead = true;
            }
            if (!dead) r->mono_mul_[i * n + j] = index.at(s);
        }
    }
    r->digit_field_.assign(n, &*r->base_);
    return finish(std::move(r), max_cardinality);
}

const Field& Ring::base_field() const {
    if (!base_) throw argument_error("product rings have no single base field");
    return *base_;
}

void Ring::add(const Digit* a, const Digit* b, Digit* out) const {
    for (int d = 0; d < digit_count_; ++d) out[d] = digit_field_[d]->add(a[d], b[d]);
}

void Ring::sub(const Digit* a, const Digit* b, Digit* out) const {
    for (int d = 0; d < digit_count_; ++d) out[d] = digit_field_[d]->sub(a[d], b[d]);
}

void Ring::neg(const Digit* a, Digit* out) const {
    for (int d = 0; d < digit_count_; ++d) out[d] = digit_field_[d]->neg(a[d]);
}

void Ring::zero(Digit* out) const { std::fill_n(out, digit_count_, 0u); }

void Ring::one(Digit* out) const {
    zero(out);
    switch (kind_) {
        case Kind::Field:
            out[0] = 1;
            break;
        case Kind::Matrix:
            for (std::uint32_t i = 0; i < dim_; ++i) out[i * dim_ + i] = 1;
            break;
        case Kind::Triangular:
            for (std::uint32_t i = 0; i < dim_; ++i) out[tri_index_[i * dim_ + i]] = 1;
            break;
        case Kind::Product:
            for (std::size_t f = 0; f < factors_.size(); ++f) {
                factors_[f]->one(out + factor_offset_[f]);
            }
            break;
        case Kind::PolyQuot:
            out[0] = 1;  // the constant monomial sorts first
            break;
    }
}

void Ring::mul(const Digit* a, const Digit* b, Digit* out) const {
    switch (kind_) {
        case Kind::Field:
            out[0] = base_->mul(a[0], b[0]);
            break;
        case Kind::Matrix: {
            const Field& f = *base_;
            const std::uint32_t n = dim_;
            for (std::uint32_t i = 0; i < n; ++i) {
                for (std::uint32_t j = 0; j < n; ++j) {
                    Digit acc = 0;
                    for (std::uint32_t k = 0; k < n; ++k) {
                        acc = f.add(acc, f.mul(a[i * n + k], b[k * n + j]));
                    }
                    out[i * n + j] = acc;
                }
            }
            break;
        }
        case Kind::Triangular: {
            const Field& f = *base_;
            const std::uint32_t m = dim_;
            for (std::uint32_t i = 0; i < m; ++i) {
                for (std::uint32_t j = i; j < m; ++j) {
                    Digit acc = 0;
                    for (std::uint32_t k = i; k <= j; ++k) {
                        acc = f.add(acc, f.mul(a[tri_index_[i * m + k]], b[tri_index_[k * m + j]]));
                    }
                    out[tri_index_[i * m + j]] = acc;
                }
            }
            break;
        }
        case Kind::Product:
            for (std::size_t f = 0; f < factors_.size(); ++f) {
                const int off = factor_offset_[f];
                factors_[f]->mul(a + off, b + off, out + off);
            }
            break;
        case Kind::PolyQuot: {
            const Field& f = *base_;
            const std::uint32_t n = static_cast<std::uint32_t>(digit_count_);
            std::fill_n(out, n, 0u);
            for (std::uint32_t i = 0; i < n; ++i) {
                if (a[i] == 0) continue;
                for (std::uint32_t j = 0; j < n; ++j) {
                    if (b[j] == 0) continue;
                    const std::uint32_t t = mono_mul_[i * n + j];
                    if (t != kNoMonomial) out[t] = f.add(out[t], f.mul(a[i], b[j]));
                }
            }
            break;
        }
    }
}

std::uint64_t Ring::encode(const Digit* a) const {
    std::uint64_t enc = 0;
    for (int d = 0; d < digit_count_; ++d) enc += a[d] * place_[d];
    return enc;
}

void Ring::decode(std::uint64_t enc, Digit* out) const {
    for (int d = 0; d < digit_count_; ++d) {
        const std::uint64_t q = digit_field_[d]->q();
        out[d] = static_cast<Digit>(enc % q);
        enc /= q;
    }
}

std::uint64_t Ring::add_enc(std::uint64_t a, std::uint64_t b) const {
    DigitBuf da, db, dout;
    decode(a, da.data());
    decode(b, db.data());
    add(da.data(), db.data(), dout.data());
    return encode(dout.data());
}

std::uint64_t Ring::sub_enc(std::uint64_t a, std::uint64_t b) const {
    DigitBuf da, db, dout;
    decode(a, da.data());
    decode(b, db.data());
    sub(da.data(), db.data(), dout.data());
    return encode(dout.data());
}

std::uint64_t Ring::neg_enc(std::uint64_t a) const {
    DigitBuf da, dout;
    decode(a, da.data());
    neg(da.data(), dout.data());
    return encode(dout.data());
}

std::uint64_t Ring::mul_enc(std::uint64_t a, std::uint64_t b) const {
    if (const auto* table = mul_table_ptr_.load(std::memory_order_acquire)) {
        return (*table)[a * cardinality_ + b];
    }
    DigitBuf da, db, dout;
    decode(a, da.data());
    decode(b, db.data());
    mul(da.data(), db.data(), dout.data());
    return encode(dout.data());
}

std::uint64_t Ring::pow_enc(std::uint64_t a, std::uint64_t e) const {
    DigitBuf base, acc, scratch;
    decode(a, base.data());
    one(acc.data());
    while (e > 0) {
        if (e & 1) {
            mul(acc.data(), base.data(), scratch.data());
            std::copy_n(scratch.data(), digit_count_, acc.data());
        }
        e >>= 1;
        if (e > 0) {
            mul(base.data(), base.data(), scratch.data());
            std::copy_n(scratch.data(), digit_count_, base.data());
        }
    }
    return encode(acc.data());
}

void Ring::ensure_mul_table() const {
    if (cardinality_ > kMulTableLimit) return;
    if (mul_table_ptr_.load(std::memory_order_acquire)) return;
    const std::size_t n = static_cast<std::size_t>(cardinality_);
    std::vector<std::uint32_t> table(n * n);
    std::vector<Digit> payloads(n * digit_count_);
    for (std::size_t i = 0; i < n; ++i) decode(i, payloads.data() + i * digit_count_);
    DigitBuf out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mul(payloads.data() + i * digit_count_, payloads.data() + j * digit_count_, out.data());
            table[i * n + j] = static_cast<std::uint32_t>(encode(out.data()));
        }
    }
    std::lock_guard<std::mutex> g(cache_mutex_);
    if (!mul_table_) {
        mul_table_ = std::move(table);
        mul_table_ptr_.store(&*mul_table_, std::memory_order_release);
    }
}

const std::vector<std::uint64_t>& Ring::additive_basis() const {
    {
        std::lock_guard<std::mutex> g(cache_mutex_);
        if (additive_basis_) return *additive_basis_;
    }
    std::vector<std::uint64_t> basis;
    for (int d = 0; d < digit_count_; ++d) {
        const Field& f = *digit_field_[d];
        std::uint64_t code = 1;
        for (std::uint32_t j = 0; j < f.k(); ++j) {
            basis.push_back(code * place_[d]);
            code *= f.p();
        }
    }
    std::lock_guard<std::mutex> g(cache_mutex_);
    if (!additive_basis_) additive_basis_ = std::move(basis);
    return *additive_basis_;
}

// ---------------------------------------------------------------------------
// Spec parsing

namespace {

struct SpecParser {
    std::string_view s;
    std::size_t pos = 0;
    std::uint64_t max;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) throw parse_error(pos, what);
        ++pos;
    }

    std::uint64_t parse_uint(const char* what) {
        skip_ws();
        std::uint64_t value = 0;
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            value = value * 10 + (s[pos] - '0');
            if (value > (1ull << 62)) throw parse_error(start, "a smaller integer");
            ++pos;
        }
        if (pos == start) throw parse_error(pos, what);
        return value;
    }

    Field parse_field() {
        skip_ws();
        if (s.compare(pos, 3, "GF(") != 0) throw parse_error(pos, "\"GF(\"");
        pos += 3;
        const std::size_t at = pos;
        const std::uint64_t q = parse_uint("a prime power");
        expect(')', "\")\"");
        std::pair<std::uint32_t, std::uint32_t> pk;
        try {
            pk = prime_power_split(q);
        } catch (const Error&) {
            throw parse_error(at, "a prime power");
        }
        return Field(pk.first, pk.second);
    }

    RingPtr parse_ring() {
        skip_ws();
        if (pos >= s.size()) throw parse_error(pos, "a ring spec (GF/M/T/P/Q)");
        switch (s[pos]) {
            case 'G':
                return Ring::make_field(parse_field(), max);
            case 'M':
            case 'T': {
                const bool matrix = s[pos] == 'M';
                ++pos;
                expect('(', "\"(\"");
                const std::uint64_t n = parse_uint("a positive dimension");
                expect(',', "\",\"");
                const std::size_t arg_at = pos;
                skip_ws();
                if (pos < s.size() && s[pos] != 'G') {
                    throw parse_error(arg_at, "a field argument (M and T take field entries)");
                }
                Field f = parse_field();
                expect(')', "\")\"");
                return matrix ? Ring::make_matrix(static_cast<std::uint32_t>(n), std::move(f), max)
                              : Ring::make_triangular(static_cast<std::uint32_t>(n), std::move(f),
                                                      max);
            }
            case 'P': {
                ++pos;
                expect('(', "\"(\"");
                std::vector<RingPtr> factors;
                factors.push_back(parse_ring());
                skip_ws();
                while (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    factors.push_back(parse_ring());
                    skip_ws();
                }
                expect(')', "\")\"");
                return Ring::make_product(std::move(factors), max);
            }
            case 'Q': {
                ++pos;
                expect('(', "\"(\"");
                Field f = parse_field();
                expect(',', "\",\"");
                const std::uint64_t e = parse_uint("a nilpotency exponent");
                expect(',', "\",\"");
                const std::uint64_t v = parse_uint("a variable count");
                expect(')', "\")\"");
                return Ring::make_poly_quot(std::move(f), static_cast<std::uint32_t>(e),
                                            static_cast<std::uint32_t>(v), max);
            }
            default:
                throw parse_error(pos, "a ring spec (GF/M/T/P/Q)");
        }
    }
};

}  // namespace

std::shared_ptr<const Ring> Ring::parse(std::string_view spec, std::uint64_t max_cardinality) {
    SpecParser p{spec, 0, max_cardinality};
    RingPtr r = p.parse_ring();
    p.skip_ws();
    if (p.pos != spec.size()) throw parse_error(p.pos, "end of input");
    return r;
}

// ---------------------------------------------------------------------------
// Element literals

namespace {

struct ElemParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) throw parse_error(pos, what);
        ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    std::uint64_t parse_uint(const char* what) {
        skip_ws();
        std::uint64_t value = 0;
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            value = value * 10 + (s[pos] - '0');
            if (value > (1ull << 62)) throw parse_error(start, "a smaller integer");
            ++pos;
        }
        if (pos == start) throw parse_error(pos, what);
        return value;
    }

    std::uint32_t parse_code(const Field& f) {
        const std::size_t at = pos;
        const std::uint64_t c = parse_uint("a field element code");
        if (c >= f.q()) {
            throw argument_error("element code " + std::to_string(c) + " out of range for " +
                                 f.name() + " (position " + std::to_string(at) + ")");
        }
        return static_cast<std::uint32_t>(c);
    }

    // Parses one element of r into out (digit_count digits).
    void parse_into(const Ring& r, Digit* out) {
        skip_ws();
        if (!peek('[')) {
            const std::size_t at = pos;
            const std::uint64_t enc = parse_uint("an element literal");
            if (enc >= r.cardinality()) {
                throw argument_error("element encoding " + std::to_string(enc) +
                                     " out of range for " + r.spec() + " (position " +
                                     std::to_string(at) + ")");
            }
            r.decode(enc, out);
            return;
        }
        switch (r.kind()) {
            case Kind::Field:
                throw parse_error(pos, "an integer code (field elements have no bracket form)");
            case Kind::Matrix:
            case Kind::Triangular: {
                const std::uint32_t m = r.matrix_dim();
                const Field& f = r.base_field();
                expect('[', "\"[\"");
                std::vector<std::uint32_t> entries(static_cast<std::size_t>(m) * m, 0);
                for (std::uint32_t i = 0; i < m; ++i) {
                    if (i) expect(',', "\",\"");
                    expect('[', "\"[\"");
                    for (std::uint32_t j = 0; j < m; ++j) {
                        if (j) expect(',', "\",\"");
                        entries[i * m + j] = parse_code(f);
                    }
                    expect(']', "\"]\"");
                }
                expect(']', "\"]\"");
                if (r.kind() == Kind::Matrix) {
                    for (std::uint32_t d = 0; d < m * m; ++d) out[d] = entries[d];
                } else {
                    for (std::uint32_t i = 0; i < m; ++i) {
                        for (std::uint32_t j = 0; j < m; ++j) {
                            if (j < i) {
                                if (entries[i * m + j] != 0) {
                                    throw argument_error(
                                        "below-diagonal entry must be 0 in " + r.spec());
                                }
                            }
                        }
                    }
                    std::uint32_t next = 0;
                    for (std::uint32_t i = 0; i < m; ++i) {
                        for (std::uint32_t j = i; j < m; ++j) out[next++] = entries[i * m + j];
                    }
                }
                return;
            }
            case Kind::Product: {
                expect('[', "\"[\"");
                const auto& factors = r.factors();
                int offset = 0;
                for (std::size_t i = 0; i < factors.size(); ++i) {
                    if (i) expect(',', "\",\"");
                    parse_into(*factors[i], out + offset);
                    offset += factors[i]->digit_count();
                }
                expect(']', "\"]\"");
                return;
            }
            case Kind::PolyQuot: {
                const Field& f = r.base_field();
                expect('[', "\"[\"");
                for (int d = 0; d < r.digit_count(); ++d) {
                    if (d) expect(',', "\",\"");
                    out[d] = parse_code(f);
                }
                expect(']', "\"]\"");
                return;
            }
        }
    }
};

void format_into(const Ring& r, const Digit* a, std::string& out) {
    switch (r.kind()) {
        case Kind::Field:
            out += std::to_string(a[0]);
            return;
        case Kind::Matrix: {
            const std::uint32_t n = r.matrix_dim();
            out += '[';
            for (std::uint32_t i = 0; i < n; ++i) {
                if (i) out += ',';
                out += '[';
                for (std::uint32_t j = 0; j < n; ++j) {
                    if (j) out += ',';
                    out += std::to_string(a[i * n + j]);
                }
                out += ']';
            }
            out += ']';
            return;
        }
        case Kind::Triangular: {
            const std::uint32_t m = r.matrix_dim();
            out += '[';
            std::uint32_t next = 0;
            for (std::uint32_t i = 0; i < m; ++i) {
                if (i) out += ',';
                out += '[';
                for (std::uint32_t j = 0; j < m; ++j) {
                    if (j) out += ',';
                    out += j < i ? "0" : std::to_string(a[next++]);
                }
                out += ']';
            }
            out += ']';
            return;
        }
        case Kind::Product: {
            out += '[';
            const auto& factors = r.factors();
            int offset = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) out += ',';
                format_into(*factors[i], a + offset, out);
                offset += factors[i]->digit_count();
            }
            out += ']';
            return;
        }
        case Kind::PolyQuot: {
            out += '[';
            for (int d = 0; d < r.digit_count(); ++d) {
                if (d) out += ',';
                out += std::to_string(a[d]);
            }
            out += ']';
            return;
        }
    }
}

}  // namespace

std::uint64_t Ring::parse_element(std::string_view text) const {
    ElemParser p{text, 0};
    DigitBuf buf;
    p.parse_into(*this, buf.data());
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error(p.pos, "end of element literal");
    return encode(buf.data());
}

std::string Ring::format_element(std::uint64_t enc) const {
    if (enc >= cardinality_) {
        throw argument_error("element encoding " + std::to_string(enc) + " out of range for " +
                             spec_);
    }
    DigitBuf buf;
    decode(enc, buf.data());
    std::string out;
    format_into(*this, buf.data(), out);
    return out;
}

// ---------------------------------------------------------------------------

RingElem::RingElem(RingPtr ring, std::uint64_t enc) : ring_(std::move(ring)), enc_(enc) {
    if (enc_ >= ring_->cardinality()) {
        throw argument_error("element encoding out of range for " + ring_->spec());
    }
}

void RingElem::check_same(const RingElem& o) const {
    if (ring_.get() != o.ring_.get()) {
        throw argument_error("ring handle mismatch: " + ring_->spec() + " vs " + o.ring_->spec());
    }
}

RingElem RingElem::operator+(const RingElem& o) const {
    check_same(o);
    return RingElem(ring_, ring_->add_enc(enc_, o.enc_));
}

RingElem RingElem::operator-(const RingElem& o) const {
    check_same(o);
    return RingElem(ring_, ring_->sub_enc(enc_, o.enc_));
}

RingElem RingElem::operator*(const RingElem& o) const {
    check_same(o);
    return RingElem(ring_, ring_->mul_enc(enc_, o.enc_));
}

RingElem RingElem::operator-() const { return RingElem(ring_, ring_->neg_enc(enc_)); }

bool RingElem::operator==(const RingElem& o) const {
    return ring_.get() == o.ring_.get() && enc_ == o.enc_;
}

RingElem RingElem::pow(std::uint64_t e) const { return RingElem(ring_, ring_->pow_enc(enc_, e)); }

}  // namespace tc
