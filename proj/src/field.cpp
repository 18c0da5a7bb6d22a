#include "field.hpp"

#include <algorithm>
#include <numeric>

namespace tc {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t n) {
    if (n < 2) throw argument_error("not a prime power: " + std::to_string(n));
    std::uint64_t p = n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    std::uint64_t m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) throw argument_error("not a prime power: " + std::to_string(n));
    return {static_cast<std::uint32_t>(p), k};
}

namespace poly {

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly mul_mod_p(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return trim(std::move(out));
}

Poly rem_mod_p(Poly a, const Poly& d, std::uint32_t p) {
    a = trim(std::move(a));
    const std::size_t deg_d = d.size() - 1;
    while (a.size() > deg_d) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - deg_d;
            for (std::size_t i = 0; i <= deg_d; ++i) {
                const std::uint64_t t = static_cast<std::uint64_t>(lead) * d[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
            }
        }
        a.pop_back();
        a = trim(std::move(a));
        if (a.size() <= deg_d) break;
    }
    return trim(std::move(a));
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (std::size_t deg = 1; deg <= k / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            Poly d(deg + 1, 0);
            std::uint64_t tmp = c;
            for (std::size_t i = 0; i < deg; ++i) {
                d[i] = static_cast<std::uint32_t>(tmp % p);
                tmp /= p;
            }
            d[deg] = 1;
            if (rem_mod_p(f, d, p).empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
    // Candidate tuples (c_0, ..., c_{k-1}) in ascending lexicographic order
    // with c_0 most significant.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
        Poly f(k + 1, 0);
        std::uint64_t tmp = c;
        for (std::uint32_t i = k; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(tmp % p);
            tmp /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw internal_error("no irreducible polynomial of degree " + std::to_string(k) +
                         " over F_" + std::to_string(p));
}

}  // namespace poly

struct FieldTables {
    std::uint32_t generator = 1;
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
    std::vector<std::uint32_t> log;  // log[x] for x != 0
    std::vector<std::uint32_t> neg;
    // Full tables, only for q <= 256 (hot path for matrix arithmetic).
    std::vector<std::uint16_t> add2;
    std::vector<std::uint16_t> mul2;
};

namespace {

std::uint32_t poly_code(const poly::Poly& f, std::uint32_t p, std::uint32_t k) {
    std::uint32_t c = 0;
    for (std::uint32_t i = k; i-- > 0;) {
        c = c * p + (i < f.size() ? f[i] : 0);
    }
    return c;
}

poly::Poly code_poly(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
    poly::Poly f(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        f[i] = code % p;
        code /= p;
    }
    return f;
}

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t k,
                       const poly::Poly& modulus) {
    poly::Poly prod = poly::mul_mod_p(code_poly(a, p, k), code_poly(b, p, k), p);
    prod = poly::rem_mod_p(std::move(prod), modulus, p);
    return poly_code(prod, p, k);
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    if (!is_prime(p)) throw argument_error("not a prime: " + std::to_string(p));
    if (k < 1) throw argument_error("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxCardinality) {
            throw size_guard_error("field cardinality exceeds " + std::to_string(kMaxCardinality));
        }
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = poly::smallest_irreducible(p, k);
    init_tables();
}

Field::Field(std::uint32_t p, std::uint32_t k, poly::Poly modulus) : p_(p), k_(k) {
    if (!is_prime(p)) throw argument_error("not a prime: " + std::to_string(p));
    if (k < 1) throw argument_error("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxCardinality) {
            throw size_guard_error("field cardinality exceeds " + std::to_string(kMaxCardinality));
        }
    }
    q_ = static_cast<std::uint32_t>(q);
    if (modulus.size() != k + 1 || modulus.back() != 1) {
        throw argument_error("modulus must be monic of degree k");
    }
    for (std::uint32_t c : modulus) {
        if (c >= p) throw argument_error("modulus coefficients must lie in [0, p)");
    }
    if (!poly::is_irreducible(modulus, p)) throw argument_error("modulus is reducible");
    modulus_ = std::move(modulus);
    init_tables();
}

void Field::init_tables() {
    auto t = std::make_shared<FieldTables>();
    t->neg.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        poly::Poly f = code_poly(a, p_, k_);
        for (auto& c : f) c = (p_ - c) % p_;
        t->neg[a] = poly_code(f, p_, k_);
    }

    // Find a multiplicative generator; build exp/log from it.
    t->exp.assign(q_ - 1, 0);
    t->log.assign(q_, 0);
    if (q_ == 2) {
        t->generator = 1;
        t->exp[0] = 1;
        t->log[1] = 0;
    } else {
        for (std::uint32_t g = 2; g < q_; ++g) {
            std::uint32_t x = 1;
            std::uint32_t len = 0;
            do {
                x = slow_mul(x, g, p_, k_, modulus_);
                ++len;
            } while (x != 1 && len < q_);
            if (len == q_ - 1) {
                t->generator = g;
                break;
            }
        }
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            t->exp[i] = x;
            t->log[x] = i;
            x = slow_mul(x, t->generator, p_, k_, modulus_);
        }
    }

    if (q_ <= 256) {
        t->add2.resize(static_cast<std::size_t>(q_) * q_);
        t->mul2.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            poly::Poly fa = code_poly(a, p_, k_);
            for (std::uint32_t b = 0; b < q_; ++b) {
                poly::Poly fb = code_poly(b, p_, k_);
                poly::Poly s(k_, 0);
                for (std::uint32_t i = 0; i < k_; ++i) s[i] = (fa[i] + fb[i]) % p_;
                t->add2[static_cast<std::size_t>(a) * q_ + b] =
                    static_cast<std::uint16_t>(poly_code(s, p_, k_));
                t->mul2[static_cast<std::size_t>(a) * q_ + b] =
                    static_cast<std::uint16_t>(slow_mul(a, b, p_, k_, modulus_));
            }
        }
    }
    tables_ = std::move(t);
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (!tables_->add2.empty()) return tables_->add2[static_cast<std::size_t>(a) * q_ + b];
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += (a % p_ + b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t Field::neg(std::uint32_t a) const { return tables_->neg[a]; }

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (!tables_->mul2.empty()) return tables_->mul2[static_cast<std::size_t>(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    const std::uint64_t e = tables_->log[a] + tables_->log[b];
    return tables_->exp[e % (q_ - 1)];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw argument_error("division by zero in " + name());
    const std::uint32_t l = tables_->log[a];
    return tables_->exp[(q_ - 1 - l) % (q_ - 1)];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t l = tables_->log[a];
    return tables_->exp[l * (e % (q_ - 1)) % (q_ - 1)];
}

std::uint32_t Field::order(std::uint32_t a) const {
    if (a == 0) throw argument_error("order of zero element in " + name());
    return (q_ - 1) / std::gcd<std::uint32_t>(q_ - 1, tables_->log[a]);
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t code) const {
    return code_poly(code, p_, k_);
}

std::uint32_t Field::code(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != k_) throw argument_error("coefficient vector must have k entries");
    for (std::uint32_t c : coeffs) {
        if (c >= p_) throw argument_error("coefficient out of range [0, p)");
    }
    return poly_code(coeffs, p_, k_);
}

bool Field::same_spec(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

FieldElem::FieldElem(const Field& field, std::uint32_t code) : field_(&field), code_(code) {
    if (code >= field.q()) throw argument_error("element code out of range [0, q)");
}

const Field* FieldElem::check_same(const FieldElem& o) const {
    if (!field_->same_spec(*o.field_)) {
        throw argument_error("field mismatch: " + field_->name() + " vs " + o.field_->name());
    }
    return field_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    return FieldElem(*check_same(o), field_->add(code_, o.code_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    return FieldElem(*check_same(o), field_->sub(code_, o.code_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    return FieldElem(*check_same(o), field_->mul(code_, o.code_));
}

FieldElem FieldElem::operator-() const { return FieldElem(*field_, field_->neg(code_)); }

bool FieldElem::operator==(const FieldElem& o) const {
    return field_->same_spec(*o.field_) && code_ == o.code_;
}

FieldElem FieldElem::inverse() const { return FieldElem(*field_, field_->inv(code_)); }

FieldElem FieldElem::pow(std::uint64_t e) const { return FieldElem(*field_, field_->pow(code_, e)); }

std::uint32_t FieldElem::order() const { return field_->order(code_); }

}  // namespace tc
