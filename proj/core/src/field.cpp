#include "icc/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace icc {

namespace {

// Dense polynomial arithmetic over GF(p) used only during construction
// (modulus search and table building); everything afterwards is table-driven.

using PPoly = std::vector<std::uint32_t>;

void trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly mul_mod_p(const PPoly& a, const PPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    trim(r);
    return r;
}

// Remainder of a by monic m over GF(p).
PPoly rem_mod_p(PPoly a, const PPoly& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    trim(a);
    while (a.size() > dm) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = (c * m[i]) % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.  Construction
// happens once per field, so the naive test is plenty.
bool is_irreducible(const PPoly& f, std::uint32_t p) {
    const std::size_t d = f.size() - 1;
    for (std::size_t dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            PPoly g(dd + 1, 0);
            std::uint64_t w = v;
            for (std::size_t i = 0; i < dd; ++i) {
                g[i] = static_cast<std::uint32_t>(w % p);
                w /= p;
            }
            g[dd] = 1;
            if (rem_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t p, std::uint32_t m, std::uint64_t size_bound) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                    " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");

    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        size *= p;
        if (size > size_bound)
            throw std::invalid_argument("field size " + std::to_string(p) + "^" +
                                        std::to_string(m) + " exceeds bound " +
                                        std::to_string(size_bound));
    }
    p_ = p;
    m_ = m;
    size_ = size;

    if (m == 1) {
        modulus_ = {0, 1};  // x, the m = 1 placeholder
    } else {
        // Lexicographically smallest monic irreducible: candidate codes v
        // enumerate the coefficient tuples (c_{m-1}, ..., c_0) in order.
        std::uint64_t nonleading = size_;  // p^m candidate tails
        bool found = false;
        for (std::uint64_t v = 0; v < nonleading && !found; ++v) {
            PPoly f(m + 1, 0);
            std::uint64_t w = v;
            for (std::uint32_t i = 0; i < m; ++i) {
                f[i] = static_cast<std::uint32_t>(w % p);
                w /= p;
            }
            f[m] = 1;
            if (is_irreducible(f, p)) {
                modulus_ = f;
                found = true;
            }
        }
        if (!found)
            throw std::logic_error("no irreducible modulus found");  // unreachable
    }

    build_tables();
}

void Field::build_tables() {
    const std::uint64_t n = size_ - 1;

    // Slow multiplication through the residue representation; only used to
    // pick the primitive element and fill the tables.
    auto decode = [&](FieldElement c) {
        PPoly v(m_, 0);
        std::uint64_t w = c;
        for (std::uint32_t i = 0; i < m_; ++i) {
            v[i] = static_cast<std::uint32_t>(w % p_);
            w /= p_;
        }
        trim(v);
        return v;
    };
    auto encode = [&](const PPoly& v) {
        std::uint64_t c = 0, base = 1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            c += v[i] * base;
            base *= p_;
        }
        return static_cast<FieldElement>(c);
    };
    auto mul_slow = [&](FieldElement a, FieldElement b) {
        return encode(rem_mod_p(mul_mod_p(decode(a), decode(b), p_), modulus_, p_));
    };
    auto pow_slow = [&](FieldElement a, std::uint64_t e) {
        FieldElement r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };

    if (gamma_ == 0) {
        if (size_ == 2) {
            gamma_ = 1;
        } else {
            const auto factors = prime_factors(n);
            for (FieldElement c = 2; c < size_; ++c) {
                bool full = pow_slow(c, n) == 1;
                for (auto r : factors)
                    if (full && pow_slow(c, n / r) == 1) full = false;
                if (full) {
                    gamma_ = c;
                    break;
                }
            }
            if (gamma_ == 0) throw std::logic_error("no primitive element found");
        }
    }

    antilog_.assign(n, 1);
    log_.assign(size_, 0);
    for (std::uint64_t i = 1; i < n; ++i)
        antilog_[i] = mul_slow(antilog_[i - 1], gamma_);
    std::vector<bool> seen(size_, false);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (antilog_[i] == 0 || seen[antilog_[i]])
            throw std::logic_error("antilog table is not a bijection");
        seen[antilog_[i]] = true;
        log_[antilog_[i]] = static_cast<std::uint32_t>(i);
    }
}

FieldElement Field::add(FieldElement x, FieldElement y) const {
    if (p_ == 2) return x ^ y;
    FieldElement r = 0;
    std::uint64_t base = 1;
    for (std::uint32_t i = 0; i < m_ && (x || y); ++i) {
        std::uint32_t d = (x % p_ + y % p_) % p_;
        r += d * base;
        base *= p_;
        x /= p_;
        y /= p_;
    }
    return r;
}

FieldElement Field::neg(FieldElement x) const {
    if (p_ == 2) return x;
    FieldElement r = 0;
    std::uint64_t base = 1;
    for (std::uint32_t i = 0; i < m_ && x; ++i) {
        std::uint32_t d = x % p_;
        if (d) d = p_ - d;
        r += d * base;
        base *= p_;
        x /= p_;
    }
    return r;
}

FieldElement Field::sub(FieldElement x, FieldElement y) const {
    return add(x, neg(y));
}

FieldElement Field::mul(FieldElement x, FieldElement y) const {
    if (x == 0 || y == 0) return 0;
    const std::uint64_t n = size_ - 1;
    return antilog_[(std::uint64_t{log_[x]} + log_[y]) % n];
}

FieldElement Field::inv(FieldElement x) const {
    if (x == 0) throw std::invalid_argument("inverse of zero");
    const std::uint64_t n = size_ - 1;
    return antilog_[(n - log_[x]) % n];
}

FieldElement Field::pow(FieldElement x, std::int64_t e) const {
    if (x == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::invalid_argument("negative power of zero");
        return 0;
    }
    const std::int64_t n = static_cast<std::int64_t>(size_ - 1);
    std::int64_t r = (static_cast<std::int64_t>(log_[x]) * (e % n)) % n;
    if (r < 0) r += n;
    return antilog_[r];
}

std::uint64_t Field::log(FieldElement x) const {
    if (x == 0) throw std::invalid_argument("log of zero");
    if (x >= size_) throw std::invalid_argument("element code out of range");
    return log_[x];
}

FieldElement Field::exp(std::uint64_t e) const {
    return antilog_[e % (size_ - 1)];
}

std::uint64_t Field::element_order(FieldElement x) const {
    const std::uint64_t n = size_ - 1;
    return n / std::gcd(n, log(x));
}

bool Field::is_subfield_size(std::uint64_t q) const {
    if (q < 2) return false;
    std::uint64_t w = q;
    std::uint32_t t = 0;
    while (w % p_ == 0) {
        w /= p_;
        ++t;
    }
    return w == 1 && t >= 1 && m_ % t == 0;
}

bool Field::in_subfield(FieldElement x, std::uint64_t q) const {
    if (!is_subfield_size(q))
        throw std::invalid_argument(std::to_string(q) +
                                    " is not a subfield size of this field");
    if (x == 0) return true;
    const std::uint64_t delta = (size_ - 1) / (q - 1);
    return log(x) % delta == 0;
}

FieldElement Field::trace_to_subfield(FieldElement x, std::uint64_t q,
                                      std::uint32_t k) const {
    if (!is_subfield_size(q))
        throw std::invalid_argument(std::to_string(q) +
                                    " is not a subfield size of this field");
    std::uint64_t qk = 1;
    for (std::uint32_t i = 0; i < k; ++i) qk *= q;
    if (qk != size_)
        throw std::invalid_argument("q^k does not match the field size");
    FieldElement acc = 0, t = x;
    for (std::uint32_t i = 0; i < k; ++i) {
        acc = add(acc, t);
        t = pow(t, static_cast<std::int64_t>(q));
    }
    return acc;
}

std::vector<FieldElement> Field::subfield_elements(std::uint64_t q) const {
    if (!is_subfield_size(q))
        throw std::invalid_argument(std::to_string(q) +
                                    " is not a subfield size of this field");
    std::vector<FieldElement> els;
    els.reserve(q);
    els.push_back(0);
    const std::uint64_t delta = (size_ - 1) / (q - 1);
    for (std::uint64_t j = 0; j < q - 1; ++j)
        els.push_back(antilog_[(j * delta) % (size_ - 1)]);
    std::sort(els.begin(), els.end());
    return els;
}

Field Field::rebased(FieldElement gamma) const {
    if (gamma == 0 || gamma >= size_ || element_order(gamma) != size_ - 1)
        throw std::invalid_argument("element does not generate the multiplicative group");
    Field f;
    f.p_ = p_;
    f.m_ = m_;
    f.size_ = size_;
    f.modulus_ = modulus_;
    f.gamma_ = gamma;
    f.build_tables();
    return f;
}

bool Field::operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ &&
           gamma_ == other.gamma_;
}

}  // namespace icc
