#include "subcode/gf.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "subcode/errors.hpp"

namespace subcode {
namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients in GF(p).
Poly poly_mod(Poly a, const Poly& divisor, std::uint32_t p) {
    trim(a);
    const std::size_t dd = divisor.size() - 1;
    while (a.size() > dd) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i) {
            const std::uint64_t sub = static_cast<std::uint64_t>(lead) * divisor[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw InvalidArgument("bad " + std::string(what) + " '" + std::string(s) + "' in field spec");
    return v;
}

}  // namespace

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // every monic divisor candidate of degree d
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::optional<std::vector<std::uint32_t>> Field::default_modulus(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return Poly{0, 1};
    if (p == 2 && m == 2) return Poly{1, 1, 1};
    if (p == 2 && m == 3) return Poly{1, 1, 0, 1};
    if (p == 3 && m == 2) return Poly{1, 0, 1};
    if (p == 2 && m == 4) return Poly{1, 1, 0, 0, 1};
    if (p == 3 && m == 3) return Poly{1, 2, 0, 1};
    return std::nullopt;
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t m,
                                           std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw InvalidArgument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw InvalidArgument("field order exceeds 2^16");
    }
    if (!modulus) {
        modulus = default_modulus(p, m);
        if (!modulus)
            throw InvalidArgument("no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) +
                                  "); supply one");
    }
    Poly mod = *modulus;
    if (mod.size() != m + 1) throw InvalidArgument("modulus must have exactly m+1 coefficients");
    for (auto c : mod)
        if (c >= p) throw InvalidArgument("modulus coefficient out of range");
    if (mod.back() != 1) throw InvalidArgument("modulus must be monic");
    if (!is_irreducible(p, mod)) throw InvalidArgument("modulus is reducible over GF(" + std::to_string(p) + ")");
    return std::shared_ptr<const Field>(new Field(p, m, std::move(mod)));
}

std::shared_ptr<const Field> Field::parse(std::string_view spec) {
    const auto caret = spec.find('^');
    if (caret == std::string_view::npos) return create(parse_uint(spec, "characteristic"), 1);
    const std::uint32_t p = parse_uint(spec.substr(0, caret), "characteristic");
    auto rest = spec.substr(caret + 1);
    const auto colon = rest.find(':');
    const std::uint32_t m = parse_uint(rest.substr(0, colon), "degree");
    if (colon == std::string_view::npos) return create(p, m);
    Poly coeffs;
    auto list = rest.substr(colon + 1);
    while (true) {
        const auto comma = list.find(',');
        coeffs.push_back(parse_uint(list.substr(0, comma), "coefficient"));
        if (comma == std::string_view::npos) break;
        list = list.substr(comma + 1);
    }
    return create(p, m, std::move(coeffs));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
    build_tables();
}

std::string Field::spec() const {
    if (m_ == 1) return std::to_string(p_);
    std::ostringstream os;
    os << p_ << '^' << m_ << ':';
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
    return os.str();
}

Elem Field::poly_mul(Elem a, Elem b) const {
    Poly pa(m_), pb(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
        pa[i] = a % p_;
        a /= p_;
        pb[i] = b % p_;
        b /= p_;
    }
    Poly prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
    Poly r = poly_mod(std::move(prod), modulus_, p_);
    Elem code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
    return code;
}

void Field::build_tables() {
    const std::uint32_t n = q_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(q_, 0);
    for (Elem g = 1; g < q_; ++g) {
        // accept g when its powers run through all n nonzero elements
        std::vector<bool> seen(q_, false);
        Elem x = 1;
        std::uint32_t i = 0;
        for (; i < n; ++i) {
            if (seen[x]) break;
            seen[x] = true;
            exp_[i] = x;
            log_[x] = i;
            x = poly_mul(x, g);
        }
        if (i == n && x == 1) {
            for (std::uint32_t j = 0; j < n; ++j) exp_[n + j] = exp_[j];
            return;
        }
    }
    throw std::logic_error("no primitive element found; modulus not irreducible");
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return (a + b) % p_;
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return (p_ - a) % p_;
    Elem r = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::div(Elem a, Elem b) const {
    if (b == 0) throw std::domain_error("division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + (q_ - 1 - log_[b]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
}

Elem Field::from_int(long long v) const {
    const long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
}

Elem ff_arith(const Field& f, Elem a, Elem b, ArithOp op) {
    if (!f.contains(a) || !f.contains(b)) throw InvalidArgument("field element code out of range");
    switch (op) {
        case ArithOp::Add: return f.add(a, b);
        case ArithOp::Sub: return f.sub(a, b);
        case ArithOp::Mul: return f.mul(a, b);
        case ArithOp::Div: return f.div(a, b);
    }
    throw std::logic_error("unreachable");
}

Elem ff_inv(const Field& f, Elem a) {
    if (!f.contains(a)) throw InvalidArgument("field element code out of range");
    return f.inv(a);
}

}  // namespace subcode
