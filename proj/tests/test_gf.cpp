#include <doctest.h>

#include <stdexcept>

#include "subcode/errors.hpp"
#include "subcode/gf.hpp"
#include "support.hpp"

using namespace subcode;
using subcode::testing::gf;

namespace {

// Schoolbook multiply-and-reduce, independent of the exp/log tables.
Elem reference_mul(const Field& f, Elem a, Elem b) {
    const std::uint32_t p = f.characteristic(), m = f.degree();
    std::vector<long> pa(m), pb(m), prod(2 * m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        pa[i] = a % p;
        a /= p;
        pb[i] = b % p;
        b /= p;
    }
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    const auto& mod = f.modulus();
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        const long lead = prod[d];
        if (lead == 0) continue;
        for (std::uint32_t i = 0; i <= m; ++i)
            prod[d - m + i] = ((prod[d - m + i] - lead * static_cast<long>(mod[i])) % static_cast<long>(p) + p) % p;
    }
    Elem code = 0;
    for (std::size_t i = m; i-- > 0;) code = code * p + static_cast<Elem>(prod[i]);
    return code;
}

// Extended Euclid over the integers.
long euclid_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return t < 0 ? t + p : t;
}

std::vector<FieldPtr> fields_up_to(std::uint32_t max_q) {
    std::vector<FieldPtr> out;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u})
        if (p <= max_q) out.push_back(gf(p));
    const std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> ext{
        {2, {1, 1, 1}},          {2, {1, 1, 0, 1}},       {3, {1, 0, 1}}, {2, {1, 1, 0, 0, 1}},
        {5, {2, 0, 1}},          {3, {1, 2, 0, 1}},       {2, {1, 0, 1, 0, 0, 1}}};
    for (const auto& [p, mod] : ext) {
        auto f = Field::create(p, static_cast<std::uint32_t>(mod.size() - 1), mod);
        if (f->order() <= max_q) out.push_back(f);
    }
    return out;
}

}  // namespace

TEST_CASE("field_create examples and errors") {
    auto f2 = gf(2);
    CHECK(f2->order() == 2);
    CHECK(f2->spec() == "2");

    auto f4 = Field::create(2, 2, std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4->order() == 4);
    CHECK(f4->spec() == "2^2:1,1,1");

    CHECK_THROWS_AS(Field::create(2, 2, std::vector<std::uint32_t>{1, 0, 1}), InvalidArgument);  // (x+1)^2
    CHECK_THROWS_AS(Field::create(4, 1), InvalidArgument);
    CHECK_THROWS_AS(Field::create(1, 1), InvalidArgument);
    CHECK_THROWS_AS(Field::create(2, 0), InvalidArgument);
    CHECK_THROWS_AS(Field::create(2, 2, std::vector<std::uint32_t>{1, 1}), InvalidArgument);        // wrong degree
    CHECK_THROWS_AS(Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 2}), InvalidArgument);     // not monic
    CHECK_THROWS_AS(Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 3}), InvalidArgument);     // coeff >= p
    CHECK_THROWS_AS(Field::create(5, 2), InvalidArgument);                                          // no default
    CHECK_THROWS_AS(Field::create(2, 17, std::vector<std::uint32_t>(18, 1)), InvalidArgument);      // q > 2^16
}

TEST_CASE("built-in default moduli are the documented ones") {
    CHECK(Field::create(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(Field::create(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(Field::create(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(Field::create(2, 4)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(Field::create(3, 3)->modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});
}

TEST_CASE("irreducibility by root search agrees with trial division for quadratics and cubics") {
    // a polynomial of degree 2 or 3 is reducible iff it has a root
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::uint32_t deg : {2u, 3u}) {
            std::uint32_t count = 1;
            for (std::uint32_t i = 0; i < deg; ++i) count *= p;
            for (std::uint32_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> poly(deg + 1);
                std::uint32_t c = code;
                for (std::uint32_t i = 0; i < deg; ++i) {
                    poly[i] = c % p;
                    c /= p;
                }
                poly[deg] = 1;
                bool has_root = false;
                for (std::uint32_t x = 0; x < p; ++x) {
                    std::uint64_t v = 0;
                    for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
                    has_root |= v == 0;
                }
                CHECK(is_irreducible(p, poly) == !has_root);
            }
        }
    }
}

TEST_CASE("ff_arith examples") {
    CHECK(ff_arith(*gf(2), 1, 1, ArithOp::Add) == 0);
    CHECK(ff_arith(*gf(2, 2), 2, 2, ArithOp::Mul) == 3);  // x*x = x+1
    CHECK(ff_arith(*gf(5), 2, 3, ArithOp::Div) == 4);
    CHECK(ff_arith(*gf(5), 2, 3, ArithOp::Sub) == 4);
    CHECK(ff_arith(*gf(3, 2), 1, 3, ArithOp::Add) == 4);  // 1 + x
    CHECK_THROWS_AS(ff_arith(*gf(5), 2, 0, ArithOp::Div), std::domain_error);
    CHECK_THROWS_AS(ff_arith(*gf(5), 5, 1, ArithOp::Add), InvalidArgument);
}

TEST_CASE("ff_inv examples") {
    CHECK(ff_inv(*gf(2), 1) == 1);
    CHECK(ff_inv(*gf(5), 3) == 2);
    CHECK(ff_inv(*gf(2, 2), 2) == 3);  // x (x+1) = x^2 + x = 1
    CHECK_THROWS_AS(ff_inv(*gf(7), 0), std::domain_error);
}

TEST_CASE("prime-field inverses match extended Euclid") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u, 65521u}) {
        auto f = gf(p);
        for (Elem a = 1; a < std::min<std::uint32_t>(p, 200); ++a)
            CHECK(f->inv(a) == static_cast<Elem>(euclid_inverse(a, p)));
    }
}

TEST_CASE("table multiplication matches schoolbook polynomial multiplication") {
    for (const auto& f : fields_up_to(32)) {
        for (Elem a = 0; a < f->order(); ++a)
            for (Elem b = 0; b < f->order(); ++b) REQUIRE(f->mul(a, b) == reference_mul(*f, a, b));
    }
}

TEST_CASE("a * a^-1 = 1 for every nonzero element, q <= 32") {
    for (const auto& f : fields_up_to(32)) {
        for (Elem a = 1; a < f->order(); ++a) CHECK(f->mul(a, f->inv(a)) == 1);
    }
}

TEST_CASE("field axioms exhaustively for q <= 9") {
    for (const auto& f : fields_up_to(9)) {
        INFO("q = " << f->order());
        const Elem q = f->order();
        for (Elem a = 0; a < q; ++a) {
            CHECK(f->add(a, f->neg(a)) == 0);
            CHECK(f->sub(a, a) == 0);
            for (Elem b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->add(f->sub(a, b), b) == a);
                if (b != 0) CHECK(f->mul(f->div(a, b), b) == a);
                for (Elem c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("Frobenius is additive for q <= 9") {
    for (const auto& f : fields_up_to(9)) {
        const std::uint32_t p = f->characteristic();
        for (Elem a = 0; a < f->order(); ++a)
            for (Elem b = 0; b < f->order(); ++b)
                CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
    }
}

TEST_CASE("field spec strings") {
    CHECK(Field::parse("2")->order() == 2);
    CHECK(Field::parse("2^2:1,1,1")->order() == 4);
    CHECK(Field::parse("3^2")->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(Field::parse("2^3:1,1,0,1")->spec() == "2^3:1,1,0,1");
    CHECK_THROWS_AS(Field::parse("2^2:1,0,1"), InvalidArgument);
    CHECK_THROWS_AS(Field::parse("two"), InvalidArgument);
    CHECK_THROWS_AS(Field::parse("2^2:1,,1"), InvalidArgument);
    CHECK_THROWS_AS(Field::parse(""), InvalidArgument);
}

TEST_CASE("largest supported field builds") {
    auto f = Field::create(2, 16, std::vector<std::uint32_t>{1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(f->order() == 65536);
    CHECK(f->mul(12345, f->inv(12345)) == 1);
    CHECK(f->mul(40000, 51234) == reference_mul(*f, 40000, 51234));
}
