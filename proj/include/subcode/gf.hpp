#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subcode {

/// Field element code in 0..q-1: the base-p integer of the polynomial-basis
/// coordinates, code = sum c_i p^i.
using Elem = std::uint32_t;

/// Finite field GF(p^m), q <= 2^16. Immutable after construction.
///
/// Multiplication goes through exp/log tables built from a primitive element
/// found at construction; addition is digitwise mod p (XOR when p = 2).
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// Throws InvalidArgument on non-prime p, m = 0, q > 2^16, a modulus of
    /// the wrong degree / not monic / reducible, or a missing modulus when no
    /// built-in default exists for (p, m).
    static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t m,
                                               std::optional<std::vector<std::uint32_t>> modulus = {});

    /// Parses `p` or `p^m:c0,...,cm` (ascending coefficients). `p^m` alone
    /// selects the built-in default modulus.
    static std::shared_ptr<const Field> parse(std::string_view spec);

    /// Built-in default modulus for (p, m), ascending coefficients.
    static std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t m);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::string spec() const;

    bool contains(Elem a) const { return a < q_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws std::domain_error when b = 0.
    Elem div(Elem a, Elem b) const;
    /// Throws std::domain_error when a = 0.
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    /// Image of an integer under Z -> GF(p).
    Elem from_int(long long v) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

    Elem poly_mul(Elem a, Elem b) const;
    void build_tables();

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;           // exp_[i] = g^i, length 2(q-1)
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

using FieldPtr = std::shared_ptr<const Field>;

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations.
Elem ff_arith(const Field& f, Elem a, Elem b, ArithOp op);
Elem ff_inv(const Field& f, Elem a);

bool is_prime(std::uint32_t p);

/// Trial division by every monic polynomial of degree 1..deg/2 over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

}  // namespace subcode
