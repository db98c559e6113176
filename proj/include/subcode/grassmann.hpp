#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "subcode/bigint.hpp"
#include "subcode/matrix.hpp"

namespace subcode {

/// Cap on the number of subspaces an exhaustive scan may visit.
struct EnumerationBudget {
    static constexpr std::uint64_t kDefault = 10'000'000;
    std::uint64_t max_subspaces = kDefault;

    /// Reads SCHUBERT_ENUM_BUDGET, falling back to the default.
    static EnumerationBudget from_env();
};

/// A point of Grass_q(k, n): the row space of a k x n matrix, stored by its
/// reduced row echelon form. Equality is entry equality of that form.
class Subspace {
public:
    /// Throws InvalidArgument when m does not have full row rank.
    static Subspace canonicalize(const Matrix& m);
    /// Row space of an arbitrary matrix; zero rows and dependent rows allowed.
    static Subspace row_space(const Matrix& m);
    static Subspace zero(FieldPtr field, std::size_t n);

    const Matrix& generator() const { return gen_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t dim() const { return gen_.rows(); }
    std::size_t ambient() const { return gen_.cols(); }
    const Field& field() const { return gen_.field(); }
    const FieldPtr& field_ptr() const { return gen_.field_ptr(); }

    /// rs(U A) for an n x n matrix A.
    Subspace transformed(const Matrix& a) const;

    bool operator==(const Subspace& other) const { return gen_ == other.gen_; }

private:
    Subspace(Matrix gen, std::vector<std::size_t> pivots) : gen_(std::move(gen)), pivots_(std::move(pivots)) {}

    friend void for_each_subspace(const FieldPtr&, std::size_t, std::size_t,
                                  const std::function<void(const Subspace&)>&, const EnumerationBudget&);

    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

/// Total order matching enumeration: dimension, then pivot tuple, then the
/// canonical entries row-major (only free entries can differ).
bool enumeration_less(const Subspace& a, const Subspace& b);

std::size_t binomial(std::size_t n, std::size_t k);
/// All strictly increasing k-tuples from 1..n in lexicographic order.
std::vector<IndexTuple> all_index_tuples(std::size_t n, std::size_t k);
/// Position of a tuple in the lexicographic order of all_index_tuples(n, |t|).
std::size_t tuple_position(const IndexTuple& t, std::size_t n);

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

/// Streams every k-dimensional subspace of GF(q)^n exactly once, ordered by
/// pivot tuple (lex) then free-entry codes (lex). Throws BudgetExceeded when
/// q^{k(n-k)} * C(n,k) exceeds the budget.
void for_each_subspace(const FieldPtr& field, std::size_t k, std::size_t n,
                       const std::function<void(const Subspace&)>& visit, const EnumerationBudget& budget = {});
std::vector<Subspace> enumerate_grassmannian(const FieldPtr& field, std::size_t k, std::size_t n,
                                             const EnumerationBudget& budget = {});

enum class Metric { Subspace, Injection };

std::size_t subspace_distance(const Subspace& u, const Subspace& v);
std::size_t injection_distance(const Subspace& u, const Subspace& v);
std::size_t distance(const Subspace& u, const Subspace& v, Metric metric);

/// Projective coordinate vector in P^{C(n,k)-1}, positions in lex tuple order.
struct PlueckerVector {
    FieldPtr field;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Elem> coords;
    bool normalized = false;

    Elem at(const IndexTuple& t) const { return coords[tuple_position(t, n)]; }
    bool is_zero() const;
    /// Scales so the first nonzero coordinate is 1.
    void normalize();
    bool operator==(const PlueckerVector& o) const {
        return n == o.n && k == o.k && coords == o.coords && *field == *o.field;
    }
};

/// All k x k minors of a k x n matrix (unnormalized).
PlueckerVector pluecker_coordinates(const Matrix& gen);
/// Normalized Plücker vector of a subspace.
PlueckerVector pluecker_embed(const Subspace& u);

/// True iff v is nonzero and satisfies every quadratic Plücker relation
///   sum_{l=1}^{k+1} (-1)^l v[I + j_l] v[J - j_l] = 0
/// over increasing (k-1)-tuples I and (k+1)-tuples J.
bool pluecker_relations_check(const PlueckerVector& v);

enum class BallScope { Grassmannian, All };

/// Brute-force ball: every subspace within distance e of the center, in
/// enumeration order. Scope Grassmannian keeps dim = dim(center); All walks
/// every dimension 0..n.
std::vector<Subspace> ball_members_by_distance(const Subspace& center, std::size_t e, Metric metric,
                                               BallScope scope, const EnumerationBudget& budget = {});

}  // namespace subcode
