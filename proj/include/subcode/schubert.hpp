#pragma once

#include <vector>

#include "subcode/bigint.hpp"
#include "subcode/grassmann.hpp"

namespace subcode {

/// Monomial order on index tuples: the first differing position decides.
/// Throws InvalidArgument on a length mismatch.
bool tuple_lex_leq(const IndexTuple& a, const IndexTuple& b);

/// Componentwise (Bruhat) order: a_i <= b_i for every i.
bool tuple_bruhat_leq(const IndexTuple& a, const IndexTuple& b);

/// (t'+1, ..., k, n-t'+1, ..., n) with t' = min(t, k).
IndexTuple ball_bound_tuple(std::size_t k, std::size_t n, std::size_t t);

/// Tuples whose Plücker coordinate must vanish on the radius-t injection
/// ball around rs[I_k 0]: those not componentwise below ball_bound_tuple.
/// Lex order.
std::vector<IndexTuple> ball_forbidden_tuples(std::size_t k, std::size_t n, std::size_t t);

/// A in GL_n with [I_k 0] A spanning u: u's canonical rows on top, then one
/// unit row e_c per non-pivot column c (ascending).
Matrix transition_matrix(const Subspace& u);

/// Inverse of a transition matrix via the pivot permutation: permuting the
/// columns pivots-first gives [[I, X], [0, I]], whose inverse is
/// [[I, -X], [0, I]]; the same permutation applied to rows yields A^{-1}.
/// Throws InvalidArgument if `a` does not have that shape for `pivots`.
Matrix pivot_permutation_inverse(const Matrix& a, const std::vector<std::size_t>& pivots);

/// k-th compound: entry (R, C) = minor(A, R, C) over lex-ordered k-tuples.
struct CompoundMatrix {
    std::size_t k = 0;
    Matrix entries;
};

CompoundMatrix compound_matrix(const Matrix& a, std::size_t k);

/// Column C of the k-th compound of `a`, one entry per row tuple in lex order.
std::vector<Elem> compound_column(const Matrix& a, std::size_t k, const IndexTuple& column);

/// Linear constraint sum_R coeffs[R] * v_R = 0 on Plücker coordinates.
struct LinearForm {
    IndexTuple column;         // the forbidden tuple this form came from
    std::vector<Elem> coeffs;  // lex-ordered row tuples

    bool satisfied_by(const PlueckerVector& v) const;
};

/// Linear equations cutting the radius-t injection ball around `center` out
/// of the Grassmannian: column J of compound(A^{-1}) for every forbidden J,
/// with A = transition_matrix(center). Zero forms are dropped. t is clamped
/// to k.
std::vector<LinearForm> ball_linear_system(const Subspace& center, std::size_t t);

bool system_satisfied(const std::vector<LinearForm>& system, const PlueckerVector& v);

bool ball_contains_pluecker(const Subspace& center, std::size_t t, const Subspace& v);

/// Full flag V_1 ⊂ ... ⊂ V_n, V_j = row space of the first j rows.
class Flag {
public:
    explicit Flag(Matrix basis);
    static Flag standard(FieldPtr field, std::size_t n);

    std::size_t ambient() const { return basis_.rows(); }
    /// Generator of V_j (j rows; j = 0 gives the zero space).
    Matrix prefix(std::size_t j) const { return basis_.top_rows(j); }
    const Matrix& basis() const { return basis_; }

private:
    Matrix basis_;
};

struct SchubertCondition {
    IndexTuple nu;
    Flag flag;
};

/// dim(W ∩ V_{nu_i}) >= i for all i.
bool schubert_variety_contains(const SchubertCondition& cond, const Subspace& w);
/// Variety membership plus dim(W ∩ V_{nu_i - 1}) = i - 1 for all i.
bool schubert_cell_contains(const SchubertCondition& cond, const Subspace& w);

/// 1! 2! ... (k-1)! (km)! / (m! (m+1)! ... (m+k-1)!)
BigInt intersection_number(std::size_t k, std::size_t m);

/// Every m-dimensional subspace meeting each input nontrivially, found by
/// exhaustive enumeration (enumeration order).
std::vector<Subspace> transversal_solve(const std::vector<Subspace>& inputs, std::size_t m,
                                        const EnumerationBudget& budget = {});

}  // namespace subcode
