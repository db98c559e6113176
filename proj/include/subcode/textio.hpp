#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "subcode/errors.hpp"
#include "subcode/grassmann.hpp"
#include "subcode/schubert.hpp"

namespace subcode {

class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Text matrix file:
///
///   field <spec>
///   <row of element codes>
///   ...
///   <blank line>
///   <next matrix>
///
/// Lines whose first non-blank character is '#' are comments.
struct MatrixFile {
    FieldPtr field;
    std::vector<Matrix> matrices;
};

MatrixFile parse_matrix_file(std::string_view text);
MatrixFile read_matrix_file(const std::string& path);

/// Rows of a subspace's canonical generator; the zero space is written as one
/// all-zero row so the ambient dimension survives a round trip.
void write_subspace_rows(std::ostream& os, const Subspace& s);
/// `field <spec>` header followed by blank-line separated subspaces; an
/// optional per-entry comment is written as `# <comment>` before each one.
void write_subspace_block(std::ostream& os, const Field& field, const std::vector<Subspace>& subspaces,
                          const std::vector<std::string>& comments = {});

/// `[c1:c2:...]` in lex tuple order.
std::string format_pluecker(const PlueckerVector& v);
/// Nonzero terms as `i1,..,ik:coeff`, space separated.
std::string format_linear_form(const LinearForm& form, std::size_t n, std::size_t k);

}  // namespace subcode
