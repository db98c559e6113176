#include "subcode/textio.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace subcode {
namespace {

std::string_view strip(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text) {
    MatrixFile out;
    std::vector<std::vector<Elem>> rows;
    std::size_t line_no = 0;

    auto flush = [&]() {
        if (rows.empty()) return;
        out.matrices.push_back(Matrix::from_rows(out.field, rows));
        rows.clear();
    };

    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const std::string_view line = strip(raw);
        if (!line.empty() && line.front() == '#') continue;
        if (!out.field) {
            if (line.empty()) continue;
            if (line.substr(0, 6) != "field " && line.substr(0, 6) != "field\t")
                throw ParseError("line " + std::to_string(line_no) + ": expected 'field <spec>' header");
            out.field = Field::parse(strip(line.substr(6)));
            continue;
        }
        if (line.empty()) {
            flush();
            continue;
        }
        std::vector<Elem> row;
        std::string_view rest = line;
        while (!rest.empty()) {
            const auto end = rest.find_first_of(" \t");
            const std::string_view tok = rest.substr(0, end);
            Elem v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError("line " + std::to_string(line_no) + ": bad element '" + std::string(tok) + "'");
            if (!out.field->contains(v))
                throw ParseError("line " + std::to_string(line_no) + ": element " + std::to_string(v) +
                                 " not below q = " + std::to_string(out.field->order()));
            row.push_back(v);
            rest = end == std::string_view::npos ? std::string_view{} : strip(rest.substr(end));
        }
        if (!rows.empty() && rows.front().size() != row.size())
            throw ParseError("line " + std::to_string(line_no) + ": inconsistent column count");
        rows.push_back(std::move(row));
    }
    if (!out.field) throw ParseError("missing 'field <spec>' header");
    flush();
    return out;
}

MatrixFile read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_matrix_file(ss.str());
    } catch (const InvalidArgument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_subspace_rows(std::ostream& os, const Subspace& s) {
    const Matrix& g = s.generator();
    if (g.rows() == 0) {
        for (std::size_t j = 0; j < g.cols(); ++j) os << (j ? " " : "") << 0;
        os << '\n';
        return;
    }
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) os << (j ? " " : "") << g(i, j);
        os << '\n';
    }
}

void write_subspace_block(std::ostream& os, const Field& field, const std::vector<Subspace>& subspaces,
                          const std::vector<std::string>& comments) {
    os << "field " << field.spec() << '\n';
    for (std::size_t i = 0; i < subspaces.size(); ++i) {
        if (i) os << '\n';
        if (i < comments.size()) os << "# " << comments[i] << '\n';
        write_subspace_rows(os, subspaces[i]);
    }
}

std::string format_pluecker(const PlueckerVector& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(v.coords[i]);
    }
    return s + "]";
}

std::string format_linear_form(const LinearForm& form, std::size_t n, std::size_t k) {
    const auto tuples = all_index_tuples(n, k);
    std::string s;
    for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
        if (form.coeffs[i] == 0) continue;
        if (!s.empty()) s += ' ';
        for (std::size_t j = 0; j < tuples[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(tuples[i][j]);
        }
        s += ':' + std::to_string(form.coeffs[i]);
    }
    return s;
}

}  // namespace subcode
