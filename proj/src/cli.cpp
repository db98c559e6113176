#include "subcode/cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "subcode/channel.hpp"
#include "subcode/codes.hpp"
#include "subcode/errors.hpp"
#include "subcode/schubert.hpp"
#include "subcode/textio.hpp"

namespace subcode::cli {
namespace {

const std::map<std::string, Metric> kMetrics{{"injection", Metric::Injection}, {"subspace", Metric::Subspace}};
const std::map<std::string, ListMethod> kMethods{{"oracle", ListMethod::Oracle}, {"pluecker", ListMethod::Pluecker}};
const std::map<std::string, BallScope> kScopes{{"grass", BallScope::Grassmannian}, {"all", BallScope::All}};

std::vector<Subspace> read_subspaces(const std::string& path) {
    const MatrixFile file = read_matrix_file(path);
    if (file.matrices.empty()) throw ParseError(path + ": no matrices");
    std::vector<Subspace> out;
    for (const auto& m : file.matrices) out.push_back(Subspace::row_space(m));
    return out;
}

Subspace read_single(const std::string& path) {
    auto all = read_subspaces(path);
    if (all.size() != 1) throw ParseError(path + ": expected exactly one matrix, found " + std::to_string(all.size()));
    return std::move(all.front());
}

void write_listing(std::ostream& out, const std::string& noun, const Field& field,
                   const std::vector<Subspace>& items, const std::vector<std::string>& comments = {}) {
    out << items.size() << ' ' << noun << '\n';
    if (!items.empty()) write_subspace_block(out, field, items, comments);
}

void write_decode(std::ostream& out, const DecodeResult& result) {
    out << result.entries.size() << " codewords\n";
    out << "unique " << (result.unique ? "yes" : "no") << '\n';
    if (result.entries.empty()) return;
    std::vector<Subspace> words;
    std::vector<std::string> comments;
    for (const auto& e : result.entries) {
        words.push_back(e.codeword);
        comments.push_back("distance " + std::to_string(e.distance));
    }
    write_subspace_block(out, words.front().field(), words, comments);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subspace codes, Plücker coordinates and Schubert conditions over finite fields", "subcode"};
    app.require_subcommand(1);

    // grass enumerate
    auto* grass = app.add_subcommand("grass", "Grassmannian utilities");
    grass->require_subcommand(1);
    auto* grass_enum = grass->add_subcommand("enumerate", "List every point of Grass_q(k,n)");
    std::string field_spec;
    std::size_t k = 0, n = 0;
    grass_enum->add_option("--field", field_spec, "Field spec: p or p^m:c0,...,cm")->required();
    grass_enum->add_option("--k", k, "Subspace dimension")->required();
    grass_enum->add_option("--n", n, "Ambient dimension")->required();

    // pluecker embed
    auto* pluecker = app.add_subcommand("pluecker", "Plücker embedding");
    pluecker->require_subcommand(1);
    auto* embed = pluecker->add_subcommand("embed", "Normalized Plücker coordinates of each matrix");
    std::string matrix_path;
    embed->add_option("--matrix", matrix_path)->required()->check(CLI::ExistingFile);

    // ball equations / members
    auto* ball = app.add_subcommand("ball", "Balls around a subspace");
    ball->require_subcommand(1);
    auto* ball_eq = ball->add_subcommand("equations", "Linear Plücker equations of an injection ball");
    auto* ball_mem = ball->add_subcommand("members", "Subspaces within a radius");
    std::string center_path;
    std::size_t radius = 0;
    Metric metric = Metric::Injection;
    ListMethod method = ListMethod::Oracle;
    BallScope scope = BallScope::Grassmannian;
    for (auto* sub : {ball_eq, ball_mem}) {
        sub->add_option("--center", center_path)->required()->check(CLI::ExistingFile);
        sub->add_option("--radius", radius)->required();
    }
    ball_mem->add_option("--metric", metric)->required()->transform(CLI::CheckedTransformer(kMetrics));
    ball_mem->add_option("--method", method)->transform(CLI::CheckedTransformer(kMethods));
    ball_mem->add_option("--scope", scope, "grass (same dimension, default) or all")
        ->transform(CLI::CheckedTransformer(kScopes));

    // distance
    auto* dist = app.add_subcommand("distance", "Distance between two subspaces");
    std::string a_path, b_path;
    dist->add_option("--a", a_path)->required()->check(CLI::ExistingFile);
    dist->add_option("--b", b_path)->required()->check(CLI::ExistingFile);
    dist->add_option("--metric", metric)->required()->transform(CLI::CheckedTransformer(kMetrics));

    // decode min | list
    auto* decode = app.add_subcommand("decode", "Decode a received subspace");
    decode->require_subcommand(1);
    auto* dec_min = decode->add_subcommand("min", "Minimum-distance decoding");
    auto* dec_list = decode->add_subcommand("list", "List decoding");
    std::string code_path, received_path;
    for (auto* sub : {dec_min, dec_list}) {
        sub->add_option("--code", code_path)->required()->check(CLI::ExistingFile);
        sub->add_option("--received", received_path)->required()->check(CLI::ExistingFile);
        sub->add_option("--metric", metric)->transform(CLI::CheckedTransformer(kMetrics));
    }
    dec_list->add_option("--radius", radius)->required();
    dec_list->add_option("--method", method)->transform(CLI::CheckedTransformer(kMethods));

    // channel
    auto* channel = app.add_subcommand("channel", "Send a subspace through the operator channel");
    std::string sent_path;
    ChannelConfig cfg;
    channel->add_option("--sent", sent_path)->required()->check(CLI::ExistingFile);
    channel->add_option("--erasures", cfg.erasures)->required();
    channel->add_option("--insertions", cfg.insertions)->required();
    channel->add_option("--seed", cfg.seed)->required();

    // schubert number
    auto* schubert = app.add_subcommand("schubert", "Schubert calculus");
    schubert->require_subcommand(1);
    auto* number = schubert->add_subcommand("number", "Intersection number d(k,m)");
    std::size_t m = 0;
    number->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    number->add_option("--m", m)->required()->check(CLI::PositiveNumber);

    // transversal
    auto* transversal = app.add_subcommand("transversal", "m-spaces meeting every input nontrivially");
    std::string inputs_path;
    transversal->add_option("--inputs", inputs_path)->required()->check(CLI::ExistingFile);
    transversal->add_option("--m", m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        const EnumerationBudget budget = EnumerationBudget::from_env();

        if (*grass_enum) {
            const FieldPtr field = Field::parse(field_spec);
            if (k > n) throw InvalidArgument("--k must not exceed --n");
            write_listing(out, "subspaces", *field, enumerate_grassmannian(field, k, n, budget));
        } else if (*embed) {
            for (const auto& s : read_subspaces(matrix_path)) {
                if (s.dim() == 0) throw InvalidArgument("cannot embed the zero subspace");
                out << format_pluecker(pluecker_embed(s)) << '\n';
            }
        } else if (*ball_eq) {
            const Subspace center = read_single(center_path);
            if (center.dim() == 0) throw InvalidArgument("ball equations need a nonzero center");
            for (const auto& form : ball_linear_system(center, radius))
                out << format_linear_form(form, center.ambient(), center.dim()) << '\n';
        } else if (*ball_mem) {
            const Subspace center = read_single(center_path);
            std::vector<Subspace> members;
            if (method == ListMethod::Pluecker) {
                if (metric != Metric::Injection || scope != BallScope::Grassmannian)
                    throw InvalidArgument("--method pluecker needs --metric injection and --scope grass");
                const auto system = ball_linear_system(center, radius);
                for_each_subspace(
                    center.field_ptr(), center.dim(), center.ambient(),
                    [&](const Subspace& v) {
                        if (v.dim() == 0 || system_satisfied(system, pluecker_embed(v))) members.push_back(v);
                    },
                    budget);
            } else {
                members = ball_members_by_distance(center, radius, metric, scope, budget);
            }
            write_listing(out, "members", center.field(), members);
        } else if (*dist) {
            out << distance(read_single(a_path), read_single(b_path), metric) << '\n';
        } else if (*dec_min || *dec_list) {
            const SubspaceCode code(read_subspaces(code_path));
            const Subspace received = read_single(received_path);
            write_decode(out, *dec_min ? min_distance_decode(code, received, metric)
                                       : list_decode(code, received, radius, method, metric));
        } else if (*channel) {
            const Subspace sent = read_single(sent_path);
            const Subspace received = transmit(sent, cfg);
            write_subspace_block(out, received.field(), {received});
        } else if (*number) {
            out << intersection_number(k, m) << '\n';
        } else if (*transversal) {
            const auto inputs = read_subspaces(inputs_path);
            const auto solutions = transversal_solve(inputs, m, budget);
            write_listing(out, "solutions", inputs.front().field(), solutions);
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Infeasible& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace subcode::cli
