// congmon: command-line front end for the congruence-monoid toolkit.
// JSON goes to stdout, human-readable summaries to stderr.
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 precondition
// violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congmon/canonical.hpp"
#include "congmon/criterion.hpp"
#include "congmon/error.hpp"
#include "congmon/groups.hpp"
#include "congmon/json_io.hpp"
#include "congmon/lie.hpp"
#include "congmon/matrix.hpp"
#include "congmon/orbit.hpp"
#include "congmon/star.hpp"

using nlohmann::json;
using namespace congmon;

namespace {

Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
}

json scalar_json(const Scalar& s) { return s.str(); }

json params_to_json(const GroupParams& p) {
    json j;
    j["family"] = family_name(p.family);
    j["n"] = p.n;
    j["field"] = p.tag.name();
    j["x0"] = scalar_json(p.x0);
    if (p.g.rows() == 2) j["g"] = matrix_to_json(p.g);
    j["alpha"] = scalar_json(p.alpha);
    j["beta"] = scalar_json(p.beta);
    j["gamma"] = scalar_json(p.gamma);
    j["xs"] = json::array();
    for (const auto& s : p.xs) j["xs"].push_back(scalar_json(s));
    j["xb"] = json::array();
    for (const auto& b : p.xb) j["xb"].push_back(matrix_to_json(b));
    j["lambda"] = scalar_json(p.lambda);
    return j;
}

GroupParams params_from_json(const json& j) {
    try {
        FieldTag tag = FieldTag::from_name(j.at("field").get<std::string>());
        GroupParams p = identity_params(family_from_name(j.at("family").get<std::string>()),
                                        j.at("n").get<std::size_t>(), tag);
        if (j.contains("x0")) p.x0 = Scalar::parse(j.at("x0").get<std::string>(), tag);
        if (j.contains("g")) p.g = matrix_from_json(j.at("g"));
        for (const char* k : {"alpha", "beta", "gamma", "lambda"})
            if (j.contains(k)) {
                Scalar v = Scalar::parse(j.at(k).get<std::string>(), tag);
                if (k[0] == 'a') p.alpha = v;
                else if (k[0] == 'b') p.beta = v;
                else if (k[0] == 'g') p.gamma = v;
                else p.lambda = v;
            }
        if (j.contains("xs")) {
            p.xs.clear();
            for (const auto& s : j.at("xs"))
                p.xs.push_back(Scalar::parse(s.get<std::string>(), tag));
        }
        if (j.contains("xb")) {
            p.xb.clear();
            for (const auto& b : j.at("xb")) p.xb.push_back(matrix_from_json(b));
        }
        return p;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid parameter JSON: ") + e.what());
    }
}

json verdict_json(const GroupVerdict& v, const Matrix& a) {
    json j;
    j["is_group"] = v.is_group;
    j["kernel_intersection_dim"] = v.kernel_intersection_dim;
    j["dim"] = solve_tangent(a).dim(); // tangent-algebra dimension
    j["method"] = v.method;
    if (v.witness) {
        j["witness"] = matrix_to_json(*v.witness);
        j["witness_verified"] = true; // constructors verify before returning
    }
    return j;
}

json bracket_table_json(const BracketTable& t) {
    json j;
    j["labels"] = t.labels;
    j["closed"] = t.closed;
    j["antisymmetric"] = t.antisymmetric;
    j["jacobi"] = t.jacobi;
    json entries = json::array();
    for (std::size_t i = 0; i < t.labels.size(); ++i)
        for (std::size_t k = 0; k < t.labels.size(); ++k) {
            if (t.entries[i][k].empty()) continue;
            json terms = json::array();
            for (const auto& term : t.entries[i][k])
                terms.push_back(json::array({term.coef.str(), t.labels[term.index]}));
            entries.push_back(json::array({i, k, terms}));
        }
    j["entries"] = entries;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
    std::string field = "q";
    std::uint64_t seed = 0;
    std::string family;
    std::size_t n = 0;
    std::size_t power = 1;
    std::size_t degree = 0;
    std::size_t size = 0;
    std::size_t count = 10;
    std::size_t trials = 0;
    std::string type;
    std::string c_value = "2";
    std::string convention = "body";
    std::string input;
    std::string params_path;
    bool generic = false;
};

FieldTag tag_of(const Options& o) { return FieldTag::from_name(o.field); }

int run_selftest(const Options& o) {
    FieldTag q = FieldTag::rationals();
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok) {
        checks.push_back({{"name", name}, {"ok", ok}});
        all_ok = all_ok && ok;
        std::cerr << (ok ? "ok   " : "FAIL ") << name << "\n";
    };

    bool spans = true;
    for (std::size_t n = 2; n <= 8; ++n)
        spans = spans && span_equal(basis_solAn(n, q), solve_tangent(make_An(n, q)));
    record("tangent-basis-an", spans);

    bool spans2 = true;
    for (std::size_t n : {4u, 5u, 6u, 7u, 8u})
        spans2 = spans2 && span_equal(basis_solAn2(n, q), solve_tangent(make_An_power(n, 2, q)));
    record("tangent-basis-an2", spans2);

    bool crit = true;
    FieldTag qi = FieldTag::gaussian_rationals();
    for (std::size_t n = 3; n <= 6; ++n)
        crit = crit && is_group_complex(make_An(n, qi)).is_group;
    record("criterion-an-groups", crit);

    bool groups_ok = true;
    struct { GroupFamily f; std::size_t n; } cases[] = {
        {GroupFamily::an, 5}, {GroupFamily::an2_mod0, 8}, {GroupFamily::an2_mod1, 9},
        {GroupFamily::an2_mod2, 6}, {GroupFamily::an2_mod3, 7},
    };
    for (auto [f, n] : cases)
        for (std::uint64_t s = 0; s < 5; ++s) {
            try {
                GroupParams p = random_params(f, n, o.seed + s, q);
                Matrix x = build(p);
                semidirect_factor(x, f, n);
            } catch (const std::exception&) {
                groups_ok = false;
            }
        }
    record("group-families-roundtrip", groups_ok);

    record("star-identity-deg-3",
           verify_star_one(3, StarConvention::body).equal);
    record("sigma-relabeling", [&] {
        for (std::size_t n = 2; n <= 10; ++n) {
            Matrix s = make_sigma(n, q);
            if (congruent_transform(s, make_An(n, q)) != relabeled_path_adjacency(n, q))
                return false;
        }
        return true;
    }());

    json out;
    out["ok"] = all_ok;
    out["checks"] = checks;
    emit(out);
    if (!all_ok) throw verification_error("selftest failed");
    return 0;
}

int dispatch(const std::string& cmd, const Options& o) {
    FieldTag tag = tag_of(o);

    if (cmd == "analyze") {
        Matrix a = load_matrix(o.input);
        if (a.tag() == FieldTag::rationals()) { // Q embeds in Q(i)
            Matrix lifted(a.rows(), a.cols(), FieldTag::gaussian_rationals());
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j)
                    lifted.at(i, j) = Scalar::gaussian(a.at(i, j).re(), 0);
            a = lifted;
        }
        GroupVerdict v = is_group_complex(a);
        std::cerr << (v.is_group ? "Sol_A is a group" : "Sol_A is not a group")
                  << " (method: " << v.method << ")\n";
        emit(verdict_json(v, a));
        return 0;
    }
    if (cmd == "canonical") {
        require(o.type.size() == 1 && o.type[0] >= 'a' && o.type[0] <= 'f',
                "--type must be one of a..f");
        static const std::map<char, BlockKind> kinds = {
            {'a', BlockKind::A_odd}, {'b', BlockKind::B_even}, {'c', BlockKind::C_odd},
            {'d', BlockKind::D_even}, {'e', BlockKind::E_even}, {'f', BlockKind::F_even}};
        CanonicalBlock b{kinds.at(o.type[0]), o.size, std::nullopt};
        if (b.kind == BlockKind::B_even) b.c = Scalar::parse(o.c_value, tag);
        emit(matrix_to_json(make_block(b, tag)));
        return 0;
    }
    if (cmd == "an") {
        emit(matrix_to_json(o.power == 1 ? make_An(o.n, tag)
                                         : make_An_power(o.n, o.power, tag)));
        return 0;
    }
    if (cmd == "sigma") {
        Matrix s = make_sigma(o.n, tag);
        verify(congruent_transform(s, make_An(o.n, tag)) == relabeled_path_adjacency(o.n, tag),
               "relabeling permutation failed its congruence check");
        json j;
        j["sigma"] = matrix_to_json(s);
        j["target"] = matrix_to_json(relabeled_path_adjacency(o.n, tag));
        j["verified"] = true;
        emit(j);
        return 0;
    }
    if (cmd == "tangent") {
        require(o.family == "an" || o.family == "an2", "--family must be an or an2");
        TangentBasis basis;
        if (o.generic)
            basis = solve_tangent(o.family == "an" ? make_An(o.n, tag)
                                                   : make_An_power(o.n, 2, tag));
        else
            basis = o.family == "an" ? basis_solAn(o.n, tag) : basis_solAn2(o.n, tag);
        json j;
        j["family"] = o.family;
        j["n"] = o.n;
        j["generic"] = o.generic;
        j["dim"] = basis.dim();
        j["labels"] = basis.labels;
        j["basis"] = json::array();
        for (const auto& m : basis.basis) j["basis"].push_back(matrix_to_json(m));
        emit(j);
        return 0;
    }
    if (cmd == "brackets") {
        require(o.family == "an" || o.family == "an2", "--family must be an or an2");
        GeneratorSet gens = o.family == "an" ? generators_solAn(o.n, tag)
                                             : generators_solAn2(o.n, tag);
        BracketTable t = bracket_table(gens);
        verify(t.closed && t.antisymmetric && t.jacobi,
               "bracket table failed a Lie-algebra axiom");
        emit(bracket_table_json(t));
        return 0;
    }
    if (cmd == "group-sample" || cmd == "factor") {
        GroupFamily f = family_from_name(o.family);
        GroupParams p;
        if (cmd == "factor") {
            p = semidirect_factor(load_matrix(o.input), f, o.n);
        } else if (!o.params_path.empty()) {
            std::ifstream in(o.params_path);
            if (!in) throw parse_error("cannot open params file: " + o.params_path);
            json pj;
            try {
                in >> pj;
            } catch (const json::exception& e) {
                throw parse_error(std::string("invalid JSON: ") + e.what());
            }
            p = params_from_json(pj);
        } else {
            p = random_params(f, o.n, o.seed, tag);
        }
        Matrix x = build(p); // throws verification_error unless X^t A X = A
        json j;
        j["matrix"] = matrix_to_json(x);
        j["params"] = params_to_json(p);
        j["det"] = determinant(x).str();
        j["verified"] = true;
        std::cerr << "built " << family_name(f) << " element, n = " << p.n << "\n";
        emit(j);
        return 0;
    }
    if (cmd == "star") {
        StarConvention conv = star_convention_from_name(o.convention);
        IdentityReport rep = verify_star_one(static_cast<unsigned>(o.degree), conv);
        json j;
        j["degree"] = o.degree;
        j["convention"] = star_convention_name(conv);
        j["equal"] = rep.equal;
        if (!rep.equal) j["diff"] = rep.detail;
        if (o.trials > 0) {
            std::mt19937_64 rng(o.seed);
            std::uniform_int_distribution<long> dist(-3, 3);
            bool matrix_equal = true;
            const FreePoly& s = star('x', static_cast<unsigned>(o.degree));
            for (std::size_t t = 0; t < o.trials; ++t) {
                std::vector<Matrix> xs;
                for (std::size_t l = 0; l < o.degree; ++l) {
                    Matrix m(2, 2, tag);
                    for (std::size_t a = 0; a < 2; ++a)
                        for (std::size_t b = 0; b < 2; ++b)
                            m.at(a, b) = Scalar::integer(dist(rng), tag);
                    xs.push_back(m);
                }
                std::vector<Matrix> stars = star_sequence(GroupFamily::an2_mod0, xs,
                                                          Scalar::zero(tag), tag);
                Matrix sub = matrix_substitute(s, {{'x', xs}}, 2, tag);
                matrix_equal = matrix_equal && sub == stars[o.degree - 1];
            }
            j["matrix_trials"] = o.trials;
            j["matrix_equal"] = matrix_equal;
        }
        emit(j);
        return 0;
    }
    if (cmd == "stabilizer") {
        require(o.family == "a6" || o.family == "a8sq", "--family must be a6 or a8sq");
        Matrix y = load_matrix(o.input);
        json j;
        j["family"] = o.family;
        if (o.family == "a6") {
            StabilizerReport rep = stabilizer_solA6(y);
            j["class"] = stabilizer_class_name(rep.cls);
            j["x0_forced_one"] = rep.x0_forced_one;
            j["x1_free"] = rep.x1_free;
            j["x2_free"] = rep.x2_free;
            j["note"] = rep.note;
        } else {
            TrivialStabilizerReport rep = stabilizer_trivial_solA8sq(y);
            j["certified_trivial"] = rep.certified_trivial;
            if (!rep.certified_trivial) j["shapes"] = rep.shapes;
        }
        emit(j);
        return 0;
    }
    if (cmd == "orbit") {
        GroupFamily f = family_from_name(o.family);
        Matrix y = load_matrix(o.input);
        auto pts = orbit_sample(f, o.n, o.seed, y, o.count);
        json j;
        j["family"] = family_name(f);
        j["n"] = o.n;
        j["count"] = pts.size();
        j["points"] = json::array();
        for (const auto& w : pts) j["points"].push_back(matrix_to_json(w));
        j["verified"] = true; // each point passed the exact invariant check
        emit(j);
        return 0;
    }
    if (cmd == "selftest") return run_selftest(o);
    throw parse_error("unknown subcommand: " + cmd);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact congruence-monoid toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "coefficient field: q, qi, fp:<p>");
        sub->add_option("--seed", o.seed, "RNG seed (env CONGMON_SEED overrides)");
    };

    auto* analyze = app.add_subcommand("analyze", "decide whether Sol_A is a group");
    analyze->add_option("--input", o.input, "matrix JSON file")->required();
    add_common(analyze);

    auto* canonical = app.add_subcommand("canonical", "emit a canonical congruence block");
    canonical->add_option("--type", o.type, "block type a..f")->required();
    canonical->add_option("--size", o.size, "block size")->required();
    canonical->add_option("--c", o.c_value, "parameter for type b blocks");
    add_common(canonical);

    auto* an = app.add_subcommand("an", "emit A_n or a power of it");
    an->add_option("--n", o.n, "size")->required();
    an->add_option("--power", o.power, "superdiagonal offset k");
    add_common(an);

    auto* sigma = app.add_subcommand("sigma", "path-relabeling permutation for A_n");
    sigma->add_option("--n", o.n, "size")->required();
    add_common(sigma);

    auto* tangent = app.add_subcommand("tangent", "tangent-algebra basis");
    tangent->add_option("--family", o.family, "an or an2")->required();
    tangent->add_option("--n", o.n, "size")->required();
    tangent->add_flag("--generic", o.generic, "use the generic solver instead of the closed form");
    add_common(tangent);

    auto* brackets = app.add_subcommand("brackets", "commutator table of the tangent algebra");
    brackets->add_option("--family", o.family, "an or an2")->required();
    brackets->add_option("--n", o.n, "size")->required();
    add_common(brackets);

    auto* sample = app.add_subcommand("group-sample", "build a verified group element");
    sample->add_option("--family", o.family, "an, an2-mod0..3")->required();
    sample->add_option("--n", o.n, "size")->required();
    sample->add_option("--params", o.params_path, "explicit GroupParams JSON file");
    add_common(sample);

    auto* factor = app.add_subcommand("factor", "semidirect factorization of a group element");
    factor->add_option("--family", o.family, "an, an2-mod0..3")->required();
    factor->add_option("--n", o.n, "size")->required();
    factor->add_option("--input", o.input, "matrix JSON file")->required();
    add_common(factor);

    auto* star_cmd = app.add_subcommand("star", "verify the star-recursion identity");
    star_cmd->add_option("--degree", o.degree, "identity degree")->required();
    star_cmd->add_option("--convention", o.convention, "appendix or body");
    star_cmd->add_option("--matrix-trials", o.trials, "random 2x2 substitution checks");
    add_common(star_cmd);

    auto* stab = app.add_subcommand("stabilizer", "stabilizer analysis of a target matrix");
    stab->add_option("--family", o.family, "a6 or a8sq")->required();
    stab->add_option("--input", o.input, "target matrix JSON file")->required();
    add_common(stab);

    auto* orbit = app.add_subcommand("orbit", "sample verified orbit points");
    orbit->add_option("--family", o.family, "an, an2-mod0..3")->required();
    orbit->add_option("--n", o.n, "size")->required();
    orbit->add_option("--input", o.input, "target matrix JSON file")->required();
    orbit->add_option("--count", o.count, "number of samples");
    add_common(orbit);

    auto* selftest = app.add_subcommand("selftest", "run quick internal consistency checks");
    add_common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (const char* env = std::getenv("CONGMON_SEED")) {
        try {
            o.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "invalid CONGMON_SEED: " << env << "\n";
            return 2;
        }
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), o);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const verification_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
