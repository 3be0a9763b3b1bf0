#include "qspace/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qspace/json_io.hpp"
#include "qspace/verify.hpp"

namespace qspace::cli {

namespace {

// Spins are written "3/2", "1/2", "2"; plain integers mean whole spins.
SpinLabel parse_spin(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            const int whole = std::stoi(s);
            if (whole < 0) throw UsageError("spin must be nonnegative");
            return SpinLabel(2 * whole);
        }
        if (s.substr(slash + 1) != "2") throw UsageError("half-integer spins use the form k/2");
        const int num = std::stoi(s.substr(0, slash));
        if (num < 0) throw UsageError("spin must be nonnegative");
        return SpinLabel(num);
    } catch (const std::exception&) {
        throw UsageError("cannot parse spin '" + s + "' (expected e.g. 0, 1, 3/2)");
    }
}

Json parse_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw UsageError("cannot open file '" + arg.substr(1) + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed JSON input: ") + e.what());
    }
}

void emit(const Json& j, const std::string& json_out, std::ostream& out) {
    if (!json_out.empty()) {
        std::ofstream f(json_out);
        if (!f) throw UsageError("cannot write '" + json_out + "'");
        f << j.dump(2) << '\n';
    } else {
        out << j.dump(2) << '\n';
    }
}

int cmd_cg(SpinLabel j1, SpinLabel j2, bool classical, int order, const std::string& csv_path,
           const std::string& json_out, std::ostream& out) {
    auto table = cg_table(j1, j2, !classical, order);
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw UsageError("cannot write '" + csv_path + "'");
        f << to_csv(*table);
    }
    emit(to_json(*table), json_out, out);
    return 0;
}

int cmd_repr(const std::string& what, SpinLabel j, SpinLabel j1, SpinLabel j2, const std::string& gen,
             const std::string& word, bool classical, int order, const std::string& json_out, std::ostream& out) {
    const bool deformed = !classical;
    Json result;
    if (what == "generator") {
        if (gen.size() != 1) throw UsageError("--gen expects one of E, F, H");
        result = to_json(rep_generator(j, gen_from_char(gen[0]), deformed, order));
    } else if (what == "coproduct") {
        if (gen.size() != 1) throw UsageError("--gen expects one of E, F, H");
        result = to_json(rep_tensor_coproduct(gen_from_char(gen[0]), j1, j2, deformed, order));
    } else if (what == "antipode") {
        result = to_json(rep_antipode(word_from_string(word), j, deformed, order));
    } else if (what == "word") {
        result = to_json(rep_word(word_from_string(word), j, deformed, order));
    } else if (what == "rmatrix") {
        result = to_json(rmatrix_rep(j1, j2, order));
    } else if (what == "sigma") {
        result = to_json(sigma_rep(j, order));
    } else if (what == "casimir") {
        result = to_json(casimir_rep(j, order));
    } else {
        throw UsageError("unknown object '" + what +
                         "' (expected generator, coproduct, antipode, word, rmatrix, sigma, casimir)");
    }
    emit(result, json_out, out);
    return 0;
}

int cmd_twist(const std::string& what, SpinLabel j1, SpinLabel j2, SpinLabel j3, SpinLabel j1p, SpinLabel j2p,
              bool inverse, int order, const std::string& json_out, std::ostream& out) {
    Json result;
    if (what == "standard") {
        result = to_json(standard_twist_rep(j1, j2, order, nullptr, inverse).matrix);
    } else if (what == "coassociator") {
        result = to_json(coassociator_rep(j1, j2, j3, order));
    } else if (what == "so4") {
        result = to_json(twist_rep_so4({j1, j1p}, {j2, j2p}, order, inverse));
    } else if (what == "sl2c") {
        result = to_json(twist_rep_sl2c({j1, j1p}, {j2, j2p}, order, inverse));
    } else {
        throw UsageError("unknown twist '" + what + "' (expected standard, coassociator, so4, sl2c)");
    }
    emit(result, json_out, out);
    return 0;
}

int cmd_star(const std::string& space, const std::string& p_arg, const std::string& r_arg, int order,
             const std::string& json_out, std::ostream& out) {
    const Json pj = parse_json_arg(p_arg);
    const Json rj = parse_json_arg(r_arg);
    Json result;
    if (space == "plane") {
        // Monomial input refers to the commutative polynomials the star
        // product deforms, so the classical basis change applies.
        PlanePoly p = plane_from_json_any_basis(pj, false);
        PlanePoly r = plane_from_json_any_basis(rj, false);
        if (p.order != order) p.order = std::min(p.order, order);
        if (r.order != order) r.order = std::min(r.order, order);
        const PlanePoly prod = star_plane(p, r);
        result = Json{{"irreducible", to_json(prod)}, {"monomial", to_json(to_monomial(prod, false))}};
    } else if (space == "mq2" || space == "minkowski") {
        Mq2Poly p = mq2_poly_from_json(pj);
        Mq2Poly r = mq2_poly_from_json(rj);
        p.order = std::min(p.order, order);
        r.order = std::min(r.order, order);
        result = to_json(space == "mq2" ? star_euclid(p, r) : star_minkowski(p, r));
    } else {
        throw UsageError("unknown space '" + space + "'");
    }
    emit(result, json_out, out);
    return 0;
}

int cmd_relations(const std::string& space, int order, const std::string& json_out, std::ostream& out) {
    Mq2Product kind;
    if (space == "minkowski")
        kind = Mq2Product::Minkowski;
    else if (space == "mq2")
        kind = Mq2Product::EuclidDeformed;
    else
        throw UsageError("relations are reported for --space mq2 or minkowski");
    Json entries = Json::array();
    for (const auto& rel : generator_relations(kind, order))
        entries.push_back(Json{{"left", rel.left},
                               {"right", rel.right},
                               {"product", to_json(rel.product)},
                               {"commutator", to_json(rel.commutator)}});
    emit(Json{{"space", space}, {"order", order}, {"relations", std::move(entries)}}, json_out, out);
    return 0;
}

int cmd_verify(const std::string& space, const VerifyConfig& cfg, const std::string& json_out,
               std::ostream& out, std::ostream& err) {
    if (cfg.order < 2) {
        err << "error: --order " << cfg.order << " sees only the classical limit; deformation checks are vacuous\n";
        return 2;
    }
    const auto results = verify_space(space, cfg);
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool all_pass = true;
    Json entries = Json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        out << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(static_cast<int>(width) + 2) << r.name
            << " max dev " << std::scientific << std::setprecision(3) << r.max_dev << std::defaultfloat << '\n';
        if (!r.note.empty()) out << "       " << r.note << '\n';
        entries.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"maxDev", r.max_dev}, {"note", r.note}});
    }
    out << (all_pass ? "all checks passed" : "VERIFICATION FAILED") << " (" << results.size() << " checks, space "
        << space << ", order " << cfg.order << ", tol " << cfg.tol << ")\n";
    if (!json_out.empty())
        emit(Json{{"space", space},
                  {"order", cfg.order},
                  {"tol", cfg.tol},
                  {"maxSpinTwoJ", cfg.max_two_j},
                  {"seed", cfg.seed},
                  {"allPass", all_pass},
                  {"checks", std::move(entries)}},
             json_out, out);
    return all_pass ? 0 : 1;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum spaces as twisted star products: series, representations, tables, products"};
    app.require_subcommand(1);
    app.fallthrough();

    int order = 8;
    double tol = 1e-9;
    std::string json_out;
    unsigned long seed = 12345;
    app.add_option("--order", order, "working order of the h-adic series (coefficients h^0..h^{order-1})");
    app.add_option("--tol", tol, "comparison tolerance per coefficient");
    app.add_option("--json-out", json_out, "write the JSON result to a file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized property inputs");

    // cg
    auto* cg = app.add_subcommand("cg", "emit a Clebsch-Gordan table as JSON (optionally CSV)");
    std::string cg_j1 = "1/2", cg_j2 = "1/2", cg_csv;
    bool cg_classical = false;
    cg->add_option("--j1", cg_j1, "first spin");
    cg->add_option("--j2", cg_j2, "second spin");
    cg->add_flag("--classical", cg_classical, "classical table instead of the deformed one");
    cg->add_option("--csv", cg_csv, "also write the table as CSV to this path");

    // repr
    auto* repr = app.add_subcommand("repr", "emit representation matrices as JSON");
    std::string repr_what = "generator", repr_j = "1/2", repr_j1 = "1/2", repr_j2 = "1/2", repr_gen = "E",
                repr_word = "E";
    bool repr_classical = false;
    repr->add_option("--what", repr_what, "generator|coproduct|antipode|word|rmatrix|sigma|casimir");
    repr->add_option("--j", repr_j, "spin for single-spin objects");
    repr->add_option("--j1", repr_j1, "first spin for two-leg objects");
    repr->add_option("--j2", repr_j2, "second spin for two-leg objects");
    repr->add_option("--gen", repr_gen, "generator letter E, F or H");
    repr->add_option("--word", repr_word, "generator word, e.g. EFH");
    repr->add_flag("--classical", repr_classical, "use the undeformed representation");

    // twist
    auto* twist = app.add_subcommand("twist", "emit twist and coassociator matrices as JSON");
    std::string tw_what = "standard", tw_j1 = "1/2", tw_j2 = "1/2", tw_j3 = "1/2", tw_j1p = "1/2", tw_j2p = "1/2";
    bool tw_inverse = false;
    twist->add_option("--what", tw_what, "standard|coassociator|so4|sl2c");
    twist->add_option("--j1", tw_j1, "first spin");
    twist->add_option("--j2", tw_j2, "second spin");
    twist->add_option("--j3", tw_j3, "third spin (coassociator)");
    twist->add_option("--j1p", tw_j1p, "primed first spin (so4/sl2c pairs)");
    twist->add_option("--j2p", tw_j2p, "primed second spin (so4/sl2c pairs)");
    twist->add_flag("--inverse", tw_inverse, "emit the inverse twist");

    // star
    auto* star = app.add_subcommand("star", "star-multiply two polynomials given as JSON");
    std::string star_space = "plane", star_p, star_r;
    star->add_option("--space", star_space, "plane|mq2|minkowski");
    star->add_option("p", star_p, "first factor (JSON text or @file)")->required();
    star->add_option("r", star_r, "second factor (JSON text or @file)")->required();

    // relations
    auto* relations = app.add_subcommand("relations", "emit computed generator relations as JSON");
    std::string rel_space = "minkowski";
    relations->add_option("--space", rel_space, "mq2|minkowski");

    // verify
    auto* verify = app.add_subcommand("verify", "run the property suite and print a pass/fail table");
    std::string ver_space = "plane", ver_max_spin = "3";
    int ver_samples = 20;
    verify->add_option("--space", ver_space, "plane|mq2|minkowski");
    verify->add_option("--max-spin", ver_max_spin, "spin bound for the table sweeps");
    verify->add_option("--samples", ver_samples, "random inputs per randomized check");

    for (auto* sc : app.get_subcommands(std::function<bool(CLI::App*)>(nullptr))) sc->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("qspace");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help goes to stdout with exit 0
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (cg->parsed())
            return cmd_cg(parse_spin(cg_j1), parse_spin(cg_j2), cg_classical, order, cg_csv, json_out, out);
        if (repr->parsed())
            return cmd_repr(repr_what, parse_spin(repr_j), parse_spin(repr_j1), parse_spin(repr_j2), repr_gen,
                            repr_word, repr_classical, order, json_out, out);
        if (twist->parsed())
            return cmd_twist(tw_what, parse_spin(tw_j1), parse_spin(tw_j2), parse_spin(tw_j3), parse_spin(tw_j1p),
                             parse_spin(tw_j2p), tw_inverse, order, json_out, out);
        if (star->parsed()) return cmd_star(star_space, star_p, star_r, order, json_out, out);
        if (relations->parsed()) return cmd_relations(rel_space, order, json_out, out);
        if (verify->parsed()) {
            VerifyConfig cfg;
            cfg.order = order;
            cfg.tol = tol;
            cfg.max_two_j = parse_spin(ver_max_spin).two_j;
            cfg.seed = seed;
            cfg.random_samples = ver_samples;
            return cmd_verify(ver_space, cfg, json_out, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

} // namespace qspace::cli
