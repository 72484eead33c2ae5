// Command-line front end: computes escaliers, minimal monomial bases and
// factorized lex Groebner bases of finite point sets, verifies saved results,
// and generates random instances. All output is byte-deterministic for a
// given configuration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lexideal/json_io.hpp"
#include "lexideal/lexideal.hpp"

namespace {

using namespace lexideal;

struct Options {
    std::string field = "q";
    bool field_explicit = false;
    std::string format = "text";
    std::string input;
    std::string output;

    bool factored = false;
    bool expanded = false;
    bool reduced = false;
    bool certificate = false;
    bool no_validate = false;
    bool parallel = false;

    std::size_t gen_n = 2;
    std::size_t gen_points = 5;
    long long coord_range = 6;
    std::uint64_t seed = 0;

    std::string cmd;
};

std::string read_input(const Options& o) {
    if (o.input.empty() || o.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(o.input);
    if (!f)
        throw ValidationError("cannot open input file '" + o.input + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const Options& o, const std::string& text) {
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f)
        throw ValidationError("cannot open output file '" + o.output + "'");
    f << text;
}

std::uint64_t parse_field_modulus(const std::string& field) {
    // "" for the rationals, otherwise the prime modulus
    if (field == "q" || field == "Q")
        return 0;
    if (field.rfind("fp:", 0) == 0) {
        const std::string num = field.substr(3);
        if (num.empty())
            throw ValidationError("missing modulus in '" + field + "'");
        std::uint64_t p = 0;
        for (char c : num) {
            if (c < '0' || c > '9')
                throw ValidationError("invalid modulus in '" + field + "'");
            if (p > (UINT64_MAX - 9) / 10)
                throw ValidationError("modulus too large in '" + field + "'");
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        Fp::check_modulus(p);
        if (!is_prime_u64(p))
            throw ValidationError("modulus " + num + " is not prime");
        return p;
    }
    throw ValidationError("unknown field '" + field + "' (use q or fp:<prime>)");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

template <class K, class ParseFn>
int run_gen(const Options& o, ParseFn&& parse) {
    if (o.gen_n < 1 || o.gen_n > 16)
        throw ValidationError("--n must be in 1..16");
    if (o.gen_points < 1)
        throw ValidationError("--points must be positive");
    if (o.coord_range < 0)
        throw ValidationError("--coord-range must be non-negative");

    // upper bound on distinct points in the chosen field
    double capacity = 1.0;
    for (std::size_t i = 0; i < o.gen_n; ++i)
        capacity *= static_cast<double>(o.coord_range) + 1.0;
    if (capacity < static_cast<double>(o.gen_points))
        throw ValidationError("cannot draw " + std::to_string(o.gen_points) +
                              " distinct points from a coordinate range of " +
                              std::to_string(o.coord_range + 1));

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long long> dist(0, o.coord_range);
    PointList<K> pts;
    std::vector<std::vector<long long>> ints;
    std::size_t attempts = 0;
    while (pts.size() < o.gen_points) {
        if (++attempts > 1000 * o.gen_points + 1000)
            throw ValidationError(
                "could not find enough distinct points in the chosen field");
        std::vector<long long> raw(o.gen_n);
        Point<K> p(o.gen_n);
        for (std::size_t i = 0; i < o.gen_n; ++i) {
            raw[i] = dist(rng);
            p[i] = parse(std::to_string(raw[i]));
        }
        bool dup = false;
        for (const auto& q : pts)
            if (q == p) {
                dup = true;
                break;
            }
        if (dup)
            continue;
        pts.push_back(std::move(p));
        ints.push_back(std::move(raw));
    }

    if (o.format == "json") {
        json doc;
        doc["field"] = o.field;
        doc["n"] = o.gen_n;
        doc["points"] = points_to_json(pts);
        write_output(o, dump(doc));
    } else {
        std::string out;
        for (const auto& row : ints) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i)
                    out += ",";
                out += std::to_string(row[i]);
            }
            out += "\n";
        }
        write_output(o, out);
    }
    return 0;
}

template <class K, class ParseFn>
int run_verify(const Options& o, ParseFn&& parse) {
    json doc;
    try {
        doc = json::parse(read_input(o));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.contains("field") && o.field_explicit &&
        doc["field"].get<std::string>() != o.field)
        throw ValidationError("document field '" +
                              doc["field"].get<std::string>() +
                              "' does not match --field " + o.field);
    FactoredGroebnerBasis<K> fgb = basis_from_document<K>(doc, parse);
    GBCertificate<K> cert = gb_certificate(fgb, /*check_spolys=*/false);
    if (o.format == "json")
        write_output(o, dump(certificate_to_json(cert)));
    else
        write_output(o, render_certificate_text(cert));
    return cert.valid() ? 0 : 1;
}

template <class K, class ParseFn>
int run_points_command(const Options& o, ParseFn&& parse) {
    const RawPoints raw = parse_points(read_input(o));
    const PointList<K> pts = materialize_points<K>(raw, parse);

    if (o.cmd == "escalier") {
        Escalier esc = cemu(pts);
        if (o.format == "json") {
            json doc;
            doc["field"] = o.field;
            doc["n"] = raw.nvars;
            doc["points"] = points_to_json(pts);
            doc["escalier"] = escalier_to_json(esc);
            write_output(o, dump(doc));
        } else {
            write_output(o, render_escalier_text(pts, esc));
        }
        return 0;
    }

    if (o.cmd == "minbasis") {
        Escalier esc = cemu(pts);
        std::vector<Term> gens = minimal_basis(esc);
        if (o.format == "json") {
            json doc;
            doc["field"] = o.field;
            doc["n"] = raw.nvars;
            doc["points"] = points_to_json(pts);
            doc["escalier"] = escalier_to_json(esc);
            doc["minimal_basis"] = terms_to_json(gens);
            write_output(o, dump(doc));
        } else {
            std::string out;
            for (const Term& t : gens)
                out += render_term(t) + "\n";
            write_output(o, out);
        }
        return 0;
    }

    // aoe
    FactorOptions fo;
    fo.validate_inputs = !o.no_validate;
    fo.parallel = o.parallel;
    FactoredGroebnerBasis<K> fgb = axis_of_evil(pts, fo);

    const bool want_factored = o.factored || (!o.expanded && !o.reduced && !o.certificate);
    std::vector<Polynomial<K>> exp_polys;
    if (o.expanded || o.reduced)
        exp_polys = expand(fgb);

    if (o.format == "json") {
        json doc = basis_document(o.field, fgb);
        if (o.expanded) {
            json a = json::array();
            for (const auto& f : exp_polys)
                a.push_back(poly_to_json(f));
            doc["expanded"] = std::move(a);
        }
        if (o.reduced) {
            json a = json::array();
            for (const auto& f : reduce_basis(exp_polys))
                a.push_back(poly_to_json(f));
            doc["reduced"] = std::move(a);
        }
        if (o.certificate)
            doc["certificate"] = certificate_to_json(gb_certificate(fgb));
        write_output(o, dump(doc));
    } else {
        std::string out;
        if (want_factored)
            out += render_factored_text(fgb);
        if (o.expanded) {
            out += "expanded:\n";
            for (const auto& f : exp_polys)
                out += render_poly(f) + "\n";
        }
        if (o.reduced) {
            out += "reduced:\n";
            for (const auto& f : reduce_basis(exp_polys))
                out += render_poly(f) + "\n";
        }
        if (o.certificate) {
            out += "certificate:\n";
            out += render_certificate_text(gb_certificate(fgb));
        }
        write_output(o, out);
    }
    return 0;
}

template <class K, class ParseFn>
int run(const Options& o, ParseFn&& parse) {
    if (o.cmd == "gen")
        return run_gen<K>(o, parse);
    if (o.cmd == "verify")
        return run_verify<K>(o, parse);
    return run_points_command<K>(o, parse);
}

int dispatch(Options& o) {
    const std::uint64_t p = parse_field_modulus(o.field);
    if (p == 0) {
        o.field = "q"; // canonical tag for output documents
        return run<Rational>(o, [](const std::string& s) { return Rational::parse(s); });
    }
    o.field = "fp:" + std::to_string(p);
    return run<Fp>(o, [p](const std::string& s) { return Fp::parse(s, p); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lexicographic Groebner structure of finite point sets"};
    app.require_subcommand(1);

    Options o;
    auto* field_opt =
        app.add_option("--field", o.field,
                       "coefficient field: q (rationals) or fp:<prime>")
            ->envname("LEXIDEAL_FIELD");
    app.add_option("--format", o.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("-i,--input", o.input, "input file (default: stdin)");
    app.add_option("-o,--output", o.output, "output file (default: stdout)");

    auto* esc = app.add_subcommand(
        "escalier", "match each point with its escalier monomial");
    auto* minb = app.add_subcommand(
        "minbasis", "minimal generators of the complementary monomial ideal");
    auto* aoe = app.add_subcommand(
        "aoe", "factorized minimal lex Groebner basis of the vanishing ideal");
    aoe->add_flag("--factored", o.factored, "print the factored form (default)");
    aoe->add_flag("--expanded", o.expanded, "also expand each product");
    aoe->add_flag("--reduced", o.reduced, "also print the reduced basis");
    aoe->add_flag("--certificate", o.certificate, "attach a verification certificate");
    aoe->add_flag("--no-validate", o.no_validate,
                  "skip revalidation of intermediate inputs");
    aoe->add_flag("--parallel", o.parallel, "factor basis elements concurrently");
    auto* ver = app.add_subcommand(
        "verify", "recheck a saved factored-basis document (exit 1 if invalid)");
    auto* gen = app.add_subcommand("gen", "generate random distinct points");
    gen->add_option("--n", o.gen_n, "number of variables")->required();
    gen->add_option("--points", o.gen_points, "number of points")->required();
    gen->add_option("--coord-range", o.coord_range,
                    "coordinates are drawn from 0..R (default 6)");
    gen->add_option("--seed", o.seed, "random seed (default 0)");

    for (CLI::App* sub : {esc, minb, aoe, ver, gen})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    o.cmd = app.get_subcommands().front()->get_name();
    o.field_explicit = field_opt->count() > 0;

    try {
        return dispatch(o);
    } catch (const lexideal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
