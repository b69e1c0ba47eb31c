#include "skewrec/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "skewrec/asymptotics.hpp"
#include "skewrec/io.hpp"
#include "skewrec/kostka.hpp"
#include "skewrec/recurrence.hpp"
#include "skewrec/schur.hpp"

namespace skewrec::cli {

namespace {

const std::map<std::string, Command> kCommands = {
    {"tableaux", Command::tableaux},     {"schur", Command::schur},
    {"insert", Command::insert},         {"char-poly", Command::char_poly},
    {"verify", Command::verify},         {"minimal", Command::minimal},
    {"kostka", Command::kostka},         {"m-basis", Command::m_basis},
    {"conjecture", Command::conjecture}, {"polynomiality", Command::polynomiality},
    {"roots", Command::roots},
};

Format default_format(Command c)
{
    switch (c) {
    case Command::verify:
    case Command::minimal:
    case Command::m_basis:
    case Command::conjecture:
        return Format::json;
    case Command::roots:
        return Format::csv;
    default:
        return Format::pretty;
    }
}

std::string format_name(Format f)
{
    switch (f) {
    case Format::json:
        return "json";
    case Format::csv:
        return "csv";
    default:
        return "pretty";
    }
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Partition partition_flag(const std::string& text, const char* flag)
{
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

SkewShape shape_flags(const RunConfig& c)
{
    Partition outer = partition_flag(c.outer, "--outer");
    Partition inner = partition_flag(c.inner, "--inner");
    if (!contains(outer, inner))
        throw UsageError("--inner: " + to_string(inner) + " is not contained in --outer " + to_string(outer));
    return SkewShape(outer, inner);
}

Tableau tableau_flag(const std::string& text, const char* flag)
{
    try {
        return tableau_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

void require_n(const RunConfig& c)
{
    if (c.n < 1)
        throw UsageError("--n: the number of variables must be at least 1");
}

struct Outcome {
    Json config;
    Json result = Json::object();
    std::string pretty;
    std::string csv;
    int code = ok;
};

struct FamilyFlags {
    Partition kappa, lambda, mu, nu;
};

FamilyFlags family_flags(const RunConfig& c)
{
    FamilyFlags f{partition_flag(c.kappa, "--kappa"), partition_flag(c.lambda, "--lambda"),
                  partition_flag(c.mu, "--mu"), partition_flag(c.nu, "--nu")};
    if (!contains(f.mu, f.nu))
        throw UsageError("--nu: " + to_string(f.nu) + " is not contained in --mu " + to_string(f.mu));
    return f;
}

void echo_family(Json& config, const FamilyFlags& f, int n)
{
    config["kappa"] = to_string(f.kappa);
    config["lambda"] = to_string(f.lambda);
    config["mu"] = to_string(f.mu);
    config["nu"] = to_string(f.nu);
    config["n"] = n;
}

std::string strings_joined(const std::vector<std::string>& xs, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + xs[i];
    return out;
}

std::string lines_of(const Json& j)
{
    std::string out;
    for (const auto& [key, value] : j.items())
        out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    return out;
}

// ------------------------------------------------------------- commands

void do_tableaux(const RunConfig& c, Outcome& o)
{
    require_n(c);
    SkewShape shape = shape_flags(c);
    o.config["outer"] = to_string(shape.outer());
    o.config["inner"] = to_string(shape.inner());
    o.config["n"] = c.n;
    auto all = enumerate(shape, c.n);
    Json list = Json::array();
    std::vector<std::string> diagrams;
    for (const auto& t : all) {
        list.push_back(to_json(t));
        diagrams.push_back(render(t));
    }
    o.result["count"] = all.size();
    o.result["tableaux"] = list;
    o.pretty = "count: " + std::to_string(all.size()) + "\n";
    for (const auto& d : diagrams)
        o.pretty += "\n" + d;
}

void do_schur(const RunConfig& c, Outcome& o)
{
    require_n(c);
    SkewShape shape = shape_flags(c);
    o.config["outer"] = to_string(shape.outer());
    o.config["inner"] = to_string(shape.inner());
    o.config["n"] = c.n;
    MultiPoly p = skew_schur(shape, c.n);
    o.result["text"] = to_string(p);
    o.result["polynomial"] = to_json(p);
    o.pretty = to_string(p) + "\n";
}

void do_insert(const RunConfig& c, Outcome& o)
{
    Tableau a = tableau_flag(c.left, "--left");
    Tableau b = tableau_flag(c.right, "--right");
    o.config["left"] = to_json(a);
    o.config["right"] = to_json(b);
    if (a.alphabet() != b.alphabet())
        throw UsageError("--right: alphabet " + std::to_string(b.alphabet()) + " differs from --left alphabet " +
                         std::to_string(a.alphabet()));
    Tableau t = insert(a, b);
    o.result["tableau"] = to_json(t);
    o.result["weight"] = to_json(weight(t));
    o.pretty = render(t) + "weight: " + to_string(weight(t)) + "\n";
}

void do_char_poly(const RunConfig& c, Outcome& o)
{
    require_n(c);
    Partition mu = partition_flag(c.mu, "--mu");
    Partition nu = partition_flag(c.nu, "--nu");
    if (!contains(mu, nu))
        throw UsageError("--nu: " + to_string(nu) + " is not contained in --mu " + to_string(mu));
    o.config["mu"] = to_string(mu);
    o.config["nu"] = to_string(nu);
    o.config["n"] = c.n;
    CharPoly chi = char_poly(mu, nu, c.n);
    o.result["degree"] = chi.degree();
    o.result["text"] = to_string(chi);
    o.result["coefficients"] = to_json(chi);
    o.pretty = "degree: " + std::to_string(chi.degree()) + "\nchi(t) = " + to_string(chi) + "\n";
}

void do_verify(const RunConfig& c, Outcome& o)
{
    require_n(c);
    FamilyFlags f = family_flags(c);
    SchurSequence seq = build_sequence(f.kappa, f.lambda, f.mu, f.nu, c.n);
    CharPoly chi = char_poly(f.mu, f.nu, c.n);
    const int from = c.r.value_or(seq.start());
    const int count = c.count.value_or(chi.degree() + 3);
    if (from < seq.shift())
        throw UsageError("--r: the family has no valid shape before k = " + std::to_string(seq.shift()));
    if (count < 1)
        throw UsageError("--count: must be positive");
    echo_family(o.config, f, c.n);
    o.config["r"] = from;
    o.config["count"] = count;

    auto res = verify_recurrence(seq, chi, from, count);
    o.result["family"] = to_json(seq.family());
    o.result["r"] = from;
    o.result["degree"] = chi.degree();
    o.result["verified_upto"] = res.ok ? from + count - 1 : *res.failing_index - 1;
    o.result["recurrence"] = res.ok ? "holds" : "fails";
    o.pretty = "r: " + std::to_string(from) + "\ndegree: " + std::to_string(chi.degree()) + "\nchecked: k = " +
               std::to_string(from) + ".." + std::to_string(from + count - 1) + "\n";
    if (res.ok) {
        o.pretty += "recurrence: holds\n";
    } else {
        o.result["certificate"] = Json{{"k", *res.failing_index}, {"residual", to_json(res.residual)}};
        o.pretty += "recurrence: fails at k = " + std::to_string(*res.failing_index) +
                    "\nresidual: " + to_string(res.residual) + "\n";
        o.code = refuted;
    }
}

Json monomial_list(const std::vector<Monomial>& roots, int n)
{
    Json list = Json::array();
    for (const auto& m : roots) {
        std::vector<int> exps(n);
        for (int i = 0; i < n; ++i)
            exps[i] = m[i];
        list.push_back(exps);
    }
    return list;
}

void do_minimal(const RunConfig& c, Outcome& o)
{
    require_n(c);
    FamilyFlags f = family_flags(c);
    echo_family(o.config, f, c.n);
    o.config["seed"] = c.seed;
    SchurSequence seq = build_sequence(f.kappa, f.lambda, f.mu, f.nu, c.n);
    auto roots = tableau_roots(f.mu, f.nu, c.n);
    auto rep = minimal_char_poly(seq, roots, c.seed);

    o.result["family"] = to_json(seq.family());
    o.result["r"] = seq.start();
    o.result["degree"] = static_cast<int>(roots.size());
    o.result["minimal_degree"] = rep.poly.degree();
    o.result["minimal_roots"] = monomial_list(rep.roots, c.n);
    o.result["polynomial"] = to_string(rep.poly);
    o.result["exact_verified"] = rep.exact_verified;
    o.result["certification_attempts"] = rep.certification_attempts;
    o.result["scalar_degrees"] = rep.scalar_degrees;
    o.result["scalar_agrees"] = rep.scalar_agrees;
    o.result["permutation_invariant"] = rep.permutation_invariant;
    o.result["seed"] = rep.seed;
    o.pretty = lines_of(o.result);
    if (!rep.exact_verified)
        o.code = refuted;
}

void do_kostka(const RunConfig& c, Outcome& o)
{
    SkewShape shape = shape_flags(c);
    IntVector w;
    try {
        w = parse_int_vector(c.weight);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--weight: ") + e.what());
    }
    if (w.size() == 0)
        throw UsageError("--weight: needs at least one entry");
    o.config["outer"] = to_string(shape.outer());
    o.config["inner"] = to_string(shape.inner());
    o.config["weight"] = to_string(w);
    Integer k = kostka(shape, w);
    o.result["kostka"] = k.str();
    o.pretty = k.str() + "\n";
}

void do_m_basis(const RunConfig& c, Outcome& o)
{
    require_n(c);
    SkewShape shape = shape_flags(c);
    o.config["outer"] = to_string(shape.outer());
    o.config["inner"] = to_string(shape.inner());
    o.config["n"] = c.n;
    Json coeffs = Json::object();
    for (const auto& [p, k] : schur_in_m_basis(shape, c.n)) {
        coeffs[to_string(p)] = k.str();
        o.pretty += to_string(p) + ": " + k.str() + "\n";
    }
    o.result["m_basis"] = coeffs;
}

void do_conjecture(const RunConfig& c, Outcome& o)
{
    require_n(c);
    FamilyFlags f = family_flags(c);
    const int count = c.count.value_or(static_cast<int>(count_tableaux(SkewShape(f.mu, f.nu), c.n)) + 3);
    if (count < 1)
        throw UsageError("--count: must be positive");
    echo_family(o.config, f, c.n);
    o.config["count"] = count;
    o.config["seed"] = c.seed;
    auto rep = conjecture_check(f.kappa, f.lambda, f.mu, f.nu, c.n, count, c.seed);
    o.result = to_json(rep);
    o.pretty = lines_of(o.result);
    if (rep.verdict == Verdict::refuted)
        o.code = refuted;
}

void do_polynomiality(const RunConfig& c, Outcome& o)
{
    require_n(c);
    Partition mu = partition_flag(c.mu, "--mu");
    Partition nu = partition_flag(c.nu, "--nu");
    if (!contains(mu, nu))
        throw UsageError("--nu: " + to_string(nu) + " is not contained in --mu " + to_string(mu));
    const int kmax = c.kmax.value_or(12);
    if (kmax < 1)
        throw UsageError("--kmax: must be positive");
    o.config["mu"] = to_string(mu);
    o.config["nu"] = to_string(nu);
    o.config["n"] = c.n;
    o.config["kmax"] = kmax;
    auto rep = polynomiality_check(mu, nu, c.n, kmax);

    std::vector<std::string> counts, coeffs;
    for (const auto& v : rep.counts)
        counts.push_back(v.str());
    for (const auto& q : rep.polynomial)
        coeffs.push_back(to_string(q));
    Json differences = Json::array();
    for (const auto& row : rep.differences) {
        Json r = Json::array();
        for (const auto& v : row)
            r.push_back(v.str());
        differences.push_back(r);
    }
    o.result["counts"] = counts;
    o.result["differences"] = differences;
    o.result["degree"] = rep.degree ? Json(*rep.degree) : Json(nullptr);
    o.result["polynomial"] = coeffs;
    o.result["conclusive"] = rep.conclusive;
    o.pretty = "counts (k = 0.." + std::to_string(kmax) + "): " + strings_joined(counts, " ") + "\n";
    o.pretty += "degree: " + (rep.degree ? std::to_string(*rep.degree) : std::string("undetermined")) + "\n";
    o.pretty += "coefficients (ascending in k): " + strings_joined(coeffs, ", ") + "\n";
    o.pretty += std::string("conclusive: ") + (rep.conclusive ? "yes" : "no") + "\n";
}

void do_roots(const RunConfig& c, Outcome& o)
{
    require_n(c);
    if (c.n < 2)
        throw UsageError("--n: roots needs at least two variables");
    FamilyFlags f = family_flags(c);
    if (f.mu == f.nu)
        throw UsageError("--nu: must differ from --mu");
    if (!(c.xi_radius > 0.0))
        throw UsageError("--xi-radius: must be positive");
    std::vector<double> angles = c.xi_angles;
    if (angles.empty())
        angles.assign(c.n - 1, 0.0);
    if (static_cast<int>(angles.size()) != c.n - 1)
        throw UsageError("--xi-angles: expected " + std::to_string(c.n - 1) + " values, got " +
                         std::to_string(angles.size()));
    const int kmax = c.kmax.value_or(10);
    echo_family(o.config, f, c.n);
    o.config["kmax"] = kmax;
    o.config["xi_radius"] = c.xi_radius;
    o.config["xi_angles"] = angles;

    std::vector<Complex> xi;
    for (double a : angles)
        xi.push_back(a == 0.0 ? Complex(c.xi_radius, 0.0) : std::polar(c.xi_radius, a));
    SchurSequence seq = build_sequence(f.kappa, f.lambda, f.mu, f.nu, c.n);
    auto clouds = limit_experiment(seq, xi, kmax);

    Json list = Json::array();
    for (const auto& cloud : clouds) {
        Json roots = Json::array();
        for (const auto& z : cloud.roots)
            roots.push_back({z.real() + 0.0, z.imag() + 0.0});
        list.push_back(Json{{"k", cloud.k},
                            {"degree", cloud.roots.size()},
                            {"deviation", cloud.deviation},
                            {"max_residual", cloud.max_residual},
                            {"converged", cloud.converged},
                            {"roots", roots}});
        o.pretty += "k=" + std::to_string(cloud.k) + " degree=" + std::to_string(cloud.roots.size()) +
                    " deviation=" + fmt(cloud.deviation) + " max_residual=" + fmt(cloud.max_residual) +
                    (cloud.converged ? "" : " NOT-CONVERGED") + "\n";
    }
    o.result["clouds"] = list;
    if (!clouds.empty()) {
        const auto& first = clouds.front();
        const auto& last = clouds.back();
        const bool decreasing = last.deviation < first.deviation;
        o.result["trend"] = Json{{"first_k", first.k},
                                 {"first_deviation", first.deviation},
                                 {"last_k", last.k},
                                 {"last_deviation", last.deviation},
                                 {"decreasing", decreasing}};
        std::string trend = "trend: deviation(k=" + std::to_string(first.k) + ")=" + fmt(first.deviation) +
                            " deviation(k=" + std::to_string(last.k) + ")=" + fmt(last.deviation) +
                            " decreasing=" + (decreasing ? "yes" : "no") + "\n";
        o.pretty += trend;
        o.csv = "# " + trend;
    }
    std::ostringstream csv;
    write_csv(csv, clouds);
    o.csv += csv.str();
}

}  // namespace

std::string command_name(Command c)
{
    for (const auto& [name, cmd] : kCommands)
        if (cmd == c)
            return name;
    return "?";
}

RunConfig parse_command_line(int argc, const char* const* argv)
{
    RunConfig config;
    CLI::App app{"Stretched skew Schur polynomials: tableaux, recurrences and root asymptotics", "skewrec"};
    app.require_subcommand(1);

    int r = 0, count = 0, kmax = 0;
    std::string format;
    std::map<Command, CLI::App*> subs;
    auto sub = [&](Command c, const std::string& description) {
        auto* s = app.add_subcommand(command_name(c), description);
        subs[c] = s;
        return s;
    };
    auto shape = [&](CLI::App* s) {
        s->add_option("--outer", config.outer, "outer partition, e.g. [5,4,3,1]")->required();
        s->add_option("--inner", config.inner, "inner partition")->capture_default_str();
    };
    auto family = [&](CLI::App* s) {
        s->add_option("--kappa", config.kappa, "base outer partition")->capture_default_str();
        s->add_option("--lambda", config.lambda, "base inner partition")->capture_default_str();
        s->add_option("--mu", config.mu, "outer stretching direction")->required();
        s->add_option("--nu", config.nu, "inner stretching direction")->capture_default_str();
    };
    auto n_opt = [&](CLI::App* s) { s->add_option("--n", config.n, "number of variables")->required(); };
    auto common = [&](CLI::App* s) {
        s->add_option("--output", config.output, "write to this file instead of stdout");
        s->add_option("--format", format, "json, csv or pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
    };

    auto* s = sub(Command::tableaux, "list the semistandard tableaux of a skew shape");
    shape(s); n_opt(s); common(s);
    s = sub(Command::schur, "skew Schur polynomial of a shape");
    shape(s); n_opt(s); common(s);
    s = sub(Command::insert, "insert one tableau into another (JSON tableaux)");
    s->add_option("--left", config.left, "tableau JSON")->required();
    s->add_option("--right", config.right, "tableau JSON")->required();
    common(s);
    s = sub(Command::char_poly, "characteristic polynomial of mu/nu");
    s->add_option("--mu", config.mu, "outer stretching direction")->required();
    s->add_option("--nu", config.nu, "inner stretching direction")->capture_default_str();
    n_opt(s); common(s);
    s = sub(Command::verify, "check the recurrence exactly over consecutive indices");
    family(s); n_opt(s); common(s);
    s->add_option("--r", r, "first index (default: stabilization index)");
    s->add_option("--count", count, "number of indices (default: degree + 3)");
    s = sub(Command::minimal, "minimal characteristic polynomial");
    family(s); n_opt(s); common(s);
    s->add_option("--seed", config.seed, "seed for the evaluation certificates")->capture_default_str();
    s = sub(Command::kostka, "Kostka number of a skew shape and weight");
    shape(s); common(s);
    s->add_option("--weight", config.weight, "weight vector, e.g. [2,1,1]")->required();
    s = sub(Command::m_basis, "expansion in monomial symmetric polynomials");
    shape(s); n_opt(s); common(s);
    s = sub(Command::conjecture, "compare the minimal polynomial with the dominance-filtered weights");
    family(s); n_opt(s); common(s);
    s->add_option("--count", count, "indices checked for the conjectured product (default: degree + 3)");
    s->add_option("--seed", config.seed, "seed for the evaluation certificates")->capture_default_str();
    s = sub(Command::polynomiality, "number of tableaux of k mu/k nu as a polynomial in k");
    s->add_option("--mu", config.mu, "outer stretching direction")->required();
    s->add_option("--nu", config.nu, "inner stretching direction")->capture_default_str();
    n_opt(s); common(s);
    s->add_option("--kmax", kmax, "largest k (default 12)");
    s = sub(Command::roots, "roots of the family specialized at x2..xn on a circle");
    family(s); n_opt(s); common(s);
    s->add_option("--kmax", kmax, "largest k (default 10)");
    s->add_option("--xi-radius", config.xi_radius, "modulus of the fixed values")->capture_default_str();
    s->add_option("--xi-angles", config.xi_angles, "arguments of x2..xn in radians (default all 0)")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream text;
        app.exit(e, text, text);
        throw HelpRequested{text.str()};
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream text;
        app.exit(e, text, text);
        throw HelpRequested{text.str()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (const auto& [c, sc] : subs) {
        if (!sc->parsed())
            continue;
        config.command = c;
        if (sc->get_option_no_throw("--r") && sc->count("--r"))
            config.r = r;
        if (sc->get_option_no_throw("--count") && sc->count("--count"))
            config.count = count;
        if (sc->get_option_no_throw("--kmax") && sc->count("--kmax"))
            config.kmax = kmax;
        if (!format.empty())
            config.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::pretty;
    }
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    Outcome o;
    const Format format = config.format.value_or(default_format(config.command));
    try {
        if (format == Format::csv && config.command != Command::roots)
            throw UsageError("--format: csv is only available for roots");
        o.config["command"] = command_name(config.command);
        switch (config.command) {
        case Command::tableaux: do_tableaux(config, o); break;
        case Command::schur: do_schur(config, o); break;
        case Command::insert: do_insert(config, o); break;
        case Command::char_poly: do_char_poly(config, o); break;
        case Command::verify: do_verify(config, o); break;
        case Command::minimal: do_minimal(config, o); break;
        case Command::kostka: do_kostka(config, o); break;
        case Command::m_basis: do_m_basis(config, o); break;
        case Command::conjecture: do_conjecture(config, o); break;
        case Command::polynomiality: do_polynomiality(config, o); break;
        case Command::roots: do_roots(config, o); break;
        }
        o.config["format"] = format_name(format);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    std::string text;
    if (format == Format::json) {
        Json doc{{"config", o.config}};
        for (const auto& [key, value] : o.result.items())
            doc[key] = value;
        text = doc.dump(2) + "\n";
    } else {
        std::string header;
        for (const auto& [key, value] : o.config.items())
            header += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        text = header + (format == Format::csv ? o.csv : o.pretty);
    }

    if (config.output.empty()) {
        out << text;
    } else {
        std::ofstream file(config.output, std::ios::binary);
        if (!file) {
            err << "usage error: --output: cannot open " << config.output << "\n";
            return usage;
        }
        file << text;
    }
    return o.code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    try {
        config = parse_command_line(argc, argv);
    } catch (const HelpRequested& help) {
        out << help.text;
        return ok;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    }
    return run(config, out, err);
}

}  // namespace skewrec::cli
