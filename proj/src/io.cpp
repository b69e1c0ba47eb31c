#include "skewrec/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewrec {

namespace {

Json parts_json(const Partition& p)
{
    return Json(p.parts());
}

Partition parts_from(const Json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_array())
        throw std::invalid_argument(std::string("tableau JSON needs an array \"") + key + "\"");
    return Partition(j[key].get<std::vector<int>>());
}

}  // namespace

Json to_json(const Tableau& t)
{
    Json j;
    j["outer"] = parts_json(t.shape().outer());
    j["inner"] = parts_json(t.shape().inner());
    j["n"] = t.alphabet();
    j["rows"] = t.rows();
    return j;
}

Tableau tableau_from_json(const Json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("tableau JSON must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("tableau JSON needs an integer \"n\"");
    if (!j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("tableau JSON needs an array \"rows\"");
    Partition outer = parts_from(j, "outer");
    Partition inner = j.contains("inner") ? parts_from(j, "inner") : Partition{};
    Tableau t(SkewShape(outer, inner), j["n"].get<int>(), j["rows"].get<std::vector<std::vector<int>>>());
    if (!is_valid_ssyt(t))
        throw std::invalid_argument("tableau JSON is not a semistandard filling");
    return t;
}

Json to_json(const MultiPoly& p)
{
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        std::vector<int> exps(p.nvars());
        for (std::size_t i = 0; i < p.nvars(); ++i)
            exps[i] = t.mono[i];
        terms.push_back(Json{{"exp", exps}, {"coef", t.coeff.str()}});
    }
    return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j)
{
    const auto nvars = j.at("nvars").get<std::size_t>();
    MultiPoly p(nvars);
    for (const auto& term : j.at("terms")) {
        auto exps = term.at("exp").get<std::vector<int>>();
        if (exps.size() != nvars)
            throw std::invalid_argument("polynomial JSON term has " + std::to_string(exps.size()) +
                                        " exponents, expected " + std::to_string(nvars));
        p += MultiPoly::monomial(IntVector(exps), Integer(term.at("coef").get<std::string>()));
    }
    return p;
}

Json to_json(const IntVector& v)
{
    return Json(v.entries());
}

Json to_json(const Family& f)
{
    return Json{{"kappa", to_string(f.kappa)},
                {"lambda", to_string(f.lambda)},
                {"mu", to_string(f.mu)},
                {"nu", to_string(f.nu)},
                {"n", f.n}};
}

Json to_json(const CharPoly& chi)
{
    Json coeffs = Json::array();
    for (const auto& c : chi.coeffs())
        coeffs.push_back(to_json(c));
    return coeffs;
}

Json to_json(const ConjectureReport& report)
{
    Json w = Json::array();
    for (const auto& v : report.W)
        w.push_back(to_json(v));
    Json j{{"family", to_json(report.family)},
           {"r", report.start},
           {"degree", report.degree},
           {"verified_upto", report.verified_upto},
           {"minimal_degree", report.minimal_degree},
           {"W", w},
           {"conjecture", verdict_text(report)},
           {"seed", report.seed}};
    j["product_annihilates"] = report.product_annihilates;
    j["multiset_matches"] = report.multiset_matches;
    if (!report.reason.empty())
        j["reason"] = report.reason;
    if (report.refuted_at) {
        j["certificate"] = Json{{"k", *report.refuted_at}, {"residual", to_json(report.residual)}};
    }
    Json minimal_roots = Json::array();
    for (const auto& m : report.minimal.roots) {
        std::vector<int> exps(report.family.n);
        for (int i = 0; i < report.family.n; ++i)
            exps[i] = m[i];
        minimal_roots.push_back(exps);
    }
    j["minimal_roots"] = minimal_roots;
    j["scalar_degrees"] = report.minimal.scalar_degrees;
    return j;
}

std::string render(const Tableau& t)
{
    const auto& shape = t.shape();
    if (shape.rows() == 0)
        return "∅\n";
    std::size_t width = 1;
    for (const auto& row : t.rows())
        for (int e : row)
            width = std::max(width, std::to_string(e).size());
    std::string out;
    for (std::size_t i = 0; i < shape.rows(); ++i) {
        for (int col = 1; col <= shape.outer()[i]; ++col) {
            if (col > 1)
                out += ' ';
            if (col <= shape.inner()[i]) {
                out.append(width - 1, ' ');
                out += "■";
            } else {
                auto text = std::to_string(t.entry(i, col));
                out.append(width - text.size(), ' ');
                out += text;
            }
        }
        out += '\n';
    }
    return out;
}

std::string to_string(const Rational& q)
{
    return q.str();
}

}  // namespace skewrec
