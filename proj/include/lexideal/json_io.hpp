#ifndef LEXIDEAL_JSON_IO_HPP
#define LEXIDEAL_JSON_IO_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "axis_of_evil.hpp"
#include "error.hpp"
#include "escalier.hpp"
#include "point.hpp"
#include "polynomial.hpp"
#include "term.hpp"
#include "verify.hpp"

namespace lexideal {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- points --

// Coordinates as strings plus their source line/position, kept separate from
// scalar parsing so duplicate and parse errors can cite the input precisely.
struct RawPoints {
    std::size_t nvars = 0;
    std::vector<std::vector<std::string>> coords;
    std::vector<std::size_t> lines; // 1-based source line (CSV) or position (JSON)
};

// CSV: one point per line, comma-separated coordinates. Blank lines and
// lines starting with '#' are skipped.
inline RawPoints parse_points_csv(const std::string& text) {
    RawPoints raw;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        std::vector<std::string> coords;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            const std::size_t cb = cell.find_first_not_of(" \t\r");
            if (cb == std::string::npos) {
                coords.push_back("");
                continue;
            }
            const std::size_t ce = cell.find_last_not_of(" \t\r");
            coords.push_back(cell.substr(cb, ce - cb + 1));
        }
        if (raw.nvars == 0)
            raw.nvars = coords.size();
        else if (coords.size() != raw.nvars)
            throw ParseError("line " + std::to_string(lineno) + " has " +
                             std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(raw.nvars));
        raw.coords.push_back(std::move(coords));
        raw.lines.push_back(lineno);
    }
    if (raw.coords.empty())
        throw ParseError("no points in input");
    return raw;
}

// JSON: either a bare array of arrays, or an object with a "points" member.
// Coordinates may be strings or integers.
inline RawPoints parse_points_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const json* arr = &doc;
    if (doc.is_object()) {
        if (!doc.contains("points"))
            throw ParseError("JSON object lacks a \"points\" member");
        arr = &doc["points"];
    }
    if (!arr->is_array() || arr->empty())
        throw ParseError("JSON points must be a nonempty array");
    RawPoints raw;
    std::size_t pos = 0;
    for (const json& pt : *arr) {
        ++pos;
        if (!pt.is_array())
            throw ParseError("point " + std::to_string(pos) + " is not an array");
        std::vector<std::string> coords;
        for (const json& c : pt) {
            if (c.is_string())
                coords.push_back(c.get<std::string>());
            else if (c.is_number_integer())
                coords.push_back(std::to_string(c.get<long long>()));
            else
                throw ParseError("point " + std::to_string(pos) +
                                 " has a non-integer, non-string coordinate");
        }
        if (raw.nvars == 0)
            raw.nvars = coords.size();
        else if (coords.size() != raw.nvars)
            throw ParseError("point " + std::to_string(pos) + " has " +
                             std::to_string(coords.size()) +
                             " coordinates, expected " + std::to_string(raw.nvars));
        raw.coords.push_back(std::move(coords));
        raw.lines.push_back(pos);
    }
    return raw;
}

// Sniff the format: JSON starts with '[' or '{'.
inline RawPoints parse_points(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        throw ParseError("empty input");
    if (text[b] == '[' || text[b] == '{')
        return parse_points_json(text);
    return parse_points_csv(text);
}

// Turn raw strings into field elements via `parse` (string -> K) and check
// distinctness, citing input lines: coordinates that differ as strings may
// still collide in the field (e.g. mod p).
template <class K, class ParseFn>
PointList<K> materialize_points(const RawPoints& raw, ParseFn&& parse) {
    if (raw.nvars == 0)
        throw ParseError("points need at least one coordinate");
    PointList<K> pts;
    pts.reserve(raw.coords.size());
    for (std::size_t i = 0; i < raw.coords.size(); ++i) {
        Point<K> p;
        p.reserve(raw.nvars);
        for (const std::string& s : raw.coords[i]) {
            try {
                p.push_back(parse(s));
            } catch (const Error& e) {
                throw ParseError("line " + std::to_string(raw.lines[i]) + ": " +
                                 e.what());
            }
        }
        pts.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw ValidationError(
                    "duplicate points: lines " + std::to_string(raw.lines[i]) +
                    " and " + std::to_string(raw.lines[j]));
    return pts;
}

// ---------------------------------------------------------- serialization --

inline json term_to_json(const Term& t) {
    json a = json::array();
    for (unsigned e : t.exponents())
        a.push_back(e);
    return a;
}

inline Term term_from_json(const json& a, std::size_t nvars) {
    if (!a.is_array() || a.size() != nvars)
        throw ParseError("term must be an array of " + std::to_string(nvars) +
                         " exponents");
    std::vector<unsigned> e;
    e.reserve(nvars);
    for (const json& x : a) {
        if (!x.is_number_integer() || x.get<long long>() < 0)
            throw ParseError("exponents must be non-negative integers");
        e.push_back(static_cast<unsigned>(x.get<long long>()));
    }
    return Term(e);
}

// Polynomials serialize lex-descending (leading term first).
template <class K>
json poly_to_json(const Polynomial<K>& p) {
    json a = json::array();
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        json m;
        m["exponents"] = term_to_json(it->first);
        m["coefficient"] = it->second.str();
        a.push_back(std::move(m));
    }
    return a;
}

template <class K, class ParseFn>
Polynomial<K> poly_from_json(const json& a, std::size_t nvars, ParseFn&& parse) {
    if (!a.is_array())
        throw ParseError("polynomial must be an array of monomials");
    Polynomial<K> p;
    for (const json& m : a) {
        if (!m.is_object() || !m.contains("exponents") || !m.contains("coefficient"))
            throw ParseError("monomial needs \"exponents\" and \"coefficient\"");
        if (!m["coefficient"].is_string())
            throw ParseError("coefficients must be strings");
        p.add_term(term_from_json(m["exponents"], nvars),
                   parse(m["coefficient"].get<std::string>()));
    }
    return p;
}

template <class K>
json points_to_json(const PointList<K>& pts) {
    json a = json::array();
    for (const auto& p : pts) {
        json row = json::array();
        for (const K& c : p)
            row.push_back(c.str());
        a.push_back(std::move(row));
    }
    return a;
}

inline json escalier_to_json(const Escalier& esc) {
    json a = json::array();
    for (std::size_t i = 0; i < esc.terms.size(); ++i) {
        json e;
        e["point"] = i + 1;
        e["term"] = term_to_json(esc.terms[i]);
        if (esc.steps.size() == esc.terms.size() && esc.steps[i].sigma != 0) {
            e["sigma"] = esc.steps[i].sigma;
            e["antecedent"] = esc.steps[i].antecedent;
        }
        a.push_back(std::move(e));
    }
    return a;
}

inline json terms_to_json(const std::vector<Term>& ts) {
    json a = json::array();
    for (const Term& t : ts)
        a.push_back(term_to_json(t));
    return a;
}

inline json indices_to_json(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (std::size_t i : v)
        a.push_back(i);
    return a;
}

template <class K>
json factored_element_to_json(const FactoredElement<K>& e) {
    json out;
    out["tau"] = term_to_json(e.tau);
    json factors = json::array();
    for (const auto& f : e.factors) {
        json fj;
        fj["m"] = f.var;
        fj["delta"] = f.delta;
        fj["body"] = poly_to_json(f.poly);
        factors.push_back(std::move(fj));
    }
    out["factors"] = std::move(factors);
    json stages = json::array();
    for (const auto& st : e.stages) {
        json sj;
        sj["m"] = st.var;
        sj["entering"] = indices_to_json(st.entering);
        sj["admissible"] = terms_to_json(st.admissible);
        json deltas = json::array();
        for (const auto& d : st.deltas) {
            json dj;
            dj["delta"] = d.delta;
            dj["points"] = indices_to_json(d.points);
            dj["support"] = terms_to_json(d.support);
            dj["survivors"] = indices_to_json(d.survivors);
            deltas.push_back(std::move(dj));
        }
        sj["deltas"] = std::move(deltas);
        stages.push_back(std::move(sj));
    }
    out["trace"] = json{{"stages", std::move(stages)}};
    return out;
}

template <class K>
json certificate_to_json(const GBCertificate<K>& c) {
    json out;
    json vw = json::array();
    for (const auto& w : c.witnesses)
        vw.push_back(json{{"poly", w.poly}, {"point", w.point}, {"value", w.value.str()}});
    out["vanishing"] = json{{"ok", c.vanishing_ok}, {"witnesses", std::move(vw)}};
    out["leading_terms"] = json{{"ok", c.leading_terms_ok},
                                {"expected", terms_to_json(c.expected_leading_terms)},
                                {"actual", terms_to_json(c.actual_leading_terms)}};
    out["cardinality"] = json{{"ok", c.cardinality_ok},
                              {"escalier_size", c.escalier_size},
                              {"point_count", c.point_count}};
    json sf = json::array();
    for (const auto& [i, j] : c.spoly_failures)
        sf.push_back(json{{"first", i}, {"second", j}});
    out["spoly"] = json{{"checked", c.spoly_checked},
                        {"ok", c.spoly_ok},
                        {"failures", std::move(sf)}};
    out["valid"] = c.valid();
    return out;
}

// The portable result document: enough to reload and reverify a factored
// basis without recomputing it.
template <class K>
json basis_document(const std::string& field, const FactoredGroebnerBasis<K>& fgb) {
    json doc;
    doc["field"] = field;
    doc["n"] = fgb.nvars;
    doc["points"] = points_to_json(fgb.points);
    doc["escalier"] = escalier_to_json(fgb.escalier);
    doc["minimal_basis"] = terms_to_json(fgb.generators);
    json basis = json::array();
    for (const auto& e : fgb.elements)
        basis.push_back(factored_element_to_json(e));
    doc["basis"] = std::move(basis);
    return doc;
}

template <class K, class ParseFn>
FactoredGroebnerBasis<K> basis_from_document(const json& doc, ParseFn&& parse) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("points") ||
        !doc.contains("basis"))
        throw ParseError("document needs \"n\", \"points\" and \"basis\"");
    FactoredGroebnerBasis<K> fgb;
    fgb.nvars = doc["n"].get<std::size_t>();
    if (fgb.nvars == 0)
        throw ParseError("\"n\" must be positive");

    RawPoints raw;
    raw.nvars = fgb.nvars;
    std::size_t pos = 0;
    for (const json& pt : doc["points"]) {
        ++pos;
        if (!pt.is_array() || pt.size() != fgb.nvars)
            throw ParseError("point " + std::to_string(pos) + " must have " +
                             std::to_string(fgb.nvars) + " coordinates");
        std::vector<std::string> coords;
        for (const json& c : pt)
            coords.push_back(c.is_string() ? c.get<std::string>()
                                           : std::to_string(c.get<long long>()));
        raw.coords.push_back(std::move(coords));
        raw.lines.push_back(pos);
    }
    fgb.points = materialize_points<K>(raw, parse);

    if (doc.contains("escalier")) {
        for (const json& e : doc["escalier"]) {
            if (!e.is_object() || !e.contains("term"))
                throw ParseError("escalier entries need a \"term\"");
            fgb.escalier.terms.push_back(term_from_json(e["term"], fgb.nvars));
        }
    }
    if (doc.contains("minimal_basis"))
        for (const json& t : doc["minimal_basis"])
            fgb.generators.push_back(term_from_json(t, fgb.nvars));

    for (const json& ej : doc["basis"]) {
        if (!ej.is_object() || !ej.contains("tau") || !ej.contains("factors"))
            throw ParseError("basis elements need \"tau\" and \"factors\"");
        FactoredElement<K> elem;
        elem.tau = term_from_json(ej["tau"], fgb.nvars);
        for (const json& fj : ej["factors"]) {
            if (!fj.is_object() || !fj.contains("m") || !fj.contains("body"))
                throw ParseError("factors need \"m\" and \"body\"");
            LinearFactor<K> f;
            f.var = fj["m"].get<std::size_t>();
            if (f.var < 1 || f.var > fgb.nvars)
                throw ParseError("factor variable out of range");
            f.delta = fj.contains("delta") ? fj["delta"].get<std::size_t>() : 0;
            f.poly = poly_from_json<K>(fj["body"], fgb.nvars, parse);
            if (f.poly.is_zero())
                throw ParseError("factor body is zero");
            elem.factors.push_back(std::move(f));
        }
        if (elem.factors.empty())
            throw ParseError("basis element has no factors");
        fgb.elements.push_back(std::move(elem));
    }
    if (fgb.elements.empty())
        throw ParseError("document contains an empty basis");
    return fgb;
}

// ------------------------------------------------------------------ text --

template <class K>
std::string render_point(const Point<K>& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ", ";
        out += p[i].str();
    }
    return out + ")";
}

template <class K>
std::string render_escalier_text(const PointList<K>& pts, const Escalier& esc) {
    std::string out;
    for (std::size_t i = 0; i < esc.terms.size(); ++i) {
        out += "P" + std::to_string(i + 1) + " = " + render_point(pts[i]) +
               " -> " + render_term(esc.terms[i]) + "\n";
    }
    return out;
}

template <class K>
std::string render_factored_text(const FactoredGroebnerBasis<K>& fgb) {
    std::string out;
    for (const auto& e : fgb.elements) {
        out += render_term(e.tau) + " = ";
        for (std::size_t i = 0; i < e.factors.size(); ++i) {
            if (i)
                out += " * ";
            out += "(" + render_poly(e.factors[i].poly) + ")";
        }
        out += "\n";
    }
    return out;
}

template <class K>
std::string render_certificate_text(const GBCertificate<K>& c) {
    std::string out;
    out += "vanishing: " + std::string(c.vanishing_ok ? "PASS" : "FAIL") + "\n";
    for (const auto& w : c.witnesses)
        out += "  element " + std::to_string(w.poly) + " at P" +
               std::to_string(w.point) + ": value " + w.value.str() + "\n";
    out += "leading terms: " + std::string(c.leading_terms_ok ? "PASS" : "FAIL") + "\n";
    if (!c.leading_terms_ok) {
        out += "  expected:";
        for (const auto& t : c.expected_leading_terms)
            out += " " + render_term(t);
        out += "\n  actual:";
        for (const auto& t : c.actual_leading_terms)
            out += " " + render_term(t);
        out += "\n";
    }
    out += "cardinality: " + std::string(c.cardinality_ok ? "PASS" : "FAIL") + " (" +
           std::to_string(c.escalier_size) + " terms, " +
           std::to_string(c.point_count) + " points)\n";
    if (c.spoly_checked) {
        out += "spoly: " + std::string(c.spoly_ok ? "PASS" : "FAIL") + "\n";
        for (const auto& [i, j] : c.spoly_failures)
            out += "  pair (" + std::to_string(i) + ", " + std::to_string(j) + ")\n";
    }
    out += "valid: " + std::string(c.valid() ? "true" : "false") + "\n";
    return out;
}

} // namespace lexideal

#endif // LEXIDEAL_JSON_IO_HPP
