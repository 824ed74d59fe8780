#include "zident/json_io.hpp"

#include <fstream>

#include "zident/errors.hpp"

namespace zident {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

void check_format(const Json& j) {
    if (j.contains("format") && j["format"] != kFormatTag)
        fail("unsupported format tag, expected zident/1");
}

Rat rat_field(const Json& j) {
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return rat_from_string(j.get<std::string>());
    fail("expected a rational as integer or \"num/den\" string");
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array())
        fail("expected a polynomial coefficient array");
    std::vector<Rat> c;
    c.reserve(j.size());
    for (const auto& e : j)
        c.push_back(rat_field(e));
    return Poly(std::move(c));
}

Json poly_to_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs())
        a.push_back(rat_to_string(c));
    return a;
}

std::vector<Poly> coeff_list(const Json& j, int order) {
    if (!j.is_array() || static_cast<int>(j.size()) != order + 1)
        fail("coeffs must hold order+1 polynomials");
    std::vector<Poly> out;
    out.reserve(j.size());
    for (const auto& e : j)
        out.push_back(poly_from_json(e));
    return out;
}

Sqrt3Rat sqrt3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        fail("expected a [plain, root3] coefficient pair");
    return Sqrt3Rat{rat_field(j[0]), rat_field(j[1])};
}

Json sqrt3_to_json(const Sqrt3Rat& c) {
    return Json::array({rat_to_string(c.plain), rat_to_string(c.root3)});
}

} // namespace

Json series_to_json(const SeriesSpec& spec) {
    Json terms = Json::array();
    for (const auto& t : spec.terms) {
        Json e;
        e["coeff"] = rat_to_string(t.coeff);
        e["h"] = t.harmonic_order;
        e["kpow"] = t.k_power;
        terms.push_back(std::move(e));
    }
    Json j;
    j["terms"] = std::move(terms);
    return j;
}

SeriesSpec series_from_json(const Json& j) {
    if (j.is_object() && !j.contains("terms") && j.contains("series")) {
        // identity documents double as series specs
        check_format(j);
        return series_from_json(j["series"]);
    }
    if (!j.is_object() || !j.contains("terms"))
        fail("series spec needs a \"terms\" array");
    SeriesSpec spec;
    for (const auto& e : j["terms"]) {
        if (!e.is_object() || !e.contains("coeff") || !e.contains("h") ||
            !e.contains("kpow"))
            fail("series term needs \"coeff\", \"h\" and \"kpow\"");
        if (!e["h"].is_number_integer() || !e["kpow"].is_number_integer())
            fail("series term exponents must be integers");
        SeriesTerm t;
        t.coeff = rat_field(e["coeff"]);
        t.harmonic_order = e["h"].get<int>();
        t.k_power = e["kpow"].get<int>();
        spec.terms.push_back(std::move(t));
    }
    spec.validate();
    return spec;
}

Json identity_to_json(const Identity& id) {
    Json j;
    j["format"] = kFormatTag;
    if (!id.name.empty())
        j["name"] = id.name;
    j["series"] = series_to_json(id.series);
    j["rhs"] = print_const_expr(id.rhs);
    return j;
}

Identity identity_from_json(const Json& j) {
    check_format(j);
    if (!j.contains("series") || !j.contains("rhs"))
        fail("identity needs \"series\" and \"rhs\"");
    if (!j["rhs"].is_string())
        fail("identity \"rhs\" must be an expression string");
    Identity id;
    if (j.contains("name") && j["name"].is_string())
        id.name = j["name"].get<std::string>();
    id.series = series_from_json(j["series"]);
    id.rhs = parse_const_expr(j["rhs"].get<std::string>());
    return id;
}

Json basis_to_json(const std::vector<BasisEntry>& basis) {
    Json list = Json::array();
    for (const auto& b : basis) {
        Json e;
        e["name"] = b.name;
        e["expr"] = print_const_expr(b.expr);
        list.push_back(std::move(e));
    }
    Json j;
    j["format"] = kFormatTag;
    j["basis"] = std::move(list);
    return j;
}

std::vector<BasisEntry> basis_from_json(const Json& j) {
    check_format(j);
    if (!j.contains("basis") || !j["basis"].is_array())
        fail("basis file needs a \"basis\" array");
    std::vector<BasisEntry> out;
    for (const auto& e : j["basis"]) {
        if (!e.is_object() || !e.contains("name") || !e.contains("expr") ||
            !e["name"].is_string() || !e["expr"].is_string())
            fail("basis entry needs string \"name\" and \"expr\"");
        BasisEntry b;
        b.name = e["name"].get<std::string>();
        b.expr = parse_const_expr(e["expr"].get<std::string>());
        out.push_back(std::move(b));
    }
    if (out.empty())
        fail("basis file with no entries");
    return out;
}

Json recurrence_to_json(const Recurrence& rec) {
    Json j;
    j["format"] = kFormatTag;
    j["order"] = rec.order();
    j["var"] = "n";
    j["offset"] = rec.offset;
    Json coeffs = Json::array();
    for (const auto& p : rec.coeffs)
        coeffs.push_back(poly_to_json(p));
    j["coeffs"] = std::move(coeffs);
    return j;
}

Recurrence recurrence_from_json(const Json& j) {
    check_format(j);
    if (!j.contains("order") || !j.contains("coeffs"))
        fail("recurrence needs \"order\" and \"coeffs\"");
    if (j.contains("var") && j["var"] != "n")
        fail("recurrence variable must be \"n\"");
    if (!j["order"].is_number_integer())
        fail("recurrence \"order\" must be an integer");
    Recurrence rec;
    if (j.contains("offset")) {
        if (!j["offset"].is_number_integer())
            fail("recurrence \"offset\" must be an integer");
        rec.offset = j["offset"].get<long>();
    }
    rec.coeffs = coeff_list(j["coeffs"], j["order"].get<int>());
    rec.validate();
    return rec;
}

Json diffop_to_json(const DiffOp& op) {
    Json j;
    j["format"] = kFormatTag;
    j["order"] = op.order();
    j["var"] = "x";
    Json coeffs = Json::array();
    for (const auto& p : op.coeffs)
        coeffs.push_back(poly_to_json(p));
    j["coeffs"] = std::move(coeffs);
    return j;
}

DiffOp diffop_from_json(const Json& j) {
    check_format(j);
    if (!j.contains("order") || !j.contains("coeffs"))
        fail("differential operator needs \"order\" and \"coeffs\"");
    if (j.contains("var") && j["var"] != "x")
        fail("differential operator variable must be \"x\"");
    if (!j["order"].is_number_integer())
        fail("differential operator \"order\" must be an integer");
    DiffOp op;
    op.coeffs = coeff_list(j["coeffs"], j["order"].get<int>());
    op.validate();
    return op;
}

Json glcombo_to_json(const GlCombo& c) {
    Json terms = Json::array();
    for (const auto& t : c.terms) {
        Json e;
        e["coeff"] = sqrt3_to_json(t.coeff);
        e["word"] = word_to_string(t.word);
        terms.push_back(std::move(e));
    }
    Json j;
    j["format"] = kFormatTag;
    j["terms"] = std::move(terms);
    j["constant"] = sqrt3_to_json(c.constant);
    return j;
}

GlCombo glcombo_from_json(const Json& j) {
    check_format(j);
    if (!j.contains("terms") || !j["terms"].is_array())
        fail("combination file needs a \"terms\" array");
    GlCombo c;
    for (const auto& e : j["terms"]) {
        if (!e.is_object() || !e.contains("coeff") || !e.contains("word") ||
            !e["word"].is_string())
            fail("combination term needs \"coeff\" and a string \"word\"");
        GlTerm t;
        t.coeff = sqrt3_from_json(e["coeff"]);
        t.word = word_from_string(e["word"].get<std::string>());
        validate_g_word(t.word);
        c.terms.push_back(std::move(t));
    }
    if (j.contains("constant"))
        c.constant = sqrt3_from_json(j["constant"]);
    return c;
}

Json wordsum_to_json(const WordSum& s) {
    Json list = Json::array();
    for (const auto& [w, c] : s) {
        Json e;
        e["word"] = word_to_string(w);
        e["coeff"] = rat_to_string(c);
        list.push_back(std::move(e));
    }
    return list;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open file for writing: " + path);
    out << j.dump(2) << "\n";
}

} // namespace zident
