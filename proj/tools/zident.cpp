#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zident/chpl.hpp"
#include "zident/constants.hpp"
#include "zident/discovery.hpp"
#include "zident/errors.hpp"
#include "zident/gl.hpp"
#include "zident/json_io.hpp"

namespace {

using namespace zident;

struct Options {
    int digits = 60;
    bool json = false;
    long terms_max = 1000000;
    unsigned long seed = 0; // reserved for auxiliary harnesses
};

void emit(const Options& opt, const Json& j, const std::string& text) {
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_eval_series(const Options& opt, const std::string& series_path) {
    SeriesSpec spec = series_from_json(load_json_file(series_path));
    SeriesEval ev = eval_series(spec, PrecisionContext(opt.digits), opt.terms_max);
    Json j;
    j["command"] = "eval-series";
    j["value"] = real_serialize(ev.value);
    j["terms_used"] = ev.terms_used;
    j["tail_bound"] = real_serialize(ev.tail);
    emit(opt, j,
         "value = " + real_serialize(ev.value) + "\nterms_used = " +
             std::to_string(ev.terms_used) + "\ntail_bound = " + real_serialize(ev.tail) +
             "\n");
    return 0;
}

int cmd_eval_const(const Options& opt, const std::string& expr_text) {
    ExprPtr e = parse_const_expr(expr_text);
    Real v = eval_const_expr(e, PrecisionContext(opt.digits));
    Json j;
    j["command"] = "eval-const";
    j["expr"] = print_const_expr(e);
    j["value"] = real_serialize(v);
    emit(opt, j, "value = " + real_serialize(v) + "\n");
    return 0;
}

int cmd_discover(const Options& opt, const std::string& series_path,
                 const std::string& basis_path, long max_height) {
    SeriesSpec spec = series_from_json(load_json_file(series_path));
    auto basis = basis_from_json(load_json_file(basis_path));
    try {
        DiscoveryResult r = discover(spec, basis, PrecisionContext(opt.digits),
                                     Int(max_height), opt.terms_max);
        Json j;
        j["command"] = "discover";
        j["status"] = "found";
        Json coeffs = Json::array();
        std::string text;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Json e;
            e["name"] = basis[i].name;
            e["coeff"] = rat_to_string(r.coefficients[i]);
            coeffs.push_back(std::move(e));
            text += basis[i].name + " = " + rat_to_string(r.coefficients[i]) + "\n";
        }
        j["coefficients"] = std::move(coeffs);
        j["residual"] = real_serialize(r.residual);
        j["certified_digits"] = r.certified_digits;
        j["digits_used"] = r.digits_used;
        j["pslq_iterations"] = r.pslq_iterations;
        text += "residual = " + real_serialize(r.residual) + "\ncertified_digits = " +
                std::to_string(r.certified_digits) + "\n";
        emit(opt, j, text);
        return 0;
    } catch (const NoRelationError& e) {
        Json j;
        j["command"] = "discover";
        j["status"] = e.status() == PslqStatus::Excluded ? "excluded" : "insufficient";
        j["exclusion_bound"] = real_serialize(e.exclusion_bound());
        j["message"] = e.what();
        emit(opt, j,
             std::string(e.what()) + "\nexclusion_bound = " +
                 real_serialize(e.exclusion_bound()) + "\n");
        return 1;
    }
}

int cmd_certify(const Options& opt, const std::string& identity_path, int low, int high) {
    Identity id = identity_from_json(load_json_file(identity_path));
    CertifyReport rep = certify(id.series, id.rhs, low, high, opt.terms_max);
    Json j;
    j["command"] = "certify";
    if (!id.name.empty())
        j["name"] = id.name;
    j["pass"] = rep.pass;
    j["low_digits"] = rep.low_digits;
    j["high_digits"] = rep.high_digits;
    j["residual_low"] = real_serialize(rep.residual_low);
    j["residual_high"] = real_serialize(rep.residual_high);
    j["terms_low"] = rep.terms_low;
    j["terms_high"] = rep.terms_high;
    std::string text = std::string(rep.pass ? "PASS" : "FAIL") + "\nresidual_low = " +
                       real_serialize(rep.residual_low) + " (digits=" +
                       std::to_string(low) + ")\nresidual_high = " +
                       real_serialize(rep.residual_high) + " (digits=" +
                       std::to_string(high) + ")\n";
    emit(opt, j, text);
    return rep.pass ? 0 : 1;
}

int cmd_rec_check(const Options& opt, const std::string& rec_path,
                  const std::string& series_path, long shift, long kmax) {
    Recurrence rec = recurrence_from_json(load_json_file(rec_path));
    SeriesSpec spec = series_from_json(load_json_file(series_path));
    RecCheckReport rep = rec_check(rec, summand_source(spec, shift), kmax);
    Json j;
    j["command"] = "rec-check";
    j["holds"] = rep.holds;
    j["checked_from"] = rep.checked_from;
    j["checked_to"] = rep.checked_to;
    if (rep.first_failure)
        j["first_failure"] = *rep.first_failure;
    std::string text = rep.holds
                           ? "holds on k = " + std::to_string(rep.checked_from) + ".." +
                                 std::to_string(rep.checked_to) + "\n"
                           : "fails first at k = " + std::to_string(*rep.first_failure) + "\n";
    emit(opt, j, text);
    return rep.holds ? 0 : 1;
}

int cmd_ode_check(const Options& opt, const std::string& ode_path,
                  const std::string& series_path, long shift, long nmax) {
    DiffOp op = diffop_from_json(load_json_file(ode_path));
    SeriesSpec spec = series_from_json(load_json_file(series_path));
    OdeCheckReport rep = ode_annihilates(op, summand_source(spec, shift), nmax);
    Json j;
    j["command"] = "ode-check";
    j["annihilates"] = rep.annihilates;
    j["checked_coeffs"] = rep.checked_coeffs;
    if (rep.first_failure)
        j["first_failure"] = *rep.first_failure;
    std::string text = rep.annihilates
                           ? "annihilates the first " + std::to_string(rep.checked_coeffs) +
                                 " coefficients\n"
                           : "first nonzero residual at x^" +
                                 std::to_string(*rep.first_failure) + "\n";
    emit(opt, j, text);
    return rep.annihilates ? 0 : 1;
}

int cmd_shuffle(const Options& opt, const std::string& u_text, const std::string& v_text) {
    Word u = word_from_string(u_text), v = word_from_string(v_text);
    WordSum s = shuffle(u, v);
    Json j;
    j["command"] = "shuffle";
    j["result"] = wordsum_to_json(s);
    emit(opt, j, wordsum_to_string(s) + "\n");
    return 0;
}

int cmd_gl_eval(const Options& opt, const std::string& word_text,
                const std::string& combo_path) {
    Json j;
    j["command"] = "gl-eval";
    if (!combo_path.empty()) {
        GlCombo combo = glcombo_from_json(load_json_file(combo_path));
        Real v = gl_combo_eval(combo, PrecisionContext(opt.digits));
        j["value"] = real_serialize(v);
        emit(opt, j, "value = " + real_serialize(v) + "\n");
        return 0;
    }
    Word w = word_from_string(word_text);
    GlValue v = gl_eval(w, PrecisionContext(opt.digits));
    j["word"] = word_to_string(w);
    j["value"] = real_serialize(v.value);
    j["tail_bound"] = real_serialize(v.tail);
    emit(opt, j, "value = " + real_serialize(v.value) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"central-binomial zeta series toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_option("--digits", opt.digits, "working accuracy in decimal digits")
        ->capture_default_str();
    app.add_flag("--json", opt.json, "emit a single JSON object");
    app.add_option("--terms-max", opt.terms_max, "series term budget")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for auxiliary harnesses");

    std::string series_path, basis_path, identity_path, rec_path, ode_path;
    std::string expr_text, word_u, word_v, word_text, combo_path;
    long shift = 0, kmax = 200, nmax = 60, max_height = 1000000000;
    int low = 50, high = 100;

    auto* c_series = app.add_subcommand("eval-series", "evaluate a series spec");
    c_series->add_option("--series", series_path, "series spec JSON")->required();

    auto* c_const = app.add_subcommand("eval-const", "evaluate a constant expression");
    c_const->add_option("expr", expr_text, "expression text")->required();

    auto* c_disc = app.add_subcommand("discover", "search for a rational combination");
    c_disc->add_option("--series", series_path, "series spec JSON")->required();
    c_disc->add_option("--basis", basis_path, "basis JSON")->required();
    c_disc->add_option("--max-height", max_height, "coefficient height cap")
        ->capture_default_str();

    auto* c_cert = app.add_subcommand("certify", "check an identity at two precisions");
    c_cert->add_option("--identity", identity_path, "identity JSON")->required();
    c_cert->add_option("--digits-low", low, "first check level")->capture_default_str();
    c_cert->add_option("--digits-high", high, "second check level")->capture_default_str();

    auto* c_rec = app.add_subcommand("rec-check", "verify a recurrence on exact terms");
    c_rec->add_option("--rec", rec_path, "recurrence JSON")->required();
    c_rec->add_option("--series", series_path, "series spec JSON")->required();
    c_rec->add_option("--shift", shift, "index shift applied to the summand stream");
    c_rec->add_option("--kmax", kmax, "last index checked")->capture_default_str();

    auto* c_ode = app.add_subcommand("ode-check", "apply an operator to the series");
    c_ode->add_option("--ode", ode_path, "operator JSON")->required();
    c_ode->add_option("--series", series_path, "series spec JSON")->required();
    c_ode->add_option("--shift", shift, "index shift applied to the summand stream");
    c_ode->add_option("--nmax", nmax, "series truncation order")->capture_default_str();

    auto* c_shuf = app.add_subcommand("shuffle", "shuffle product of two words");
    c_shuf->add_option("u", word_u, "first word")->required();
    c_shuf->add_option("v", word_v, "second word");

    auto* c_gl = app.add_subcommand("gl-eval", "evaluate a square-root letter integral");
    c_gl->add_option("word", word_text, "word over '0'/'a'");
    c_gl->add_option("--combo", combo_path, "combination JSON instead of a word");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_series->parsed())
            return cmd_eval_series(opt, series_path);
        if (c_const->parsed())
            return cmd_eval_const(opt, expr_text);
        if (c_disc->parsed())
            return cmd_discover(opt, series_path, basis_path, max_height);
        if (c_cert->parsed())
            return cmd_certify(opt, identity_path, low, high);
        if (c_rec->parsed())
            return cmd_rec_check(opt, rec_path, series_path, shift, kmax);
        if (c_ode->parsed())
            return cmd_ode_check(opt, ode_path, series_path, shift, nmax);
        if (c_shuf->parsed()) {
            if (c_shuf->count("v") == 0) {
                std::cerr << "shuffle needs two words (use \"\" for the empty word)\n";
                return 2;
            }
            return cmd_shuffle(opt, word_u, word_v);
        }
        if (c_gl->parsed()) {
            if (combo_path.empty() && c_gl->count("word") == 0) {
                std::cerr << "gl-eval needs a word or --combo FILE\n";
                return 2;
            }
            return cmd_gl_eval(opt, word_text, combo_path);
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
