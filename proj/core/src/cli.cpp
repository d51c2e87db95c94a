#include "ratdec/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratdec/convex.hpp"
#include "ratdec/decompose.hpp"
#include "ratdec/errors.hpp"
#include "ratdec/expr.hpp"

namespace ratdec {

namespace {

using nlohmann::json;

struct CommonArgs {
    std::string vars;
    std::string num;
    std::string den = "1";
    std::string format = "text";
    std::string factors_num_file, factors_den_file;
    int shift_retries = 5;
    bool convex = false;
};

std::vector<std::string> split_vars(const std::string& csv) {
    std::vector<std::string> vars;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        while (!cur.empty() && cur.front() == ' ') cur.erase(cur.begin());
        while (!cur.empty() && cur.back() == ' ') cur.pop_back();
        if (cur.empty()) throw InputError("empty variable name in --vars");
        vars.push_back(cur);
    }
    if (vars.empty()) throw InputError("--vars needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw InputError("duplicate variable '" + vars[i] + "'");
    return vars;
}

// "@path" reads the expression from a file; anything else is literal.
std::string expand_arg(const std::string& text) {
    if (text.empty() || text[0] != '@') return text;
    std::ifstream in(text.substr(1));
    if (!in) throw InputError("cannot read file '" + text.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// One polynomial per line; blank lines and '#' comments skipped.
std::vector<MultiPoly> read_factor_file(const std::string& path,
                                        const std::vector<std::string>& vars) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::vector<MultiPoly> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
            trimmed.erase(trimmed.begin());
        if (trimmed.empty() || trimmed[0] == '#') continue;
        out.push_back(parse_polynomial(trimmed, vars));
    }
    if (out.empty()) throw InputError("factor file '" + path + "' is empty");
    return out;
}

RationalFunction parse_function(const CommonArgs& a, const std::vector<std::string>& vars) {
    MultiPoly num = parse_polynomial(expand_arg(a.num), vars);
    MultiPoly den = parse_polynomial(expand_arg(a.den), vars);
    if (den.is_zero()) throw ZeroDenominatorError();
    return RationalFunction::reduced(num, den);
}

json rational_json(const Rational& r) { return to_string(r); }

json coeff_list_json(const UniPoly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(to_string(c));
    if (arr.empty()) arr.push_back("0");
    return arr;
}

json matrix_json(const MatrixQ& m) {
    json rows = json::array();
    for (const VectorQ& row : m) {
        json r = json::array();
        for (const Rational& c : row) r.push_back(to_string(c));
        rows.push_back(r);
    }
    return rows;
}

json vector_json(const VectorQ& v) {
    json r = json::array();
    for (const Rational& c : v) r.push_back(to_string(c));
    return r;
}

std::string vector_text(const VectorQ& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += to_string(v[i]);
    }
    return s;
}

void add_common(CLI::App* sub, CommonArgs& a, bool need_den) {
    sub->add_option("--vars", a.vars, "comma-separated variable names, innermost last")
        ->required();
    sub->add_option("--num", a.num, "numerator expression, or @file")->required();
    auto* den = sub->add_option("--den", a.den, "denominator expression, or @file");
    if (need_den) den->required();
    sub->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

int cmd_decompose(const CommonArgs& a, std::ostream& out) {
    std::vector<std::string> vars = split_vars(a.vars);
    RationalFunction f = parse_function(a, vars);

    DecomposeOptions opts;
    opts.shift_retries = a.shift_retries;
    if (!a.factors_num_file.empty()) opts.oracle_num = read_factor_file(a.factors_num_file, vars);
    if (!a.factors_den_file.empty()) opts.oracle_den = read_factor_file(a.factors_den_file, vars);

    auto t0 = std::chrono::steady_clock::now();
    Decomposition dec = a.convex ? convex_decompose(f, opts) : decompose(f, opts);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();

    bool composite = dec.status == DecomposeStatus::Composite;
    bool verified = !composite || equal_as_functions(compose_uni(dec.u, dec.h), f);

    if (a.format == "json") {
        json j;
        j["status"] = composite ? "composite" : "non-composite";
        j["u"] = {{"num", coeff_list_json(dec.u.num())}, {"den", coeff_list_json(dec.u.den())}};
        j["h"] = {{"num", to_string(dec.h.num(), vars)}, {"den", to_string(dec.h.den(), vars)}};
        if (dec.certificate) {
            const Certificate& c = *dec.certificate;
            j["certificate"] = {{"lambda_a", rational_json(c.lambda_a)},
                                {"lambda_b", rational_json(c.lambda_b)},
                                {"basis_num", matrix_json(c.basis_num)},
                                {"basis_den", matrix_json(c.basis_den)},
                                {"v_num", vector_json(c.v_num)},
                                {"v_den", vector_json(c.v_den)}};
        }
        j["verification"] = verified;
        j["timing_ms"] = ms;
        out << j.dump(2) << "\n";
    } else {
        out << "status: " << (composite ? "composite" : "non-composite") << "\n";
        out << "u.num: " << to_string(dec.u.num(), "T") << "\n";
        out << "u.den: " << to_string(dec.u.den(), "T") << "\n";
        out << "h.num: " << to_string(dec.h.num(), vars) << "\n";
        out << "h.den: " << to_string(dec.h.den(), vars) << "\n";
        if (dec.certificate) {
            const Certificate& c = *dec.certificate;
            out << "lambda_a: " << to_string(c.lambda_a) << "\n";
            out << "lambda_b: " << to_string(c.lambda_b) << "\n";
            out << "v_num: " << vector_text(c.v_num) << "\n";
            out << "v_den: " << vector_text(c.v_den) << "\n";
        }
        out << "verification: " << (verified ? "exact" : "FAILED") << "\n";
        out << "timing_ms: " << ms << "\n";
    }
    return verified ? 0 : 3;
}

int cmd_check_h(const CommonArgs& a, std::ostream& out) {
    std::vector<std::string> vars = split_vars(a.vars);
    RationalFunction f = parse_function(a, vars);
    HypothesisReport rep = check_hypothesis(f);
    if (a.format == "json") {
        json j;
        j["degree_condition"] = rep.degree_condition;
        j["resultant"] = to_string(rep.resultant_r, "L");
        j["satisfied"] = rep.satisfied;
        out << j.dump(2) << "\n";
    } else {
        out << "degree_condition: " << (rep.degree_condition ? "true" : "false") << "\n";
        out << "resultant: " << to_string(rep.resultant_r, "L") << "\n";
        out << "satisfied: " << (rep.satisfied ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_good_homography(const CommonArgs& a, std::ostream& out) {
    std::vector<std::string> vars = split_vars(a.vars);
    RationalFunction f = parse_function(a, vars);
    GoodHomographyResult r = good_homography(f);
    if (a.format == "json") {
        json j;
        j["lambda_a"] = rational_json(r.lambda_a);
        j["lambda_b"] = rational_json(r.lambda_b);
        j["F"] = {{"num", to_string(r.F.num(), vars)}, {"den", to_string(r.F.den(), vars)}};
        out << j.dump(2) << "\n";
    } else {
        out << "lambda_a: " << to_string(r.lambda_a) << "\n";
        out << "lambda_b: " << to_string(r.lambda_b) << "\n";
        out << "F.num: " << to_string(r.F.num(), vars) << "\n";
        out << "F.den: " << to_string(r.F.den(), vars) << "\n";
    }
    return 0;
}

int cmd_factor(const CommonArgs& a, std::ostream& out) {
    std::vector<std::string> vars = split_vars(a.vars);
    MultiPoly p = parse_polynomial(expand_arg(a.num), vars);
    std::optional<std::vector<MultiPoly>> oracle;
    if (!a.factors_num_file.empty()) oracle = read_factor_file(a.factors_num_file, vars);
    Factorization fac = factor_with_oracle(p, oracle);
    if (a.format == "json") {
        json j;
        j["unit"] = rational_json(fac.unit);
        json list = json::array();
        for (const auto& fm : fac.factors)
            list.push_back({{"poly", to_string(fm.first, vars)}, {"multiplicity", fm.second}});
        j["factors"] = list;
        out << j.dump(2) << "\n";
    } else {
        out << "unit: " << to_string(fac.unit) << "\n";
        for (const auto& fm : fac.factors)
            out << "factor: " << to_string(fm.first, vars) << "  multiplicity: " << fm.second
                << "\n";
    }
    return 0;
}

int cmd_cofactor(const CommonArgs& a, std::ostream& out) {
    std::vector<std::string> vars = split_vars(a.vars);
    RationalFunction f = parse_function(a, vars);
    std::optional<std::vector<MultiPoly>> oracle_num, oracle_den;
    if (!a.factors_num_file.empty()) oracle_num = read_factor_file(a.factors_num_file, vars);
    if (!a.factors_den_file.empty()) oracle_den = read_factor_file(a.factors_den_file, vars);
    Factorization fn = factor_with_oracle(f.num(), oracle_num);
    Factorization fd = factor_with_oracle(f.den(), oracle_den);

    auto emit_json = [&](const Factorization& fac) {
        json list = json::array();
        for (const auto& fm : fac.factors) {
            CofactorVector g = cofactor(f, fm.first);
            json comps = json::array();
            for (const MultiPoly& c : g) comps.push_back(to_string(c, vars));
            list.push_back({{"factor", to_string(fm.first, vars)}, {"cofactor", comps}});
        }
        return list;
    };
    auto emit_text = [&](const char* side, const Factorization& fac) {
        for (const auto& fm : fac.factors) {
            CofactorVector g = cofactor(f, fm.first);
            out << side << " factor: " << to_string(fm.first, vars) << "\n";
            for (std::size_t l = 0; l < g.size(); ++l)
                out << "  cofactor[" << l + 2 << "]: " << to_string(g[l], vars) << "\n";
        }
    };

    if (a.format == "json") {
        json j;
        j["num"] = emit_json(fn);
        j["den"] = emit_json(fd);
        out << j.dump(2) << "\n";
    } else {
        emit_text("num", fn);
        emit_text("den", fd);
    }
    return 0;
}

int cmd_convex_map(const CommonArgs& a, std::ostream& out) {
    std::vector<std::string> vars = split_vars(a.vars);
    if (vars.size() != 2) throw InputError("convex-map requires exactly two variables");
    RationalFunction f = parse_function(a, vars);
    std::vector<LatticePoint> pts = support(f.num());
    std::vector<LatticePoint> dpts = support(f.den());
    pts.insert(pts.end(), dpts.begin(), dpts.end());

    AffineMap m = find_reduction_map(pts);
    RationalFunction t = apply_map_to_function(f, m);
    std::vector<LatticePoint> tpts = support(t.num());
    std::vector<LatticePoint> tdpts = support(t.den());
    tpts.insert(tpts.end(), tdpts.begin(), tdpts.end());

    if (a.format == "json") {
        json j;
        j["map"] = {{"a", {m.a11, m.a12, m.a21, m.a22}}, {"b", {m.b1, m.b2}},
                    {"det", map_det(m)}};
        j["dense_size_before"] = dense_size(pts);
        j["dense_size_after"] = dense_size(tpts);
        j["lattice_size"] = lattice_size(pts);
        j["normalized"] = is_normalized(tpts);
        j["num"] = to_string(t.num(), vars);
        j["den"] = to_string(t.den(), vars);
        out << j.dump(2) << "\n";
    } else {
        out << "map: [" << m.a11 << " " << m.a12 << "; " << m.a21 << " " << m.a22 << "] + ["
            << m.b1 << " " << m.b2 << "]  det: " << map_det(m) << "\n";
        out << "dense_size: " << dense_size(pts) << " -> " << dense_size(tpts) << "\n";
        out << "lattice_size: " << lattice_size(pts) << "\n";
        out << "normalized: " << (is_normalized(tpts) ? "true" : "false") << "\n";
        out << "num: " << to_string(t.num(), vars) << "\n";
        out << "den: " << to_string(t.den(), vars) << "\n";
    }
    return 0;
}

}  // namespace

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decomposition of multivariate rational functions"};
    app.require_subcommand(1);

    CommonArgs dec_args, chk_args, gh_args, fac_args, cof_args, map_args;

    CLI::App* dec = app.add_subcommand("decompose", "write f as u(h) or report non-composite");
    add_common(dec, dec_args, true);
    dec->add_flag("--convex", dec_args.convex, "reduce the support polygon first");
    dec->add_option("--shift-retries", dec_args.shift_retries,
                    "random coordinate changes to try when the hypotheses fail")
        ->capture_default_str();
    dec->add_option("--factors-num", dec_args.factors_num_file,
                    "file with the irreducible factors of the first pencil member");
    dec->add_option("--factors-den", dec_args.factors_den_file,
                    "file with the irreducible factors of the second pencil member");

    CLI::App* chk = app.add_subcommand("check-h", "test the degree and squarefree hypotheses");
    add_common(chk, chk_args, true);

    CLI::App* gh = app.add_subcommand("good-homography", "pick the two pencil values");
    add_common(gh, gh_args, true);

    CLI::App* fac = app.add_subcommand("factor", "factor a polynomial into irreducibles");
    add_common(fac, fac_args, false);
    fac->add_option("--factors-num", fac_args.factors_num_file,
                    "file with the irreducible factors, verified instead of computed");

    CLI::App* cof = app.add_subcommand("cofactor", "cofactors of the irreducible factors");
    add_common(cof, cof_args, true);
    cof->add_option("--factors-num", cof_args.factors_num_file,
                    "file with the numerator's irreducible factors");
    cof->add_option("--factors-den", cof_args.factors_den_file,
                    "file with the denominator's irreducible factors");

    CLI::App* cmap = app.add_subcommand("convex-map", "support-reducing change of basis");
    add_common(cmap, map_args, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dec->parsed()) return cmd_decompose(dec_args, out);
        if (chk->parsed()) return cmd_check_h(chk_args, out);
        if (gh->parsed()) return cmd_good_homography(gh_args, out);
        if (fac->parsed()) return cmd_factor(fac_args, out);
        if (cof->parsed()) return cmd_cofactor(cof_args, out);
        if (cmap->parsed()) return cmd_convex_map(map_args, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const RetryableError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "error: no subcommand given\n";
    return 1;
}

}  // namespace ratdec
