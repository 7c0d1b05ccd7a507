#include "ffzeta/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ffzeta/json_io.hpp"

namespace ffz {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::invalid_input, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<mpz_class> parse_count_list(const std::string& text) {
    std::vector<mpz_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        require(!item.empty(), errc::invalid_input, "empty entry in count list");
        out.emplace_back(item);
    }
    require(!out.empty(), errc::invalid_input, "empty count list");
    return out;
}

std::vector<mpq_class> parse_rational_list(const std::string& text) {
    std::vector<mpq_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    require(!out.empty(), errc::invalid_input, "empty list");
    return out;
}

struct Options {
    std::string input, input2;
    std::string kind;
    std::string counts, poly, hvec, probe, alpha_text;
    int ext = 1;
    int order = -1;
    int deg_num = -1, deg_den = -1;
    int precision = 2;
    int genus = -1;
    int n = 0;
    std::string degrees;
    long p = 0;
    int iters = 64;
    int threads = 0;
    u64 budget = 1'000'000'000;
    u64 seed = 0;
};

CountOptions count_opts(const Options& o) { return CountOptions{o.budget, o.threads}; }

ojson finish(ojson doc, const Options& o) {
    doc["seed"] = o.seed;
    return doc;
}

int emit(const ojson& doc, std::string& out, int code) {
    out = doc.dump() + "\n";
    return code;
}

int cmd_count(const Options& o, std::string& out) {
    PolySystem sys = parse_system_json(slurp(o.input));
    ojson doc;
    doc["command"] = "count";
    doc["p"] = static_cast<long>(sys.field.p);
    doc["a"] = sys.field.a;
    doc["s"] = o.ext;
    doc["nvars"] = sys.nvars;
    doc["affine"] = mpz_to_json(mpz_class(static_cast<unsigned long>(
        count_affine(sys, o.ext, count_opts(o)))));
    if (sys.homogeneous)
        doc["projective"] = mpz_to_json(mpz_class(static_cast<unsigned long>(
            count_projective(sys, o.ext, count_opts(o)))));
    return emit(finish(doc, o), out, 0);
}

int cmd_zeta(const Options& o, std::string& out) {
    require(!o.counts.empty(), errc::invalid_input, "zeta needs --counts");
    CountSequence seq;
    seq.counts = parse_count_list(o.counts);
    int order = o.order >= 0 ? o.order : static_cast<int>(seq.counts.size());
    std::vector<mpz_class> series = zeta_series(seq, order);
    ojson doc;
    doc["command"] = "zeta";
    ojson jser = ojson::array();
    for (const auto& c : series) jser.push_back(mpz_to_json(c));
    doc["series"] = jser;
    int code = 0;
    if (o.deg_num >= 0 || o.deg_den >= 0) {
        require(o.deg_num >= 0 && o.deg_den >= 0, errc::invalid_input,
                "--deg-num and --deg-den go together");
        std::vector<mpq_class> qser(series.size());
        for (size_t i = 0; i < series.size(); ++i) qser[i] = mpq_class(series[i]);
        ZetaFunction z = reconstruct_rational(qser, o.deg_num, o.deg_den);
        ojson jz = zeta_to_json(z);
        doc["num"] = jz["num"];
        doc["den"] = jz["den"];
    }
    return emit(finish(doc, o), out, code);
}

int cmd_newton(const Options& o, std::string& out) {
    require(!o.poly.empty(), errc::invalid_input, "newton needs --poly");
    require(o.p >= 2, errc::invalid_input, "newton needs --p");
    QPoly f = parse_rational_list(o.poly);
    Polygon poly = newton_of_polynomial(f, mpz_class(o.p));
    ojson doc;
    doc["command"] = "newton";
    doc["p"] = o.p;
    ojson jp = polygon_to_json(poly);
    doc["segments"] = jp["segments"];
    doc["length"] = jp["length"];
    return emit(finish(doc, o), out, 0);
}

int cmd_hodge(const Options& o, std::string& out) {
    ojson doc;
    doc["command"] = "hodge";
    if (!o.hvec.empty()) {
        HodgeNumbers h;
        for (const auto& v : parse_rational_list(o.hvec)) {
            require(v.get_den() == 1 && v >= 0, errc::invalid_input,
                    "Hodge numbers are nonnegative integers");
            h.h.push_back(static_cast<long>(v.get_num().get_si()));
        }
        h.m = static_cast<int>(h.h.size()) - 1;
        doc["m"] = h.m;
        ojson jh = ojson::array();
        for (long x : h.h) jh.push_back(x);
        doc["h"] = jh;
        doc["polygon"] = polygon_to_json(hodge_polygon(h));
        return emit(finish(doc, o), out, 0);
    }
    require(o.n >= 1 && !o.degrees.empty(), errc::invalid_input,
            "hodge needs --hodge, or --n with --degrees");
    std::vector<int> degs;
    for (const auto& v : parse_rational_list(o.degrees)) {
        require(v.get_den() == 1 && v >= 1, errc::invalid_input, "degrees are positive integers");
        degs.push_back(static_cast<int>(v.get_num().get_si()));
    }
    CiHodge ci = ci_hodge_numbers(o.n, degs);
    doc["n"] = o.n;
    ojson jd = ojson::array();
    for (int d : degs) jd.push_back(d);
    doc["degrees"] = jd;
    doc["m"] = ci.hodge.m;
    ojson jh = ojson::array();
    for (long x : ci.hodge.h) jh.push_back(x);
    doc["h"] = jh;
    if (ci.b) doc["b"] = *ci.b;
    doc["formula_b"] = ci.formula_b;
    if (std::any_of(ci.hodge.h.begin(), ci.hodge.h.end(), [](long x) { return x > 0; }))
        doc["polygon"] = polygon_to_json(hodge_polygon(ci.hodge));
    return emit(finish(doc, o), out, 0);
}

int cmd_check(const Options& o, std::string& out) {
    ojson doc;
    doc["command"] = "check";
    doc["kind"] = o.kind;

    if (o.kind == "cw" || o.kind == "ax-katz" || o.kind == "wan") {
        PolySystem sys = parse_system_json(slurp(o.input));
        CongruenceReport rep;
        if (o.kind == "cw")
            rep = check_chevalley_warning(sys, count_opts(o));
        else if (o.kind == "ax-katz")
            rep = check_ax_katz(sys, count_opts(o));
        else
            rep = wan_sum(sys, o.precision, count_opts(o));
        doc["report"] = report_to_json(rep);
        return emit(finish(doc, o), out, rep.pass ? 0 : 1);
    }
    if (o.kind == "esnault") {
        PolySystem sys = parse_system_json(slurp(o.input));
        CongruenceReport rep = check_esnault(sys, o.ext, count_opts(o));
        doc["s"] = o.ext;
        doc["report"] = report_to_json(rep);
        return emit(finish(doc, o), out, rep.pass ? 0 : 1);
    }
    if (o.kind == "birational") {
        require(!o.input2.empty(), errc::invalid_input, "birational needs two system files");
        PolySystem x = parse_system_json(slurp(o.input));
        PolySystem y = parse_system_json(slurp(o.input2));
        CongruenceReport rep = check_birational_pair(x, y, o.ext, count_opts(o));
        doc["s"] = o.ext;
        doc["report"] = report_to_json(rep);
        return emit(finish(doc, o), out, rep.pass ? 0 : 1);
    }
    if (o.kind == "mazur") {
        require(o.genus >= 1, errc::invalid_input, "mazur needs --genus");
        PolySystem sys = parse_system_json(slurp(o.input));
        std::vector<mpz_class> counts;
        for (int s = 1; s <= o.genus; ++s)
            counts.emplace_back(static_cast<unsigned long>(
                count_projective(sys, s, count_opts(o))));
        ZPoly numerator = curve_numerator(counts, o.genus, sys.field.q);
        Polygon newton =
            curve_newton_polygon(numerator, mpz_class(static_cast<long>(sys.field.p)),
                                 sys.field.a);
        HodgeNumbers h{1, {o.genus, o.genus}};
        Polygon hodge = hodge_polygon(h);
        MazurVerdict v = check_mazur(newton, hodge);
        doc["genus"] = o.genus;
        ojson jc = ojson::array();
        for (const auto& c : counts) jc.push_back(mpz_to_json(c));
        doc["counts"] = jc;
        ojson jn = ojson::array();
        for (const auto& c : numerator) jn.push_back(mpz_to_json(c));
        doc["numerator"] = jn;
        doc["newton"] = polygon_to_json(newton);
        doc["hodge"] = polygon_to_json(hodge);
        doc["verdict"] = v.pass ? "pass" : "fail";
        doc["strict_somewhere"] = v.strict_somewhere;
        return emit(finish(doc, o), out, v.pass ? 0 : 1);
    }
    if (o.kind == "slope-interval") {
        require(o.p >= 2, errc::invalid_input, "slope-interval needs --p");
        WeilData weil = parse_weil_json(slurp(o.input));
        SlopeIntervalResult res = slope_interval_check(weil, weil.d, mpz_class(o.p));
        doc["d"] = weil.d;
        doc["verdict"] = res.pass ? "pass" : "fail";
        ojson jv = ojson::array();
        for (const auto& violation : res.violations) {
            ojson item;
            item["i"] = violation.i;
            item["slope"] = rational_or_int(violation.slope);
            jv.push_back(item);
        }
        doc["violations"] = jv;
        return emit(finish(doc, o), out, res.pass ? 0 : 1);
    }
    fail(errc::invalid_input, "unknown check kind '" + o.kind + "'");
}

int cmd_isocrystal(const Options& o, std::string& out) {
    FIsocrystal m = parse_isocrystal_json(slurp(o.input));
    ojson doc;
    doc["command"] = "isocrystal";
    doc["dim"] = m.dim();
    doc["a"] = m.a;
    ojson js = ojson::array();
    for (const auto& [slope, mult] : slopes(m))
        js.push_back(ojson::array({rational_or_int(slope), ojson(mult)}));
    doc["slopes"] = js;
    DieudonneManin dm = dieudonne_manin(m);
    ojson jd = ojson::array();
    for (const auto& piece : dm.pieces) {
        ojson item;
        item["alpha"] = rational_or_int(piece.alpha);
        item["n"] = piece.n_alpha;
        jd.push_back(item);
    }
    doc["decomposition"] = jd;
    if (!o.probe.empty()) {
        require(!o.alpha_text.empty(), errc::invalid_input, "--probe needs --alpha");
        std::vector<mpq_class> x = parse_rational_list(o.probe);
        ProbeVerdict v = filtration_probe(m, x, parse_rational(o.alpha_text), o.iters);
        doc["probe"] = v == ProbeVerdict::bounded     ? "bounded"
                       : v == ProbeVerdict::unbounded ? "unbounded"
                                                      : "inconclusive";
    }
    return emit(finish(doc, o), out, 0);
}

} // namespace

RunResult run_cli(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"exact point counts, zeta functions, polygons and slopes over finite fields"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--threads", o.threads, "worker threads for counting loops");
        cmd->add_option("--budget", o.budget, "maximum enumerated points");
        cmd->add_option("--seed", o.seed, "seed echoed into the output");
    };

    CLI::App* count = app.add_subcommand("count", "count points of a polynomial system");
    count->add_option("input", o.input, "system JSON file")->required();
    count->add_option("--ext", o.ext, "count over F_{q^s}");
    add_common(count);

    CLI::App* zeta = app.add_subcommand("zeta", "zeta series and rational reconstruction");
    zeta->add_option("--counts", o.counts, "comma-separated N_1,N_2,...")->required();
    zeta->add_option("--order", o.order, "series truncation order");
    zeta->add_option("--deg-num", o.deg_num, "numerator degree bound");
    zeta->add_option("--deg-den", o.deg_den, "denominator degree bound");
    add_common(zeta);

    CLI::App* newton = app.add_subcommand("newton", "Newton polygon of a polynomial");
    newton->add_option("--poly", o.poly, "comma-separated coefficients, ascending")->required();
    newton->add_option("--p", o.p, "prime")->required();
    add_common(newton);

    CLI::App* hodge = app.add_subcommand("hodge", "Hodge numbers and polygon");
    hodge->add_option("--hodge", o.hvec, "comma-separated h_0,...,h_m");
    hodge->add_option("--n", o.n, "ambient P^{n-1}");
    hodge->add_option("--degrees", o.degrees, "complete-intersection degrees");
    add_common(hodge);

    CLI::App* check = app.add_subcommand("check", "congruence and polygon checks");
    check->add_option("--kind", o.kind,
                      "cw | ax-katz | wan | esnault | birational | mazur | slope-interval")
        ->required();
    check->add_option("input", o.input, "input JSON file")->required();
    check->add_option("input2", o.input2, "second system (birational)");
    check->add_option("--ext", o.ext, "base change to F_{q^s}");
    check->add_option("--precision", o.precision, "p-adic precision M");
    check->add_option("--genus", o.genus, "curve genus (mazur)");
    check->add_option("--p", o.p, "prime (slope-interval)");
    add_common(check);

    CLI::App* iso = app.add_subcommand("isocrystal", "slopes and decomposition");
    iso->add_option("input", o.input, "isocrystal JSON file")->required();
    iso->add_option("--probe", o.probe, "vector for the filtration probe");
    iso->add_option("--alpha", o.alpha_text, "slope threshold r/d");
    iso->add_option("--iters", o.iters, "probe iteration cap");
    add_common(iso);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    RunResult result;
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        result.output = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        ojson err;
        err["error"] = {{"kind", "Usage"}, {"message", e.what()}};
        result.output = err.dump() + "\n";
        result.exit_code = 2;
        return result;
    }

    try {
        if (count->parsed()) result.exit_code = cmd_count(o, result.output);
        else if (zeta->parsed()) result.exit_code = cmd_zeta(o, result.output);
        else if (newton->parsed()) result.exit_code = cmd_newton(o, result.output);
        else if (hodge->parsed()) result.exit_code = cmd_hodge(o, result.output);
        else if (check->parsed()) result.exit_code = cmd_check(o, result.output);
        else if (iso->parsed()) result.exit_code = cmd_isocrystal(o, result.output);
    } catch (const error& e) {
        ojson err;
        err["error"] = {{"kind", errc_name(e.code())}, {"message", e.what()}};
        result.output = err.dump() + "\n";
        result.exit_code = 2;
    } catch (const std::exception& e) {
        ojson err;
        err["error"] = {{"kind", "Internal"}, {"message", e.what()}};
        result.output = err.dump() + "\n";
        result.exit_code = 2;
    }
    return result;
}

} // namespace ffz
