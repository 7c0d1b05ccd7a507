#include "ffzeta/json_io.hpp"

#include <algorithm>

namespace ffz {

namespace {

using json = nlohmann::json;

void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::vector<std::string>& required) {
    require(obj.is_object(), errc::invalid_input, "expected a JSON object");
    for (const auto& [key, value] : obj.items())
        require(std::find(allowed.begin(), allowed.end(), key) != allowed.end(),
                errc::invalid_input, "unknown key '" + key + "'");
    for (const auto& key : required)
        require(obj.contains(key), errc::invalid_input, "missing key '" + key + "'");
}

i64 get_int(const json& v, const char* what) {
    require(v.is_number_integer(), errc::invalid_input,
            std::string("expected an integer for ") + what);
    return v.get<i64>();
}

FieldElement parse_field_literal(const json& v, const FieldDesc& field) {
    if (v.is_number_integer()) return field.from_int(v.get<i64>());
    require(v.is_array(), errc::invalid_input, "field literal must be an integer or array");
    require(v.size() == static_cast<size_t>(field.a), errc::invalid_input,
            "field literal length must equal the extension degree");
    FieldElement e(field.a);
    for (int i = 0; i < field.a; ++i) {
        i64 c = get_int(v[i], "field literal entry") % field.p;
        e[i] = c < 0 ? c + field.p : c;
    }
    return e;
}

mpz_class json_to_mpz(const json& v, const char* what) {
    if (v.is_number_integer()) return mpz_class(v.get<i64>());
    if (v.is_string()) return mpz_class(v.get<std::string>());
    fail(errc::invalid_input, std::string("expected an integer for ") + what);
}

mpq_class json_to_mpq(const json& v, const char* what) {
    if (v.is_array()) {
        require(v.size() == 2, errc::invalid_input,
                std::string(what) + ": rational must be a [num, den] pair");
        mpz_class num = json_to_mpz(v[0], what), den = json_to_mpz(v[1], what);
        require(den != 0, errc::invalid_input, std::string(what) + ": zero denominator");
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    }
    return mpq_class(json_to_mpz(v, what));
}

} // namespace

PolySystem parse_system_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::invalid_input, std::string("JSON parse error: ") + e.what());
    }
    check_keys(doc, {"p", "a", "nvars", "homogeneous", "polys", "blocks"},
               {"p", "a", "nvars", "polys"});
    i64 p = get_int(doc["p"], "p");
    i64 a = get_int(doc["a"], "a");
    require(a >= 1 && a <= 64, errc::invalid_input, "a out of range");
    FieldDesc field = make_field(p, static_cast<int>(a));
    i64 nvars = get_int(doc["nvars"], "nvars");
    require(nvars >= 0 && nvars <= 64, errc::invalid_input, "nvars out of range");
    bool homogeneous = false;
    if (doc.contains("homogeneous")) {
        require(doc["homogeneous"].is_boolean(), errc::invalid_input,
                "homogeneous must be a boolean");
        homogeneous = doc["homogeneous"].get<bool>();
    }
    std::vector<int> blocks;
    if (doc.contains("blocks")) {
        require(doc["blocks"].is_array(), errc::invalid_input, "blocks must be an array");
        for (const auto& b : doc["blocks"]) blocks.push_back(static_cast<int>(get_int(b, "block size")));
    }
    require(doc["polys"].is_array(), errc::invalid_input, "polys must be an array");
    std::vector<Polynomial> polys;
    for (const auto& jpoly : doc["polys"]) {
        require(jpoly.is_array(), errc::invalid_input, "each polynomial must be an array");
        std::vector<Monomial> monos;
        for (const auto& jmono : jpoly) {
            check_keys(jmono, {"c", "e"}, {"c", "e"});
            Monomial m;
            m.coeff = parse_field_literal(jmono["c"], field);
            require(jmono["e"].is_array() && jmono["e"].size() == static_cast<size_t>(nvars),
                    errc::invalid_input, "exponent vector must have nvars entries");
            for (const auto& e : jmono["e"]) {
                i64 exp = get_int(e, "exponent");
                require(exp >= 0 && exp <= 1024, errc::invalid_input, "exponent out of range");
                m.exps.push_back(static_cast<int>(exp));
            }
            monos.push_back(std::move(m));
        }
        polys.push_back(make_polynomial(field, static_cast<int>(nvars), std::move(monos)));
    }
    return make_system(field, static_cast<int>(nvars), std::move(polys), homogeneous,
                       std::move(blocks));
}

FIsocrystal parse_isocrystal_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::invalid_input, std::string("JSON parse error: ") + e.what());
    }
    check_keys(doc, {"p", "a", "matrix"}, {"p", "a", "matrix"});
    mpz_class p = json_to_mpz(doc["p"], "p");
    i64 a = get_int(doc["a"], "a");
    require(doc["matrix"].is_array() && !doc["matrix"].empty(), errc::invalid_input,
            "matrix must be a nonempty array of rows");
    QMat m;
    for (const auto& jrow : doc["matrix"]) {
        require(jrow.is_array(), errc::invalid_input, "matrix rows must be arrays");
        std::vector<mpq_class> row;
        for (const auto& je : jrow) row.push_back(json_to_mpq(je, "matrix entry"));
        m.push_back(std::move(row));
    }
    return make_isocrystal(p, static_cast<int>(a), std::move(m));
}

WeilData parse_weil_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(errc::invalid_input, std::string("JSON parse error: ") + e.what());
    }
    check_keys(doc, {"q", "d", "factors"}, {"q", "d", "factors"});
    i64 q = get_int(doc["q"], "q");
    i64 d = get_int(doc["d"], "d");
    require(doc["factors"].is_array(), errc::invalid_input, "factors must be an array");
    std::vector<ZPoly> factors;
    for (const auto& jf : doc["factors"]) {
        require(jf.is_array() && !jf.empty(), errc::invalid_input,
                "each factor is a nonempty coefficient array");
        ZPoly f;
        for (const auto& c : jf) f.push_back(json_to_mpz(c, "factor coefficient"));
        factors.push_back(std::move(f));
    }
    return make_weil_data(static_cast<int>(d), q, std::move(factors));
}

mpq_class parse_rational(const std::string& text) {
    try {
        size_t slash = text.find('/');
        if (slash == std::string::npos) return mpq_class(mpz_class(text));
        mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
        require(den != 0, errc::invalid_input, "zero denominator");
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(errc::invalid_input, "cannot parse rational '" + text + "'");
    }
}

ojson mpz_to_json(const mpz_class& x) {
    if (x.fits_slong_p()) return ojson(x.get_si());
    return ojson(x.get_str());
}

ojson mpq_pair(const mpq_class& x) {
    return ojson::array({mpz_to_json(mpz_class(x.get_num())), mpz_to_json(mpz_class(x.get_den()))});
}

ojson rational_or_int(const mpq_class& x) {
    if (x.get_den() == 1) return mpz_to_json(mpz_class(x.get_num()));
    return mpq_pair(x);
}

ojson polygon_to_json(const Polygon& poly) {
    ojson segments = ojson::array();
    for (const auto& [slope, mult] : poly.segments)
        segments.push_back(ojson::array({rational_or_int(slope), ojson(mult)}));
    ojson out;
    out["segments"] = segments;
    out["length"] = poly.total_length();
    return out;
}

ojson zeta_to_json(const ZetaFunction& zeta) {
    auto poly = [](const QPoly& f) {
        ojson arr = ojson::array();
        for (const auto& c : f) arr.push_back(mpq_pair(c));
        return arr;
    };
    ojson out;
    out["num"] = poly(zeta.num);
    out["den"] = poly(zeta.den);
    return out;
}

ojson report_to_json(const CongruenceReport& report) {
    ojson out;
    out["kind"] = report.kind;
    out["count"] = mpz_to_json(report.count);
    if (report.kind == "birational") out["other_count"] = mpz_to_json(report.other_count);
    if (report.kind == "ax-katz") out["b"] = report.b;
    out["modulus"] = mpz_to_json(report.modulus);
    out["residue"] = mpz_to_json(report.residue);
    out["expected_residue"] = mpz_to_json(report.expected_residue);
    out["verdict"] = report.pass ? "pass" : "fail";
    if (!report.assertion.empty()) out["assertion"] = report.assertion;
    return out;
}

} // namespace ffz
