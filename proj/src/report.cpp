#include "mapspace/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <sstream>

namespace mapspace {

Json polynomial_json(const Polynomial& p)
{
    Json out = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json labels = Json::array();
        for (GeneratorId g : m.factors())
            labels.push_back(p.table().label(g));
        out.push_back(Json::array({to_string(c), std::move(labels)}));
    }
    return out;
}

Json matrix_json(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json validation_json(const std::string& source, const ValidationResult& v)
{
    Json j;
    j["input"] = source;
    j["valid"] = v.ok();
    Json diags = Json::array();
    for (const auto& d : v.diagnostics)
        diags.push_back({{"check", d.check}, {"message", d.message}});
    j["diagnostics"] = std::move(diags);
    if (v.ok()) {
        const PoincareData& P = *v.data;
        j["ring"] = P.name();
        j["dimension"] = P.dimension();
        Json betti = Json::object();
        for (int d = 0; d <= P.dimension(); ++d)
            if (P.betti(d))
                betti[std::to_string(d)] = P.betti(d);
        j["betti"] = std::move(betti);
        j["primitive"] = is_primitive(P);
        j["lowest_upper_degree"] = lowest_upper_degree(P);
    }
    return j;
}

Json basis_json(const CanonicalBasis& B)
{
    const PoincareData& P = B.ring();
    Json out = Json::array();
    for (std::size_t x = 0; x < B.size(); ++x) {
        Json e;
        e["label"] = B.label(x);
        e["degree"] = B.degree(x);
        // Coordinates of the dual cohomology vector in the input classes.
        const int d = B.degree(x);
        const auto& same = B.of_degree(d);
        const std::size_t col = static_cast<std::size_t>(std::find(same.begin(), same.end(), x) - same.begin());
        Json coords = Json::object();
        const Matrix& C = B.change(d);
        for (std::size_t r = 0; r < C.rows(); ++r)
            if (sgn(C(r, col)) != 0)
                coords[P.cls(P.of_degree(d)[r]).label] = to_string(C(r, col));
        e["coordinates"] = std::move(coords);
        if (B.in_hat_domain(x)) {
            e["dual"] = B.label(B.hat(x));
            e["epsilon"] = to_string(B.eps_of(x));
        }
        out.push_back(std::move(e));
    }
    return out;
}

Json model_json(const Model& M, const std::string& kind)
{
    Json j;
    j["ring"] = M.basis->ring().name();
    j["model"] = kind;
    Json gens = Json::array();
    for (GeneratorId g = 0; g < M.table().size(); ++g) {
        const auto& p = M.provenance[g];
        gens.push_back({{"label", M.table().label(g)},
                        {"degree", M.table().degree(g)},
                        {"provenance", {{"symbol", to_string(p.kind)}, {"class", M.basis->label(p.basis)}}}});
    }
    j["generators"] = std::move(gens);
    Json d = Json::object();
    for (GeneratorId g = 0; g < M.table().size(); ++g)
        d[M.table().label(g)] = polynomial_json(M.cga.d(g));
    j["differential"] = std::move(d);
    DSquaredVerdict v = check_d_squared(M.cga);
    j["d_squared_zero"] = v.passed;
    if (!v.passed)
        j["d_squared_failure"] = v.reason;
    j["minimality"] = to_string(is_minimal(M.cga));
    return j;
}

Json map_json(const AlgebraMap& f)
{
    Json j = Json::object();
    for (GeneratorId g = 0; g < f.source()->size(); ++g)
        j[f.source()->label(g)] = polynomial_json(f.image(g));
    return j;
}

Json certificate_json(const Splitting& S, const SplittingCertificate& c)
{
    const CanonicalBasis& B = S.basis();
    Json j;
    j["ring"] = B.ring().name();
    Json thetas = Json::array();
    for (std::size_t x : S.thetas())
        thetas.push_back(B.label(x));
    j["layer_classes"] = std::move(thetas);
    j["eta"] = polynomial_json(c.eta);
    j["xi"] = polynomial_json(c.xi);
    j["alpha"] = polynomial_json(c.alpha);
    j["mu"] = polynomial_json(c.mu);
    j["zeta"] = polynomial_json(c.zeta);
    j["eta_squared_minus_xi_minus_d_alpha"] = polynomial_json(c.alpha_residual);
    j["quarter_eta_squared_minus_d_zeta"] = polynomial_json(c.zeta_residual);
    j["xi_minus_d_mu"] = polynomial_json(c.mu_verdict.direct);
    Json layers = Json::array();
    for (const auto& r : c.mu_verdict.layers)
        layers.push_back({{"layer", r.layer},
                          {"theta", B.label(r.theta)},
                          {"projected", polynomial_json(r.projected)},
                          {"derived", polynomial_json(r.derived)},
                          {"zero", r.zero()}});
    j["layers"] = std::move(layers);
    j["layers_vacuous"] = c.mu_verdict.vacuous();
    j["zeta_decomposable"] = c.zeta_decomposable;
    j["split_is_dga_map"] = c.split_is_dga_map;
    j["split_inverse_is_dga_map"] = c.split_inverse_is_dga_map;
    j["split_linear_part_invertible"] = c.split_linear_iso;
    j["split_round_trip"] = c.split_round_trip;
    j["valid"] = c.valid();
    return j;
}

Json ne_report_json(const NEReport& r)
{
    Json j;
    j["component"] = r.component;
    j["value"] = r.value;
    j["dimension"] = r.dimension;
    j["primitive"] = r.primitive;
    j["lowest_upper_degree"] = r.lowest_upper_degree;
    j["verified"] = r.verified();
    if (r.witness) {
        const Witness& w = *r.witness;
        Json wj;
        wj["status"] = "machine-verified lower bound";
        wj["map"] = map_json(w.map);
        if (w.first_singular_degree)
            wj["first_singular_degree"] = *w.first_singular_degree;
        else
            wj["first_singular_degree"] = nullptr;
        Json t = Json::array();
        for (const auto& line : w.transcript)
            t.push_back({{"check", line.check}, {"passed", line.passed}, {"detail", line.detail}});
        wj["transcript"] = std::move(t);
        j["witness"] = std::move(wj);
    }
    j["upper_bound"] = {{"status", "cited"}, {"note", r.upper_bound}};
    return j;
}

Json identity_report_json(const IdentityReport& r)
{
    Json j;
    j["ring"] = r.ring;
    j["layers"] = r.layers;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj{{"name", c.name},
                {"status", !c.passed() ? "fail" : (c.vacuous() ? "vacuous" : "pass")},
                {"instances", c.instances},
                {"failures", c.failure_count}};
        Json f = Json::array();
        for (const auto& s : c.failures)
            f.push_back(s);
        cj["examples"] = std::move(f);
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["passed"] = r.passed();
    return j;
}

Json ranks_json(const std::map<int, std::size_t>& ranks)
{
    Json j = Json::object();
    for (const auto& [d, r] : ranks)
        j[std::to_string(d)] = r;
    return j;
}

namespace {

bool is_term_list(const Json& j)
{
    if (!j.is_array() || j.empty())
        return false;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array())
            return false;
        for (const auto& l : t[1])
            if (!l.is_string())
                return false;
    }
    return true;
}

std::string terms_text(const Json& j)
{
    std::string out;
    for (const auto& t : j) {
        if (!out.empty())
            out += " + ";
        out += t[0].get<std::string>();
        for (const auto& l : t[1])
            out += " " + l.get<std::string>();
    }
    return out;
}

std::string scalar_text(const Json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

void flatten_into(const Json& j, const std::string& path, FlatEntries& out)
{
    if (is_term_list(j)) {
        out.emplace_back(path, terms_text(j));
    } else if (j.is_object()) {
        if (j.empty())
            out.emplace_back(path, "{}");
        for (const auto& [k, v] : j.items())
            flatten_into(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array()) {
        if (j.empty())
            out.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten_into(j[i], fmt::format("{}[{}]", path, i), out);
    } else {
        out.emplace_back(path, scalar_text(j));
    }
}

}  // namespace

FlatEntries flatten(const Json& j)
{
    FlatEntries out;
    flatten_into(j, "", out);
    return out;
}

std::string render_text(const Json& j)
{
    std::string out;
    for (const auto& [k, v] : flatten(j))
        out += k + ": " + v + "\n";
    return out;
}

FlatEntries parse_text(const std::string& text)
{
    FlatEntries out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto pos = line.find(": ");
        if (pos == std::string::npos)
            throw ParseError("text report line without a key: " + line);
        out.emplace_back(line.substr(0, pos), line.substr(pos + 2));
    }
    return out;
}

Json parse_terms(const std::string& text)
{
    Json out = Json::array();
    if (text == "[]")
        return out;
    std::size_t start = 0;
    for (;;) {
        std::size_t stop = text.find(" + ", start);
        std::string term = text.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
        std::istringstream ts(term);
        std::string coef, label;
        ts >> coef;
        Json labels = Json::array();
        while (ts >> label)
            labels.push_back(label);
        out.push_back(Json::array({coef, std::move(labels)}));
        if (stop == std::string::npos)
            break;
        start = stop + 3;
    }
    return out;
}

}  // namespace mapspace
