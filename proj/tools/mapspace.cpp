#include "mapspace/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <iostream>
#include <optional>

using namespace mapspace;

namespace {

enum Exit { ok = 0, invalid_input = 1, verification_failed = 2, io_or_usage = 3 };

struct RunConfig {
    std::string input;
    std::optional<long> component;
    std::string format = "text";
    bool minimal = false;
    int verbosity = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Log {
public:
    explicit Log(int level) : level_(level), start_(std::chrono::steady_clock::now()) {}
    void operator()(const std::string& msg) const
    {
        if (level_ <= 0)
            return;
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::cerr << fmt::format("[{:8.3f}s] {}\n", s, msg);
    }

private:
    int level_;
    std::chrono::steady_clock::time_point start_;
};

void emit(const RunConfig& cfg, const Json& j)
{
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << render_text(j);
}

long require_component(const RunConfig& cfg)
{
    if (!cfg.component)
        throw UsageError("--component is required for this command");
    if (*cfg.component != 0 && *cfg.component != 1)
        throw UsageError(fmt::format("component {} is unsupported: only 0 and 1 are handled", *cfg.component));
    return *cfg.component;
}

// Loads and validates; prints diagnostics and returns nullptr when invalid.
std::shared_ptr<const CanonicalBasis> load_basis(const RunConfig& cfg, const Log& log)
{
    log("reading " + cfg.input);
    ValidationResult v = validate_ring(load_ring_file(cfg.input));
    if (!v.ok()) {
        emit(cfg, validation_json(cfg.input, v));
        return nullptr;
    }
    log("building the homology basis");
    return CanonicalBasis::build(v.data);
}

int cmd_validate(const RunConfig& cfg, const Log& log)
{
    log("reading " + cfg.input);
    ValidationResult v = validate_ring(load_ring_file(cfg.input));
    Json j = validation_json(cfg.input, v);
    if (v.ok())
        j["homology_basis"] = basis_json(*CanonicalBasis::build(v.data));
    emit(cfg, j);
    return v.ok() ? ok : invalid_input;
}

int cmd_model(const RunConfig& cfg, const Log& log)
{
    auto B = load_basis(cfg, log);
    if (!B)
        return invalid_input;
    Json j;
    if (!cfg.component) {
        if (cfg.minimal)
            throw UsageError("--minimal needs --component");
        log("building the full model");
        j = model_json(full_model(B), "full");
    } else if (!cfg.minimal) {
        log(fmt::format("building the component model for k = {}", *cfg.component));
        j = model_json(component_model(full_model(B), *cfg.component), fmt::format("component k={}", *cfg.component));
    } else if (require_component(cfg) == 0) {
        log("building the k = 0 minimal model");
        j = model_json(minimal_k0(B), "minimal k=0");
    } else {
        log("building the k = 1 minimal model");
        MinimalK1 M = minimal_k1(B);
        j = model_json(M.wbar, "minimal k=1");
        j["eta"] = polynomial_json(M.eta);
    }
    j["component"] = cfg.component ? Json(*cfg.component) : Json(nullptr);
    emit(cfg, j);
    return j["d_squared_zero"].get<bool>() ? ok : verification_failed;
}

int cmd_selfclose(const RunConfig& cfg, const Log& log)
{
    const long k = require_component(cfg);
    auto B = load_basis(cfg, log);
    if (!B)
        return invalid_input;
    log(fmt::format("constructing and checking the witness for k = {}", k));
    NEReport r = self_closeness(B, k);
    Json j;
    j["ring"] = B->ring().name();
    Json body = ne_report_json(r);
    for (auto& [key, value] : body.items())
        j[key] = value;
    emit(cfg, j);
    return r.verified() ? ok : verification_failed;
}

int cmd_verify(const RunConfig& cfg, const Log& log)
{
    auto B = load_basis(cfg, log);
    if (!B)
        return invalid_input;
    log("running the identity suite");
    IdentityReport rep = run_identity_suite(B);
    log("building the splitting certificate");
    MinimalK1 M = minimal_k1(B);
    Splitting S(M);
    SplittingCertificate cert = build_zeta_and_split(S);
    Json j = identity_report_json(rep);
    j["certificate"] = certificate_json(S, cert);
    emit(cfg, j);
    return rep.passed() && cert.valid() ? ok : verification_failed;
}

int cmd_ranks(const RunConfig& cfg, const Log& log)
{
    const long k = require_component(cfg);
    auto B = load_basis(cfg, log);
    if (!B)
        return invalid_input;
    std::map<int, std::size_t> ranks;
    if (k == 0) {
        ranks = homotopy_ranks(minimal_k0(B).cga);
    } else {
        ranks = homotopy_ranks(minimal_k1(B).wbar.cga);
    }
    Json j;
    j["ring"] = B->ring().name();
    j["component"] = k;
    j["ranks"] = ranks_json(ranks);
    emit(cfg, j);
    return ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rational models of mapping spaces into even spheres, and their self-closeness numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--input", cfg.input, "ring file (JSON)")->required();
    app.add_option("--component", cfg.component, "component degree k");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--minimal", cfg.minimal, "use the minimal model of the component");
    app.add_flag("-v,--verbose", cfg.verbosity, "progress on stderr");

    std::function<int(const RunConfig&, const Log&)> command;
    auto sub = [&](const char* name, const char* help, auto fn) {
        app.add_subcommand(name, help)->callback([&command, fn] { command = fn; });
    };
    sub("validate", "check the ring axioms and list diagnostics", cmd_validate);
    sub("model", "export the full, component or minimal model", cmd_model);
    sub("selfclose", "self-closeness number with a verified witness", cmd_selfclose);
    sub("verify", "run the identity suite and the splitting certificate", cmd_verify);
    sub("ranks", "ranks of the minimal model generators by degree", cmd_ranks);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return io_or_usage;
    }

    Log log(cfg.verbosity);
    try {
        return command(cfg, log);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return io_or_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return io_or_usage;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal verification failed: " << e.what() << "\n";
        return verification_failed;
    } catch (const StructuralError& e) {
        std::cerr << "internal verification failed: " << e.what() << "\n";
        return verification_failed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_or_usage;
    } catch (const std::runtime_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return io_or_usage;
    }
}
