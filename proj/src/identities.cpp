#include "mapspace/identities.hpp"

#include "mapspace/kernels.hpp"
#include "mapspace/selfclose.hpp"

#include <fmt/format.h>

namespace mapspace {

namespace {

constexpr std::size_t kKeptFailures = 8;

class Tally {
public:
    explicit Tally(std::string name) { check_.name = std::move(name); }

    template <class Describe>
    void expect(bool ok, Describe describe)
    {
        ++check_.instances;
        if (ok)
            return;
        if (check_.failure_count++ < kKeptFailures)
            check_.failures.push_back(describe());
    }

    IdentityCheck done() { return std::move(check_); }

private:
    IdentityCheck check_;
};

std::string str(const Scalar& s) { return to_string(s); }

// Sign s with (u⊗a)(u⊗b)(u⊗c) = s · (normal form); 0 if the product vanishes.
int ordered_sign(const Splitting& S, std::initializer_list<std::size_t> xs)
{
    std::vector<GeneratorId> ids;
    for (std::size_t x : xs)
        ids.push_back(S.u_id(x));
    auto nm = normalize_monomial(S.wbar().table(), ids);
    return nm ? nm->sign : 0;
}

Polynomial project_derive(const Splitting& S, std::size_t i, const Polynomial& p)
{
    return S.partial(i, S.project(i, p));
}

Polynomial dmu_of(const Splitting& S, std::size_t x) { return S.d(S.mu_of(x)); }

}  // namespace

IdentityCheck check_epsilon_degrees(const CanonicalBasis& B)
{
    Tally t("ε(x,y,z) vanishes unless |x|+|y|=|z|");
    for (std::size_t x = 0; x < B.size(); ++x)
        for (std::size_t y = 0; y < B.size(); ++y)
            for (std::size_t z = 0; z < B.size(); ++z)
                t.expect(sgn(B.eps(x, y, z)) == 0 || B.degree(x) + B.degree(y) == B.degree(z), [&] {
                    return fmt::format("ε({},{},{}) = {}", B.label(x), B.label(y), B.label(z), str(B.eps(x, y, z)));
                });
    return t.done();
}

IdentityCheck check_epsilon_unit(const CanonicalBasis& B)
{
    Tally t("ε(x,1,x) = ε(1,x,x) = 1");
    for (std::size_t x = 0; x < B.size(); ++x)
        t.expect(B.eps(x, B.unit(), x) == 1 && B.eps(B.unit(), x, x) == 1,
                 [&] { return fmt::format("fails for {}", B.label(x)); });
    return t.done();
}

IdentityCheck check_epsilon_graded_symmetry(const CanonicalBasis& B)
{
    Tally t("ε(x,y,z) = (-1)^{|x||y|} ε(y,x,z)");
    for (std::size_t x = 0; x < B.size(); ++x)
        for (std::size_t y = 0; y < B.size(); ++y)
            for (std::size_t z = 0; z < B.size(); ++z)
                t.expect(B.eps(x, y, z) == koszul_sign(B.degree(x), B.degree(y)) * B.eps(y, x, z), [&] {
                    return fmt::format("({},{},{})", B.label(x), B.label(y), B.label(z));
                });
    return t.done();
}

IdentityCheck check_associativity(const CanonicalBasis& B)
{
    IdentityCheck c;
    c.name = "Σ_y ε(x1,x2,y)ε(y,x3,x4) = Σ_z ε(x2,x3,z)ε(x1,z,x4) over basis 4-tuples";
    const std::size_t N = B.size();
    c.instances = N * N * N * N;
    auto bad = kernels::associativity_violations(B);
    c.failure_count = bad.size();
    for (std::size_t k = 0; k < bad.size() && k < kKeptFailures; ++k)
        c.failures.push_back(fmt::format("({},{},{},{})", B.label(bad[k][0]), B.label(bad[k][1]), B.label(bad[k][2]),
                                         B.label(bad[k][3])));
    return c;
}

IdentityCheck check_top_pairing_regular(const CanonicalBasis& B)
{
    Tally t("E_k(w) is regular for every k");
    for (int k = 0; k <= B.dimension(); ++k) {
        Matrix E = B.e_matrix(k, B.w());
        t.expect(is_regular(E), [&] { return fmt::format("k={}: {}", k, E.to_string()); });
    }
    return t.done();
}

IdentityCheck check_dual_involution(const CanonicalBasis& B)
{
    Tally t("x̂ is the unique z with ε(x,z,w) != 0, and x̂̂ = x");
    for (std::size_t x : B.hat_domain()) {
        std::size_t hits = 0;
        std::size_t found = 0;
        for (std::size_t z = 0; z < B.size(); ++z)
            if (sgn(B.eps(x, z, B.w())) != 0) {
                ++hits;
                found = z;
            }
        t.expect(hits == 1 && found == B.hat(x) && B.hat(B.hat(x)) == x,
                 [&] { return fmt::format("{}: {} partners", B.label(x), hits); });
    }
    return t.done();
}

IdentityCheck check_dual_normalization(const CanonicalBasis& B)
{
    Tally t("ε(x) = 1 and ε(x̂) = (-1)^{|x||x̂|} for 0 < |x| < n");
    for (std::size_t x : B.hat_domain()) {
        if (B.degree(x) >= B.n())
            continue;
        std::size_t xh = B.hat(x);
        t.expect(B.eps_of(x) == 1 && B.eps_of(xh) == koszul_sign(B.degree(x), B.degree(xh)), [&] {
            return fmt::format("{}: ε(x) = {}, ε(x̂) = {}", B.label(x), str(B.eps_of(x)), str(B.eps_of(xh)));
        });
    }
    return t.done();
}

IdentityCheck check_dual_transfer(const CanonicalBasis& B)
{
    Tally t("ε(x̂3)ε(x1,x2,x̂3) = ε(x1)ε(x2,x3,x̂1)");
    for (std::size_t x1 : B.hat_domain())
        for (std::size_t x2 : B.hat_domain())
            for (std::size_t x3 : B.hat_domain()) {
                Scalar lhs = B.eps_of(B.hat(x3)) * B.eps(x1, x2, B.hat(x3));
                Scalar rhs = B.eps_of(x1) * B.eps(x2, x3, B.hat(x1));
                t.expect(lhs == rhs, [&] {
                    return fmt::format("({},{},{}): {} != {}", B.label(x1), B.label(x2), B.label(x3), str(lhs),
                                       str(rhs));
                });
            }
    return t.done();
}

IdentityCheck check_lambda_sum(const CanonicalBasis& B)
{
    IdentityCheck c;
    c.name = "Σ_i ε(x̂_i)ε(x_i)λ(x_i) = 3 when |x1|+|x2|+|x3| = 2n";
    c.instances = kernels::admissible_triples(B).size();
    auto bad = kernels::lambda_sum_violations(B);
    c.failure_count = bad.size();
    for (std::size_t k = 0; k < bad.size() && k < kKeptFailures; ++k)
        c.failures.push_back(fmt::format("({},{},{})", B.label(bad[k][0]), B.label(bad[k][1]), B.label(bad[k][2])));
    return c;
}

IdentityCheck check_models(std::shared_ptr<const CanonicalBasis> B, const MinimalK1& M)
{
    Tally t("d² = 0 and minimality of the constructed models");
    Model full = full_model(B);
    Model k0 = minimal_k0(B);
    struct Entry {
        const char* name;
        const FreeCGA* cga;
        bool want_minimal;
    };
    const Entry entries[] = {{"full", &full.cga, false},
                             {"k=0", &k0.cga, true},
                             {"k=1 quotient", &M.quotient.cga, false},
                             {"k=1 minimal", &M.wbar.cga, true},
                             {"ΛU", &M.u_model.cga, true}};
    for (const auto& e : entries) {
        auto bad = kernels::d_squared_residuals(*e.cga);
        t.expect(bad.empty(), [&] {
            return fmt::format("{}: d²({}) = {}", e.name, e.cga->table().label(bad.front().generator),
                               bad.front().residual.to_string());
        });
        auto verdict = check_d_squared(*e.cga);
        t.expect(verdict.passed, [&] { return fmt::format("{}: {}", e.name, verdict.reason); });
        Minimality m = is_minimal(*e.cga);
        if (e.want_minimal)
            t.expect(m == Minimality::minimal, [&] { return fmt::format("{}: {}", e.name, to_string(m)); });
    }
    Minimality fm = is_minimal(full.cga);
    t.expect(fm != Minimality::minimal, [&] { return fmt::format("full: {}", to_string(fm)); });
    return t.done();
}

IdentityCheck check_eta_expansion(const Splitting& S)
{
    Tally t("η = Σ ε(x)(u⊗x)(u⊗x̂)");
    const CanonicalBasis& B = S.basis();
    Polynomial expect(S.host());
    for (std::size_t x : B.hat_domain())
        expect += S.quadratic(x, B.hat(x), B.eps_of(x));
    t.expect(S.model().eta == expect,
             [&] { return fmt::format("η = {}, expected {}", S.model().eta.to_string(), expect.to_string()); });
    return t.done();
}

IdentityCheck check_mu_differential(const Splitting& S)
{
    Tally t("dμ(x) as the difference of the two ε-sums");
    const CanonicalBasis& B = S.basis();
    for (std::size_t x : S.thetas()) {
        const std::size_t xh = B.hat(x);
        Polynomial a(S.host()), b(S.host());
        for (std::size_t x1 : B.hat_domain())
            for (std::size_t x2 : B.hat_domain()) {
                if (sgn(B.eps(x1, x2, xh)) != 0)
                    a += S.cubic(x1, x2, x, B.eps(x1, x2, xh));
                if (sgn(B.eps(x1, x2, x)) != 0)
                    b += S.cubic(x1, x2, xh, B.eps(x1, x2, x));
            }
        Polynomial expect = a - koszul_sign(B.degree(x), B.degree(xh)) * b;
        Polynomial got = dmu_of(S, x);
        t.expect(got == expect, [&] {
            return fmt::format("x = {}: dμ(x) = {}, expected {}", B.label(x), got.to_string(), expect.to_string());
        });
    }
    return t.done();
}

IdentityCheck check_layer_decomposition(const Splitting& S)
{
    Tally t("the cubic span is the direct sum of the layers V_i");
    std::size_t total = 0;
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        total += S.layer_basis(i).size();
        for (const auto& m : S.layer_basis(i)) {
            Polynomial p(S.host());
            p.add_term(m, 1);
            t.expect(S.in_cubic_span(p), [&] { return fmt::format("layer {} monomial {} outside the span", i, p.to_string()); });
        }
    }
    for (const auto& m : S.cubic_span())
        t.expect(S.layer_of(m).has_value(), [&] {
            Polynomial p(S.host());
            p.add_term(m, 1);
            return fmt::format("{} lies in no layer or in several", p.to_string());
        });
    t.expect(total == S.cubic_span().size(),
             [&] { return fmt::format("Σ dim V_i = {} but the span has dimension {}", total, S.cubic_span().size()); });
    return t.done();
}

IdentityCheck check_partial_injective(const Splitting& S)
{
    Tally t("∂_i is injective on V_i");
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        const auto& basis = S.layer_basis(i);
        std::vector<Polynomial> images;
        std::map<Monomial, std::size_t> rows;
        for (const auto& m : basis) {
            Polynomial p(S.host());
            p.add_term(m, 1);
            images.push_back(S.partial(i, p));
            for (const auto& [q, c] : images.back().terms())
                rows.emplace(q, rows.size());
        }
        Matrix M(rows.size(), basis.size());
        for (std::size_t col = 0; col < images.size(); ++col)
            for (const auto& [q, c] : images[col].terms())
                M(rows.at(q), col) = c;
        std::size_t r = rank(M);
        t.expect(r == basis.size(), [&] { return fmt::format("layer {}: rank {} < {}", i, r, basis.size()); });
    }
    return t.done();
}

IdentityCheck check_partial_on_basis(const Splitting& S)
{
    Tally t("∂_i on the monomials (u⊗x1)(u⊗x2)(u⊗θ_i)");
    const CanonicalBasis& B = S.basis();
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        const std::size_t th = S.theta(i);
        const GeneratorId tid = S.u_id(th);
        for (const auto& m : S.layer_basis(i)) {
            std::vector<std::size_t> rest;
            bool dropped = false;
            for (GeneratorId g : m.factors()) {
                if (g == tid && !dropped) {
                    dropped = true;
                    continue;
                }
                rest.push_back(S.wbar().provenance[g].basis);
            }
            const std::size_t x1 = rest.at(0), x2 = rest.at(1);
            const int s = ordered_sign(S, {x1, x2, th});
            Polynomial expect(S.host());
            switch (m.count(tid)) {
            case 1:
                expect = S.quadratic(x1, x2, koszul_sign(1, B.degree(x1) + B.degree(x2)));
                break;
            case 2:
                expect = S.quadratic(x1 == th ? x2 : x1, th, 2);
                break;
            default:
                expect = S.quadratic(th, th, 3);
                break;
            }
            expect *= Scalar(s);
            Polynomial p(S.host());
            p.add_term(m, 1);
            Polynomial got = S.partial(i, p);
            t.expect(got == expect, [&] {
                return fmt::format("layer {}: ∂({}) = {}, expected {}", i, p.to_string(), got.to_string(),
                                   expect.to_string());
            });
        }
    }
    return t.done();
}

IdentityCheck check_x1_sum(const Splitting& S)
{
    Tally t("∂_i p_i Σ ε(x1,x1',x̂2)(u⊗x1)(u⊗x1')(u⊗x2) = 2 Σ_{x1 in F_i} ε(θ_i,x1,x̂2)(u⊗x1)(u⊗x2)");
    const CanonicalBasis& B = S.basis();
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        const std::size_t th = S.theta(i);
        for (std::size_t x2 : S.filtration(i - 1)) {
            const std::size_t x2h = B.hat(x2);
            Polynomial sum(S.host());
            for (std::size_t x1 : B.hat_domain())
                for (std::size_t x1p : B.hat_domain())
                    if (sgn(B.eps(x1, x1p, x2h)) != 0)
                        sum += S.cubic(x1, x1p, x2, B.eps(x1, x1p, x2h));
            Polynomial lhs = project_derive(S, i, sum);
            Polynomial rhs(S.host());
            for (std::size_t x1 : S.filtration(i))
                if (sgn(B.eps(th, x1, x2h)) != 0)
                    rhs += S.quadratic(x1, x2, 2 * B.eps(th, x1, x2h));
            t.expect(lhs == rhs, [&] {
                return fmt::format("layer {}, x2 = {}: {} != {}", i, B.label(x2), lhs.to_string(), rhs.to_string());
            });
        }
    }
    return t.done();
}

IdentityCheck check_xi_layers(const Splitting& S)
{
    Tally t("∂_i p_i(ξ) = ε(θ̂_i) ∂_i p_i(dμ(θ_i)) + 2 Σ ε(x1,x2,θ̂_i)(u⊗x1)(u⊗x2)");
    const CanonicalBasis& B = S.basis();
    const Polynomial xi = S.xi();
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        const std::size_t th = S.theta(i), thh = B.hat(th);
        Polynomial lhs = project_derive(S, i, xi);
        Polynomial rhs = B.eps_of(thh) * project_derive(S, i, dmu_of(S, th));
        for (std::size_t x1 : S.filtration(i))
            for (std::size_t x2 : S.filtration(i - 1))
                if (sgn(B.eps(x1, x2, thh)) != 0)
                    rhs += S.quadratic(x1, x2, 2 * B.eps(x1, x2, thh));
        t.expect(lhs == rhs,
                 [&] { return fmt::format("layer {}: {} != {}", i, lhs.to_string(), rhs.to_string()); });
    }
    return t.done();
}

namespace {

enum class PairCase { equal_above, theta_below, distinct_above, all_theta };

PairCase classify(std::size_t th, std::size_t x1, std::size_t x2)
{
    if (x1 == th)
        return x2 == th ? PairCase::all_theta : PairCase::theta_below;
    return x1 == x2 ? PairCase::equal_above : PairCase::distinct_above;
}

// Walks x1 <= x2 in F_i with |x1|+|x2| = |θ̂_i| and a nonzero quadratic.
template <class Visit>
void for_each_pair(const Splitting& S, std::size_t i, Visit visit)
{
    const CanonicalBasis& B = S.basis();
    const std::size_t th = S.theta(i);
    const auto& F = S.filtration(i);
    for (std::size_t a = 0; a < F.size(); ++a)
        for (std::size_t b = a; b < F.size(); ++b) {
            const std::size_t x1 = F[a], x2 = F[b];
            if (B.degree(x1) + B.degree(x2) != B.degree(B.hat(th)))
                continue;
            if (ordered_sign(S, {x1, x2}) == 0)
                continue;
            visit(x1, x2, ordered_sign(S, {x1, x2, th}) != 0);
        }
}

}  // namespace

IdentityCheck check_hat_a_coefficients(const Splitting& S)
{
    Tally t("coefficients of ∂_i p_i(dμ(θ_i))");
    const CanonicalBasis& B = S.basis();
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        const std::size_t th = S.theta(i), thh = B.hat(th);
        Polynomial P = project_derive(S, i, dmu_of(S, th));
        for_each_pair(S, i, [&](std::size_t x1, std::size_t x2, bool cubic_nonzero) {
            const Scalar& e = B.eps(x1, x2, thh);
            Scalar expect = 0;
            if (cubic_nonzero) {
                switch (classify(th, x1, x2)) {
                case PairCase::equal_above:
                    expect = e;
                    break;
                case PairCase::theta_below:
                    expect = 4 * e;
                    break;
                case PairCase::distinct_above:
                    expect = koszul_sign(1, B.degree(x1) + B.degree(x2)) * 2 * e;
                    break;
                case PairCase::all_theta:
                    expect = 3 * e;
                    break;
                }
            }
            Scalar got = P.coefficient_of_product({S.u_id(x1), S.u_id(x2)});
            t.expect(got == expect, [&] {
                return fmt::format("layer {}, ({},{}): {} != {}", i, B.label(x1), B.label(x2), str(got), str(expect));
            });
        });
    }
    return t.done();
}

IdentityCheck check_a_coefficients(const Splitting& S)
{
    Tally t("coefficients of ∂_i p_i(ξ)");
    const CanonicalBasis& B = S.basis();
    const Polynomial xi = S.xi();
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        const std::size_t th = S.theta(i), thh = B.hat(th);
        Polynomial P = project_derive(S, i, xi);
        for_each_pair(S, i, [&](std::size_t x1, std::size_t x2, bool cubic_nonzero) {
            if (!cubic_nonzero)
                return;
            const Scalar& e = B.eps(x1, x2, thh);
            PairCase c = classify(th, x1, x2);
            Scalar expect = (c == PairCase::equal_above || c == PairCase::all_theta) ? 3 * e : 6 * e;
            Scalar got = P.coefficient_of_product({S.u_id(x1), S.u_id(x2)});
            t.expect(got == expect, [&] {
                return fmt::format("layer {}, ({},{}): {} != {}", i, B.label(x1), B.label(x2), str(got), str(expect));
            });
        });
    }
    return t.done();
}

IdentityCheck check_dmu_layers(const Splitting& S)
{
    Tally t("∂_i p_i(dμ) = λ(θ_i) ∂_i p_i(dμ(θ_i)) + 2 Σ (-1)^{|x2||x̂2|} λ(x2) ε(x1,x2,θ̂_i)(u⊗x1)(u⊗x2)");
    const CanonicalBasis& B = S.basis();
    const Polynomial dmu = S.d(S.mu());
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        const std::size_t th = S.theta(i), thh = B.hat(th);
        Polynomial lhs = project_derive(S, i, dmu);
        Polynomial rhs = S.lambda(th) * project_derive(S, i, dmu_of(S, th));
        for (std::size_t x1 : S.filtration(i))
            for (std::size_t x2 : S.filtration(i - 1)) {
                Scalar c = 2 * koszul_sign(B.degree(x2), B.degree(B.hat(x2))) * S.lambda(x2) * B.eps(x1, x2, thh);
                if (sgn(c) != 0)
                    rhs += S.quadratic(x1, x2, c);
            }
        t.expect(lhs == rhs,
                 [&] { return fmt::format("layer {}: {} != {}", i, lhs.to_string(), rhs.to_string()); });
    }
    return t.done();
}

IdentityCheck check_certificate(const Splitting& S, const SplittingCertificate& c)
{
    Tally t("η² = ξ + dα, ξ = dμ, η²/4 = dζ and the splitting isomorphism");
    t.expect(c.alpha_residual.is_zero(), [&] { return "η² - ξ - dα = " + c.alpha_residual.to_string(); });
    t.expect(c.mu_verdict.direct_zero, [&] { return "ξ - dμ = " + c.mu_verdict.direct.to_string(); });
    t.expect(c.mu_verdict.in_cubic_span, [] { return std::string("ξ or dμ leaves the cubic span"); });
    auto layers = kernels::layer_residues(S, c.mu_verdict.direct);
    for (const auto& r : layers)
        t.expect(r.zero(), [&] { return fmt::format("layer {}: ∂p(ξ - dμ) = {}", r.layer, r.derived.to_string()); });
    t.expect(c.zeta_residual.is_zero(), [&] { return "η²/4 - dζ = " + c.zeta_residual.to_string(); });
    t.expect(c.zeta_decomposable, [] { return std::string("ζ is not decomposable"); });
    t.expect(c.split_is_dga_map, [] { return std::string("splitting map does not commute with d"); });
    t.expect(c.split_inverse_is_dga_map, [] { return std::string("inverse does not commute with d"); });
    t.expect(c.split_linear_iso, [] { return std::string("linear part of the splitting map is singular"); });
    t.expect(c.split_round_trip, [] { return std::string("splitting map and inverse do not compose to identities"); });
    return t.done();
}

IdentityCheck check_self_map_relations(std::shared_ptr<const CanonicalBasis> B)
{
    Tally t("matrix relations of the linear part for identity, scalar and witness self-maps");
    Model k0 = minimal_k0(B);
    Witness w = witness_k0(B);
    std::vector<std::pair<std::string, AlgebraMap>> maps;
    maps.emplace_back("identity", AlgebraMap::identity(k0.host()));
    for (const Scalar& c : {Scalar(2), ratio(-1, 3), Scalar(0)})
        maps.emplace_back("scalar " + to_string(c), scalar_self_map(k0, c));
    maps.emplace_back("witness", w.map);
    maps.emplace_back("witness after scalar 3", compose(w.map, scalar_self_map(w.model, 3)));
    for (const auto& [name, f] : maps) {
        auto v = verify_matrix_relations(f, name.starts_with("witness") ? w.model : k0);
        t.expect(v.passed(), [&] {
            if (!v.is_dga_map)
                return fmt::format("{}: not a dga map at {}", name, v.offending_generator.value_or("?"));
            return fmt::format("{}: {}", name, v.violations.front());
        });
    }
    return t.done();
}

bool IdentityReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed())
            return false;
    return true;
}

IdentityReport run_identity_suite(std::shared_ptr<const CanonicalBasis> B)
{
    IdentityReport r;
    r.ring = B->ring().name();
    r.checks.push_back(check_epsilon_degrees(*B));
    r.checks.push_back(check_epsilon_unit(*B));
    r.checks.push_back(check_epsilon_graded_symmetry(*B));
    r.checks.push_back(check_associativity(*B));
    r.checks.push_back(check_top_pairing_regular(*B));
    r.checks.push_back(check_dual_involution(*B));
    r.checks.push_back(check_dual_normalization(*B));
    r.checks.push_back(check_dual_transfer(*B));
    r.checks.push_back(check_lambda_sum(*B));
    r.checks.push_back(check_self_map_relations(B));

    MinimalK1 M = minimal_k1(B);
    Splitting S(M);
    r.layers = S.layers();
    r.checks.push_back(check_models(B, M));
    r.checks.push_back(check_eta_expansion(S));
    r.checks.push_back(check_mu_differential(S));
    r.checks.push_back(check_layer_decomposition(S));
    r.checks.push_back(check_partial_injective(S));
    r.checks.push_back(check_partial_on_basis(S));
    r.checks.push_back(check_x1_sum(S));
    r.checks.push_back(check_xi_layers(S));
    r.checks.push_back(check_hat_a_coefficients(S));
    r.checks.push_back(check_a_coefficients(S));
    r.checks.push_back(check_dmu_layers(S));
    r.checks.push_back(check_certificate(S, build_zeta_and_split(S)));
    return r;
}

}  // namespace mapspace
