#include "mapspace/splitting.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace mapspace {

Scalar lambda_of(const CanonicalBasis& B, std::size_t x)
{
    if (!B.in_hat_domain(x))
        throw std::invalid_argument("λ is defined on 0 < |x| < 2n only");
    const int n = B.n();
    const int deg = B.degree(x);
    if (deg == n)
        return 0;
    if (deg > n)
        return -lambda_of(B, B.hat(x));
    return ratio(3 * (n - deg), n) * B.eps_of(B.hat(x));
}

Splitting::Splitting(const MinimalK1& model) : model_(&model)
{
    const CanonicalBasis& B = basis();
    const int n = B.n();
    for (std::size_t x : B.hat_domain())
        if (B.degree(x) < n)
            thetas_.push_back(x);
    std::reverse(thetas_.begin(), thetas_.end());

    filtration_.push_back(B.of_degree(n));
    for (std::size_t theta : thetas_) {
        auto F = filtration_.back();
        F.push_back(theta);
        F.push_back(B.hat(theta));
        std::sort(F.begin(), F.end());
        filtration_.push_back(std::move(F));
    }

    std::vector<GeneratorId> uids;
    for (std::size_t x : B.hat_domain())
        uids.push_back(u_id(x));
    for (auto& m : monomials_of_degree(wbar().table(), uids, 2 * B.dimension(), 3))
        if (m.length() == 3)
            cubic_span_.push_back(std::move(m));

    for (std::size_t i = 1; i <= thetas_.size(); ++i) {
        std::vector<Monomial> basis_i;
        const std::size_t th = theta(i);
        for (std::size_t x1 : filtration(i))
            for (std::size_t x2 : filtration(i)) {
                if (B.degree(x1) + B.degree(x2) + B.degree(th) != B.dimension())
                    continue;
                auto nm = normalize_monomial(wbar().table(), std::vector<GeneratorId>{u_id(x1), u_id(x2), u_id(th)});
                if (nm)
                    basis_i.push_back(nm->monomial);
            }
        std::sort(basis_i.begin(), basis_i.end());
        basis_i.erase(std::unique(basis_i.begin(), basis_i.end()), basis_i.end());
        layer_basis_.push_back(std::move(basis_i));
    }
}

bool Splitting::in_filtration(std::size_t i, std::size_t x) const
{
    const auto& F = filtration(i);
    return std::binary_search(F.begin(), F.end(), x);
}

Scalar Splitting::lambda(std::size_t x) const { return lambda_of(basis(), x); }

Polynomial Splitting::cubic(std::size_t x1, std::size_t x2, std::size_t x3, const Scalar& c) const
{
    return Polynomial::product(host(), {u_id(x1), u_id(x2), u_id(x3)}, c);
}

Polynomial Splitting::quadratic(std::size_t x1, std::size_t x2, const Scalar& c) const
{
    return Polynomial::product(host(), {u_id(x1), u_id(x2)}, c);
}

std::optional<std::size_t> Splitting::layer_of(const Monomial& m) const
{
    std::optional<std::size_t> found;
    for (std::size_t i = 1; i <= layers(); ++i) {
        const auto& Bi = layer_basis(i);
        if (std::binary_search(Bi.begin(), Bi.end(), m)) {
            if (found)
                return std::nullopt;
            found = i;
        }
    }
    return found;
}

bool Splitting::in_cubic_span(const Polynomial& p) const
{
    for (const auto& [m, c] : p.terms())
        if (!std::binary_search(cubic_span_.begin(), cubic_span_.end(), m))
            return false;
    return true;
}

Polynomial Splitting::project(std::size_t i, const Polynomial& p) const
{
    const auto& Bi = layer_basis(i);
    Polynomial out(host());
    for (const auto& [m, c] : p.terms())
        if (std::binary_search(Bi.begin(), Bi.end(), m))
            out.add_term(m, c);
    return out;
}

Derivation Splitting::partial_derivation(std::size_t i) const
{
    GeneratorId t = u_id(theta(i));
    std::vector<Polynomial> values(wbar().table().size(), Polynomial(host()));
    values[t] = Polynomial::constant(host(), 1);
    return Derivation(host(), -wbar().table().degree(t), std::move(values));
}

Polynomial Splitting::partial(std::size_t i, const Polynomial& p) const
{
    const auto& prov = wbar().provenance;
    if (!p.uses_only([&](GeneratorId g) { return prov[g].kind == Symbol::u_tensor; }))
        throw std::invalid_argument("∂_i is defined on u-monomials only");
    return partial_derivation(i).apply(p);
}

Polynomial Splitting::xi() const
{
    const CanonicalBasis& B = basis();
    Polynomial out(host());
    for (std::size_t x3 : B.hat_domain())
        for (std::size_t x1 : B.hat_domain())
            for (std::size_t x2 : B.of_degree(B.degree(x3) - B.degree(x1))) {
                if (!B.in_hat_domain(x2))
                    continue;
                Scalar c = B.eps_of(x3) * B.eps(x1, x2, x3);
                if (sgn(c) != 0)
                    out += cubic(x1, x2, B.hat(x3), c);
            }
    return out;
}

Polynomial Splitting::alpha() const
{
    const CanonicalBasis& B = basis();
    Polynomial out(host());
    for (std::size_t x : B.hat_domain())
        out += B.eps_of(x) * (v(x) * u(B.hat(x)));
    return out;
}

Polynomial Splitting::mu_of(std::size_t x) const
{
    const CanonicalBasis& B = basis();
    std::size_t xh = B.hat(x);
    Scalar s = koszul_sign(B.degree(x), B.degree(xh));
    return s * (v(x) * u(xh)) - v(xh) * u(x);
}

Polynomial Splitting::mu() const
{
    Polynomial out(host());
    for (std::size_t x : thetas_)
        out += lambda(x) * mu_of(x);
    return out;
}

Polynomial Splitting::zeta() const { return ratio(1, 4) * (alpha() + mu()); }

MuVerdict verify_prop_mu(const Splitting& S)
{
    MuVerdict v{S.xi() - S.d(S.mu()), {}, false, true, false};
    v.direct_zero = v.direct.is_zero();
    v.in_cubic_span = S.in_cubic_span(S.xi()) && S.in_cubic_span(S.d(S.mu()));
    for (std::size_t i = 1; i <= S.layers(); ++i) {
        Polynomial p = S.project(i, v.direct);
        Polynomial dp = S.partial(i, p);
        LayerResidue r{i, S.theta(i), std::move(p), std::move(dp)};
        v.layers_zero = v.layers_zero && r.zero();
        v.layers.push_back(std::move(r));
    }
    return v;
}

SplittingCertificate build_zeta_and_split(const Splitting& S)
{
    const MinimalK1& M = S.model();
    const Model& W = M.wbar;
    const Model& U = M.u_model;
    SplittingCertificate c{M.eta,
                           S.xi(),
                           S.alpha(),
                           S.mu(),
                           S.zeta(),
                           Polynomial(S.host()),
                           Polynomial(S.host()),
                           verify_prop_mu(S)};
    c.alpha_residual = c.eta * c.eta - c.xi - S.d(c.alpha);
    c.zeta_residual = ratio(1, 4) * (c.eta * c.eta) - S.d(c.zeta);
    c.zeta_decomposable = c.zeta.is_decomposable();

    // ΛU ⊗ Λ(s): the U generators in order, then s on top.
    std::vector<GeneratorTable::Spec> specs;
    for (const auto& g : U.table().generators())
        specs.push_back({g.label, g.degree});
    const GeneratorId top = W.id(Symbol::v_odot_unit, 0);
    specs.push_back({"s", W.table().degree(top)});
    auto src = GeneratorTable::create(std::move(specs));
    const GeneratorId s_id = static_cast<GeneratorId>(U.table().size());

    std::vector<Polynomial> shift_images;
    for (GeneratorId g = 0; g < U.table().size(); ++g)
        shift_images.push_back(Polynomial::generator(src, g));
    AlgebraMap from_u(U.host(), src, shift_images);
    std::vector<Polynomial> dsrc;
    for (GeneratorId g = 0; g < U.table().size(); ++g)
        dsrc.push_back(from_u(U.cga.d(g)));
    dsrc.emplace_back(src);
    c.split_source.emplace(src, std::move(dsrc));

    // f: U generators go to themselves, s to v⊙1 - ζ.
    std::vector<Polynomial> f_images = M.u_inclusion.images();
    f_images.push_back(W.cga.gen(top) - c.zeta);
    c.split_map.emplace(src, W.host(), std::move(f_images));

    // Inverse: v⊙1 to s + ζ, with ζ moved into the source.
    std::vector<Polynomial> back;
    for (GeneratorId g = 0; g < W.table().size(); ++g) {
        if (g == top) {
            back.emplace_back(src);
            continue;
        }
        back.push_back(Polynomial::generator(src, U.id(W.provenance[g].kind, W.provenance[g].basis)));
    }
    AlgebraMap to_src(W.host(), src, back);
    if (!c.zeta.uses_only([&](GeneratorId g) { return g != top; }))
        throw InternalInconsistency("ζ involves v⊙1");
    back[top] = Polynomial::generator(src, s_id) + to_src(c.zeta);
    c.split_inverse.emplace(W.host(), src, std::move(back));

    c.split_is_dga_map = commutes_with_differential(*c.split_map, *c.split_source, W.cga).passed;
    c.split_inverse_is_dga_map = commutes_with_differential(*c.split_inverse, W.cga, *c.split_source).passed;
    LinearPart L = linear_part(*c.split_map);
    c.split_linear_iso = !first_singular_degree(L).has_value();

    AlgebraMap there_and_back = compose(*c.split_inverse, *c.split_map);
    AlgebraMap back_and_there = compose(*c.split_map, *c.split_inverse);
    bool ok = true;
    for (GeneratorId g = 0; g < src->size(); ++g)
        ok = ok && there_and_back.image(g) == Polynomial::generator(src, g);
    for (GeneratorId g = 0; g < W.table().size(); ++g)
        ok = ok && back_and_there.image(g) == W.cga.gen(g);
    c.split_round_trip = ok;
    return c;
}

}  // namespace mapspace
