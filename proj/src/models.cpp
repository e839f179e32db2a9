#include "mapspace/models.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <tuple>

namespace mapspace {

std::string to_string(Symbol s)
{
    switch (s) {
    case Symbol::u_tensor:
        return "u⊗";
    case Symbol::v_tensor:
        return "v⊗";
    case Symbol::v_odot:
        return "v⊙";
    case Symbol::v_odot_unit:
        return "v⊙1";
    }
    return "?";
}

std::string symbol_label(const CanonicalBasis& B, Symbol kind, std::size_t x)
{
    if (kind == Symbol::v_odot_unit)
        return "v⊙1";
    return to_string(kind) + B.label(x);
}

std::optional<GeneratorId> Model::find(Symbol kind, std::size_t x) const
{
    for (GeneratorId g = 0; g < provenance.size(); ++g)
        if (provenance[g].kind == kind && (kind == Symbol::v_odot_unit || provenance[g].basis == x))
            return g;
    return std::nullopt;
}

GeneratorId Model::id(Symbol kind, std::size_t x) const
{
    if (auto g = find(kind, x))
        return *g;
    throw StructuralError("model has no generator " + symbol_label(*basis, kind, x));
}

namespace {

struct GenSpec {
    Provenance prov;
    int degree;
};

// Degree-major, then canonical basis order.
std::pair<Polynomial::Host, std::vector<Provenance>> make_table(const CanonicalBasis& B, std::vector<GenSpec> specs)
{
    std::stable_sort(specs.begin(), specs.end(), [](const GenSpec& a, const GenSpec& b) {
        return std::tie(a.degree, a.prov.basis) < std::tie(b.degree, b.prov.basis);
    });
    std::vector<GeneratorTable::Spec> table;
    std::vector<Provenance> prov;
    for (const auto& s : specs) {
        table.push_back({symbol_label(B, s.prov.kind, s.prov.basis), s.degree});
        prov.push_back(s.prov);
    }
    return {GeneratorTable::create(std::move(table)), std::move(prov)};
}

// Moves p between models by matching provenance; throws if a generator has no
// counterpart in the target.
Polynomial rename(const Polynomial& p, const Model& from, const Model& to)
{
    Polynomial out(to.host());
    std::vector<GeneratorId> factors;
    for (const auto& [m, c] : p.terms()) {
        factors.clear();
        for (GeneratorId g : m.factors()) {
            auto t = to.find(from.provenance[g].kind, from.provenance[g].basis);
            if (!t)
                throw InternalInconsistency(fmt::format("{} does not re-express in the target generators: it involves {}",
                                                        p.to_string(), from.table().label(g)));
            factors.push_back(*t);
        }
        out += Polynomial::product(to.host(), factors, c);
    }
    return out;
}

}  // namespace

Model full_model(std::shared_ptr<const CanonicalBasis> Bptr)
{
    const CanonicalBasis& B = *Bptr;
    const int dim = B.dimension();
    std::vector<GenSpec> specs;
    for (std::size_t x = 0; x < B.size(); ++x) {
        specs.push_back({{Symbol::u_tensor, x}, dim - B.degree(x)});
        specs.push_back({{Symbol::v_tensor, x}, 2 * dim - 1 - B.degree(x)});
    }
    auto [host, prov] = make_table(B, std::move(specs));

    auto u = [&](std::size_t x) {
        for (GeneratorId g = 0; g < prov.size(); ++g)
            if (prov[g].kind == Symbol::u_tensor && prov[g].basis == x)
                return g;
        throw StructuralError("missing u generator");
    };
    std::vector<Polynomial> d;
    for (GeneratorId g = 0; g < prov.size(); ++g) {
        Polynomial dg(host);
        if (prov[g].kind == Symbol::v_tensor) {
            std::size_t x = prov[g].basis;
            for (std::size_t x1 = 0; x1 < B.size(); ++x1)
                for (std::size_t x2 : B.of_degree(B.degree(x) - B.degree(x1))) {
                    const Scalar& e = B.eps(x1, x2, x);
                    if (sgn(e) != 0)
                        dg += Polynomial::product(host, {u(x1), u(x2)}, e);
                }
        }
        d.push_back(std::move(dg));
    }
    return Model{Bptr, FreeCGA(host, std::move(d)), std::move(prov)};
}

Model component_model(const Model& full, long k)
{
    const CanonicalBasis& B = *full.basis;
    std::vector<GenSpec> specs;
    for (GeneratorId g = 0; g < full.provenance.size(); ++g) {
        const auto& p = full.provenance[g];
        if (p.kind == Symbol::u_tensor && p.basis == B.w())
            continue;
        specs.push_back({p, full.table().degree(g)});
    }
    auto [host, prov] = make_table(B, std::move(specs));
    Model target{full.basis, FreeCGA(host, std::vector<Polynomial>(prov.size(), Polynomial(host))), prov};

    std::vector<Polynomial> images;
    for (GeneratorId g = 0; g < full.provenance.size(); ++g) {
        const auto& p = full.provenance[g];
        if (p.kind == Symbol::u_tensor && p.basis == B.w())
            images.push_back(Polynomial::constant(host, Scalar(k)));
        else
            images.push_back(target.gen(p.kind, p.basis));
    }
    AlgebraMap substitute(full.host(), host, std::move(images));

    std::vector<Polynomial> d;
    for (const auto& p : prov)
        d.push_back(substitute(full.cga.d(full.id(p.kind, p.basis))));
    return Model{full.basis, FreeCGA(host, std::move(d)), std::move(prov)};
}

Model minimal_k0(std::shared_ptr<const CanonicalBasis> B) { return component_model(full_model(B), 0); }

MinimalK1 minimal_k1(std::shared_ptr<const CanonicalBasis> Bptr)
{
    const CanonicalBasis& B = *Bptr;
    const int dim = B.dimension();
    const std::size_t one = B.unit();
    const std::size_t w = B.w();
    Model Q = component_model(full_model(Bptr), 1);

    Polynomial eta_q = Q.cga.d(Q.id(Symbol::v_tensor, w)) - 2 * Q.gen(Symbol::u_tensor, one);

    std::vector<GenSpec> specs;
    for (std::size_t x : B.hat_domain()) {
        specs.push_back({{Symbol::u_tensor, x}, dim - B.degree(x)});
        specs.push_back({{Symbol::v_odot, x}, 2 * dim - 1 - B.degree(x)});
    }
    specs.push_back({{Symbol::v_odot_unit, one}, 2 * dim - 1});
    auto [host, prov] = make_table(B, specs);
    Model shell{Bptr, FreeCGA(host, std::vector<Polynomial>(prov.size(), Polynomial(host))), prov};

    // ΛW̄ -> quotient.
    const Polynomial vw = Q.gen(Symbol::v_tensor, w);
    const Polynomial u1 = Q.gen(Symbol::u_tensor, one);
    std::vector<Polynomial> images;
    for (const auto& p : prov) {
        switch (p.kind) {
        case Symbol::u_tensor:
            images.push_back(Q.gen(Symbol::u_tensor, p.basis));
            break;
        case Symbol::v_odot:
            images.push_back(vw * Q.gen(Symbol::u_tensor, p.basis) - Q.gen(Symbol::v_tensor, p.basis));
            break;
        case Symbol::v_odot_unit:
            images.push_back(Q.gen(Symbol::v_tensor, one) - ratio(1, 4) * vw * (2 * u1 - eta_q));
            break;
        case Symbol::v_tensor:
            throw InternalInconsistency("unexpected v⊗ generator");
        }
    }
    AlgebraMap into(host, Q.host(), images);

    std::vector<Polynomial> d;
    for (const auto& im : images)
        d.push_back(rename(Q.cga.d(im), Q, shell));
    Model wbar{Bptr, FreeCGA(host, std::move(d)), prov};
    Polynomial eta = rename(eta_q, Q, wbar);

    // Closed forms of the new differentials.
    for (std::size_t x : B.hat_domain()) {
        Polynomial expect = eta * wbar.gen(Symbol::u_tensor, x);
        for (std::size_t x1 : B.hat_domain())
            for (std::size_t x2 : B.of_degree(B.degree(x) - B.degree(x1))) {
                if (!B.in_hat_domain(x2) || sgn(B.eps(x1, x2, x)) == 0)
                    continue;
                expect -= Polynomial::product(host, {wbar.id(Symbol::u_tensor, x1), wbar.id(Symbol::u_tensor, x2)},
                                              B.eps(x1, x2, x));
            }
        const Polynomial& got = wbar.cga.d(wbar.id(Symbol::v_odot, x));
        if (!(got == expect))
            throw InternalInconsistency(fmt::format("d(v⊙{}) = {}, expected {}", B.label(x), got.to_string(),
                                                    expect.to_string()));
    }
    Polynomial top_expect = ratio(1, 4) * eta * eta;
    if (!(wbar.cga.d(wbar.id(Symbol::v_odot_unit, one)) == top_expect))
        throw InternalInconsistency("d(v⊙1) differs from η²/4");
    if (auto v = commutes_with_differential(into, wbar.cga, Q.cga); !v.passed)
        throw InternalInconsistency(
            fmt::format("inclusion into the quotient is not a dga map at {}", wbar.table().label(*v.offending)));

    // U: everything below the top degree.
    std::vector<GenSpec> uspecs;
    for (const auto& s : specs)
        if (s.prov.kind != Symbol::v_odot_unit)
            uspecs.push_back(s);
    auto [uhost, uprov] = make_table(B, uspecs);
    Model ushell{Bptr, FreeCGA(uhost, std::vector<Polynomial>(uprov.size(), Polynomial(uhost))), uprov};
    std::vector<Polynomial> ud;
    std::vector<Polynomial> uimages;
    for (const auto& p : uprov) {
        GeneratorId g = wbar.id(p.kind, p.basis);
        ud.push_back(rename(wbar.cga.d(g), wbar, ushell));
        uimages.push_back(wbar.cga.gen(g));
    }
    Model umodel{Bptr, FreeCGA(uhost, std::move(ud)), uprov};
    AlgebraMap uinc(uhost, host, std::move(uimages));

    return MinimalK1{std::move(Q), std::move(wbar), std::move(umodel), std::move(eta_q), std::move(eta),
                     std::move(into), std::move(uinc)};
}

std::map<int, std::size_t> homotopy_ranks(const FreeCGA& A)
{
    if (is_minimal(A) != Minimality::minimal)
        throw std::invalid_argument("homotopy ranks are read off minimal models only");
    std::map<int, std::size_t> ranks;
    for (const auto& g : A.table().generators())
        ++ranks[g.degree];
    return ranks;
}

}  // namespace mapspace
