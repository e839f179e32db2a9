#include "mapspace/models.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace mapspace;
using namespace mapspace::testing;

namespace {

struct Cp2 {
    std::shared_ptr<const CanonicalBasis> B = corpus_basis("cp2");
    std::size_t one = B->unit(), x2 = element(*B, "x2"), w = B->w();
};

}  // namespace

TEST(FullModel, ComplexProjectivePlaneDifferentials)
{
    Cp2 c;
    Model F = full_model(c.B);
    auto u = [&](std::size_t x) { return F.gen(Symbol::u_tensor, x); };
    auto v = [&](std::size_t x) { return F.gen(Symbol::v_tensor, x); };
    EXPECT_EQ(F.cga.d(v(c.x2)), Scalar(2) * u(c.one) * u(c.x2));
    EXPECT_EQ(F.cga.d(v(c.w)), Scalar(2) * u(c.one) * u(c.w) + u(c.x2) * u(c.x2));
    EXPECT_EQ(F.cga.d(v(c.one)), u(c.one) * u(c.one));
    for (std::size_t x = 0; x < c.B->size(); ++x)
        EXPECT_TRUE(F.cga.d(u(x)).is_zero());
    EXPECT_EQ(F.table().degree(F.id(Symbol::u_tensor, c.w)), 0);
    EXPECT_EQ(F.table().label(F.id(Symbol::u_tensor, c.w)), "u⊗x4");
    EXPECT_EQ(is_minimal(F.cga), Minimality::not_applicable);
}

TEST(FullModel, GeneratorDegrees)
{
    for (const char* name : corpus_names) {
        SCOPED_TRACE(name);
        auto B = corpus_basis(name);
        Model F = full_model(B);
        const int top = B->dimension();
        for (std::size_t x = 0; x < B->size(); ++x) {
            EXPECT_EQ(F.table().degree(F.id(Symbol::u_tensor, x)), top - B->degree(x));
            EXPECT_EQ(F.table().degree(F.id(Symbol::v_tensor, x)), 2 * top - 1 - B->degree(x));
        }
        EXPECT_TRUE(check_d_squared(F.cga).passed);
    }
}

TEST(FullModel, OddMiddleDegreeHasNoSquares)
{
    auto B = corpus_basis("s3xs3");
    Model F = full_model(B);
    std::size_t a = element(*B, "a"), b = element(*B, "b");
    Polynomial dvw = F.cga.d(F.gen(Symbol::v_tensor, B->w()));
    GeneratorId ua = F.id(Symbol::u_tensor, a), ub = F.id(Symbol::u_tensor, b);
    EXPECT_NE(dvw.coefficient_of_product({ua, ub}), Scalar(0));
    for (const auto& [m, coef] : dvw.terms())
        EXPECT_LE(m.count(ua), 1u);
}

TEST(ComponentModel, SubstitutesTheDegreeZeroGenerator)
{
    Cp2 c;
    Model F = full_model(c.B);
    for (long k : {0L, 1L, 5L}) {
        SCOPED_TRACE(k);
        Model M = component_model(F, k);
        EXPECT_FALSE(M.has(Symbol::u_tensor, c.w));
        EXPECT_EQ(M.table().size(), F.table().size() - 1);
        Polynomial expected = Scalar(2 * k) * M.gen(Symbol::u_tensor, c.one) +
                              M.gen(Symbol::u_tensor, c.x2) * M.gen(Symbol::u_tensor, c.x2);
        EXPECT_EQ(M.cga.d(M.gen(Symbol::v_tensor, c.w)), expected);
        EXPECT_TRUE(check_d_squared(M.cga).passed);
    }
    EXPECT_EQ(is_minimal(component_model(F, 1).cga), Minimality::not_minimal);
    EXPECT_EQ(is_minimal(component_model(F, 0).cga), Minimality::minimal);
}

TEST(MinimalK0, ComplexProjectivePlane)
{
    Cp2 c;
    Model M = minimal_k0(c.B);
    EXPECT_EQ(M.table().size(), 5u);
    EXPECT_EQ(is_minimal(M.cga), Minimality::minimal);
    std::map<int, std::size_t> expected{{2, 1}, {3, 1}, {4, 1}, {5, 1}, {7, 1}};
    EXPECT_EQ(homotopy_ranks(M.cga), expected);
    auto u = [&](std::size_t x) { return M.gen(Symbol::u_tensor, x); };
    EXPECT_EQ(M.cga.d(M.gen(Symbol::v_tensor, c.w)), u(c.x2) * u(c.x2));
    EXPECT_EQ(M.cga.d(M.gen(Symbol::v_tensor, c.x2)), Scalar(2) * u(c.x2) * u(c.one));
}

TEST(MinimalK0, TopDifferentialUsesOnlyMiddleClasses)
{
    for (const char* name : corpus_names) {
        SCOPED_TRACE(name);
        auto B = corpus_basis(name);
        Model M = minimal_k0(B);
        Polynomial dvw = M.cga.d(M.gen(Symbol::v_tensor, B->w()));
        EXPECT_TRUE(dvw.uses_only([&](GeneratorId g) {
            const Provenance& p = M.provenance[g];
            return p.kind == Symbol::u_tensor && B->in_hat_domain(p.basis);
        }));
        EXPECT_EQ(M.table().degree(M.id(Symbol::v_tensor, B->w())), B->dimension() - 1);
    }
}

TEST(MinimalK0, DiagonalizedHyperbolicPlane)
{
    auto B = corpus_basis("s2xs2");
    Model M = minimal_k0(B);
    std::size_t e1 = element(*B, "(a+b)"), e2 = element(*B, "(a-b)");
    Polynomial u1 = M.gen(Symbol::u_tensor, e1), u2 = M.gen(Symbol::u_tensor, e2);
    EXPECT_EQ(M.cga.d(M.gen(Symbol::v_tensor, B->w())), Scalar(2) * u1 * u1 - Scalar(2) * u2 * u2);
}

TEST(MinimalK1, ComplexProjectivePlane)
{
    Cp2 c;
    MinimalK1 M = minimal_k1(c.B);
    const Model& W = M.wbar;
    Polynomial u2 = W.gen(Symbol::u_tensor, c.x2);
    EXPECT_EQ(W.cga.d(W.gen(Symbol::v_odot, c.x2)), u2.pow(3));
    EXPECT_EQ(W.cga.d(W.gen(Symbol::v_odot_unit, c.one)), ratio(1, 4) * u2.pow(4));
    EXPECT_EQ(M.eta, u2 * u2);
    EXPECT_TRUE(W.cga.d(M.eta).is_zero());
    std::map<int, std::size_t> expected{{2, 1}, {5, 1}, {7, 1}};
    EXPECT_EQ(homotopy_ranks(W.cga), expected);
    EXPECT_THROW(homotopy_ranks(M.quotient.cga), std::invalid_argument);
}

TEST(MinimalK1, EtaOfComplexProjectiveThreeSpace)
{
    auto B = corpus_basis("cp3");
    MinimalK1 M = minimal_k1(B);
    std::size_t x2 = element(*B, "x2"), x4 = element(*B, "x4");
    const Model& W = M.wbar;
    EXPECT_EQ(M.eta, Scalar(2) * W.gen(Symbol::u_tensor, x2) * W.gen(Symbol::u_tensor, x4));
}

TEST(MinimalK1, CorpusStructure)
{
    for (const char* name : corpus_names) {
        SCOPED_TRACE(name);
        auto B = corpus_basis(name);
        MinimalK1 M = minimal_k1(B);
        const int top = B->dimension();
        EXPECT_TRUE(check_d_squared(M.quotient.cga).passed);
        EXPECT_TRUE(check_d_squared(M.wbar.cga).passed);
        EXPECT_TRUE(check_d_squared(M.u_model.cga).passed);
        EXPECT_EQ(is_minimal(M.quotient.cga), Minimality::not_minimal);
        EXPECT_EQ(is_minimal(M.wbar.cga), Minimality::minimal);
        EXPECT_TRUE(M.wbar.cga.d(M.eta).is_zero());

        // η = d(v⊗w) - 2(u⊗1) in the quotient.
        const Model& Q = M.quotient;
        EXPECT_EQ(M.eta_quotient,
                  Q.cga.d(Q.gen(Symbol::v_tensor, B->w())) - Scalar(2) * Q.gen(Symbol::u_tensor, B->unit()));

        // The re-expression is a dga map into the quotient.
        EXPECT_TRUE(commutes_with_differential(M.into_quotient, M.wbar.cga, M.quotient.cga).passed);
        EXPECT_TRUE(commutes_with_differential(M.u_inclusion, M.u_model.cga, M.wbar.cga).passed);

        // W̄ = U plus the single top generator v⊙1.
        auto ranks = homotopy_ranks(M.wbar.cga);
        EXPECT_EQ(ranks.rbegin()->first, 2 * top - 1);
        EXPECT_EQ(ranks.rbegin()->second, 1u);
        EXPECT_GE(ranks.begin()->first, 2);
        EXPECT_EQ(M.wbar.table().size(), M.u_model.table().size() + 1);
        for (GeneratorId g = 0; g < M.u_model.table().size(); ++g)
            EXPECT_LE(M.u_model.table().degree(g), 2 * top - 2);
    }
}
