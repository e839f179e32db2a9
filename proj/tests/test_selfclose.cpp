#include "mapspace/selfclose.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace mapspace;
using namespace mapspace::testing;

namespace {

Matrix scalar_matrix(const Scalar& c)
{
    Matrix m(1, 1);
    m(0, 0) = c;
    return m;
}

}  // namespace

TEST(SelfCloseness, CorpusValues)
{
    struct Row {
        const char* ring;
        long k;
        int value;
    };
    for (Row r : {Row{"cp2", 0, 4}, Row{"cp2", 1, 7}, Row{"cp3", 0, 4}, Row{"cp3", 1, 11}, Row{"s2xs2", 0, 4},
                  Row{"s3xs3", 0, 6}, Row{"cp2xcp2", 0, 4}, Row{"cp2xcp2", 1, 15}}) {
        SCOPED_TRACE(std::string(r.ring) + " k=" + std::to_string(r.k));
        NEReport rep = self_closeness(corpus_basis(r.ring), r.k);
        EXPECT_EQ(rep.value, r.value);
        EXPECT_TRUE(rep.verified());
        ASSERT_TRUE(rep.witness);
        EXPECT_EQ(rep.witness->first_singular_degree, std::optional<int>(r.value));
    }
}

TEST(SelfCloseness, UnsupportedComponent)
{
    auto B = corpus_basis("cp2");
    EXPECT_THROW(self_closeness(B, 2), std::invalid_argument);
    EXPECT_THROW(self_closeness(B, -1), std::invalid_argument);
}

TEST(Witness, PrimitiveCaseOnComplexProjectivePlane)
{
    Witness w = witness_k0(corpus_basis("cp2"));
    EXPECT_TRUE(w.verified());
    LinearPart L = linear_part(w.map);
    EXPECT_TRUE(is_isomorphism_through(L, 3));
    EXPECT_FALSE(is_isomorphism_through(L, 4));
    ASSERT_TRUE(L.at(4));
    EXPECT_TRUE(L.at(4)->matrix.is_zero());
    EXPECT_EQ(L.at(2)->matrix, Matrix::identity(1));
}

TEST(Witness, TopComponentKillsOnlyTheTopLine)
{
    auto B = corpus_basis("cp2");
    MinimalK1 M = minimal_k1(B);
    Splitting S(M);
    SplittingCertificate cert = build_zeta_and_split(S);
    Witness w = witness_k1(S, cert);
    EXPECT_TRUE(w.verified());
    LinearPart L = linear_part(w.map);
    EXPECT_TRUE(is_isomorphism_through(L, 6));
    EXPECT_FALSE(is_isomorphism_through(L, 7));
    GeneratorId top = w.model.id(Symbol::v_odot_unit, B->unit());
    EXPECT_TRUE(w.map.image(top).is_decomposable());
    EXPECT_TRUE(commutes_with_differential(w.map, w.model.cga, w.model.cga).passed);
    // The degree 4n-1 block has one generator, v⊙1.
    EXPECT_EQ(L.at(7)->matrix.rows(), 1u);
}

TEST(Witness, NonPrimitiveSingularAtLowestUpperDegree)
{
    Witness w = witness_k0(corpus_basis("cp3"));
    EXPECT_TRUE(w.verified());
    EXPECT_EQ(w.first_singular_degree, std::optional<int>(4));
    Witness s = witness_k0(corpus_basis("s3xs3"));
    EXPECT_EQ(s.first_singular_degree, std::optional<int>(6));
}

TEST(Matrices, IdentityAndScalarMaps)
{
    auto B = corpus_basis("cp2");
    Model M = minimal_k0(B);
    SelfMapMatrices id = matrices_of(AlgebraMap::identity(M.host()), M);
    for (const auto& a : id.a)
        EXPECT_EQ(a, Matrix::identity(a.rows()));
    for (const auto& b : id.b)
        EXPECT_EQ(b, Matrix::identity(b.rows()));

    const Scalar c = ratio(-5, 3);
    SelfMapMatrices sc = matrices_of(scalar_self_map(M, c), M);
    EXPECT_EQ(sc.a[0], scalar_matrix(c));
    EXPECT_EQ(sc.a[2], scalar_matrix(c));
    EXPECT_EQ(sc.b[0], scalar_matrix(c * c));
    EXPECT_EQ(sc.b[4], scalar_matrix(c * c));
    EXPECT_EQ(sc.a[1].rows(), 0u);
    EXPECT_TRUE(verify_matrix_relations(scalar_self_map(M, c), M).passed());
}

TEST(Matrices, WitnessOnComplexProjectivePlane)
{
    Witness w = witness_k0(corpus_basis("cp2"));
    SelfMapMatrices m = matrices_of(w.map, w.model);
    EXPECT_EQ(m.a[0], scalar_matrix(0));
    EXPECT_EQ(m.a[2], scalar_matrix(1));
    EXPECT_EQ(m.b[4], scalar_matrix(1));
    EXPECT_EQ(m.b[2], scalar_matrix(0));
}

TEST(Matrices, ForeignMapRejected)
{
    Model a = minimal_k0(corpus_basis("cp2"));
    Model b = minimal_k0(corpus_basis("cp2"));
    EXPECT_THROW(matrices_of(AlgebraMap::identity(b.host()), a), StructuralError);
}

TEST(MatrixRelations, NonDgaCandidateRejected)
{
    auto B = corpus_basis("cp2");
    Model M = minimal_k0(B);
    std::vector<Polynomial> images;
    for (GeneratorId g = 0; g < M.table().size(); ++g)
        images.push_back(M.cga.gen(g));
    GeneratorId u2 = M.id(Symbol::u_tensor, element(*B, "x2"));
    images[u2] = Scalar(2) * M.cga.gen(u2);
    MatrixRelationVerdict v = verify_matrix_relations(AlgebraMap(M.host(), M.host(), images), M);
    EXPECT_FALSE(v.is_dga_map);
    EXPECT_FALSE(v.passed());
    ASSERT_TRUE(v.offending_generator);
    EXPECT_EQ(v.instances, 0u);
}

TEST(MatrixRelations, HoldOnCorpusSelfMaps)
{
    for (const char* name : corpus_names) {
        SCOPED_TRACE(name);
        auto B = corpus_basis(name);
        Model M = minimal_k0(B);
        Witness w = witness_k0(B);
        std::vector<AlgebraMap> maps{AlgebraMap::identity(M.host()), scalar_self_map(M, 2), scalar_self_map(M, ratio(-1, 3)),
                                     scalar_self_map(M, 0)};
        for (const auto& f : maps) {
            MatrixRelationVerdict v = verify_matrix_relations(f, M);
            EXPECT_TRUE(v.passed()) << (v.violations.empty() ? "" : v.violations.front());
            EXPECT_GT(v.instances, 0u);
        }
        AlgebraMap scaled = compose(scalar_self_map(w.model, 3), w.map);
        EXPECT_TRUE(verify_matrix_relations(w.map, w.model).passed());
        EXPECT_TRUE(verify_matrix_relations(scaled, w.model).passed());
    }
}
