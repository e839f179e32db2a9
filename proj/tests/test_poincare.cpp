#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace mapspace;
using namespace mapspace::testing;

namespace {

CohomologyRing cp2_ring()
{
    CohomologyRing r;
    r.name = "CP2";
    r.dimension = 4;
    r.classes = {{"t", 2}, {"t2", 4}};
    r.products = {{"t", "t", {{"t2", Scalar(1)}}}};
    r.fundamental_class = "t2";
    return r;
}

bool mentions(const ValidationResult& v, const std::string& check, const std::string& needle)
{
    for (const auto& d : v.diagnostics)
        if (d.check == check && d.message.find(needle) != std::string::npos)
            return true;
    return false;
}

}  // namespace

TEST(Parsing, ReadsCorpusFile)
{
    CohomologyRing r = load_ring_file(corpus_path("cp3"));
    EXPECT_EQ(r.name, "CP3");
    EXPECT_EQ(r.dimension, 6);
    EXPECT_EQ(r.classes.size(), 3u);
    EXPECT_EQ(r.fundamental_class, "x6");
}

TEST(Parsing, MalformedJsonReportsPosition)
{
    try {
        parse_ring_json("{\n  \"dimension\": 4,\n  oops\n}");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("3:"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("malformed JSON"), std::string::npos);
    }
}

TEST(Parsing, ZeroDenominatorIsAParseError)
{
    const char* text = R"({"name": "bad", "dimension": 4,
        "generators": [{"label": "t", "degree": 2}, {"label": "t2", "degree": 4}],
        "products": [["t", "t", {"t2": "1/0"}]], "fundamental_class": "t2"})";
    EXPECT_THROW(parse_ring_json(text), ParseError);
}

TEST(Parsing, MissingFileIsAnIoError)
{
    EXPECT_THROW(load_ring_file("/nonexistent/ring.json"), std::runtime_error);
}

TEST(Validation, ComplexProjectivePlaneIsValid)
{
    ValidationResult v = validate_ring(cp2_ring());
    ASSERT_TRUE(v.ok());
    EXPECT_TRUE(v.diagnostics.empty());
    EXPECT_EQ(v.data->betti(2), 1u);
}

TEST(Validation, SingularPairingNamesTheDegree)
{
    CohomologyRing r = cp2_ring();
    r.products.clear();
    ValidationResult v = validate_ring(r);
    EXPECT_FALSE(v.ok());
    EXPECT_TRUE(mentions(v, "duality pairing", "degree 2"));
}

TEST(Validation, MissingTopClass)
{
    CohomologyRing r;
    r.name = "odd sphere";
    r.dimension = 6;
    r.classes = {{"a", 3}};
    r.fundamental_class = "a";
    ValidationResult v = validate_ring(r);
    EXPECT_FALSE(v.ok());
    bool top = false;
    for (const auto& d : v.diagnostics)
        top = top || d.check == "top degree";
    EXPECT_TRUE(top);
}

TEST(Validation, ReportsEveryFailure)
{
    CohomologyRing r = cp2_ring();
    r.classes.push_back({"e", 1});
    r.classes.push_back({"f", 3});
    r.classes.push_back({"t", 2});
    ValidationResult v = validate_ring(r);
    EXPECT_FALSE(v.ok());
    EXPECT_EQ(v.diagnostics.size(), 3u);

    // Product checks run once the classes are sound.
    CohomologyRing p = cp2_ring();
    p.products.push_back({"t", "t2", {{"t", Scalar(1)}}});
    p.products.push_back({"t", "x", {{"t2", Scalar(1)}}});
    ValidationResult vp = validate_ring(p);
    EXPECT_EQ(vp.diagnostics.size(), 2u);
}

TEST(Validation, NonAssociativeProductRejected)
{
    // (a a) b = w but a (a b) = 0.
    CohomologyRing r;
    r.name = "broken";
    r.dimension = 6;
    r.classes = {{"a", 2}, {"b", 2}, {"c", 4}, {"e", 4}, {"w", 6}};
    r.products = {{"a", "a", {{"c", Scalar(1)}}},
                  {"b", "b", {{"e", Scalar(1)}}},
                  {"a", "e", {{"w", Scalar(1)}}},
                  {"b", "c", {{"w", Scalar(1)}}}};
    r.fundamental_class = "w";
    ValidationResult v = validate_ring(r);
    EXPECT_FALSE(v.ok());
    bool assoc = false;
    for (const auto& d : v.diagnostics)
        assoc = assoc || d.check == "associativity";
    EXPECT_TRUE(assoc);
}

TEST(Epsilon, UnitAndFundamentalPairing)
{
    auto P = corpus_ring("cp2");
    EXPECT_EQ(P->epsilon("x2", "1", "x2"), Scalar(1));
    EXPECT_EQ(P->epsilon("1", "x2", "x2"), Scalar(1));
    EXPECT_EQ(P->epsilon("x2", "x2", "x4"), Scalar(1));
}

TEST(Epsilon, OddClassesAnticommute)
{
    auto P = corpus_ring("s3xs3");
    EXPECT_EQ(P->epsilon("a", "b", "w"), -P->epsilon("b", "a", "w"));
    EXPECT_NE(P->epsilon("a", "b", "w"), Scalar(0));
    EXPECT_EQ(P->epsilon("a", "a", "w"), Scalar(0));
}

TEST(CanonicalBasis, HyperbolicMiddleDegreeIsDiagonalized)
{
    auto B = corpus_basis("s2xs2");
    Matrix g = B->middle_gram();
    ASSERT_EQ(g.rows(), 2u);
    EXPECT_EQ(g(0, 0), Scalar(2));
    EXPECT_EQ(g(1, 1), Scalar(-2));
    EXPECT_EQ(g(0, 1), Scalar(0));
    const Matrix& C = B->change(2);
    EXPECT_EQ(C(0, 0), Scalar(1));
    EXPECT_EQ(C(1, 0), Scalar(1));
    EXPECT_EQ(C(0, 1), Scalar(1));
    EXPECT_EQ(C(1, 1), Scalar(-1));
}

TEST(CanonicalBasis, ComplexProjectivePlaneUnchanged)
{
    auto B = corpus_basis("cp2");
    EXPECT_EQ(B->middle_gram(), Matrix::identity(1));
    EXPECT_EQ(B->change(2), Matrix::identity(1));
    EXPECT_EQ(B->label(B->w()), "x4");
    EXPECT_EQ(B->unit(), 0u);
}

TEST(CanonicalBasis, OddMiddleDegreeIsSymplectic)
{
    auto B = corpus_basis("s3xs3");
    Matrix g = B->middle_gram();
    ASSERT_EQ(g.rows(), 2u);
    EXPECT_EQ(g(0, 0), Scalar(0));
    EXPECT_EQ(g(1, 1), Scalar(0));
    EXPECT_NE(g(1, 0), Scalar(0));
    EXPECT_EQ(g(0, 1), -g(1, 0));
}

TEST(CanonicalBasis, DualsInComplexProjectiveThreeSpace)
{
    auto B = corpus_basis("cp3");
    std::size_t x2 = element(*B, "x2"), x4 = element(*B, "x4");
    EXPECT_EQ(B->hat(x2), x4);
    EXPECT_EQ(B->hat(x4), x2);
    EXPECT_EQ(B->eps_of(x2), Scalar(1));
    EXPECT_THROW(B->hat(B->unit()), std::invalid_argument);
    EXPECT_THROW(B->hat(B->w()), std::invalid_argument);
}

TEST(CanonicalBasis, CorpusInvariants)
{
    for (const char* name : corpus_names) {
        SCOPED_TRACE(name);
        auto B = corpus_basis(name);
        const int n = B->n(), top = B->dimension();
        EXPECT_EQ(B->of_degree(0).size(), 1u);
        EXPECT_EQ(B->of_degree(top).size(), 1u);
        for (std::size_t x : B->hat_domain()) {
            std::size_t xh = B->hat(x);
            EXPECT_EQ(B->hat(xh), x);
            EXPECT_EQ(B->degree(xh), top - B->degree(x));
            for (std::size_t y : B->hat_domain()) {
                if (y != xh) {
                    EXPECT_TRUE(is_zero(B->eps(x, y, B->w())));
                }
            }
            if (B->degree(x) < n) {
                EXPECT_EQ(B->eps_of(x), Scalar(1));
                EXPECT_EQ(B->eps_of(xh), Scalar(koszul_sign(B->degree(x), B->degree(xh))));
            }
        }
        for (int k = 0; k <= top; ++k)
            EXPECT_TRUE(is_regular(B->e_matrix(k, B->w()))) << "k = " << k;
        for (int d = 0; d <= top; ++d)
            EXPECT_TRUE(is_regular(B->change(d)));
    }
}

TEST(Primitivity, CorpusVerdicts)
{
    EXPECT_TRUE(is_primitive(*corpus_ring("cp2")));
    EXPECT_FALSE(is_primitive(*corpus_ring("cp3")));
    EXPECT_TRUE(is_primitive(*corpus_ring("s2xs2")));
    EXPECT_TRUE(is_primitive(*corpus_ring("s3xs3")));
    EXPECT_FALSE(is_primitive(*corpus_ring("cp2xcp2")));
}

TEST(Primitivity, LowestUpperDegree)
{
    EXPECT_EQ(lowest_upper_degree(*corpus_ring("cp3")), 4);
    EXPECT_EQ(lowest_upper_degree(*corpus_ring("cp2")), 2);
    EXPECT_EQ(lowest_upper_degree(*corpus_ring("s3xs3")), 3);
    // S^2 x S^6: H^4 = H^5 = 0.
    CohomologyRing r;
    r.name = "S2xS6";
    r.dimension = 8;
    r.classes = {{"a", 2}, {"b", 6}, {"w", 8}};
    r.products = {{"a", "b", {{"w", Scalar(1)}}}};
    r.fundamental_class = "w";
    auto v = validate_ring(r);
    ASSERT_TRUE(v.ok());
    EXPECT_EQ(lowest_upper_degree(*v.data), 6);
}
