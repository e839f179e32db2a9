#include "mapspace/report.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace mapspace;
using namespace mapspace::testing;

namespace {

bool looks_like_terms(const Json& j)
{
    if (!j.is_array() || j.empty())
        return false;
    for (const auto& t : j)
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array())
            return false;
    return true;
}

// Every term list, checked against its text rendering.
void check_terms(const Json& j, std::size_t& seen)
{
    if (looks_like_terms(j)) {
        ++seen;
        auto flat = flatten(j);
        ASSERT_EQ(flat.size(), 1u);
        EXPECT_EQ(parse_terms(flat[0].second), j);
        return;
    }
    if (j.is_structured())
        for (const auto& [k, v] : j.items())
            check_terms(v, seen);
}

std::vector<Json> corpus_reports(const std::string& name)
{
    auto B = corpus_basis(name);
    std::vector<Json> out;
    auto v = validate_ring(load_ring_file(corpus_path(name)));
    Json val = validation_json(name, v);
    val["homology_basis"] = basis_json(*B);
    out.push_back(val);
    out.push_back(model_json(full_model(B), "full"));
    out.push_back(model_json(minimal_k0(B), "minimal k=0"));
    MinimalK1 M = minimal_k1(B);
    out.push_back(model_json(M.wbar, "minimal k=1"));
    Splitting S(M);
    out.push_back(certificate_json(S, build_zeta_and_split(S)));
    out.push_back(ne_report_json(self_closeness(B, 0)));
    out.push_back(ne_report_json(self_closeness(B, 1)));
    out.push_back(identity_report_json(run_identity_suite(B)));
    out.push_back(ranks_json(homotopy_ranks(M.wbar.cga)));
    return out;
}

}  // namespace

TEST(Report, TextAndJsonCarryTheSameData)
{
    for (const char* name : corpus_names) {
        SCOPED_TRACE(name);
        for (const Json& j : corpus_reports(name)) {
            std::string text = render_text(j);
            EXPECT_EQ(parse_text(text), flatten(j));
            std::size_t seen = 0;
            check_terms(j, seen);
        }
    }
}

TEST(Report, TermListRendering)
{
    Json terms = Json::array({Json::array({"1/4", Json::array({"u⊗x2", "u⊗x2"})}), Json::array({"-2", Json::array()})});
    auto flat = flatten(Json{{"d", terms}});
    ASSERT_EQ(flat.size(), 1u);
    EXPECT_EQ(flat[0].first, "d");
    EXPECT_EQ(flat[0].second, "1/4 u⊗x2 u⊗x2 + -2");
    EXPECT_EQ(parse_terms(flat[0].second), terms);
    EXPECT_EQ(parse_terms("[]"), Json::array());
}

TEST(Report, EmptyContainers)
{
    Json j{{"a", Json::array()}, {"b", Json::object()}, {"c", 3}};
    EXPECT_EQ(render_text(j), "a: []\nb: {}\nc: 3\n");
    EXPECT_THROW(parse_text("no separator here"), ParseError);
}

TEST(Report, PolynomialsUseExactCoefficients)
{
    auto B = corpus_basis("cp2");
    MinimalK1 M = minimal_k1(B);
    Json j = model_json(M.wbar, "minimal k=1");
    EXPECT_EQ(j["differential"]["v⊙1"][0][0], "1/4");
    EXPECT_TRUE(j["d_squared_zero"].get<bool>());
    EXPECT_EQ(j["minimality"], "minimal");
}

TEST(Report, SelfClosenessSeparatesWitnessFromCitation)
{
    Json j = ne_report_json(self_closeness(corpus_basis("cp3"), 1));
    EXPECT_EQ(j["value"], 11);
    EXPECT_EQ(j["witness"]["status"], "machine-verified lower bound");
    EXPECT_EQ(j["upper_bound"]["status"], "cited");
    EXPECT_EQ(j["witness"]["first_singular_degree"], 11);
    EXPECT_TRUE(j["verified"].get<bool>());
}
