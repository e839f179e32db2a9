#include "mapspace/selfclose.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace mapspace {

namespace {

Matrix block_of(const AlgebraMap& f, const Model& M, Symbol kind, const std::vector<std::size_t>& xs)
{
    Matrix out(xs.size(), xs.size());
    for (std::size_t r = 0; r < xs.size(); ++r) {
        const Polynomial& im = f.image(M.id(kind, xs[r]));
        for (std::size_t q = 0; q < xs.size(); ++q)
            out(q, r) = im.coefficient(Monomial::from_sorted({M.id(kind, xs[q])}));
    }
    return out;
}

}  // namespace

SelfMapMatrices matrices_of(const AlgebraMap& f, const Model& k0)
{
    if (f.source() != k0.host() || f.target() != k0.host())
        throw StructuralError("matrices_of expects a self-map of the k = 0 minimal model");
    const CanonicalBasis& B = *k0.basis;
    const int dim = B.dimension();
    SelfMapMatrices m;
    for (int k = 0; k < dim; ++k)
        m.a.push_back(block_of(f, k0, Symbol::u_tensor, B.of_degree(k)));
    for (int k = 0; k <= dim; ++k)
        m.b.push_back(block_of(f, k0, Symbol::v_tensor, B.of_degree(k)));
    return m;
}

MatrixRelationVerdict verify_matrix_relations(const AlgebraMap& f, const Model& k0)
{
    MatrixRelationVerdict v;
    auto chain = commutes_with_differential(f, k0.cga, k0.cga);
    if (!chain.passed) {
        v.offending_generator = k0.table().label(*chain.offending);
        return v;
    }
    v.is_dga_map = true;
    const CanonicalBasis& B = *k0.basis;
    const int dim = B.dimension();
    SelfMapMatrices m = matrices_of(f, k0);
    for (int i = 0; i <= dim; ++i) {
        const auto& Bi = B.of_degree(i);
        for (std::size_t p = 0; p < Bi.size(); ++p) {
            int k_lo = (i < dim) ? 0 : 1;
            int k_hi = (i < dim) ? i : dim - 1;
            for (int k = k_lo; k <= k_hi; ++k) {
                ++v.instances;
                Matrix lhs = m.a[k] * B.e_matrix(k, Bi[p]) * m.a[i - k].transpose();
                Matrix rhs(lhs.rows(), lhs.cols());
                for (std::size_t a = 0; a < Bi.size(); ++a)
                    rhs = rhs + m.b[i](a, p) * B.e_matrix(k, Bi[a]);
                if (!(lhs == rhs))
                    v.violations.push_back(fmt::format("degree {}, class {}, split k={}: {} != {}", i, B.label(Bi[p]), k,
                                                       lhs.to_string(), rhs.to_string()));
            }
        }
        if (i < dim) {
            ++v.instances;
            // A_0 is 1 x 1.
            Matrix scaled = m.a[0](0, 0) * m.a[i];
            if (!(m.b[i] == scaled))
                v.violations.push_back(
                    fmt::format("degree {}: B = {} but A_0 A = {}", i, m.b[i].to_string(), scaled.to_string()));
        }
    }
    return v;
}

AlgebraMap scalar_self_map(const Model& k0, const Scalar& c)
{
    std::vector<Polynomial> images;
    for (GeneratorId g = 0; g < k0.table().size(); ++g) {
        Scalar s = (k0.provenance[g].kind == Symbol::u_tensor) ? c : c * c;
        images.push_back(s * k0.cga.gen(g));
    }
    return AlgebraMap(k0.host(), k0.host(), std::move(images));
}

bool Witness::verified() const
{
    for (const auto& t : transcript)
        if (!t.passed)
            return false;
    return !transcript.empty();
}

namespace {

void transcribe(Witness& w, int ne)
{
    auto chain = commutes_with_differential(w.map, w.model.cga, w.model.cga);
    w.transcript.push_back({"commutes with the differential", chain.passed,
                            chain.passed ? "d g = g d on every generator"
                                         : fmt::format("fails at {}: d(g) = {}, g(d) = {}",
                                                       w.model.table().label(*chain.offending),
                                                       chain.d_of_image.to_string(), chain.image_of_d.to_string())});
    auto off = w.map.first_non_degree_preserving();
    w.transcript.push_back({"degree preserving", !off.has_value(),
                            off ? "fails at " + w.model.table().label(*off) : "every image is homogeneous"});
    LinearPart L = linear_part(w.map);
    w.first_singular_degree = first_singular_degree(L);
    bool iso_below = is_isomorphism_through(L, ne - 1);
    w.transcript.push_back({fmt::format("linear part invertible through degree {}", ne - 1), iso_below,
                            iso_below ? "all blocks regular" : "a lower block is singular"});
    bool singular_at = w.first_singular_degree == ne;
    w.transcript.push_back(
        {fmt::format("linear part singular in degree {}", ne), singular_at,
         w.first_singular_degree ? fmt::format("first singular degree {}", *w.first_singular_degree)
                                 : "no singular degree"});
}

}  // namespace

Witness witness_k0(std::shared_ptr<const CanonicalBasis> Bptr)
{
    const CanonicalBasis& B = *Bptr;
    const int dim = B.dimension();
    Model M = minimal_k0(Bptr);
    const bool prim = is_primitive(B.ring());
    const int dX = lowest_upper_degree(B.ring());
    std::vector<Polynomial> images;
    for (GeneratorId g = 0; g < M.table().size(); ++g) {
        const auto& p = M.provenance[g];
        bool keep;
        if (prim) {
            if (p.kind == Symbol::u_tensor)
                keep = p.basis != B.unit();
            else
                keep = p.basis == B.w();
        } else {
            keep = p.kind == Symbol::u_tensor && M.table().degree(g) < dX;
        }
        images.push_back(keep ? M.cga.gen(g) : Polynomial(M.host()));
    }
    AlgebraMap map(M.host(), M.host(), std::move(images));
    Witness w{std::move(M), std::move(map), {}, std::nullopt};
    transcribe(w, prim ? dim : dX);
    return w;
}

Witness witness_k1(const Splitting& S, const SplittingCertificate& cert)
{
    if (!cert.split_map || !cert.split_inverse || !cert.split_source)
        throw InternalInconsistency("splitting certificate has no isomorphism");
    const Model& W = S.wbar();
    const FreeCGA& src = *cert.split_source;
    // h: identity on ΛU, s ↦ 0.
    std::vector<Polynomial> h_images;
    const GeneratorId s_id = static_cast<GeneratorId>(src.table().size() - 1);
    for (GeneratorId g = 0; g < src.table().size(); ++g)
        h_images.push_back(g == s_id ? Polynomial(src.host()) : src.gen(g));
    AlgebraMap h(src.host(), src.host(), std::move(h_images));
    AlgebraMap g = compose(*cert.split_map, compose(h, *cert.split_inverse));
    Witness w{W, std::move(g), {}, std::nullopt};
    w.transcript.push_back({"splitting certificate valid", cert.valid(), cert.valid() ? "all residuals zero" : "invalid"});
    transcribe(w, 2 * S.basis().dimension() - 1);
    return w;
}

NEReport self_closeness(std::shared_ptr<const CanonicalBasis> B, long k)
{
    if (k != 0 && k != 1)
        throw std::invalid_argument("self-closeness is computed for components 0 and 1 only");
    NEReport r;
    r.component = k;
    r.dimension = B->dimension();
    r.primitive = is_primitive(B->ring());
    r.lowest_upper_degree = lowest_upper_degree(B->ring());
    r.upper_bound = "upper bound not machine-verified: it quantifies over all self-maps and is taken from the "
                    "published classification";
    if (k == 0) {
        r.value = r.primitive ? r.dimension : r.lowest_upper_degree;
        r.witness = witness_k0(B);
    } else {
        r.value = 2 * r.dimension - 1;
        MinimalK1 M = minimal_k1(B);
        Splitting S(M);
        SplittingCertificate cert = build_zeta_and_split(S);
        r.certificate_valid = cert.valid();
        r.witness = witness_k1(S, cert);
    }
    return r;
}

}  // namespace mapspace
