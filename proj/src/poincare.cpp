#include "mapspace/poincare.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mapspace {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what)
{
    throw ParseError(fmt::format("{}: {}", pointer.empty() ? "/" : pointer, what));
}

const json& member(const json& obj, const std::string& pointer, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(pointer, fmt::format("missing field \"{}\"", key));
    return *it;
}

std::string as_string(const json& j, const std::string& pointer)
{
    if (!j.is_string())
        schema_error(pointer, "expected a string");
    return j.get<std::string>();
}

int as_int(const json& j, const std::string& pointer)
{
    if (!j.is_number_integer())
        schema_error(pointer, "expected an integer");
    return j.get<int>();
}

Scalar as_scalar(const json& j, const std::string& pointer)
{
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    if (!j.is_string())
        schema_error(pointer, "expected a coefficient \"p/q\"");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        schema_error(pointer, e.what());
    }
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

CohomologyRing parse_ring_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte just past the offending token.
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(fmt::format("{}:{}: malformed JSON", line, col));
    }
    if (!doc.is_object())
        schema_error("", "expected an object");

    CohomologyRing ring;
    if (auto it = doc.find("name"); it != doc.end())
        ring.name = as_string(*it, "/name");
    ring.dimension = as_int(member(doc, "", "dimension"), "/dimension");
    ring.fundamental_class = as_string(member(doc, "", "fundamental_class"), "/fundamental_class");

    const json& gens = member(doc, "", "generators");
    if (!gens.is_array())
        schema_error("/generators", "expected an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string p = fmt::format("/generators/{}", i);
        if (!gens[i].is_object())
            schema_error(p, "expected {label, degree}");
        ring.classes.push_back(
            {as_string(member(gens[i], p, "label"), p + "/label"), as_int(member(gens[i], p, "degree"), p + "/degree")});
    }

    if (auto it = doc.find("products"); it != doc.end()) {
        if (!it->is_array())
            schema_error("/products", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& entry = (*it)[i];
            std::string p = fmt::format("/products/{}", i);
            if (!entry.is_array() || entry.size() != 3)
                schema_error(p, "expected [left, right, {label: coefficient}]");
            ProductEntry pe;
            pe.left = as_string(entry[0], p + "/0");
            pe.right = as_string(entry[1], p + "/1");
            if (!entry[2].is_object())
                schema_error(p + "/2", "expected an object of coefficients");
            for (const auto& [label, coef] : entry[2].items())
                pe.terms.emplace_back(label, as_scalar(coef, p + "/2/" + label));
            ring.products.push_back(std::move(pe));
        }
    }
    return ring;
}

CohomologyRing load_ring_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_ring_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ":" + e.what());
    }
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> PoincareData::find(std::string_view label) const
{
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].label == label)
            return i;
    return std::nullopt;
}

std::size_t PoincareData::index_of(std::string_view label) const
{
    if (auto i = find(label))
        return *i;
    throw std::out_of_range("unknown class \"" + std::string(label) + "\"");
}

const std::vector<std::size_t>& PoincareData::of_degree(int d) const
{
    static const std::vector<std::size_t> none;
    if (d < 0 || d >= static_cast<int>(by_degree_.size()))
        return none;
    return by_degree_[static_cast<std::size_t>(d)];
}

Scalar PoincareData::epsilon(std::string_view x, std::string_view y, std::string_view z) const
{
    return epsilon(index_of(x), index_of(y), index_of(z));
}

struct RingValidator {
    const CohomologyRing& ring;
    std::vector<Diagnostic> diags;

    void fail(std::string check, std::string message) { diags.push_back({std::move(check), std::move(message)}); }

    ValidationResult run()
    {
        auto P = std::make_shared<PoincareData>();
        P->name_ = ring.name;
        if (ring.dimension <= 0 || ring.dimension % 2 != 0) {
            fail("dimension", fmt::format("formal dimension {} is not a positive even integer", ring.dimension));
            return {nullptr, diags};
        }
        const int dim = ring.dimension;
        P->n_ = dim / 2;

        // Classes: the unit first, then file order.
        P->classes_.push_back({"1", 0});
        std::set<std::string> seen{"1"};
        for (const auto& c : ring.classes) {
            if (c.label == "1") {
                if (c.degree != 0)
                    fail("labels", fmt::format("the unit \"1\" must have degree 0, got {}", c.degree));
                continue;
            }
            if (c.label.empty()) {
                fail("labels", "empty class label");
                continue;
            }
            if (!seen.insert(c.label).second) {
                fail("labels", fmt::format("duplicate class label \"{}\"", c.label));
                continue;
            }
            if (c.degree <= 0 || c.degree > dim) {
                fail("degrees", fmt::format("class {} has degree {} outside 1..{}", c.label, c.degree, dim));
                continue;
            }
            P->classes_.push_back(c);
        }
        const std::size_t N = P->classes_.size();
        P->by_degree_.assign(static_cast<std::size_t>(dim) + 1, {});
        for (std::size_t i = 0; i < N; ++i)
            P->by_degree_[static_cast<std::size_t>(P->classes_[i].degree)].push_back(i);

        if (!P->of_degree(1).empty())
            fail("degree one", "H^1 must vanish");
        if (dim - 1 != 1 && !P->of_degree(dim - 1).empty())
            fail("codegree one", fmt::format("H^{} must vanish", dim - 1));
        const auto& top = P->of_degree(dim);
        if (top.size() != 1) {
            fail("top degree", fmt::format("H^{} has dimension {}, expected 1", dim, top.size()));
        } else {
            P->top_ = top.front();
            if (P->classes_[P->top_].label != ring.fundamental_class)
                fail("fundamental class",
                     fmt::format("fundamental class \"{}\" is not the top-degree class \"{}\"", ring.fundamental_class,
                                 P->classes_[P->top_].label));
        }
        if (!diags.empty())
            return {nullptr, diags};

        // Structure constants. Explicit entries first, then the unit and the
        // graded-commutative mirror of every entry whose mirror was not given.
        P->mult_.assign(N * N * N, Scalar(0));
        std::vector<char> given(N * N, 0);
        auto at = [&](std::size_t a, std::size_t b, std::size_t e) -> Scalar& { return P->mult_[(a * N + b) * N + e]; };
        for (std::size_t i = 0; i < ring.products.size(); ++i) {
            const auto& pe = ring.products[i];
            auto a = P->find(pe.left);
            auto b = P->find(pe.right);
            if (!a || !b) {
                fail("products", fmt::format("product #{} ({}, {}) names an unknown class", i, pe.left, pe.right));
                continue;
            }
            if (given[*a * N + *b]) {
                fail("products", fmt::format("product ({}, {}) given twice", pe.left, pe.right));
                continue;
            }
            given[*a * N + *b] = 1;
            for (const auto& [label, c] : pe.terms) {
                auto e = P->find(label);
                if (!e) {
                    fail("products", fmt::format("product ({}, {}) has unknown term \"{}\"", pe.left, pe.right, label));
                    continue;
                }
                int deg = P->classes_[*a].degree + P->classes_[*b].degree;
                if (P->classes_[*e].degree != deg && sgn(c) != 0) {
                    fail("product degrees", fmt::format("product ({}, {}) has term {} of degree {}, expected {}", pe.left,
                                                        pe.right, label, P->classes_[*e].degree, deg));
                    continue;
                }
                at(*a, *b, *e) += c;
            }
        }
        if (!diags.empty())
            return {nullptr, diags};

        for (std::size_t a = 0; a < N; ++a) {
            if (!given[a])
                at(0, a, a) = 1;
            if (!given[a * N])
                at(a, 0, a) = 1;
        }
        for (std::size_t a = 1; a < N; ++a)
            for (std::size_t b = 1; b < N; ++b)
                if (given[a * N + b] && !given[b * N + a]) {
                    int s = koszul_sign(P->classes_[a].degree, P->classes_[b].degree);
                    for (std::size_t e = 0; e < N; ++e)
                        at(b, a, e) = s * at(a, b, e);
                }

        // Unit, commutativity, associativity: exhaustive over basis tuples.
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t e = 0; e < N; ++e) {
                Scalar expect = (a == e) ? 1 : 0;
                if (at(0, a, e) != expect || at(a, 0, e) != expect) {
                    fail("unit", fmt::format("1 does not act as unit on {}", P->classes_[a].label));
                    break;
                }
            }
        for (std::size_t a = 1; a < N; ++a)
            for (std::size_t b = a + 1; b < N; ++b) {
                int s = koszul_sign(P->classes_[a].degree, P->classes_[b].degree);
                for (std::size_t e = 0; e < N; ++e)
                    if (at(a, b, e) != s * at(b, a, e)) {
                        fail("graded commutativity",
                             fmt::format("({}, {}) and ({}, {}) disagree on {}", P->classes_[a].label,
                                         P->classes_[b].label, P->classes_[b].label, P->classes_[a].label,
                                         P->classes_[e].label));
                        break;
                    }
            }
        for (std::size_t a = 1; a < N; ++a)
            for (std::size_t b = 1; b < N; ++b)
                for (std::size_t c = 1; c < N; ++c) {
                    if (P->classes_[a].degree + P->classes_[b].degree + P->classes_[c].degree > dim)
                        continue;
                    for (std::size_t e = 0; e < N; ++e) {
                        Scalar lhs = 0, rhs = 0;
                        for (std::size_t y = 0; y < N; ++y) {
                            lhs += at(a, b, y) * at(y, c, e);
                            rhs += at(b, c, y) * at(a, y, e);
                        }
                        if (lhs != rhs) {
                            fail("associativity",
                                 fmt::format("({} {}) {} != {} ({} {}) at {}", P->classes_[a].label, P->classes_[b].label,
                                             P->classes_[c].label, P->classes_[a].label, P->classes_[b].label,
                                             P->classes_[c].label, P->classes_[e].label));
                            break;
                        }
                    }
                }

        // Duality pairing H^i x H^{2n-i} -> H^{2n}.
        for (int i = 0; i <= P->n_; ++i) {
            const auto& lo = P->of_degree(i);
            const auto& hi = P->of_degree(dim - i);
            Matrix pairing(lo.size(), hi.size());
            for (std::size_t r = 0; r < lo.size(); ++r)
                for (std::size_t c = 0; c < hi.size(); ++c)
                    pairing(r, c) = at(lo[r], hi[c], P->top_);
            if (!is_regular(pairing))
                fail("duality pairing",
                     fmt::format("pairing H^{} x H^{} -> H^{} is degenerate in degree {}", i, dim - i, dim, i));
        }

        if (!diags.empty())
            return {nullptr, diags};
        return {P, {}};
    }
};

ValidationResult validate_ring(const CohomologyRing& ring) { return RingValidator{ring, {}}.run(); }

bool is_primitive(const PoincareData& P)
{
    const std::size_t N = P.size();
    for (std::size_t a = 1; a < N; ++a)
        for (std::size_t b = 1; b < N; ++b) {
            if (P.cls(a).degree + P.cls(b).degree >= P.dimension())
                continue;
            for (std::size_t e = 0; e < N; ++e)
                if (sgn(P.mult(a, b, e)) != 0)
                    return false;
        }
    return true;
}

int lowest_upper_degree(const PoincareData& P)
{
    for (int d = P.n(); d < P.dimension(); ++d)
        if (P.betti(d) > 0)
            return d;
    return P.dimension();
}

// ---------------------------------------------------------------------------

namespace {

std::string combination_label(const PoincareData& P, const std::vector<std::size_t>& input, const Matrix& C,
                              std::size_t col)
{
    std::string out;
    std::size_t nonzero = 0, last = 0;
    for (std::size_t r = 0; r < C.rows(); ++r)
        if (sgn(C(r, col)) != 0) {
            ++nonzero;
            last = r;
        }
    if (nonzero == 1 && C(last, col) == 1)
        return P.cls(input[last]).label;
    for (std::size_t r = 0; r < C.rows(); ++r) {
        const Scalar& c = C(r, col);
        if (sgn(c) == 0)
            continue;
        Scalar mag = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? "-" : "+";
        if (mag != 1)
            out += to_string(mag) + "*";
        out += P.cls(input[r]).label;
    }
    return "(" + out + ")";
}

}  // namespace

std::shared_ptr<const CanonicalBasis> CanonicalBasis::build(std::shared_ptr<const PoincareData> Pptr)
{
    const PoincareData& P = *Pptr;
    const int n = P.n();
    const int dim = P.dimension();
    auto B = std::shared_ptr<CanonicalBasis>(new CanonicalBasis());
    B->ring_ = Pptr;
    B->change_.resize(static_cast<std::size_t>(dim) + 1);

    auto input = [&](int d) -> const std::vector<std::size_t>& { return P.of_degree(d); };
    for (int d = 0; d <= dim; ++d)
        B->change_[static_cast<std::size_t>(d)] = Matrix::identity(input(d).size());

    // Upper degrees: cohomology duals of the lower basis, eps(y, PD(x), w) = delta.
    for (int i = 2; i < n; ++i) {
        const auto& lo = input(i);
        const auto& hi = input(dim - i);
        Matrix M(lo.size(), hi.size());
        for (std::size_t y = 0; y < lo.size(); ++y)
            for (std::size_t b = 0; b < hi.size(); ++b)
                M(y, b) = P.mult(hi[b], lo[y], P.top());
        auto C = inverse(M);
        if (!C)
            throw InternalInconsistency(fmt::format("pairing in degree {} became singular", i));
        B->change_[static_cast<std::size_t>(dim - i)] = *C;
    }

    // Middle degree.
    std::vector<std::string> middle_labels;
    if (n >= 1 && !input(n).empty()) {
        const auto& mid = input(n);
        Matrix G(mid.size(), mid.size());
        for (std::size_t i = 0; i < mid.size(); ++i)
            for (std::size_t j = 0; j < mid.size(); ++j)
                G(i, j) = P.epsilon(mid[i], mid[j], P.top());
        if (n % 2 == 0) {
            B->change_[static_cast<std::size_t>(n)] = diagonalize_symmetric(G).change;
        } else {
            auto S = symplectic_normal_form(G);
            if (!S)
                throw InternalInconsistency("middle-degree skew form is degenerate");
            B->change_[static_cast<std::size_t>(n)] = S->change;
        }
    }

    // Elements, labels.
    B->by_degree_.assign(static_cast<std::size_t>(dim) + 1, {});
    std::set<std::string> used;
    for (int d = 0; d <= dim; ++d) {
        const Matrix& C = B->change(d);
        for (std::size_t col = 0; col < C.cols(); ++col) {
            std::string label;
            if (d > n && d < dim) {
                label = combination_label(P, input(d), C, col);
                if (label.front() == '(')
                    label = "PD(" + P.cls(input(dim - d)[col]).label + ")";
            } else {
                label = combination_label(P, input(d), C, col);
            }
            while (!used.insert(label).second)
                label += "'";
            B->by_degree_[static_cast<std::size_t>(d)].push_back(B->elements_.size());
            B->elements_.push_back({label, d});
        }
    }
    const std::size_t N = B->elements_.size();
    for (std::size_t x = 0; x < N; ++x)
        if (B->degree(x) > 0 && B->degree(x) < dim)
            B->hat_domain_.push_back(x);

    // eps in the new basis: eps'(a,b,c) = sum C_ia C_jb mult(j,i,k) Cinv_ck.
    std::vector<Matrix> inv(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        auto m = inverse(B->change(d));
        if (!m)
            throw InternalInconsistency(fmt::format("change of basis in degree {} is singular", d));
        inv[static_cast<std::size_t>(d)] = *m;
    }
    auto pos = [&](std::size_t x) {
        const auto& v = B->of_degree(B->degree(x));
        return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
    };
    B->eps_.assign(N * N * N, Scalar(0));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            int dc = B->degree(a) + B->degree(b);
            if (dc > dim)
                continue;
            const Matrix& Ca = B->change(B->degree(a));
            const Matrix& Cb = B->change(B->degree(b));
            const Matrix& Ic = inv[static_cast<std::size_t>(dc)];
            const auto& ia = input(B->degree(a));
            const auto& ib = input(B->degree(b));
            const auto& ic = input(dc);
            std::size_t pa = pos(a), pb = pos(b);
            for (std::size_t c : B->of_degree(dc)) {
                std::size_t pc = pos(c);
                Scalar sum = 0;
                for (std::size_t i = 0; i < ia.size(); ++i) {
                    if (sgn(Ca(i, pa)) == 0)
                        continue;
                    for (std::size_t j = 0; j < ib.size(); ++j) {
                        if (sgn(Cb(j, pb)) == 0)
                            continue;
                        for (std::size_t k = 0; k < ic.size(); ++k)
                            sum += Ca(i, pa) * Cb(j, pb) * P.mult(ib[j], ia[i], ic[k]) * Ic(pc, k);
                    }
                }
                B->eps_[(a * N + b) * N + c] = sum;
            }
        }

    // Duality involution on B-hat.
    B->hat_.assign(N, N);
    for (std::size_t x : B->hat_domain_) {
        std::size_t found = N;
        for (std::size_t z = 0; z < N; ++z) {
            if (sgn(B->eps(x, z, B->w())) == 0)
                continue;
            if (found != N)
                throw InternalInconsistency(fmt::format("{} has two duality partners", B->label(x)));
            found = z;
        }
        if (found == N)
            throw InternalInconsistency(fmt::format("{} has no duality partner", B->label(x)));
        B->hat_[x] = found;
    }
    return B;
}

std::optional<std::size_t> CanonicalBasis::find(std::string_view label) const
{
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].label == label)
            return i;
    return std::nullopt;
}

const std::vector<std::size_t>& CanonicalBasis::of_degree(int d) const
{
    static const std::vector<std::size_t> none;
    if (d < 0 || d >= static_cast<int>(by_degree_.size()))
        return none;
    return by_degree_[static_cast<std::size_t>(d)];
}

bool CanonicalBasis::in_hat_domain(std::size_t x) const
{
    return x < size() && degree(x) > 0 && degree(x) < dimension();
}

std::size_t CanonicalBasis::hat(std::size_t x) const
{
    if (!in_hat_domain(x))
        throw std::invalid_argument("hat is defined only for 0 < |x| < 2n");
    return hat_[x];
}

Matrix CanonicalBasis::middle_gram() const
{
    const auto& mid = of_degree(n());
    Matrix G(mid.size(), mid.size());
    for (std::size_t i = 0; i < mid.size(); ++i)
        for (std::size_t j = 0; j < mid.size(); ++j)
            G(i, j) = eps(mid[i], mid[j], w());
    return G;
}

Matrix CanonicalBasis::e_matrix(int k, std::size_t x) const
{
    int i = degree(x);
    const auto& rows = of_degree(k);
    const auto& cols = of_degree(i - k);
    Matrix E(rows.size(), cols.size());
    for (std::size_t p = 0; p < rows.size(); ++p)
        for (std::size_t q = 0; q < cols.size(); ++q)
            E(p, q) = eps(rows[p], cols[q], x);
    return E;
}

}  // namespace mapspace
