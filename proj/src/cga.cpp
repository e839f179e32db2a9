#include "mapspace/cga.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <set>

namespace mapspace {

// ---------------------------------------------------------------------------
// GeneratorTable

std::shared_ptr<const GeneratorTable> GeneratorTable::create(std::vector<Spec> specs)
{
    auto table = std::shared_ptr<GeneratorTable>(new GeneratorTable());
    table->generators_.reserve(specs.size());
    for (auto& s : specs) {
        auto id = static_cast<GeneratorId>(table->generators_.size());
        if (!table->by_label_.emplace(s.label, id).second)
            throw StructuralError("duplicate generator label \"" + s.label + "\"");
        table->generators_.push_back({id, std::move(s.label), s.degree});
    }
    return table;
}

const Generator& GeneratorTable::at(GeneratorId id) const
{
    if (id >= generators_.size())
        throw StructuralError(fmt::format("generator id {} is foreign to this algebra", id));
    return generators_[id];
}

std::optional<GeneratorId> GeneratorTable::find(std::string_view label) const
{
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

GeneratorId GeneratorTable::id_of(std::string_view label) const
{
    auto id = find(label);
    if (!id)
        throw StructuralError("unknown generator \"" + std::string(label) + "\"");
    return *id;
}

std::vector<GeneratorId> GeneratorTable::of_degree(int degree) const
{
    std::vector<GeneratorId> out;
    for (const auto& g : generators_)
        if (g.degree == degree)
            out.push_back(g.id);
    return out;
}

// ---------------------------------------------------------------------------
// Monomials

Monomial Monomial::from_sorted(std::vector<GeneratorId> factors)
{
    Monomial m;
    m.factors_ = std::move(factors);
    return m;
}

std::size_t Monomial::count(GeneratorId g) const
{
    auto [lo, hi] = std::equal_range(factors_.begin(), factors_.end(), g);
    return static_cast<std::size_t>(hi - lo);
}

std::optional<SignedMonomial> normalize_monomial(const GeneratorTable& table, std::span<const GeneratorId> factors)
{
    std::vector<GeneratorId> f(factors.begin(), factors.end());
    for (GeneratorId g : f)
        (void)table.at(g);
    // Insertion sort; each adjacent transposition of two odd factors flips the sign.
    int sign = 1;
    for (std::size_t i = 1; i < f.size(); ++i) {
        for (std::size_t j = i; j > 0 && f[j - 1] > f[j]; --j) {
            if (table.is_odd(f[j - 1]) && table.is_odd(f[j]))
                sign = -sign;
            std::swap(f[j - 1], f[j]);
        }
    }
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] == f[i - 1] && table.is_odd(f[i]))
            return std::nullopt;
    return SignedMonomial{sign, Monomial::from_sorted(std::move(f))};
}

std::optional<SignedMonomial> multiply_monomials(const GeneratorTable& table, const Monomial& a, const Monomial& b)
{
    auto fa = a.factors();
    auto fb = b.factors();
    std::vector<GeneratorId> out;
    out.reserve(fa.size() + fb.size());
    // Odd factors of `a` not yet emitted; every odd factor of `b` jumps over them.
    std::size_t odd_left_in_a = 0;
    for (GeneratorId g : fa)
        odd_left_in_a += table.is_odd(g) ? 1 : 0;
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i] <= fb[j])) {
            if (j < fb.size() && fa[i] == fb[j] && table.is_odd(fa[i]))
                return std::nullopt;
            if (table.is_odd(fa[i]))
                --odd_left_in_a;
            out.push_back(fa[i++]);
        } else {
            if (table.is_odd(fb[j]) && odd_left_in_a % 2 == 1)
                sign = -sign;
            out.push_back(fb[j++]);
        }
    }
    return SignedMonomial{sign, Monomial::from_sorted(std::move(out))};
}

int degree_of(const GeneratorTable& table, const Monomial& m)
{
    int d = 0;
    for (GeneratorId g : m.factors())
        d += table.degree(g);
    return d;
}

// ---------------------------------------------------------------------------
// Polynomials

Polynomial::Polynomial(Host host) : host_(std::move(host))
{
    if (!host_)
        throw StructuralError("polynomial without a host algebra");
}

Polynomial Polynomial::constant(Host host, const Scalar& c)
{
    Polynomial p(std::move(host));
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::generator(Host host, GeneratorId id)
{
    (void)host->at(id);
    Polynomial p(std::move(host));
    p.add_term(Monomial::from_sorted({id}), 1);
    return p;
}

Polynomial Polynomial::generator(Host host, std::string_view label)
{
    GeneratorId id = host->id_of(label);
    return generator(std::move(host), id);
}

Polynomial Polynomial::product(Host host, std::span<const GeneratorId> factors, const Scalar& c)
{
    Polynomial p(host);
    if (auto n = normalize_monomial(*host, factors))
        p.add_term(n->monomial, n->sign * c);
    return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Polynomial::coefficient_of_product(std::span<const GeneratorId> factors) const
{
    auto n = normalize_monomial(*host_, factors);
    if (!n)
        return 0;
    return n->sign * coefficient(n->monomial);
}

void Polynomial::add_term(const Monomial& m, const Scalar& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

bool Polynomial::is_homogeneous(int degree) const
{
    for (const auto& [m, c] : terms_)
        if (degree_of(*host_, m) != degree)
            return false;
    return true;
}

std::optional<int> Polynomial::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int d = degree_of(*host_, terms_.begin()->first);
    return is_homogeneous(d) ? std::optional<int>(d) : std::nullopt;
}

bool Polynomial::has_constant_term() const { return terms_.count(Monomial()) > 0; }

bool Polynomial::has_linear_terms() const
{
    for (const auto& [m, c] : terms_)
        if (m.length() == 1)
            return true;
    return false;
}

void Polynomial::require_same_host(const Polynomial& other) const
{
    if (host_ != other.host_)
        throw StructuralError("polynomials from different algebras");
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_host(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same_host(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.require_same_host(b);
    Polynomial out(a.host_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            if (auto prod = multiply_monomials(*a.host_, ma, mb))
                out.add_term(prod->monomial, prod->sign * ca * cb);
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    a.require_same_host(b);
    return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(host_, 1);
    for (unsigned i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar mag = abs(c);
        out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        first = false;
        std::string body;
        // Powers of even generators are written g^e.
        auto f = m.factors();
        for (std::size_t i = 0; i < f.size();) {
            std::size_t j = i;
            while (j < f.size() && f[j] == f[i])
                ++j;
            if (!body.empty())
                body += ' ';
            body += host_->label(f[i]);
            if (j - i > 1)
                body += fmt::format("^{}", j - i);
            i = j;
        }
        if (body.empty())
            out += mapspace::to_string(mag);
        else if (mag == 1)
            out += body;
        else
            out += mapspace::to_string(mag) + " " + body;
    }
    return out;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

// ---------------------------------------------------------------------------
// Derivations

Derivation::Derivation(Polynomial::Host host, int shift) : host_(std::move(host)), shift_(shift)
{
    values_.assign(host_->size(), Polynomial(host_));
}

Derivation::Derivation(Polynomial::Host host, int shift, std::vector<Polynomial> values)
    : host_(std::move(host)), shift_(shift), values_(std::move(values))
{
    if (values_.size() != host_->size())
        throw StructuralError("derivation: one value per generator required");
    for (const auto& v : values_)
        if (v.host() != host_)
            throw StructuralError("derivation value lives in a different algebra");
}

Polynomial Derivation::apply(const Polynomial& p) const
{
    if (p.host() != host_)
        throw StructuralError("derivation applied to a polynomial of another algebra");
    Polynomial out(host_);
    for (const auto& [m, c] : p.terms()) {
        auto f = m.factors();
        int prefix_degree = 0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const Polynomial& dg = values_[f[j]];
            if (!dg.is_zero()) {
                Monomial left = Monomial::from_sorted({f.begin(), f.begin() + static_cast<std::ptrdiff_t>(j)});
                Monomial right = Monomial::from_sorted({f.begin() + static_cast<std::ptrdiff_t>(j) + 1, f.end()});
                Scalar coef = c * koszul_sign(shift_, prefix_degree);
                Polynomial l(host_);
                l.add_term(left, coef);
                Polynomial r(host_);
                r.add_term(right, 1);
                out += l * dg * r;
            }
            prefix_degree += host_->degree(f[j]);
        }
    }
    return out;
}

std::optional<GeneratorId> Derivation::first_inhomogeneous() const
{
    for (GeneratorId g = 0; g < values_.size(); ++g)
        if (!values_[g].is_homogeneous(host_->degree(g) + shift_))
            return g;
    return std::nullopt;
}

Polynomial apply_derivation(const Derivation& D, const Polynomial& p) { return D.apply(p); }

// ---------------------------------------------------------------------------
// FreeCGA

FreeCGA::FreeCGA(Polynomial::Host host, std::vector<Polynomial> differential)
    : d_(std::move(host), 1, std::move(differential))
{
}

DSquaredVerdict check_d_squared(const FreeCGA& A)
{
    const auto& table = A.table();
    for (GeneratorId g = 0; g < table.size(); ++g) {
        if (!A.d(g).is_homogeneous(table.degree(g) + 1))
            return {false, g, fmt::format("d({}) is not homogeneous of degree {}", table.label(g), table.degree(g) + 1)};
        Polynomial dd = A.d(A.d(g));
        if (!dd.is_zero())
            return {false, g, fmt::format("d(d({})) = {}", table.label(g), dd.to_string())};
    }
    return {};
}

Minimality is_minimal(const FreeCGA& A)
{
    const auto& table = A.table();
    for (const auto& g : table.generators())
        if (g.degree <= 0)
            return Minimality::not_applicable;
    for (const auto& g : table.generators()) {
        const Polynomial& dg = A.d(g.id);
        if (dg.has_constant_term() || dg.has_linear_terms())
            return Minimality::not_minimal;
        if (!dg.uses_only([&](GeneratorId h) { return table.degree(h) < g.degree; }))
            return Minimality::not_minimal;
    }
    return Minimality::minimal;
}

std::string to_string(Minimality m)
{
    switch (m) {
    case Minimality::minimal:
        return "minimal";
    case Minimality::not_minimal:
        return "not minimal";
    case Minimality::not_applicable:
        return "not applicable";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Algebra maps

AlgebraMap::AlgebraMap(Polynomial::Host source, Polynomial::Host target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (images_.size() != source_->size())
        throw StructuralError("algebra map: one image per source generator required");
    for (const auto& im : images_)
        if (im.host() != target_)
            throw StructuralError("algebra map image lives outside the target algebra");
}

AlgebraMap AlgebraMap::identity(const Polynomial::Host& host)
{
    std::vector<Polynomial> images;
    for (GeneratorId g = 0; g < host->size(); ++g)
        images.push_back(Polynomial::generator(host, g));
    return AlgebraMap(host, host, std::move(images));
}

Polynomial AlgebraMap::apply(const Polynomial& p) const
{
    if (p.host() != source_)
        throw StructuralError("algebra map applied outside its source");
    Polynomial out(target_);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target_, c);
        for (GeneratorId g : m.factors()) {
            term = term * images_[g];
            if (term.is_zero())
                break;
        }
        out += term;
    }
    return out;
}

std::optional<GeneratorId> AlgebraMap::first_non_degree_preserving() const
{
    for (GeneratorId g = 0; g < images_.size(); ++g)
        if (!images_[g].is_homogeneous(source_->degree(g)))
            return g;
    return std::nullopt;
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f)
{
    if (f.target() != g.source())
        throw StructuralError("compose: maps are not composable");
    std::vector<Polynomial> images;
    images.reserve(f.source()->size());
    for (const auto& im : f.images())
        images.push_back(g.apply(im));
    return AlgebraMap(f.source(), g.target(), std::move(images));
}

ChainMapVerdict commutes_with_differential(const AlgebraMap& f, const FreeCGA& source, const FreeCGA& target)
{
    if (f.source() != source.host() || f.target() != target.host())
        throw StructuralError("commutes_with_differential: map and algebras disagree");
    for (GeneratorId g = 0; g < source.table().size(); ++g) {
        Polynomial lhs = target.d(f.image(g));
        Polynomial rhs = f.apply(source.d(g));
        if (!(lhs == rhs))
            return {false, g, lhs, rhs};
    }
    return {true, std::nullopt, Polynomial(target.host()), Polynomial(target.host())};
}

// ---------------------------------------------------------------------------
// Linear parts

const LinearBlock* LinearPart::at(int degree) const
{
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? nullptr : &it->second;
}

LinearPart operator*(const LinearPart& g, const LinearPart& f)
{
    std::map<int, LinearBlock> blocks;
    for (const auto& [deg, fb] : f.blocks_) {
        const LinearBlock* gb = g.at(deg);
        if (!gb || gb->source_ids != fb.target_ids)
            throw StructuralError(fmt::format("linear parts are not composable in degree {}", deg));
        blocks[deg] = LinearBlock{deg, fb.source_ids, gb->target_ids, gb->matrix * fb.matrix};
    }
    return LinearPart(std::move(blocks));
}

LinearPart linear_part(const AlgebraMap& f)
{
    const auto& src = *f.source();
    const auto& tgt = *f.target();
    std::set<int> degrees;
    for (const auto& g : src.generators())
        degrees.insert(g.degree);
    for (const auto& g : tgt.generators())
        degrees.insert(g.degree);

    std::map<int, LinearBlock> blocks;
    for (int deg : degrees) {
        LinearBlock b;
        b.degree = deg;
        b.source_ids = src.of_degree(deg);
        b.target_ids = tgt.of_degree(deg);
        b.matrix = Matrix(b.target_ids.size(), b.source_ids.size());
        for (std::size_t c = 0; c < b.source_ids.size(); ++c) {
            const Polynomial& im = f.image(b.source_ids[c]);
            for (std::size_t r = 0; r < b.target_ids.size(); ++r)
                b.matrix(r, c) = im.coefficient(Monomial::from_sorted({b.target_ids[r]}));
        }
        blocks.emplace(deg, std::move(b));
    }
    return LinearPart(std::move(blocks));
}

bool is_isomorphism_through(const LinearPart& L, int max_degree)
{
    for (const auto& [deg, b] : L.blocks()) {
        if (deg > max_degree)
            break;
        if (!is_regular(b.matrix))
            return false;
    }
    return true;
}

std::optional<int> first_singular_degree(const LinearPart& L)
{
    for (const auto& [deg, b] : L.blocks())
        if (!is_regular(b.matrix))
            return deg;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

void enumerate(const GeneratorTable& table, std::span<const GeneratorId> allowed, std::size_t from, int remaining,
               std::size_t max_length, std::vector<GeneratorId>& current, std::vector<Monomial>& out)
{
    if (remaining == 0) {
        out.push_back(Monomial::from_sorted(current));
        return;
    }
    if (current.size() == max_length)
        return;
    for (std::size_t i = from; i < allowed.size(); ++i) {
        GeneratorId g = allowed[i];
        int d = table.degree(g);
        if (d <= 0 || d > remaining)
            continue;
        current.push_back(g);
        // Odd generators may appear once; even ones repeat.
        enumerate(table, allowed, table.is_odd(g) ? i + 1 : i, remaining - d, max_length, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const GeneratorTable& table, std::span<const GeneratorId> allowed, int degree,
                                          std::size_t max_length)
{
    std::vector<GeneratorId> sorted(allowed.begin(), allowed.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Monomial> out;
    std::vector<GeneratorId> current;
    if (degree == 0) {
        out.emplace_back();
        return out;
    }
    enumerate(table, sorted, 0, degree, max_length, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mapspace
