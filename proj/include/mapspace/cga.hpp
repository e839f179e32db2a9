#pragma once

#include "mapspace/linalg.hpp"
#include "mapspace/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mapspace {

using GeneratorId = std::uint32_t;

// Raised when values from different algebras are mixed or an id does not
// belong to the algebra at hand.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Generator {
    GeneratorId id;
    std::string label;
    int degree;
};

// Ordered generator table of a free graded-commutative algebra.  Ids are the
// positions in construction order and define the monomial order.
class GeneratorTable {
public:
    struct Spec {
        std::string label;
        int degree;
    };

    static std::shared_ptr<const GeneratorTable> create(std::vector<Spec> specs);

    std::size_t size() const { return generators_.size(); }
    const std::vector<Generator>& generators() const { return generators_; }
    const Generator& at(GeneratorId id) const;
    int degree(GeneratorId id) const { return at(id).degree; }
    bool is_odd(GeneratorId id) const { return at(id).degree % 2 != 0; }
    const std::string& label(GeneratorId id) const { return at(id).label; }
    std::optional<GeneratorId> find(std::string_view label) const;
    GeneratorId id_of(std::string_view label) const;  // throws StructuralError

    std::vector<GeneratorId> of_degree(int degree) const;

private:
    GeneratorTable() = default;
    std::vector<Generator> generators_;
    std::unordered_map<std::string, GeneratorId> by_label_;
};

// Normal form of a monomial: generator ids sorted ascending, odd generators at
// most once.  The empty monomial is the unit.
class Monomial {
public:
    Monomial() = default;
    // Caller guarantees normal form.
    static Monomial from_sorted(std::vector<GeneratorId> factors);

    std::span<const GeneratorId> factors() const { return factors_; }
    std::size_t length() const { return factors_.size(); }
    bool is_unit() const { return factors_.empty(); }
    std::size_t count(GeneratorId g) const;
    bool contains(GeneratorId g) const { return count(g) > 0; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<GeneratorId> factors_;
};

struct SignedMonomial {
    int sign;
    Monomial monomial;
};

// Sorts an arbitrary product of generators into normal form, tracking the
// Koszul sign.  Returns nullopt when an odd generator repeats (the product is 0).
std::optional<SignedMonomial> normalize_monomial(const GeneratorTable& table, std::span<const GeneratorId> factors);

// Product of two normal-form monomials (merge with sign).
std::optional<SignedMonomial> multiply_monomials(const GeneratorTable& table, const Monomial& a, const Monomial& b);

int degree_of(const GeneratorTable& table, const Monomial& m);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar>;
    using Host = std::shared_ptr<const GeneratorTable>;

    explicit Polynomial(Host host);

    static Polynomial constant(Host host, const Scalar& c);
    static Polynomial generator(Host host, GeneratorId id);
    static Polynomial generator(Host host, std::string_view label);
    // The ordered product g1 g2 ... gk, times c.
    static Polynomial product(Host host, std::span<const GeneratorId> factors, const Scalar& c = 1);
    static Polynomial product(Host host, std::initializer_list<GeneratorId> factors, const Scalar& c = 1)
    {
        return product(std::move(host), std::span<const GeneratorId>(factors.begin(), factors.size()), c);
    }

    const Host& host() const { return host_; }
    const GeneratorTable& table() const { return *host_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const Monomial& m) const;
    // Coefficient of the ordered product g1...gk (sign-adjusted); 0 if the product vanishes.
    Scalar coefficient_of_product(std::span<const GeneratorId> factors) const;
    Scalar coefficient_of_product(std::initializer_list<GeneratorId> factors) const
    {
        return coefficient_of_product(std::span<const GeneratorId>(factors.begin(), factors.size()));
    }

    void add_term(const Monomial& m, const Scalar& c);

    // Homogeneous of `degree` (the zero polynomial is homogeneous of every degree).
    bool is_homogeneous(int degree) const;
    std::optional<int> degree() const;  // nullopt for zero or inhomogeneous
    bool has_constant_term() const;
    bool has_linear_terms() const;
    // No constant and no linear part: lies in (L+ V)^2.
    bool is_decomposable() const { return !has_constant_term() && !has_linear_terms(); }
    // Every monomial uses only generators satisfying pred.
    template <class Pred>
    bool uses_only(Pred pred) const
    {
        for (const auto& [m, c] : terms_)
            for (GeneratorId g : m.factors())
                if (!pred(g))
                    return false;
        return true;
    }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Scalar& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned e) const;

    std::string to_string() const;

private:
    void require_same_host(const Polynomial& other) const;

    Host host_;
    TermMap terms_;
};

Polynomial multiply(const Polynomial& p, const Polynomial& q);

// Graded derivation of degree `shift`, extended from generator values by the
// Koszul rule  D(ab) = D(a) b + (-1)^{shift |a|} a D(b).
class Derivation {
public:
    Derivation(Polynomial::Host host, int shift);
    Derivation(Polynomial::Host host, int shift, std::vector<Polynomial> values);

    const Polynomial::Host& host() const { return host_; }
    int shift() const { return shift_; }
    const Polynomial& on_generator(GeneratorId g) const { return values_.at(g); }
    const std::vector<Polynomial>& values() const { return values_; }

    Polynomial apply(const Polynomial& p) const;
    Polynomial operator()(const Polynomial& p) const { return apply(p); }

    // First generator whose value is not homogeneous of degree |g| + shift.
    std::optional<GeneratorId> first_inhomogeneous() const;

private:
    Polynomial::Host host_;
    int shift_;
    std::vector<Polynomial> values_;
};

Polynomial apply_derivation(const Derivation& D, const Polynomial& p);

// Free graded-commutative algebra with a differential (degree +1 derivation).
// Construction does not insist on d^2 = 0; use check_d_squared.
class FreeCGA {
public:
    FreeCGA(Polynomial::Host host, std::vector<Polynomial> differential);

    const Polynomial::Host& host() const { return d_.host(); }
    const GeneratorTable& table() const { return *d_.host(); }
    const Derivation& differential() const { return d_; }
    const Polynomial& d(GeneratorId g) const { return d_.on_generator(g); }
    Polynomial d(const Polynomial& p) const { return d_.apply(p); }
    Polynomial gen(GeneratorId g) const { return Polynomial::generator(host(), g); }
    Polynomial gen(std::string_view label) const { return Polynomial::generator(host(), label); }

private:
    Derivation d_;
};

struct DSquaredVerdict {
    bool passed = true;
    std::optional<GeneratorId> offending;
    std::string reason;
};

// Checks |d g| = |g| + 1 and d(d g) = 0 on every generator, in id order.
DSquaredVerdict check_d_squared(const FreeCGA& A);

enum class Minimality { minimal, not_minimal, not_applicable };

// Minimal: d g has no constant or linear term and involves only generators of
// degree < |g|.  Algebras with a degree <= 0 generator are not_applicable.
Minimality is_minimal(const FreeCGA& A);
std::string to_string(Minimality m);

// Algebra map given by generator images; the image of the ordered product is
// the ordered product of images.
class AlgebraMap {
public:
    AlgebraMap(Polynomial::Host source, Polynomial::Host target, std::vector<Polynomial> images);
    static AlgebraMap identity(const Polynomial::Host& host);

    const Polynomial::Host& source() const { return source_; }
    const Polynomial::Host& target() const { return target_; }
    const Polynomial& image(GeneratorId g) const { return images_.at(g); }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Polynomial& p) const;
    Polynomial operator()(const Polynomial& p) const { return apply(p); }

    std::optional<GeneratorId> first_non_degree_preserving() const;

private:
    Polynomial::Host source_;
    Polynomial::Host target_;
    std::vector<Polynomial> images_;
};

// g after f.
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

struct ChainMapVerdict {
    bool passed = true;
    std::optional<GeneratorId> offending;
    Polynomial d_of_image;  // d(f(g)) at the offending generator
    Polynomial image_of_d;  // f(d(g)) at the offending generator
};

// f d = d f on every source generator.
ChainMapVerdict commutes_with_differential(const AlgebraMap& f, const FreeCGA& source, const FreeCGA& target);

// Matrix of the linear part in one degree: rows index target generators, columns
// source generators, both in id order.
struct LinearBlock {
    int degree = 0;
    std::vector<GeneratorId> source_ids;
    std::vector<GeneratorId> target_ids;
    Matrix matrix;
};

class LinearPart {
public:
    LinearPart() = default;
    explicit LinearPart(std::map<int, LinearBlock> blocks) : blocks_(std::move(blocks)) {}

    const std::map<int, LinearBlock>& blocks() const { return blocks_; }
    const LinearBlock* at(int degree) const;

    // Per-degree product (this after other).
    friend LinearPart operator*(const LinearPart& g, const LinearPart& f);

private:
    std::map<int, LinearBlock> blocks_;
};

LinearPart linear_part(const AlgebraMap& f);

// Every block of degree <= max_degree is square and invertible.
bool is_isomorphism_through(const LinearPart& L, int max_degree);
// Lowest degree whose block is not invertible.
std::optional<int> first_singular_degree(const LinearPart& L);

// Normal-form monomials of the given degree built from `allowed` generators.
std::vector<Monomial> monomials_of_degree(const GeneratorTable& table, std::span<const GeneratorId> allowed, int degree,
                                          std::size_t max_length = static_cast<std::size_t>(-1));

}  // namespace mapspace
