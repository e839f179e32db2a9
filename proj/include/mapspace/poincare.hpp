#pragma once

#include "mapspace/linalg.hpp"
#include "mapspace/rational.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mapspace {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when validated data turns out to be internally inconsistent, i.e. a
// bug rather than bad input.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct BasisClass {
    std::string label;
    int degree;
};

// One product entry a*b = sum c_e e, as read from a ring file.
struct ProductEntry {
    std::string left;
    std::string right;
    std::vector<std::pair<std::string, Scalar>> terms;
};

// Raw, unvalidated cohomology ring. The unit "1" in degree 0 is implicit.
struct CohomologyRing {
    std::string name;
    int dimension = 0;
    std::vector<BasisClass> classes;
    std::vector<ProductEntry> products;
    std::string fundamental_class;
};

CohomologyRing parse_ring_json(std::string_view text);
CohomologyRing load_ring_file(const std::filesystem::path& path);

struct Diagnostic {
    std::string check;
    std::string message;
};

// Validated ring. Class index 0 is the unit; the remaining classes keep file
// order. Structure constants are dense: mult(a, b, e) = coefficient of e in a*b.
class PoincareData {
public:
    const std::string& name() const { return name_; }
    int dimension() const { return 2 * n_; }
    int n() const { return n_; }
    std::size_t size() const { return classes_.size(); }
    const BasisClass& cls(std::size_t i) const { return classes_.at(i); }
    const std::vector<BasisClass>& classes() const { return classes_; }
    std::size_t top() const { return top_; }
    std::optional<std::size_t> find(std::string_view label) const;
    std::size_t index_of(std::string_view label) const;  // throws std::out_of_range
    const std::vector<std::size_t>& of_degree(int d) const;
    std::size_t betti(int d) const { return of_degree(d).size(); }

    const Scalar& mult(std::size_t a, std::size_t b, std::size_t e) const { return mult_[(a * size() + b) * size() + e]; }

    // Coefficient of z* in y* x* on the input homology basis (formal duals).
    const Scalar& epsilon(std::size_t x, std::size_t y, std::size_t z) const { return mult(y, x, z); }
    Scalar epsilon(std::string_view x, std::string_view y, std::string_view z) const;

    friend struct RingValidator;

private:
    std::string name_;
    int n_ = 0;
    std::vector<BasisClass> classes_;
    std::vector<std::vector<std::size_t>> by_degree_;
    std::vector<Scalar> mult_;
    std::size_t top_ = 0;
};

struct ValidationResult {
    std::shared_ptr<const PoincareData> data;  // null iff diagnostics is non-empty
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return data != nullptr; }
};

ValidationResult validate_ring(const CohomologyRing& ring);

// Products of positive-degree classes vanish below the top degree.
bool is_primitive(const PoincareData& P);
// Least d >= n with H^d != 0.
int lowest_upper_degree(const PoincareData& P);

// Homology basis B used by every construction downstream. Elements are indexed
// 0..N-1 grouped by degree (index 0 is 1, index N-1 is w). Element j of degree d
// is the formal dual of the cohomology vector stored in column j of the change
// matrix for degree d.
class CanonicalBasis {
public:
    static std::shared_ptr<const CanonicalBasis> build(std::shared_ptr<const PoincareData> P);

    const PoincareData& ring() const { return *ring_; }
    int n() const { return ring_->n(); }
    int dimension() const { return ring_->dimension(); }
    std::size_t size() const { return elements_.size(); }
    const BasisClass& element(std::size_t x) const { return elements_.at(x); }
    int degree(std::size_t x) const { return elements_.at(x).degree; }
    const std::string& label(std::size_t x) const { return elements_.at(x).label; }
    std::optional<std::size_t> find(std::string_view label) const;
    std::size_t unit() const { return 0; }
    std::size_t w() const { return elements_.size() - 1; }
    // Elements of degree d in basis order.
    const std::vector<std::size_t>& of_degree(int d) const;
    // B-hat: elements with 0 < |x| < 2n, in basis order.
    const std::vector<std::size_t>& hat_domain() const { return hat_domain_; }
    bool in_hat_domain(std::size_t x) const;

    const Scalar& eps(std::size_t x, std::size_t y, std::size_t z) const { return eps_[(x * size() + y) * size() + z]; }
    std::size_t hat(std::size_t x) const;  // throws std::invalid_argument for 1 and w
    const Scalar& eps_of(std::size_t x) const { return eps(x, hat(x), w()); }

    // Columns: new cohomology basis vectors of degree d in input coordinates.
    const Matrix& change(int d) const { return change_.at(static_cast<std::size_t>(d)); }
    // (eps(x_i, x_j, w)) on the middle degree.
    Matrix middle_gram() const;
    // E_k(x)_{pq} = eps(x^k_p, x^{|x|-k}_q, x).
    Matrix e_matrix(int k, std::size_t x) const;

private:
    std::shared_ptr<const PoincareData> ring_;
    std::vector<BasisClass> elements_;
    std::vector<std::vector<std::size_t>> by_degree_;
    std::vector<std::size_t> hat_domain_;
    std::vector<std::size_t> hat_;
    std::vector<Matrix> change_;
    std::vector<Scalar> eps_;
};

}  // namespace mapspace
