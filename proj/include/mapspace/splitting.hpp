#pragma once

#include "mapspace/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mapspace {

// Order and filtration on B-hat, plus the u-monomial bookkeeping used by the
// layerwise argument. All polynomials live in the host of the k = 1 model ΛW̄.
class Splitting {
public:
    explicit Splitting(const MinimalK1& model);

    const MinimalK1& model() const { return *model_; }
    const Model& wbar() const { return model_->wbar; }
    const CanonicalBasis& basis() const { return *model_->wbar.basis; }
    const Polynomial::Host& host() const { return model_->wbar.host(); }

    // θ_1 > ... > θ_m: elements of degree 0 < |x| < n, descending.
    const std::vector<std::size_t>& thetas() const { return thetas_; }
    std::size_t layers() const { return thetas_.size(); }
    std::size_t theta(std::size_t i) const { return thetas_.at(i - 1); }  // 1-based
    // F_0 = B_n, F_i = F_{i-1} plus θ_i and its dual. Sorted by basis order.
    const std::vector<std::size_t>& filtration(std::size_t i) const { return filtration_.at(i); }
    bool in_filtration(std::size_t i, std::size_t x) const;

    Scalar lambda(std::size_t x) const;

    Polynomial u(std::size_t x) const { return wbar().gen(Symbol::u_tensor, x); }
    Polynomial v(std::size_t x) const { return wbar().gen(Symbol::v_odot, x); }
    GeneratorId u_id(std::size_t x) const { return wbar().id(Symbol::u_tensor, x); }
    Polynomial cubic(std::size_t x1, std::size_t x2, std::size_t x3, const Scalar& c = 1) const;
    Polynomial quadratic(std::size_t x1, std::size_t x2, const Scalar& c = 1) const;
    Polynomial d(const Polynomial& p) const { return wbar().cga.d(p); }

    // Cubic u-monomials with |x1| + |x2| + |x3| = 2n (nonzero normal forms).
    const std::vector<Monomial>& cubic_span() const { return cubic_span_; }
    // Basis monomials of V_i: (u⊗x1)(u⊗x2)(u⊗θ_i), x1, x2 in F_i.
    const std::vector<Monomial>& layer_basis(std::size_t i) const { return layer_basis_.at(i - 1); }
    // The layer a cubic-span monomial belongs to; nullopt if none or several.
    std::optional<std::size_t> layer_of(const Monomial& m) const;
    bool in_cubic_span(const Polynomial& p) const;

    // p_i: keeps the V_i monomials.
    Polynomial project(std::size_t i, const Polynomial& p) const;
    // ∂_i: value 1 on u⊗θ_i, 0 on the other generators. Rejects input that
    // involves a generator other than u⊗x.
    Polynomial partial(std::size_t i, const Polynomial& p) const;
    Derivation partial_derivation(std::size_t i) const;

    Polynomial xi() const;
    Polynomial alpha() const;
    Polynomial mu_of(std::size_t x) const;  // μ(x), x in B_-
    Polynomial mu() const;
    Polynomial zeta() const;

private:
    const MinimalK1* model_;
    std::vector<std::size_t> thetas_;
    std::vector<std::vector<std::size_t>> filtration_;
    std::vector<Monomial> cubic_span_;
    std::vector<std::vector<Monomial>> layer_basis_;
};

Scalar lambda_of(const CanonicalBasis& B, std::size_t x);

struct LayerResidue {
    std::size_t layer;
    std::size_t theta;
    Polynomial projected;  // p_i(ξ - dμ)
    Polynomial derived;    // ∂_i p_i(ξ - dμ)
    bool zero() const { return projected.is_zero() && derived.is_zero(); }
};

struct MuVerdict {
    Polynomial direct;  // ξ - dμ
    std::vector<LayerResidue> layers;
    bool direct_zero = false;
    bool layers_zero = false;
    bool in_cubic_span = false;
    bool passed() const { return direct_zero && layers_zero && in_cubic_span; }
    bool vacuous() const { return layers.empty(); }
};

MuVerdict verify_prop_mu(const Splitting& S);

struct SplittingCertificate {
    Polynomial eta, xi, alpha, mu, zeta;
    Polynomial alpha_residual;  // η² - ξ - dα
    Polynomial zeta_residual;   // η²/4 - dζ
    MuVerdict mu_verdict;
    bool zeta_decomposable = false;
    // ΛU ⊗ Λ(s) with d(s) = 0, and the map to ΛW̄.
    std::optional<FreeCGA> split_source;
    std::optional<AlgebraMap> split_map;
    std::optional<AlgebraMap> split_inverse;
    bool split_is_dga_map = false;
    bool split_inverse_is_dga_map = false;
    bool split_linear_iso = false;
    bool split_round_trip = false;

    bool valid() const
    {
        return alpha_residual.is_zero() && zeta_residual.is_zero() && mu_verdict.passed() && zeta_decomposable &&
               split_is_dga_map && split_inverse_is_dga_map && split_linear_iso && split_round_trip;
    }
};

SplittingCertificate build_zeta_and_split(const Splitting& S);

}  // namespace mapspace
