#pragma once

#include "mapspace/splitting.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mapspace {

struct IdentityCheck {
    std::string name;
    std::size_t instances = 0;
    std::vector<std::string> failures;  // first few only
    std::size_t failure_count = 0;
    bool passed() const { return failure_count == 0; }
    bool vacuous() const { return instances == 0; }
};

// Checks on the ε structure constants.
IdentityCheck check_epsilon_degrees(const CanonicalBasis& B);
IdentityCheck check_epsilon_unit(const CanonicalBasis& B);
IdentityCheck check_epsilon_graded_symmetry(const CanonicalBasis& B);
IdentityCheck check_associativity(const CanonicalBasis& B);
IdentityCheck check_top_pairing_regular(const CanonicalBasis& B);
IdentityCheck check_dual_involution(const CanonicalBasis& B);
IdentityCheck check_dual_normalization(const CanonicalBasis& B);
IdentityCheck check_dual_transfer(const CanonicalBasis& B);
IdentityCheck check_lambda_sum(const CanonicalBasis& B);

// Checks on the models and the splitting.
IdentityCheck check_models(std::shared_ptr<const CanonicalBasis> B, const MinimalK1& M);
IdentityCheck check_eta_expansion(const Splitting& S);
IdentityCheck check_mu_differential(const Splitting& S);
IdentityCheck check_layer_decomposition(const Splitting& S);
IdentityCheck check_partial_injective(const Splitting& S);
IdentityCheck check_partial_on_basis(const Splitting& S);
IdentityCheck check_x1_sum(const Splitting& S);
IdentityCheck check_xi_layers(const Splitting& S);
IdentityCheck check_hat_a_coefficients(const Splitting& S);
IdentityCheck check_a_coefficients(const Splitting& S);
IdentityCheck check_dmu_layers(const Splitting& S);
IdentityCheck check_certificate(const Splitting& S, const SplittingCertificate& c);
// Matrix relations for the identity, scalar maps and the k = 0 witness.
IdentityCheck check_self_map_relations(std::shared_ptr<const CanonicalBasis> B);

struct IdentityReport {
    std::string ring;
    std::size_t layers = 0;
    std::vector<IdentityCheck> checks;
    bool passed() const;
};

IdentityReport run_identity_suite(std::shared_ptr<const CanonicalBasis> B);

}  // namespace mapspace
