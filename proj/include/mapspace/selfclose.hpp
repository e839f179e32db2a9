#pragma once

#include "mapspace/models.hpp"
#include "mapspace/splitting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mapspace {

// Matrices of the linear part of a self-map of the k = 0 minimal model:
// a[k] acts on u⊗B_k (0 <= k <= 2n-1), b[k] on v⊗B_k (0 <= k <= 2n).
// Column r holds the image of the r-th generator.
struct SelfMapMatrices {
    std::vector<Matrix> a;
    std::vector<Matrix> b;
};

SelfMapMatrices matrices_of(const AlgebraMap& f, const Model& k0);

struct MatrixRelationVerdict {
    bool is_dga_map = false;
    std::optional<std::string> offending_generator;
    std::size_t instances = 0;
    std::vector<std::string> violations;
    bool passed() const { return is_dga_map && violations.empty(); }
};

// A_k E_k(x^i_p) A_{i-k}^T = sum_a B_i[a][p] E_k(x^i_a), and B_i = A_0 A_i for i < 2n.
MatrixRelationVerdict verify_matrix_relations(const AlgebraMap& f, const Model& k0);

// u⊗x ↦ c u⊗x, v⊗x ↦ c² v⊗x.
AlgebraMap scalar_self_map(const Model& k0, const Scalar& c);

struct TranscriptLine {
    std::string check;
    bool passed;
    std::string detail;
};

struct Witness {
    Model model;  // the minimal model the map acts on
    AlgebraMap map;
    std::vector<TranscriptLine> transcript;
    std::optional<int> first_singular_degree;
    bool verified() const;
};

Witness witness_k0(std::shared_ptr<const CanonicalBasis> B);
Witness witness_k1(const Splitting& S, const SplittingCertificate& cert);

struct NEReport {
    long component = 0;
    int value = 0;
    bool primitive = false;
    int lowest_upper_degree = 0;
    int dimension = 0;
    std::optional<Witness> witness;
    bool certificate_valid = true;  // k = 1 only
    std::string upper_bound;
    bool verified() const { return witness && witness->verified() && certificate_valid; }
};

// Throws std::invalid_argument for k outside {0, 1}.
NEReport self_closeness(std::shared_ptr<const CanonicalBasis> B, long k);

}  // namespace mapspace
