#pragma once

// Exhaustive checks that dominate the verification cost. Each has a serial
// reference and an OpenMP version; both return results in the same order.

#include "mapspace/splitting.hpp"

#include <array>
#include <vector>

namespace mapspace::kernels {

using Quadruple = std::array<std::size_t, 4>;
using Triple = std::array<std::size_t, 3>;

// 4-tuples with sum_y ε(x1,x2,y)ε(y,x3,x4) != sum_z ε(x2,x3,z)ε(x1,z,x4).
std::vector<Quadruple> associativity_violations_serial(const CanonicalBasis& B);
std::vector<Quadruple> associativity_violations(const CanonicalBasis& B);

// Triples in B-hat with degree sum 2n.
std::vector<Triple> admissible_triples(const CanonicalBasis& B);
// Triples where sum_i ε(x̂_i)ε(x_i)λ(x_i) != 3.
std::vector<Triple> lambda_sum_violations_serial(const CanonicalBasis& B);
std::vector<Triple> lambda_sum_violations(const CanonicalBasis& B);

struct DSquaredResidual {
    GeneratorId generator;
    Polynomial residual;
};
// Generators with d(d(g)) != 0.
std::vector<DSquaredResidual> d_squared_residuals_serial(const FreeCGA& A);
std::vector<DSquaredResidual> d_squared_residuals(const FreeCGA& A);

// p_i(R) and ∂_i p_i(R) for every layer.
std::vector<LayerResidue> layer_residues_serial(const Splitting& S, const Polynomial& R);
std::vector<LayerResidue> layer_residues(const Splitting& S, const Polynomial& R);

}  // namespace mapspace::kernels
