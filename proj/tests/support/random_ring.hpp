#pragma once

#include "mapspace/poincare.hpp"

#include <random>
#include <vector>

namespace mapspace::testing {

// Ring with an explicit basis; index 0 is the unit, the last index the top class.
struct DenseRing {
    int dimension = 0;
    std::vector<int> degree;
    std::vector<Scalar> mult;  // size^3, mult[(a*N + b)*N + c]

    std::size_t size() const { return degree.size(); }
    Scalar& at(std::size_t a, std::size_t b, std::size_t c) { return mult[(a * size() + b) * size() + c]; }
    const Scalar& at(std::size_t a, std::size_t b, std::size_t c) const { return mult[(a * size() + b) * size() + c]; }
};

// Polynomial in commuting even variables: exponent vector -> coefficient.
using Form = std::vector<std::pair<std::vector<int>, Scalar>>;

// Q[x_1..x_k] / Ann(F), |x_i| = var_degrees[i], F weighted-homogeneous.
DenseRing inverse_system_ring(const std::vector<int>& var_degrees, const Form& F);
DenseRing odd_sphere_pair(int a, int b);  // S^a x S^b, a and b odd
DenseRing tensor(const DenseRing& A, const DenseRing& B);
// Random invertible integer change of basis in every degree 0 < d < top, and a
// random nonzero rescaling of the top class.
DenseRing randomize_basis(const DenseRing& R, std::mt19937_64& rng);

// Emits one orientation of each nonzero product, classes in random order.
CohomologyRing to_cohomology_ring(const DenseRing& R, std::string name, std::mt19937_64& rng);

// Tensor products of inverse-system rings and odd sphere pairs, total
// dimension in [4, max_dimension], then a random basis change.
CohomologyRing random_ring(std::mt19937_64& rng, int max_dimension = 8);

}  // namespace mapspace::testing
