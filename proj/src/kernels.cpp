#include "mapspace/kernels.hpp"

#include <omp.h>

#include <exception>
#include <optional>

namespace mapspace::kernels {

namespace {

// Runs body(i) for i in [0, n) over OpenMP threads; each index writes into its
// own slot, so the merged output keeps the serial order. The first exception
// thrown by any iteration is rethrown after the region.
template <class Slot, class Body>
std::vector<Slot> parallel_slots(std::size_t n, Body body)
{
    std::vector<Slot> slots(n);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
        try {
            slots[static_cast<std::size_t>(i)] = body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(mapspace_kernel_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return slots;
}

template <class T>
std::vector<T> flatten(std::vector<std::vector<T>> parts)
{
    std::vector<T> out;
    for (auto& p : parts)
        for (auto& x : p)
            out.push_back(std::move(x));
    return out;
}

std::vector<Quadruple> associativity_row(const CanonicalBasis& B, std::size_t x1)
{
    const std::size_t N = B.size();
    std::vector<Quadruple> out;
    Scalar lhs, rhs;
    for (std::size_t x2 = 0; x2 < N; ++x2)
        for (std::size_t x3 = 0; x3 < N; ++x3)
            for (std::size_t x4 = 0; x4 < N; ++x4) {
                lhs = 0;
                rhs = 0;
                for (std::size_t y = 0; y < N; ++y) {
                    lhs += B.eps(x1, x2, y) * B.eps(y, x3, x4);
                    rhs += B.eps(x2, x3, y) * B.eps(x1, y, x4);
                }
                if (lhs != rhs)
                    out.push_back({x1, x2, x3, x4});
            }
    return out;
}

bool lambda_sum_holds(const CanonicalBasis& B, const Triple& t)
{
    Scalar sum = 0;
    for (std::size_t x : t)
        sum += B.eps_of(B.hat(x)) * B.eps_of(x) * lambda_of(B, x);
    return sum == 3;
}

std::optional<DSquaredResidual> d_squared_at(const FreeCGA& A, GeneratorId g)
{
    Polynomial r = A.d(A.d(g));
    if (r.is_zero())
        return std::nullopt;
    return DSquaredResidual{g, std::move(r)};
}

LayerResidue layer_at(const Splitting& S, const Polynomial& R, std::size_t i)
{
    Polynomial p = S.project(i, R);
    Polynomial dp = S.partial(i, p);
    return LayerResidue{i, S.theta(i), std::move(p), std::move(dp)};
}

}  // namespace

std::vector<Quadruple> associativity_violations_serial(const CanonicalBasis& B)
{
    std::vector<Quadruple> out;
    for (std::size_t x1 = 0; x1 < B.size(); ++x1)
        for (auto& q : associativity_row(B, x1))
            out.push_back(q);
    return out;
}

std::vector<Quadruple> associativity_violations(const CanonicalBasis& B)
{
    return flatten(parallel_slots<std::vector<Quadruple>>(B.size(), [&](std::size_t x1) {
        return associativity_row(B, x1);
    }));
}

std::vector<Triple> admissible_triples(const CanonicalBasis& B)
{
    std::vector<Triple> out;
    const auto& H = B.hat_domain();
    for (std::size_t a : H)
        for (std::size_t b : H)
            for (std::size_t c : H)
                if (B.degree(a) + B.degree(b) + B.degree(c) == B.dimension())
                    out.push_back({a, b, c});
    return out;
}

std::vector<Triple> lambda_sum_violations_serial(const CanonicalBasis& B)
{
    std::vector<Triple> out;
    for (const auto& t : admissible_triples(B))
        if (!lambda_sum_holds(B, t))
            out.push_back(t);
    return out;
}

std::vector<Triple> lambda_sum_violations(const CanonicalBasis& B)
{
    const auto triples = admissible_triples(B);
    auto slots = parallel_slots<std::optional<Triple>>(triples.size(), [&](std::size_t i) -> std::optional<Triple> {
        if (lambda_sum_holds(B, triples[i]))
            return std::nullopt;
        return triples[i];
    });
    std::vector<Triple> out;
    for (auto& s : slots)
        if (s)
            out.push_back(*s);
    return out;
}

std::vector<DSquaredResidual> d_squared_residuals_serial(const FreeCGA& A)
{
    std::vector<DSquaredResidual> out;
    for (GeneratorId g = 0; g < A.table().size(); ++g)
        if (auto r = d_squared_at(A, g))
            out.push_back(std::move(*r));
    return out;
}

std::vector<DSquaredResidual> d_squared_residuals(const FreeCGA& A)
{
    auto slots = parallel_slots<std::optional<DSquaredResidual>>(
        A.table().size(), [&](std::size_t g) { return d_squared_at(A, static_cast<GeneratorId>(g)); });
    std::vector<DSquaredResidual> out;
    for (auto& s : slots)
        if (s)
            out.push_back(std::move(*s));
    return out;
}

std::vector<LayerResidue> layer_residues_serial(const Splitting& S, const Polynomial& R)
{
    std::vector<LayerResidue> out;
    for (std::size_t i = 1; i <= S.layers(); ++i)
        out.push_back(layer_at(S, R, i));
    return out;
}

std::vector<LayerResidue> layer_residues(const Splitting& S, const Polynomial& R)
{
    auto slots = parallel_slots<std::optional<LayerResidue>>(S.layers(),
                                                             [&](std::size_t i) { return layer_at(S, R, i + 1); });
    std::vector<LayerResidue> out;
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

}  // namespace mapspace::kernels
