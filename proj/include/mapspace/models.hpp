#pragma once

#include "mapspace/cga.hpp"
#include "mapspace/poincare.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mapspace {

// Symbol a generator stands for: u⊗x, v⊗x, v⊙x, or v⊙1.
enum class Symbol { u_tensor, v_tensor, v_odot, v_odot_unit };

struct Provenance {
    Symbol kind;
    std::size_t basis;  // index into the canonical basis (the unit for v⊙1)
};

std::string to_string(Symbol s);
std::string symbol_label(const CanonicalBasis& B, Symbol kind, std::size_t x);

struct Model {
    std::shared_ptr<const CanonicalBasis> basis;
    FreeCGA cga;
    std::vector<Provenance> provenance;  // indexed by generator id

    const GeneratorTable& table() const { return cga.table(); }
    const Polynomial::Host& host() const { return cga.host(); }
    std::optional<GeneratorId> find(Symbol kind, std::size_t x) const;
    GeneratorId id(Symbol kind, std::size_t x) const;  // throws StructuralError
    Polynomial gen(Symbol kind, std::size_t x) const { return cga.gen(id(kind, x)); }
    bool has(Symbol kind, std::size_t x) const { return find(kind, x).has_value(); }
};

// Generators u⊗x and v⊗x for every x in B, d(u⊗x) = 0,
// d(v⊗x) = sum eps(x1, x2, x) (u⊗x1)(u⊗x2).
Model full_model(std::shared_ptr<const CanonicalBasis> B);

// Quotient by u⊗w - k, realized as the substitution u⊗w := k.
Model component_model(const Model& full, long k);

// The k = 0 component model, which is already minimal.
Model minimal_k0(std::shared_ptr<const CanonicalBasis> B);

struct MinimalK1 {
    Model quotient;            // the raw k = 1 component model
    Model wbar;                // generators u⊗x, v⊙x (x in B-hat) and v⊙1
    Model u_model;             // wbar without v⊙1
    Polynomial eta_quotient;   // d(v⊗w) - 2(u⊗1) in the quotient
    Polynomial eta;            // the same element in ΛW̄
    AlgebraMap into_quotient;  // ΛW̄ -> quotient, v⊙x ↦ (v⊗w)(u⊗x) - v⊗x, ...
    AlgebraMap u_inclusion;    // ΛU -> ΛW̄
};

// Builds the k = 1 minimal model, re-expresses every differential in the new
// generators, and checks the closed forms of d(v⊙x) and d(v⊙1). Throws
// InternalInconsistency if any step fails.
MinimalK1 minimal_k1(std::shared_ptr<const CanonicalBasis> B);

// Generator count per degree; throws std::invalid_argument unless minimal.
std::map<int, std::size_t> homotopy_ranks(const FreeCGA& A);

}  // namespace mapspace
