#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sbp/semibiproduct.hpp"

namespace sbp::examples {

/// Facts a corpus record is expected to reproduce, bit-exactly, on every
/// run.
struct ExampleExpectations {
    bool verified = false;
    std::vector<std::string> failed_axioms;  // empty when verified
    std::string failure_witness;             // first witness of the failing axiom
    std::string failure_lhs;                 // its evaluated left-hand side

    std::optional<bool> schreier;                // verified diagrams only
    std::optional<std::size_t> beta_image_size;  // verified diagrams only

    bool commutative = false;
    bool s_is_homomorphism = false;
    MapKind q_kind = MapKind::pointed_only;

    // Pair of A-elements witnessing that q is not a homomorphism, with the
    // evaluated q(u+v) and q(u)+q(v); empty when q is a homomorphism.
    std::array<std::string, 2> q_witness_pair{};
    std::string q_witness_lhs, q_witness_rhs;

    bool kernel_ok = true;
    bool cokernel_ok = true;
};

struct ExampleRecord {
    std::string name;
    SemiBiproduct diagram;
    ExampleExpectations expected;

    /// Alternative section with s'(c) = d (only on the record where the
    /// stated s fails to be a homomorphism but this one does not).
    std::optional<PointedMap> s_prime;

    /// A homomorphism g out of A that vanishes on the kernel yet admits no
    /// factorization through p (only on the record where p is not a
    /// cokernel).
    std::optional<Homomorphism> counterexample_g;
};

/// The built-in corpus: the eight five-element case-study diagrams, the
/// three-element chain carrier, the sign monoid with a group kernel, the
/// group-quotient example, the plain three-chain extension and a biproduct
/// baseline. Self-contained; never touches the filesystem.
const std::vector<ExampleRecord>& examples_corpus();

const ExampleRecord* find_example(const std::string& name);

struct ExampleFact {
    std::string name;
    std::string expected;
    std::string actual;
    bool matched = false;
};

struct ExampleRunResult {
    std::string name;
    SbpReport verify_report;
    std::vector<ExampleFact> facts;

    bool all_matched() const {
        for (const auto& f : facts)
            if (!f.matched) return false;
        return true;
    }
};

/// Recomputes every expected fact from the engine and compares.
ExampleRunResult run_example(const ExampleRecord& record);

}  // namespace sbp::examples
