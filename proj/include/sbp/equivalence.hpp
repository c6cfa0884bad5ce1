#pragma once

#include <utility>
#include <vector>

#include "sbp/pseudoaction.hpp"
#include "sbp/semibiproduct.hpp"

namespace sbp {

/// Carrier of the synthetic diagram: the pairs (x, b) with x^b = x, in
/// lexicographic (x-index, b-index) order. By idempotence of the
/// correction system this equals { (x^b, b) : x in X, b in B }.
struct SyntheticCarrier {
    PseudoAction pa;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    /// Index of (x, b) in `pairs`, or pairs.size() when absent.
    std::size_t position(std::size_t x, std::size_t b) const;
};

SyntheticCarrier synthetic_carrier(const PseudoAction& pa);

/// Raw synthetic table over the carrier pairs, built without requiring a
/// verified pseudo-action. Cells whose product lands outside the carrier
/// are left at the out-of-range sentinel `pairs.size()`, so
/// validate_monoid_indices reports them as totality failures. Used as the
/// negative control for the associativity law.
struct SyntheticCandidate {
    SyntheticCarrier carrier;
    std::vector<std::string> element_names;
    std::size_t identity;                // index of (0, 1)
    std::vector<std::size_t> table;      // sentinel = pairs.size() if not closed
};

SyntheticCandidate build_synthetic_candidate(const PseudoAction& pa);

/// Full operation table over all of X x B, (x,b)+(x',b') = (w, bb').
/// The pseudo-action's associativity law holds iff this table is
/// associative, which gives an independent route to the law checker.
MonoidData synthetic_square_table(const PseudoAction& pa);

/// The pseudo-action of a verified diagram: x^b = q(k(x)+s(b)),
/// b.x = q(s(b)+k(x)), b x b' = q(s(b)+s(b')). Output is asserted to
/// verify.
PseudoAction extract(const SemiBiproduct& d);

/// The synthetic diagram (X, R, B, pi_B, <1,0>, pi_X, <0,1>) of a
/// verified pseudo-action. The carrier is asserted to be a valid monoid
/// and the diagram to verify.
SemiBiproduct synthesize(const PseudoAction& pa);

/// (f1, f2, f3) restricted to (f1, f3); asserted to be a pseudo-action
/// morphism when the input morphism and endpoints are valid.
PaMorphism extract_morphism(const SbpMorphism& m);

/// (f, g) extended to (f, h, g) with h(x,b) = (f(x), g(b)); asserted to
/// be a semi-biproduct morphism.
SbpMorphism synthesize_morphism(const PaMorphism& m);

/// extract(synthesize(pa)) equals pa by array comparison.
bool roundtrip_action(const PseudoAction& pa);

/// Certificate that a verified diagram is isomorphic to its synthetic
/// form via the canonical maps in both directions.
struct RoundtripResult {
    SemiBiproduct synthetic;
    SbpMorphism to_synthetic;    // (1_X, beta, 1_B)
    SbpMorphism from_synthetic;  // (1_X, alpha, 1_B)
    ValidationReport report;     // mutual inverse + morphism square checks

    bool ok() const { return report.ok(); }
};

RoundtripResult roundtrip_diagram(const SemiBiproduct& d);

/// Naturality of the round-trip isomorphism at a morphism (f1, f2, f3):
/// h . beta = beta' . f2 and f2 . alpha = alpha' . h, where h is the
/// synthesized morphism between the synthetic diagrams.
bool check_naturality(const SbpMorphism& m);

}  // namespace sbp
