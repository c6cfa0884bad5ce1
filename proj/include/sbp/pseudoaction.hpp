#pragma once

#include <cstddef>
#include <vector>

#include "sbp/maps.hpp"
#include "sbp/monoid.hpp"
#include "sbp/report.hpp"

namespace sbp {

/// A candidate pseudo-action of B on X: a correction system rho(x,b) = x^b,
/// a pre-action phi(b,x) = b.x and a factor system gamma(b,b') = b x b',
/// all stored as dense index arrays so equality is plain array comparison.
/// Construction checks dimensions only; the laws are checked by
/// verify_pseudo_action.
struct PseudoAction {
    MonoidPtr X, B;
    std::vector<std::size_t> rho;    // |X| x |B|, row-major over (x, b)
    std::vector<std::size_t> phi;    // |B| x |X|, row-major over (b, x)
    std::vector<std::size_t> gamma;  // |B| x |B|, row-major over (b, b')

    static PseudoAction create(MonoidPtr X, MonoidPtr B, std::vector<std::size_t> rho,
                               std::vector<std::size_t> phi, std::vector<std::size_t> gamma);

    std::size_t rho_at(std::size_t x, std::size_t b) const { return rho[x * B->size() + b]; }
    std::size_t phi_at(std::size_t b, std::size_t x) const { return phi[b * X->size() + x]; }
    std::size_t gamma_at(std::size_t b, std::size_t b2) const {
        return gamma[b * B->size() + b2];
    }

    /// w(x, b, x', b') = (x + b.x' + (b x b'))^{bb'} — the first component
    /// of the synthetic operation. The associativity law checker and the
    /// synthetic carrier builder share this one helper so they can never
    /// drift apart.
    std::size_t w(std::size_t x, std::size_t b, std::size_t x2, std::size_t b2) const {
        const std::size_t sum = X->op(X->op(x, phi_at(b, x2)), gamma_at(b, b2));
        return rho_at(sum, B->op(b, b2));
    }

    bool equals(const PseudoAction& other) const {
        return X->same_structure(*other.X) && B->same_structure(*other.B) &&
               rho == other.rho && phi == other.phi && gamma == other.gamma;
    }
};

struct PaVerifyOptions {
    /// Collect every witness per law instead of stopping at the first.
    bool exhaustive_witnesses = false;
    /// Worker threads for the cubic associativity law; witnesses are
    /// merged so the report is identical for any job count.
    unsigned jobs = 1;
};

/// Checks the unit laws, the associativity law over all |X|^3 |B|^3
/// triples, and the two stability laws (b.x)^b = b.x and
/// (b x b')^(bb') = b x b'. Law names, in order: "x^1=x", "0^b=0",
/// "1.x=x", "b.0=0", "1xb=0", "bx1=0", "associativity", "(b.x)^b=b.x",
/// "(bxb')^(bb')=bxb'".
PaReport verify_pseudo_action(const PseudoAction& pa, const PaVerifyOptions& opts = {});

void require_verified(const PseudoAction& pa);

/// Identities implied by the defining laws, re-checked directly as an
/// oracle on the associativity-law implementation. A failure on a
/// verified pseudo-action is an implementation bug.
PaReport check_derived_identities(const PseudoAction& pa);

/// Morphism of pseudo-actions: homomorphisms f: X->X', g: B->B'
/// preserving the three components.
struct PaMorphism {
    PseudoAction source, target;
    Homomorphism f, g;

    static PaMorphism create(PseudoAction source, PseudoAction target, Homomorphism f,
                             Homomorphism g);
};

PaMorphism identity_pa_morphism(const PseudoAction& pa);

/// Checks f(x^b) = f(x)^g(b), f(b.x) = g(b).f(x), f(bxb') = g(b)xg(b'),
/// then asserts the induced compatibility with w (implied; a failure with
/// the three laws holding is an implementation bug).
ValidationReport verify_pa_morphism(const PaMorphism& m);

/// x^b = x, b.x = x, gamma = 0: the pseudo-action of the biproduct.
/// Verified for every X, B.
PseudoAction trivial_action(const MonoidPtr& X, const MonoidPtr& B);

/// All verified pseudo-actions of B on X, enumerated by odometer over the
/// entries not forced by the unit laws, in deterministic order. `stride`
/// samples the candidate space (1 = exhaustive).
std::vector<PseudoAction> enumerate_pseudo_actions(const MonoidPtr& X, const MonoidPtr& B,
                                                   std::size_t stride = 1);

}  // namespace sbp
