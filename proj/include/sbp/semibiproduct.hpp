#pragma once

#include <utility>
#include <vector>

#include "sbp/maps.hpp"
#include "sbp/monoid.hpp"
#include "sbp/report.hpp"

namespace sbp {

/// A candidate semi-biproduct diagram
///
///     X --k--> A --p--> B      with  q: A -> X,  s: B -> A
///
/// where p, k are homomorphisms and q, s identity-preserving maps.
/// Construction checks only the wiring (domains and codomains); whether
/// the five defining identities hold is the job of verify(), so invalid
/// diagrams can be represented and reported on.
struct SemiBiproduct {
    MonoidPtr X, A, B;
    Homomorphism p;  // A -> B
    Homomorphism k;  // X -> A
    PointedMap q;    // A -> X
    PointedMap s;    // B -> A

    static SemiBiproduct create(MonoidPtr X, MonoidPtr A, MonoidPtr B, Homomorphism p,
                                Homomorphism k, PointedMap q, PointedMap s);

    /// q(k(x) + s(b)) — the correction value for (x, b).
    std::size_t x_pow_b(std::size_t x, std::size_t b) const {
        return q(A->op(k(x), s(b)));
    }

    bool same_diagram(const SemiBiproduct& other) const;
};

/// Axiom names, in report order: "ps=1", "qk=1", "pk=0", "qs=0", "kq+sp=1".
SbpReport verify(const SemiBiproduct& d, bool exhaustive_witnesses = false);

/// Throws Error when verify(d) fails; used by operations whose contract
/// requires a verified diagram.
void require_verified(const SemiBiproduct& d);

/// beta(a) = (q(a), p(a)); injective on any verified diagram.
std::pair<std::size_t, std::size_t> beta(const SemiBiproduct& d, std::size_t a);

/// alpha(x, b) = k(x) + s(b); inverse to beta on beta's image.
std::size_t alpha(const SemiBiproduct& d, std::size_t x, std::size_t b);

/// { beta(a) : a in A }, in element order of A. Asserted equal to
/// { (x^b, b) : x in X, b in B }.
std::vector<std::pair<std::size_t, std::size_t>> image_of_beta(const SemiBiproduct& d);

/// True iff x^b = x everywhere; cross-checked against |A| = |X||B| and
/// surjectivity of beta, which are equivalent on verified diagrams.
bool is_schreier(const SemiBiproduct& d);

/// Morphism of diagrams: three homomorphisms f1: X->X', f2: A->A',
/// f3: B->B' subject to four compatibility squares.
struct SbpMorphism {
    SemiBiproduct source, target;
    Homomorphism f1, f2, f3;

    static SbpMorphism create(SemiBiproduct source, SemiBiproduct target, Homomorphism f1,
                              Homomorphism f2, Homomorphism f3);
};

SbpMorphism identity_morphism(const SemiBiproduct& d);
SbpMorphism compose(const SbpMorphism& outer, const SbpMorphism& inner);

/// Checks the four squares f2k = k'f1, p'f2 = f3p, f2s = s'f3, q'f2 = f1q
/// elementwise; every violated square is reported.
ValidationReport verify_morphism(const SbpMorphism& m);

/// k is the kernel of p: im(k) = p^{-1}(identity) and k injective. Applies
/// to any wired diagram, verified or not.
bool check_kernel(const SemiBiproduct& d);

/// p is the cokernel of k: p surjective and its kernel pair equals the
/// congruence generated by { k(x) ~ identity }. Applies to any wired
/// diagram, verified or not.
bool check_cokernel(const SemiBiproduct& d);

/// Pullback of the diagram along h: C -> B. Carrier is
/// {(a,c) : p(a) = h(c)} with componentwise operation, elements ordered
/// lexicographically by (A-index, C-index). The result is asserted to
/// verify.
SemiBiproduct pullback(const SemiBiproduct& d, const Homomorphism& h);

/// The biproduct diagram on X x B with projections and injections.
SemiBiproduct biproduct(const MonoidPtr& X, const MonoidPtr& B);

}  // namespace sbp
