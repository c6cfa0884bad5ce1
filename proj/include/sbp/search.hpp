#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sbp/semibiproduct.hpp"

namespace sbp {

/// Seed for the relation-based construction: a relation R between X and B
/// with a base-point selector u: B -> X and a retraction q: R -> X,
/// subject to
///   (x, 1) in R with q(x, 1) = x            for all x,
///   (u(b), b) in R with q(u(b), b) = 0      for all b,
///   q injective on every fibre of R over B.
struct RelationSeed {
    MonoidPtr X, B;
    std::vector<std::pair<std::size_t, std::size_t>> relation;  // sorted lex
    std::vector<std::size_t> u;  // |B| entries, values in X
    std::vector<std::size_t> q;  // one entry per relation pair, values in X

    /// Sorts the relation (reordering q alongside) and checks the seed
    /// conditions; throws Error with a witness otherwise.
    static RelationSeed create(MonoidPtr X, MonoidPtr B,
                               std::vector<std::pair<std::size_t, std::size_t>> relation,
                               std::vector<std::size_t> u, std::vector<std::size_t> q);

    std::size_t pair_index(std::size_t x, std::size_t b) const;  // relation.size() if absent
};

enum class RejectReason {
    sum_mismatch,           // induced x (+) x' differs from the operation of X
    correction_not_fixed,   // q(x,b)^b != q(x,b) for some pair in R
    not_neutral,            // (0,1) is not a two-sided neutral element
    projection_not_hom,     // second projection fails to be a homomorphism
};

const char* to_string(RejectReason reason);

struct RejectedTable {
    std::vector<std::size_t> table;
    RejectReason reason;
    std::string detail;
};

/// Outcome of the table search over one seed. Every accepted diagram has
/// been verified; candidate_tables counts the monoid structures on R with
/// (0,1) neutral and the projection a homomorphism.
struct SearchResult {
    RelationSeed seed;
    std::size_t candidate_tables = 0;
    std::vector<SemiBiproduct> accepted;
    std::vector<RejectedTable> rejected;
};

/// Enumerates all monoid structures on R with (0,1) neutral and second
/// projection a homomorphism (cell-by-cell backtracking with incremental
/// associativity pruning); derives (+), x, . and ^ through q and accepts
/// the tables whose induced sum equals the operation of X and whose
/// retraction values are fixed by the correction. Accepted tables become
/// verified diagrams with p(x,b) = b, k(x) = (x,1), s(b) = (u(b),b).
SearchResult build_from_relation(const RelationSeed& seed);

struct EnumerationOptions {
    std::size_t max_carrier = 16;  // reject inputs with |X||B| above this
    std::size_t max_results = 0;   // 0 = unlimited; otherwise flag partial output
};

struct EnumerationResult {
    std::vector<SemiBiproduct> diagrams;
    bool complete = true;
    std::size_t seeds_examined = 0;
};

/// All semi-biproducts with ends X and B obtainable from the relation
/// scheme: every admissible R, u and fibre-injective q, in deterministic
/// order, duplicates (by exact diagram equality) removed.
EnumerationResult enumerate_semibiproducts(const MonoidPtr& X, const MonoidPtr& B,
                                           const EnumerationOptions& opts = {});

/// Exhaustive search for the (q, s) pairs completing a kernel extension
/// k: X -> A, p: A -> B to a semi-biproduct. Requires p k = 0 and k to be
/// the kernel inclusion of p (im k = p^{-1}(1), k injective). The empty
/// list is a meaningful result.
std::vector<std::pair<PointedMap, PointedMap>> complete_extension(
    const MonoidPtr& X, const MonoidPtr& A, const MonoidPtr& B, const Homomorphism& k,
    const Homomorphism& p);

struct NatDemoCheck {
    std::string name;
    bool ok = true;
    std::string witness;
};

/// Bounded pointwise verification of the order-relation diagram on the
/// natural numbers: carrier {(x,b) : x >= b, x <= bound} with q(x>=b) =
/// x-b, s(b) = (b>=b), k(x) = (x>=0), p(x>=b) = b, plus the mutual
/// inverse and operation checks for beta(x>=b) = (x-b, b) and
/// alpha(x,b) = (x+b>=b) on all in-bound pairs. Explicitly a partial
/// verification; the carrier is infinite.
struct NatDemoReport {
    std::int64_t bound = 0;
    std::vector<NatDemoCheck> checks;
    std::size_t pairs_checked = 0;
    std::string note = "partial verification (bounded)";

    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

NatDemoReport nat_order_demo(std::int64_t bound);

}  // namespace sbp
