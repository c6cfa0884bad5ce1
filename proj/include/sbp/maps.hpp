#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sbp/monoid.hpp"

namespace sbp {

enum class MapKind { not_pointed, pointed_only, homomorphism };

const char* to_string(MapKind kind);

/// Result of classify_map. For pointed_only the witness is the first pair
/// (in lexicographic index order) whose product is not preserved.
struct MapClassification {
    MapKind kind;
    std::optional<std::array<std::size_t, 2>> witness;
};

MapClassification classify_map(const FiniteMonoid& domain, const FiniteMonoid& codomain,
                               std::span<const std::size_t> mapping);

/// Identity-preserving map between monoids. Construction checks the
/// pointed invariant; instances are immutable.
class PointedMap {
public:
    PointedMap(MonoidPtr domain, MonoidPtr codomain, std::vector<std::size_t> mapping);

    std::size_t operator()(std::size_t i) const { return mapping_[i]; }

    const MonoidPtr& domain() const { return domain_; }
    const MonoidPtr& codomain() const { return codomain_; }
    const std::vector<std::size_t>& mapping() const { return mapping_; }

    bool same_map(const PointedMap& other) const {
        return domain_->same_structure(*other.domain_) &&
               codomain_->same_structure(*other.codomain_) && mapping_ == other.mapping_;
    }

private:
    MonoidPtr domain_;
    MonoidPtr codomain_;
    std::vector<std::size_t> mapping_;
};

/// Operation-preserving pointed map. Construction checks preservation on
/// every pair.
class Homomorphism : public PointedMap {
public:
    Homomorphism(MonoidPtr domain, MonoidPtr codomain, std::vector<std::size_t> mapping);
};

Homomorphism identity_hom(const MonoidPtr& m);

/// The map sending everything to the codomain identity (always a
/// homomorphism).
Homomorphism zero_hom(const MonoidPtr& domain, const MonoidPtr& codomain);

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);
PointedMap compose_pointed(const PointedMap& outer, const PointedMap& inner);

/// Submonoid of elements mapping to the codomain identity, as a fresh
/// re-indexed monoid (element order inherited from the domain), plus the
/// inclusion homomorphism.
std::pair<MonoidPtr, Homomorphism> kernel(const Homomorphism& p);

/// True iff the mapping is a bijection.
bool is_isomorphism(const Homomorphism& f);
Homomorphism inverse(const Homomorphism& f);

/// Quotient by a congruence: monoid on classes with [a]+[b] = [a+b],
/// classes named after and ordered by their least-index representative,
/// plus the projection homomorphism. Throws Error with a witness when the
/// partition is not a congruence.
std::pair<MonoidPtr, Homomorphism> quotient(const MonoidPtr& m, const Partition& part);

/// Exhaustive, duplicate-free enumerations in lexicographic order of the
/// mapping array. Homomorphism search extends partial assignments only
/// while consistent on already-determined products.
std::vector<Homomorphism> enumerate_homs(const MonoidPtr& m, const MonoidPtr& n);
std::vector<PointedMap> enumerate_pointed_maps(const MonoidPtr& m, const MonoidPtr& n);

/// Visitor form; return false from the visitor to stop early.
void for_each_hom(const MonoidPtr& m, const MonoidPtr& n,
                  const std::function<bool(const Homomorphism&)>& visit);

}  // namespace sbp
