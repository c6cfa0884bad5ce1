#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sbp/report.hpp"

namespace sbp {

/// Structural error: malformed input, mismatched domains, violated
/// preconditions. Distinct from axiom failures, which are reported in
/// ValidationReport / LawReport values.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size or work budget was exceeded.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// An identity that is guaranteed by theory failed to hold at runtime;
/// always an implementation bug, never a property of the input.
class InternalError : public Error {
public:
    using Error::Error;
};

namespace config {

/// Largest accepted carrier size. Exhaustive checks are O(n^3) per monoid
/// and O((|X||B|)^3) per pseudo-action, so the default keeps runs at desk
/// scale. Mirrors the CLI flag --max-size and the SBP_MAX_SIZE variable.
std::size_t max_monoid_size();
void set_max_monoid_size(std::size_t n);

}  // namespace config

/// Raw monoid description as it appears in files, before validation.
/// Table cells are element names; an empty cell is an undefined product.
struct MonoidData {
    std::string name;
    std::vector<std::string> elements;
    std::string identity;
    std::vector<std::vector<std::string>> table;
};

/// A finite monoid given by its Cayley table. Instances are immutable,
/// always valid (construction validates), and safe to share across
/// threads.
class FiniteMonoid {
public:
    /// Builds from an index table; throws Error when any law fails.
    static FiniteMonoid from_indices(std::string name,
                                     std::vector<std::string> elements,
                                     std::size_t identity,
                                     std::vector<std::size_t> table);

    std::size_t size() const { return elements_.size(); }
    std::size_t identity() const { return identity_; }

    /// Product of element i and element j, as an index.
    std::size_t op(std::size_t i, std::size_t j) const {
        return table_[i * elements_.size() + j];
    }

    const std::string& name() const { return name_; }
    const std::string& element_name(std::size_t i) const { return elements_[i]; }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<std::size_t>& table() const { return table_; }

    std::optional<std::size_t> index_of(const std::string& element_name) const;

    /// Equality of carriers: same element names, identity and table.
    /// The monoid name is metadata and is ignored.
    bool same_structure(const FiniteMonoid& other) const {
        return elements_ == other.elements_ && identity_ == other.identity_ &&
               table_ == other.table_;
    }

private:
    FiniteMonoid() = default;

    std::string name_;
    std::vector<std::string> elements_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> table_;
};

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

/// Checks every monoid law on a raw candidate. Reports each violated law
/// with the first witness in lexicographic index order. Malformed input
/// (non-square table, unknown or duplicate names) is a distinct "malformed"
/// failure category; an empty cell is a totality failure.
ValidationReport validate_monoid(const MonoidData& candidate);

/// Core validation on an index table. `sentinel` cells (any index >= n)
/// are totality failures.
ValidationReport validate_monoid_indices(const std::vector<std::string>& elements,
                                         std::size_t identity,
                                         const std::vector<std::size_t>& table);

/// Validates and builds; throws Error carrying the first failure when the
/// candidate is not a monoid.
MonoidPtr make_monoid(const MonoidData& data);

/// Cartesian product with componentwise operation. Elements are named
/// "(m,n)" and ordered lexicographically by (M-index, N-index).
MonoidPtr product(const MonoidPtr& m, const MonoidPtr& n);

/// The one-element monoid.
MonoidPtr trivial_monoid(const std::string& name = "1");

/// All labeled monoids on `n` generic elements (identity in any
/// position), in a deterministic order. Element names are "g0".."g{n-1}".
std::vector<MonoidPtr> enumerate_monoids(std::size_t n,
                                         const std::string& name_prefix = "M");

bool is_commutative(const FiniteMonoid& m);
bool is_group(const FiniteMonoid& m);
bool is_right_cancellable(const FiniteMonoid& m);

/// Partition of a monoid's carrier. Class ids are contiguous from 0 and
/// ordered by least member index.
struct Partition {
    MonoidPtr base;
    std::vector<std::size_t> class_of;
    std::size_t class_count = 0;
};

Partition discrete_partition(MonoidPtr m);
Partition single_class_partition(MonoidPtr m);

/// Smallest congruence containing `pairs`: union-find seeded with the
/// pairs, then a worklist closing under left and right translation until
/// fixpoint.
Partition congruence_closure(const MonoidPtr& m,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// First compatibility violation (a, b, c) with class(a)=class(b) but
/// class(a+c) != class(b+c) or class(c+a) != class(c+b); nullopt when the
/// partition is a congruence.
std::optional<Failure> congruence_violation(const Partition& part);

/// Kernel-pair partition of a mapping: i ~ j iff mapping[i] == mapping[j].
Partition kernel_pair_partition(const MonoidPtr& m, std::span<const std::size_t> mapping);

bool same_partition(const Partition& a, const Partition& b);

}  // namespace sbp
