#pragma once

#include "doctest.h"

#include "sbp/examples.hpp"
#include "sbp/monoid.hpp"
#include "sbp/pseudoaction.hpp"

namespace helpers {

/// {0, s} with s+s = s.
inline sbp::MonoidPtr idem2() {
    return sbp::make_monoid({"X", {"0", "s"}, "0", {{"0", "s"}, {"s", "s"}}});
}

/// {0, s} with s+s = 0.
inline sbp::MonoidPtr z2() {
    return sbp::make_monoid({"Z2", {"0", "s"}, "0", {{"0", "s"}, {"s", "0"}}});
}

/// {1, t} with t*t = t.
inline sbp::MonoidPtr idem_b() {
    return sbp::make_monoid({"B", {"1", "t"}, "1", {{"1", "t"}, {"t", "t"}}});
}

/// {1, t} with t*t = 1.
inline sbp::MonoidPtr group_b() {
    return sbp::make_monoid({"B", {"1", "t"}, "1", {{"1", "t"}, {"t", "1"}}});
}

/// {0, a, b} three-element chain.
inline sbp::MonoidPtr chain3() {
    return sbp::make_monoid(
        {"chain3", {"0", "a", "b"}, "0", {{"0", "a", "b"}, {"a", "a", "b"}, {"b", "b", "b"}}});
}

/// The worked pseudo-action on the idempotent ends: t.s = 0, s^t = 0,
/// gamma = 0.
inline sbp::PseudoAction worked_pa() {
    auto X = idem2();
    auto B = idem_b();
    // rho over (x,b): 0^1=0, 0^t=0, s^1=s, s^t=0
    // phi over (b,x): 1.0=0, 1.s=s, t.0=0, t.s=0
    return sbp::PseudoAction::create(X, B, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0});
}

inline const sbp::SemiBiproduct& corpus(const std::string& name) {
    const auto* record = sbp::examples::find_example(name);
    REQUIRE(record != nullptr);
    return record->diagram;
}

inline std::size_t idx(const sbp::FiniteMonoid& m, const std::string& name) {
    auto i = m.index_of(name);
    REQUIRE(i.has_value());
    return *i;
}

}  // namespace helpers
