#include "doctest.h"
#include "helpers.hpp"

#include "sbp/maps.hpp"
#include "sbp/monoid.hpp"

using namespace sbp;

TEST_CASE("validate_monoid accepts the worked tables") {
    CHECK(validate_monoid({"X", {"0", "s"}, "0", {{"0", "s"}, {"s", "s"}}}).ok());
    CHECK(validate_monoid({"1", {"0"}, "0", {{"0"}}}).ok());
    for (const auto& record : examples::examples_corpus()) {
        // round-trip the in-memory tables through the raw form
        const FiniteMonoid& a = *record.diagram.A;
        MonoidData data{a.name(), a.elements(), a.element_name(a.identity()), {}};
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::vector<std::string> row;
            for (std::size_t j = 0; j < a.size(); ++j)
                row.push_back(a.element_name(a.op(i, j)));
            data.table.push_back(row);
        }
        CHECK(validate_monoid(data).ok());
    }
}

TEST_CASE("validate_monoid failure categories") {
    SUBCASE("undefined cell is a totality failure with the cell as witness") {
        auto report = validate_monoid({"M", {"0", "a"}, "0", {{"0", "a"}, {"a", ""}}});
        REQUIRE_FALSE(report.ok());
        CHECK(report.failures.front().law == "totality");
        CHECK(report.failures.front().witness == std::vector<std::string>{"a", "a"});
    }
    SUBCASE("non-square table is malformed") {
        auto report = validate_monoid({"M", {"0", "a"}, "0", {{"0", "a"}}});
        REQUIRE_FALSE(report.ok());
        CHECK(report.failures.front().law == "malformed");
    }
    SUBCASE("unknown element name is malformed") {
        auto report = validate_monoid({"M", {"0", "a"}, "0", {{"0", "a"}, {"a", "z"}}});
        REQUIRE_FALSE(report.ok());
        CHECK(report.failures.front().law == "malformed");
    }
    SUBCASE("duplicate names are malformed") {
        auto report = validate_monoid({"M", {"0", "0"}, "0", {{"0", "0"}, {"0", "0"}}});
        REQUIRE_FALSE(report.ok());
        CHECK(report.failures.front().law == "malformed");
    }
    SUBCASE("broken identity") {
        auto report = validate_monoid({"M", {"0", "a"}, "0", {{"0", "0"}, {"a", "a"}}});
        REQUIRE_FALSE(report.ok());
        CHECK(report.failures.front().law == "identity");
    }
    SUBCASE("broken associativity carries a witness triple") {
        // 0 is an identity but a+a=b, b+a=a makes (a+a)+a != a+(a+a)
        auto report = validate_monoid({"M",
                                       {"0", "a", "b"},
                                       "0",
                                       {{"0", "a", "b"}, {"a", "b", "b"}, {"b", "a", "0"}}});
        REQUIRE_FALSE(report.ok());
        bool has_assoc = false;
        for (const auto& f : report.failures)
            if (f.law == "associativity") {
                has_assoc = true;
                CHECK(f.witness.size() == 3);
            }
        CHECK(has_assoc);
    }
}

TEST_CASE("single-cell mutations are caught with correct witnesses") {
    const FiniteMonoid& a5 = *helpers::corpus("A5").A;
    const std::size_t n = a5.size();
    for (std::size_t cell = 0; cell < n * n; ++cell) {
        for (std::size_t v = 0; v < n; ++v) {
            if (v == a5.table()[cell]) continue;
            auto table = a5.table();
            table[cell] = v;
            auto report = validate_monoid_indices(a5.elements(), a5.identity(), table);
            auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };
            if (report.ok()) {
                // must genuinely satisfy the laws
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k)
                            CHECK(at(at(i, j), k) == at(i, at(j, k)));
            } else {
                // every reported witness must re-evaluate to a violation
                for (const auto& f : report.failures) {
                    if (f.law == "associativity") {
                        auto i = helpers::idx(a5, f.witness[0]);
                        auto j = helpers::idx(a5, f.witness[1]);
                        auto k = helpers::idx(a5, f.witness[2]);
                        CHECK(at(at(i, j), k) != at(i, at(j, k)));
                    } else if (f.law == "identity") {
                        auto i = helpers::idx(a5, f.witness[0]);
                        auto j = helpers::idx(a5, f.witness[1]);
                        CHECK(at(i, j) != (i == a5.identity() ? j : i));
                    }
                }
            }
        }
    }
}

TEST_CASE("product of monoids") {
    auto X = helpers::idem2();
    auto B = helpers::idem_b();

    SUBCASE("idempotent 2x2 product") {
        auto P = product(X, B);
        REQUIRE(P->size() == 4);
        CHECK(P->element_name(0) == "(0,1)");
        CHECK(P->element_name(3) == "(s,t)");
        CHECK(P->identity() == 0);
    }
    SUBCASE("product with the trivial monoid is isomorphic to M") {
        auto P = product(X, trivial_monoid());
        std::vector<std::size_t> into(X->size());
        for (std::size_t i = 0; i < X->size(); ++i) into[i] = i;  // (m, 0) has index m
        CHECK(is_isomorphism(Homomorphism(X, P, into)));
    }
    SUBCASE("square of the idempotent two-chain is the frozen join table") {
        auto P = product(X, X);
        // computed by hand: index = 2*x + y, operation = bitwise or
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(P->op(i, j) == (i | j));
        CHECK(is_commutative(*P));
    }
}

TEST_CASE("congruence closure") {
    const auto& a2 = helpers::corpus("A2").A;

    SUBCASE("collapsing the kernel of A2 leaves c and d separate") {
        std::vector<std::pair<std::size_t, std::size_t>> pairs = {
            {helpers::idx(*a2, "a"), helpers::idx(*a2, "0")},
            {helpers::idx(*a2, "b"), helpers::idx(*a2, "0")}};
        auto part = congruence_closure(a2, pairs);
        CHECK(part.class_count == 3);
        CHECK(part.class_of[helpers::idx(*a2, "0")] == part.class_of[helpers::idx(*a2, "a")]);
        CHECK(part.class_of[helpers::idx(*a2, "0")] == part.class_of[helpers::idx(*a2, "b")]);
        CHECK(part.class_of[helpers::idx(*a2, "c")] != part.class_of[helpers::idx(*a2, "d")]);
        CHECK_FALSE(congruence_violation(part).has_value());
    }
    SUBCASE("empty generator set gives the discrete partition") {
        auto part = congruence_closure(a2, {});
        CHECK(part.class_count == a2->size());
    }
    SUBCASE("collapsing everything gives a single class") {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < a2->size(); ++i) pairs.emplace_back(0, i);
        CHECK(congruence_closure(a2, pairs).class_count == 1);
    }
    SUBCASE("closure output is compatible on every triple") {
        // seeded with an arbitrary pair, on every corpus carrier
        for (const auto& record : examples::examples_corpus()) {
            const auto& m = record.diagram.A;
            std::vector<std::pair<std::size_t, std::size_t>> pairs = {{1 % m->size(), 0}};
            CHECK_FALSE(congruence_violation(congruence_closure(m, pairs)).has_value());
        }
    }
}

TEST_CASE("quotient") {
    const auto& a5 = helpers::corpus("A5").A;

    SUBCASE("A5 modulo its collapsed kernel is the two-chain") {
        std::vector<std::pair<std::size_t, std::size_t>> pairs = {
            {helpers::idx(*a5, "a"), 0}, {helpers::idx(*a5, "b"), 0}};
        auto [q, proj] = quotient(a5, congruence_closure(a5, pairs));
        REQUIRE(q->size() == 2);
        CHECK(q->op(1, 1) == 1);  // two-chain: top absorbs
        CHECK(q->op(0, 1) == 1);
        // projection is surjective and its kernel pair is the input
        std::vector<bool> hit(q->size(), false);
        for (std::size_t a = 0; a < a5->size(); ++a) hit[proj(a)] = true;
        for (bool h : hit) CHECK(h);
        auto part = kernel_pair_partition(a5, proj.mapping());
        CHECK(same_partition(part, congruence_closure(a5, pairs)));
    }
    SUBCASE("discrete quotient is the monoid itself") {
        auto [q, proj] = quotient(a5, discrete_partition(a5));
        CHECK(q->size() == a5->size());
        CHECK(q->table() == a5->table());
        CHECK(is_isomorphism(proj));
    }
    SUBCASE("all-in-one quotient is trivial") {
        auto [q, proj] = quotient(a5, single_class_partition(a5));
        CHECK(q->size() == 1);
    }
    SUBCASE("non-congruence partitions are rejected with a witness") {
        // {0,a} | {b} | {c} | {d} on A5: a~0 but a+c=d, 0+c=c
        Partition part = discrete_partition(a5);
        part.class_of[helpers::idx(*a5, "a")] = part.class_of[0];
        CHECK_THROWS_AS(quotient(a5, part), Error);
    }
}

TEST_CASE("enumerate_monoids") {
    SUBCASE("sizes one and two") {
        CHECK(enumerate_monoids(1).size() == 1);
        CHECK(enumerate_monoids(2).size() == 4);  // identity at either slot, two laws each
    }
    SUBCASE("count at size three matches the naive filter") {
        // independent oracle: all 3^9 tables, keep those with some identity
        // and full associativity
        std::size_t naive = 0;
        std::vector<std::size_t> t(9, 0);
        bool done = false;
        while (!done) {
            auto at = [&](std::size_t i, std::size_t j) { return t[i * 3 + j]; };
            bool has_identity = false;
            for (std::size_t e = 0; e < 3 && !has_identity; ++e) {
                bool ok = true;
                for (std::size_t i = 0; i < 3; ++i)
                    if (at(e, i) != i || at(i, e) != i) ok = false;
                has_identity = ok;
            }
            if (has_identity) {
                bool assoc = true;
                for (std::size_t i = 0; i < 3 && assoc; ++i)
                    for (std::size_t j = 0; j < 3 && assoc; ++j)
                        for (std::size_t k = 0; k < 3; ++k)
                            if (at(at(i, j), k) != at(i, at(j, k))) {
                                assoc = false;
                                break;
                            }
                if (assoc) ++naive;
            }
            done = true;
            for (std::size_t c = 9; c-- > 0;) {
                if (++t[c] < 3) {
                    done = false;
                    break;
                }
                t[c] = 0;
            }
        }
        CHECK(enumerate_monoids(3).size() == naive);
    }
    SUBCASE("every enumerated monoid is distinct and valid") {
        auto all = enumerate_monoids(3);
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(validate_monoid_indices(all[i]->elements(), all[i]->identity(),
                                          all[i]->table())
                      .ok());
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK_FALSE(all[i]->same_structure(*all[j]));
        }
    }
}

TEST_CASE("structure predicates") {
    CHECK(is_commutative(*helpers::idem2()));
    CHECK_FALSE(is_commutative(*helpers::corpus("A5").A));
    CHECK(is_group(*helpers::z2()));
    CHECK_FALSE(is_group(*helpers::idem2()));
    CHECK(is_right_cancellable(*helpers::z2()));
    CHECK_FALSE(is_right_cancellable(*helpers::idem2()));
}

TEST_CASE("max size budget") {
    auto old = config::max_monoid_size();
    config::set_max_monoid_size(3);
    CHECK_FALSE(validate_monoid({"M",
                                 {"0", "a", "b", "c"},
                                 "0",
                                 {{"0", "a", "b", "c"},
                                  {"a", "a", "a", "a"},
                                  {"b", "a", "a", "a"},
                                  {"c", "a", "a", "a"}}})
                    .ok());
    config::set_max_monoid_size(old);
}
