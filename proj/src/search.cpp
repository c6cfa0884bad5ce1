#include "sbp/search.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sbp {

const char* to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::sum_mismatch: return "sum-mismatch";
        case RejectReason::correction_not_fixed: return "correction-not-fixed";
        case RejectReason::not_neutral: return "not-neutral";
        case RejectReason::projection_not_hom: return "projection-not-hom";
    }
    return "?";
}

RelationSeed RelationSeed::create(MonoidPtr X, MonoidPtr B,
                                  std::vector<std::pair<std::size_t, std::size_t>> relation,
                                  std::vector<std::size_t> u, std::vector<std::size_t> q) {
    if (!X || !B) throw Error("relation seed: null monoid");
    if (u.size() != B->size()) throw Error("relation seed: u must have one value per B element");
    if (q.size() != relation.size())
        throw Error("relation seed: q must have one value per relation pair");

    // Sort lexicographically, carrying q along.
    std::vector<std::size_t> order(relation.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return relation[a] < relation[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> sorted_rel;
    std::vector<std::size_t> sorted_q;
    for (std::size_t i : order) {
        sorted_rel.push_back(relation[i]);
        sorted_q.push_back(q[i]);
    }

    RelationSeed seed{std::move(X), std::move(B), std::move(sorted_rel), std::move(u),
                      std::move(sorted_q)};

    for (std::size_t i = 0; i < seed.relation.size(); ++i) {
        const auto& [x, b] = seed.relation[i];
        if (x >= seed.X->size() || b >= seed.B->size())
            throw Error("relation seed: pair index out of range");
        if (i > 0 && seed.relation[i - 1] == seed.relation[i])
            throw Error("relation seed: duplicate pair");
        if (seed.q[i] >= seed.X->size()) throw Error("relation seed: q value out of range");
    }
    for (std::size_t v : seed.u)
        if (v >= seed.X->size()) throw Error("relation seed: u value out of range");

    const std::size_t one = seed.B->identity();
    for (std::size_t x = 0; x < seed.X->size(); ++x) {
        std::size_t i = seed.pair_index(x, one);
        if (i == seed.relation.size())
            throw Error("relation seed: (" + seed.X->element_name(x) + ",1) missing from R");
        if (seed.q[i] != x)
            throw Error("relation seed: q(" + seed.X->element_name(x) + ",1) != " +
                        seed.X->element_name(x));
    }
    for (std::size_t b = 0; b < seed.B->size(); ++b) {
        std::size_t i = seed.pair_index(seed.u[b], b);
        if (i == seed.relation.size())
            throw Error("relation seed: (u(b),b) missing from R at b=" +
                        seed.B->element_name(b));
        if (seed.q[i] != seed.X->identity())
            throw Error("relation seed: q(u(b),b) != 0 at b=" + seed.B->element_name(b));
    }
    // Fibre injectivity of q.
    for (std::size_t i = 0; i < seed.relation.size(); ++i)
        for (std::size_t j = i + 1; j < seed.relation.size(); ++j)
            if (seed.relation[i].second == seed.relation[j].second && seed.q[i] == seed.q[j])
                throw Error("relation seed: q is not injective on the fibre over " +
                            seed.B->element_name(seed.relation[i].second));
    return seed;
}

std::size_t RelationSeed::pair_index(std::size_t x, std::size_t b) const {
    auto it = std::lower_bound(relation.begin(), relation.end(), std::make_pair(x, b));
    if (it == relation.end() || *it != std::make_pair(x, b)) return relation.size();
    return static_cast<std::size_t>(it - relation.begin());
}

namespace {

/// Enumerates all monoid tables on the relation with (0,1) neutral and the
/// second projection a homomorphism, invoking `found` for each. Cells are
/// filled row-major with backtracking; after each assignment every fully
/// determined associativity triple is rechecked.
void enumerate_relation_tables(const RelationSeed& seed,
                               const std::function<void(const std::vector<std::size_t>&)>& found) {
    const std::size_t n = seed.relation.size();
    const std::size_t unset = n;
    const std::size_t e = seed.pair_index(seed.X->identity(), seed.B->identity());
    if (e == n) throw Error("relation seed: (0,1) missing from R");

    // Candidates per cell: pairs in the fibre over b_i * b_j.
    std::vector<std::vector<std::size_t>> fibre(seed.B->size());
    for (std::size_t i = 0; i < n; ++i) fibre[seed.relation[i].second].push_back(i);

    std::vector<std::size_t> table(n * n, unset);
    for (std::size_t i = 0; i < n; ++i) {
        table[e * n + i] = i;
        table[i * n + e] = i;
    }

    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != e && j != e) cells.push_back(i * n + j);

    auto assoc_consistent = [&]() {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t ab = table[a * n + b];
                if (ab == unset) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    const std::size_t bc = table[b * n + c];
                    if (bc == unset) continue;
                    const std::size_t l = table[ab * n + c];
                    const std::size_t r = table[a * n + bc];
                    if (l != unset && r != unset && l != r) return false;
                }
            }
        return true;
    };

    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == cells.size()) {
            found(table);
            return;
        }
        const std::size_t cell = cells[depth];
        const std::size_t row = cell / n, col = cell % n;
        const std::size_t target_b =
            seed.B->op(seed.relation[row].second, seed.relation[col].second);
        for (std::size_t candidate : fibre[target_b]) {
            table[cell] = candidate;
            if (assoc_consistent()) self(self, depth + 1);
        }
        table[cell] = unset;
    };
    recurse(recurse, 0);
}

SemiBiproduct diagram_from_table(const RelationSeed& seed,
                                 const std::vector<std::size_t>& table) {
    const std::size_t n = seed.relation.size();
    std::vector<std::string> elements;
    for (const auto& [x, b] : seed.relation)
        elements.push_back("(" + seed.X->element_name(x) + "," + seed.B->element_name(b) +
                           ")");
    const std::size_t e = seed.pair_index(seed.X->identity(), seed.B->identity());
    auto R = std::make_shared<const FiniteMonoid>(FiniteMonoid::from_indices(
        "R(" + seed.X->name() + "," + seed.B->name() + ")", std::move(elements), e, table));

    std::vector<std::size_t> p_map(n), q_map(seed.q), k_map(seed.X->size()),
        s_map(seed.B->size());
    for (std::size_t i = 0; i < n; ++i) p_map[i] = seed.relation[i].second;
    for (std::size_t x = 0; x < seed.X->size(); ++x)
        k_map[x] = seed.pair_index(x, seed.B->identity());
    for (std::size_t b = 0; b < seed.B->size(); ++b)
        s_map[b] = seed.pair_index(seed.u[b], b);

    return SemiBiproduct::create(seed.X, R, seed.B, Homomorphism(R, seed.B, std::move(p_map)),
                                 Homomorphism(seed.X, R, std::move(k_map)),
                                 PointedMap(R, seed.X, std::move(q_map)),
                                 PointedMap(seed.B, R, std::move(s_map)));
}

}  // namespace

SearchResult build_from_relation(const RelationSeed& seed) {
    SearchResult result{seed, 0, {}, {}};
    const FiniteMonoid& X = *seed.X;
    const FiniteMonoid& B = *seed.B;
    const std::size_t one = B.identity();

    enumerate_relation_tables(seed, [&](const std::vector<std::size_t>& table) {
        ++result.candidate_tables;
        const std::size_t n = seed.relation.size();
        auto times = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };
        auto at = [&](std::size_t x, std::size_t b) { return seed.pair_index(x, b); };

        // Derived structure through q.
        auto induced_sum = [&](std::size_t x, std::size_t x2) {
            return seed.q[times(at(x, one), at(x2, one))];
        };
        auto correction = [&](std::size_t x, std::size_t b) {
            return seed.q[times(at(x, one), at(seed.u[b], b))];
        };

        for (std::size_t x = 0; x < X.size(); ++x)
            for (std::size_t x2 = 0; x2 < X.size(); ++x2)
                if (induced_sum(x, x2) != X.op(x, x2)) {
                    result.rejected.push_back(
                        {table, RejectReason::sum_mismatch,
                         X.element_name(x) + "(+)" + X.element_name(x2) + "=" +
                             X.element_name(induced_sum(x, x2)) + " but " +
                             X.element_name(x) + "+" + X.element_name(x2) + "=" +
                             X.element_name(X.op(x, x2))});
                    return;
                }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t b = seed.relation[i].second;
            if (correction(seed.q[i], b) != seed.q[i]) {
                result.rejected.push_back(
                    {table, RejectReason::correction_not_fixed,
                     "q" + std::string("(") + X.element_name(seed.relation[i].first) + "," +
                         B.element_name(b) + ")^" + B.element_name(b) +
                         " != " + X.element_name(seed.q[i])});
                return;
            }
        }

        auto d = diagram_from_table(seed, table);
        // (x,b) = (q(x,b),1) + (u(b),b) on R; a consequence of the two
        // acceptance filters plus fibre injectivity.
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t b = seed.relation[i].second;
            if (times(at(seed.q[i], one), at(seed.u[b], b)) != i)
                throw InternalError("build_from_relation: decomposition identity failed");
        }
        if (!verify(d).ok())
            throw InternalError("build_from_relation: accepted table failed verification");
        result.accepted.push_back(std::move(d));
    });
    return result;
}

EnumerationResult enumerate_semibiproducts(const MonoidPtr& X, const MonoidPtr& B,
                                           const EnumerationOptions& opts) {
    const std::size_t nx = X->size(), nb = B->size();
    if (nx * nb > opts.max_carrier)
        throw BudgetError("enumerate_semibiproducts: |X||B| exceeds the carrier budget");

    EnumerationResult result;
    const std::size_t one = B->identity();
    const std::size_t zero = X->identity();

    // Optional pairs: everything outside the mandatory column {(x,1)}.
    std::vector<std::pair<std::size_t, std::size_t>> optional;
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t b = 0; b < nb; ++b)
            if (b != one) optional.emplace_back(x, b);

    const std::size_t subsets = std::size_t{1} << optional.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> relation;
        for (std::size_t x = 0; x < nx; ++x) relation.emplace_back(x, one);
        for (std::size_t i = 0; i < optional.size(); ++i)
            if (mask & (std::size_t{1} << i)) relation.push_back(optional[i]);
        std::sort(relation.begin(), relation.end());

        std::vector<std::vector<std::size_t>> fibre(nb);
        for (const auto& [x, b] : relation) fibre[b].push_back(x);
        bool every_fibre_inhabited = true;
        for (std::size_t b = 0; b < nb; ++b)
            if (fibre[b].empty()) every_fibre_inhabited = false;
        if (!every_fibre_inhabited) continue;

        // u(1) = 0 is forced by the seed conditions; other u(b) range over
        // the fibre of b.
        std::vector<std::size_t> u_choice(nb, 0);
        bool u_done = false;
        while (!u_done) {
            std::vector<std::size_t> u(nb);
            u[one] = zero;
            for (std::size_t b = 0; b < nb; ++b)
                if (b != one) u[b] = fibre[b][u_choice[b]];

            // q: forced on (x,1) and (u(b),b); free elsewhere, filtered by
            // fibre injectivity.
            std::vector<std::size_t> free_pairs;
            std::vector<std::size_t> q(relation.size(), 0);
            for (std::size_t i = 0; i < relation.size(); ++i) {
                const auto& [x, b] = relation[i];
                if (b == one)
                    q[i] = x;
                else if (x == u[b])
                    q[i] = zero;
                else
                    free_pairs.push_back(i);
            }

            std::vector<std::size_t> q_choice(free_pairs.size(), 0);
            bool q_done = false;
            while (!q_done) {
                for (std::size_t c = 0; c < free_pairs.size(); ++c)
                    q[free_pairs[c]] = q_choice[c];

                bool fibre_injective = true;
                for (std::size_t i = 0; i < relation.size() && fibre_injective; ++i)
                    for (std::size_t j = i + 1; j < relation.size(); ++j)
                        if (relation[i].second == relation[j].second && q[i] == q[j]) {
                            fibre_injective = false;
                            break;
                        }
                if (fibre_injective) {
                    ++result.seeds_examined;
                    auto search =
                        build_from_relation(RelationSeed::create(X, B, relation, u, q));
                    for (auto& d : search.accepted) {
                        bool duplicate = false;
                        for (const auto& seen : result.diagrams)
                            if (seen.same_diagram(d)) {
                                duplicate = true;
                                break;
                            }
                        if (!duplicate) {
                            if (opts.max_results &&
                                result.diagrams.size() >= opts.max_results) {
                                result.complete = false;
                                return result;
                            }
                            result.diagrams.push_back(std::move(d));
                        }
                    }
                }

                q_done = true;
                for (std::size_t c = q_choice.size(); c-- > 0;) {
                    if (++q_choice[c] < nx) {
                        q_done = false;
                        break;
                    }
                    q_choice[c] = 0;
                }
            }

            u_done = true;
            for (std::size_t b = nb; b-- > 0;) {
                if (b == one) continue;
                if (++u_choice[b] < fibre[b].size()) {
                    u_done = false;
                    break;
                }
                u_choice[b] = 0;
            }
        }
    }
    return result;
}

std::vector<std::pair<PointedMap, PointedMap>> complete_extension(
    const MonoidPtr& X, const MonoidPtr& A, const MonoidPtr& B, const Homomorphism& k,
    const Homomorphism& p) {
    if (!k.domain()->same_structure(*X) || !k.codomain()->same_structure(*A))
        throw Error("complete_extension: k must map X to A");
    if (!p.domain()->same_structure(*A) || !p.codomain()->same_structure(*B))
        throw Error("complete_extension: p must map A to B");
    for (std::size_t x = 0; x < X->size(); ++x)
        if (p(k(x)) != B->identity()) throw Error("complete_extension: p k != 0");

    // k must be the kernel inclusion of p.
    std::vector<std::size_t> k_position(A->size(), A->size());
    for (std::size_t x = 0; x < X->size(); ++x) {
        if (k_position[k(x)] != A->size())
            throw Error("complete_extension: k is not injective");
        k_position[k(x)] = x;
    }
    for (std::size_t a = 0; a < A->size(); ++a)
        if ((p(a) == B->identity()) != (k_position[a] != A->size()))
            throw Error("complete_extension: im k differs from the fibre of p over 1");

    std::vector<std::pair<PointedMap, PointedMap>> found;

    std::vector<std::vector<std::size_t>> fibre(B->size());
    for (std::size_t a = 0; a < A->size(); ++a) fibre[p(a)].push_back(a);
    for (std::size_t b = 0; b < B->size(); ++b)
        if (b != B->identity() && fibre[b].empty()) return found;  // no section exists

    std::vector<std::size_t> s_choice(B->size(), 0);
    bool s_done = false;
    while (!s_done) {
        std::vector<std::size_t> s_map(B->size());
        s_map[B->identity()] = A->identity();
        for (std::size_t b = 0; b < B->size(); ++b)
            if (b != B->identity()) s_map[b] = fibre[b][s_choice[b]];

        std::vector<std::size_t> q_map(A->size(), 0);
        std::vector<std::size_t> free_slots;
        for (std::size_t a = 0; a < A->size(); ++a) {
            if (k_position[a] != A->size())
                q_map[a] = k_position[a];  // q k = 1
            else
                free_slots.push_back(a);
        }
        std::vector<bool> forced_zero(A->size(), false);
        for (std::size_t b = 0; b < B->size(); ++b) forced_zero[s_map[b]] = true;
        std::erase_if(free_slots, [&](std::size_t a) { return forced_zero[a]; });
        // q s = 0 on the chosen section values
        for (std::size_t a = 0; a < A->size(); ++a)
            if (forced_zero[a] && k_position[a] == A->size()) q_map[a] = X->identity();

        std::vector<std::size_t> q_choice(free_slots.size(), 0);
        bool q_done = false;
        while (!q_done) {
            for (std::size_t c = 0; c < free_slots.size(); ++c)
                q_map[free_slots[c]] = q_choice[c];

            bool split = true;
            for (std::size_t a = 0; a < A->size(); ++a)
                if (A->op(k(q_map[a]), s_map[p(a)]) != a) {
                    split = false;
                    break;
                }
            if (split)
                found.emplace_back(PointedMap(A, X, q_map), PointedMap(B, A, s_map));

            q_done = true;
            for (std::size_t c = q_choice.size(); c-- > 0;) {
                if (++q_choice[c] < X->size()) {
                    q_done = false;
                    break;
                }
                q_choice[c] = 0;
            }
        }

        s_done = true;
        for (std::size_t b = B->size(); b-- > 0;) {
            if (b == B->identity()) continue;
            if (++s_choice[b] < fibre[b].size()) {
                s_done = false;
                break;
            }
            s_choice[b] = 0;
        }
    }
    return found;
}

NatDemoReport nat_order_demo(std::int64_t bound) {
    if (bound < 1) throw Error("nat_order_demo: bound must be >= 1");
    NatDemoReport report;
    report.bound = bound;

    using Pair = std::pair<std::int64_t, std::int64_t>;  // (x, b) with x >= b
    std::vector<Pair> carrier;
    for (std::int64_t x = 0; x <= bound; ++x)
        for (std::int64_t b = 0; b <= x; ++b) carrier.emplace_back(x, b);
    report.pairs_checked = carrier.size();

    auto q = [](const Pair& r) { return r.first - r.second; };
    auto p = [](const Pair& r) { return r.second; };
    auto k = [](std::int64_t x) { return Pair{x, 0}; };
    auto s = [](std::int64_t b) { return Pair{b, b}; };
    auto plus = [](const Pair& r, const Pair& t) {
        return Pair{r.first + t.first, r.second + t.second};
    };

    auto record = [&](const std::string& name, bool ok, const std::string& witness) {
        report.checks.push_back({name, ok, witness});
    };
    auto pair_str = [](const Pair& r) {
        return "(" + std::to_string(r.first) + ">=" + std::to_string(r.second) + ")";
    };

    {
        bool ok = true;
        std::string witness;
        for (std::int64_t b = 0; b <= bound && ok; ++b)
            if (p(s(b)) != b) {
                ok = false;
                witness = std::to_string(b);
            }
        record("ps=1", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (std::int64_t x = 0; x <= bound && ok; ++x)
            if (q(k(x)) != x) {
                ok = false;
                witness = std::to_string(x);
            }
        record("qk=1", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (std::int64_t b = 0; b <= bound && ok; ++b)
            if (q(s(b)) != 0) {
                ok = false;
                witness = std::to_string(b);
            }
        record("qs=0", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (std::int64_t x = 0; x <= bound && ok; ++x)
            if (p(k(x)) != 0) {
                ok = false;
                witness = std::to_string(x);
            }
        record("pk=0", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (const auto& r : carrier) {
            if (plus(k(q(r)), s(p(r))) != r) {
                ok = false;
                witness = pair_str(r);
                break;
            }
        }
        record("kq+sp=1", ok, witness);
    }

    auto beta = [&](const Pair& r) { return Pair{q(r), p(r)}; };
    auto alpha = [](const Pair& xb) { return Pair{xb.first + xb.second, xb.second}; };

    {
        bool ok = true;
        std::string witness;
        for (const auto& r : carrier)
            if (alpha(beta(r)) != r) {
                ok = false;
                witness = pair_str(r);
                break;
            }
        record("alpha.beta=1", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (std::int64_t x = 0; x <= bound && ok; ++x)
            for (std::int64_t b = 0; x + b <= bound; ++b)
                if (beta(alpha({x, b})) != Pair{x, b}) {
                    ok = false;
                    witness = "(" + std::to_string(x) + "," + std::to_string(b) + ")";
                    break;
                }
        record("beta.alpha=1", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (const auto& r : carrier) {
            for (const auto& t : carrier) {
                if (r.first + t.first > bound) continue;
                auto sum = plus(r, t);
                auto lhs = beta(sum);
                auto rhs = plus(beta(r), beta(t));
                if (lhs != rhs) {
                    ok = false;
                    witness = pair_str(r) + "+" + pair_str(t);
                    break;
                }
            }
            if (!ok) break;
        }
        record("beta-additive", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (std::int64_t x = 0; x <= bound && ok; ++x)
            for (std::int64_t b = 0; x + b <= bound && ok; ++b)
                for (std::int64_t x2 = 0; x2 <= bound; ++x2) {
                    if (x + b + x2 > bound) break;
                    for (std::int64_t b2 = 0; x + b + x2 + b2 <= bound; ++b2) {
                        auto lhs = alpha({x + x2, b + b2});
                        auto rhs = plus(alpha({x, b}), alpha({x2, b2}));
                        if (lhs != rhs) {
                            ok = false;
                            witness = "(" + std::to_string(x) + "," + std::to_string(b) +
                                      ")+(" + std::to_string(x2) + "," + std::to_string(b2) +
                                      ")";
                            break;
                        }
                    }
                    if (!ok) break;
                }
        record("alpha-additive", ok, witness);
    }
    return report;
}

}  // namespace sbp
