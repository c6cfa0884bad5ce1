#include "sbp/monoid.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace sbp {

namespace config {

namespace {
std::atomic<std::size_t> g_max_monoid_size{64};
}

std::size_t max_monoid_size() { return g_max_monoid_size.load(); }
void set_max_monoid_size(std::size_t n) { g_max_monoid_size.store(n); }

}  // namespace config

std::optional<std::size_t> FiniteMonoid::index_of(const std::string& element_name) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == element_name) return i;
    return std::nullopt;
}

ValidationReport validate_monoid_indices(const std::vector<std::string>& elements,
                                         std::size_t identity,
                                         const std::vector<std::size_t>& table) {
    ValidationReport report;
    const std::size_t n = elements.size();

    if (n == 0) {
        report.failures.push_back({"malformed", {}, "", "monoid must be non-empty"});
        return report;
    }
    if (table.size() != n * n) {
        report.failures.push_back({"malformed", {}, "", "table is not n-by-n"});
        return report;
    }
    if (identity >= n) {
        report.failures.push_back({"malformed", {}, "", "identity index out of range"});
        return report;
    }

    auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

    // Totality: first out-of-range cell in row-major order.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (at(i, j) >= n) {
                report.failures.push_back(
                    {"totality", {elements[i], elements[j]}, "", ""});
                goto totality_done;
            }
        }
    }
totality_done:
    if (!report.failures.empty()) return report;  // later laws need a total table

    for (std::size_t i = 0; i < n; ++i) {
        if (at(identity, i) != i) {
            report.failures.push_back({"identity",
                                       {elements[identity], elements[i]},
                                       elements[at(identity, i)],
                                       elements[i]});
            break;
        }
        if (at(i, identity) != i) {
            report.failures.push_back({"identity",
                                       {elements[i], elements[identity]},
                                       elements[at(i, identity)],
                                       elements[i]});
            break;
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (at(at(i, j), k) != at(i, at(j, k))) {
                    report.failures.push_back({"associativity",
                                               {elements[i], elements[j], elements[k]},
                                               elements[at(at(i, j), k)],
                                               elements[at(i, at(j, k))]});
                    return report;
                }
    return report;
}

ValidationReport validate_monoid(const MonoidData& candidate) {
    ValidationReport report;
    const std::size_t n = candidate.elements.size();

    if (n == 0) {
        report.failures.push_back({"malformed", {}, "", "no elements"});
        return report;
    }
    if (n > config::max_monoid_size()) {
        report.failures.push_back(
            {"malformed", {}, "", "monoid larger than configured --max-size"});
        return report;
    }

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        if (!index.emplace(candidate.elements[i], i).second) {
            report.failures.push_back(
                {"malformed", {candidate.elements[i]}, "", "duplicate element name"});
            return report;
        }
    }

    auto identity_it = index.find(candidate.identity);
    if (identity_it == index.end()) {
        report.failures.push_back(
            {"malformed", {candidate.identity}, "", "unknown identity element"});
        return report;
    }

    if (candidate.table.size() != n) {
        report.failures.push_back({"malformed", {}, "", "table row count differs from |elements|"});
        return report;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (candidate.table[i].size() != n) {
            report.failures.push_back(
                {"malformed", {candidate.elements[i]}, "", "table row is not of length |elements|"});
            return report;
        }
    }

    // Resolve names to indices. Empty cell = undefined product (totality);
    // unknown name = malformed input.
    std::vector<std::size_t> table(n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::string& cell = candidate.table[i][j];
            if (cell.empty()) continue;  // left as sentinel, caught by totality
            auto it = index.find(cell);
            if (it == index.end()) {
                report.failures.push_back({"malformed",
                                           {candidate.elements[i], candidate.elements[j]},
                                           cell,
                                           "unknown element name in table"});
                return report;
            }
            table[i * n + j] = it->second;
        }
    }

    auto law_report = validate_monoid_indices(candidate.elements, identity_it->second, table);
    for (auto& f : law_report.failures) report.failures.push_back(std::move(f));
    return report;
}

FiniteMonoid FiniteMonoid::from_indices(std::string name,
                                        std::vector<std::string> elements,
                                        std::size_t identity,
                                        std::vector<std::size_t> table) {
    if (elements.size() > config::max_monoid_size())
        throw BudgetError("monoid '" + name + "' exceeds configured max size");
    auto report = validate_monoid_indices(elements, identity, table);
    if (!report.ok()) {
        const auto& f = report.failures.front();
        std::string what = "invalid monoid '" + name + "': " + f.law;
        for (const auto& w : f.witness) what += " " + w;
        if (!f.rhs.empty()) what += " (" + f.lhs + " vs " + f.rhs + ")";
        throw Error(what);
    }
    FiniteMonoid m;
    m.name_ = std::move(name);
    m.elements_ = std::move(elements);
    m.identity_ = identity;
    m.table_ = std::move(table);
    return m;
}

MonoidPtr make_monoid(const MonoidData& data) {
    auto report = validate_monoid(data);
    if (!report.ok()) {
        const auto& f = report.failures.front();
        std::string what = "invalid monoid '" + data.name + "': " + f.law;
        for (const auto& w : f.witness) what += " " + w;
        if (!f.rhs.empty()) what += ": " + f.rhs;
        throw Error(what);
    }
    const std::size_t n = data.elements.size();
    std::size_t identity = 0;
    std::vector<std::size_t> table(n * n);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(data.elements[i], i);
    identity = index.at(data.identity);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = index.at(data.table[i][j]);
    return std::make_shared<const FiniteMonoid>(FiniteMonoid::from_indices(
        data.name, data.elements, identity, std::move(table)));
}

MonoidPtr product(const MonoidPtr& m, const MonoidPtr& n) {
    const std::size_t a = m->size(), b = n->size();
    std::vector<std::string> elements;
    elements.reserve(a * b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            elements.push_back("(" + m->element_name(i) + "," + n->element_name(j) + ")");

    std::vector<std::size_t> table(a * b * a * b);
    for (std::size_t i = 0; i < a * b; ++i) {
        for (std::size_t j = 0; j < a * b; ++j) {
            const std::size_t mi = i / b, ni = i % b, mj = j / b, nj = j % b;
            table[i * a * b + j] = m->op(mi, mj) * b + n->op(ni, nj);
        }
    }
    const std::size_t identity = m->identity() * b + n->identity();
    return std::make_shared<const FiniteMonoid>(FiniteMonoid::from_indices(
        "(" + m->name() + " x " + n->name() + ")", std::move(elements), identity,
        std::move(table)));
}

MonoidPtr trivial_monoid(const std::string& name) {
    return std::make_shared<const FiniteMonoid>(
        FiniteMonoid::from_indices(name, {"0"}, 0, {0}));
}

std::vector<MonoidPtr> enumerate_monoids(std::size_t n, const std::string& name_prefix) {
    std::vector<MonoidPtr> out;
    if (n == 0) return out;

    std::vector<std::string> elements;
    for (std::size_t i = 0; i < n; ++i) elements.push_back("g" + std::to_string(i));

    // A table with an identity at position e is generated exactly once,
    // under the iteration that fixes e: the identity of a monoid is unique.
    std::size_t serial = 0;
    for (std::size_t e = 0; e < n; ++e) {
        std::vector<std::size_t> table(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            table[e * n + i] = i;
            table[i * n + e] = i;
        }
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != e && j != e) free_cells.emplace_back(i, j);

        std::vector<std::size_t> choice(free_cells.size(), 0);
        const std::size_t cells = free_cells.size();
        bool done = cells == 0;
        while (true) {
            for (std::size_t c = 0; c < cells; ++c)
                table[free_cells[c].first * n + free_cells[c].second] = choice[c];

            bool assoc = true;
            for (std::size_t i = 0; i < n && assoc; ++i)
                for (std::size_t j = 0; j < n && assoc; ++j)
                    for (std::size_t k = 0; k < n && assoc; ++k)
                        if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]])
                            assoc = false;
            if (assoc) {
                out.push_back(std::make_shared<const FiniteMonoid>(FiniteMonoid::from_indices(
                    name_prefix + std::to_string(n) + "_" + std::to_string(serial++),
                    elements, e, table)));
            }

            if (done) break;
            std::size_t c = cells;
            while (c > 0) {
                --c;
                if (++choice[c] < n) break;
                choice[c] = 0;
                if (c == 0) done = true;
            }
            if (done) break;
        }
    }
    return out;
}

bool is_commutative(const FiniteMonoid& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m.op(i, j) != m.op(j, i)) return false;
    return true;
}

bool is_group(const FiniteMonoid& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m.op(i, j) == m.identity() && m.op(j, i) == m.identity()) {
                has_inverse = true;
                break;
            }
        if (!has_inverse) return false;
    }
    return true;
}

bool is_right_cancellable(const FiniteMonoid& m) {
    // a+c = b+c implies a = b
    for (std::size_t c = 0; c < m.size(); ++c)
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = a + 1; b < m.size(); ++b)
                if (m.op(a, c) == m.op(b, c)) return false;
    return true;
}

namespace {

/// Renumbers raw class labels so ids are contiguous and ordered by least
/// member index.
Partition normalize_partition(MonoidPtr m, const std::vector<std::size_t>& raw) {
    Partition part;
    part.base = std::move(m);
    part.class_of.assign(raw.size(), 0);
    std::unordered_map<std::size_t, std::size_t> renumber;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto it = renumber.find(raw[i]);
        if (it == renumber.end())
            it = renumber.emplace(raw[i], renumber.size()).first;
        part.class_of[i] = it->second;
    }
    part.class_count = renumber.size();
    return part;
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);  // keep least index as representative
        parent[b] = a;
        return true;
    }
};

}  // namespace

Partition discrete_partition(MonoidPtr m) {
    std::vector<std::size_t> raw(m->size());
    std::iota(raw.begin(), raw.end(), 0);
    return normalize_partition(std::move(m), raw);
}

Partition single_class_partition(MonoidPtr m) {
    std::vector<std::size_t> raw(m->size(), 0);
    return normalize_partition(std::move(m), raw);
}

Partition congruence_closure(const MonoidPtr& m,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    const std::size_t n = m->size();
    UnionFind uf(n);
    std::vector<std::pair<std::size_t, std::size_t>> worklist;
    for (const auto& [a, b] : pairs) {
        if (a >= n || b >= n) throw Error("congruence_closure: element index out of range");
        if (uf.unite(a, b)) worklist.emplace_back(a, b);
    }
    // Fixpoint exists: the lattice of partitions of a finite set is finite.
    while (!worklist.empty()) {
        auto [a, b] = worklist.back();
        worklist.pop_back();
        for (std::size_t c = 0; c < n; ++c) {
            if (uf.unite(m->op(a, c), m->op(b, c)))
                worklist.emplace_back(m->op(a, c), m->op(b, c));
            if (uf.unite(m->op(c, a), m->op(c, b)))
                worklist.emplace_back(m->op(c, a), m->op(c, b));
        }
    }
    std::vector<std::size_t> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = uf.find(i);
    return normalize_partition(m, raw);
}

std::optional<Failure> congruence_violation(const Partition& part) {
    const FiniteMonoid& m = *part.base;
    const auto& cls = part.class_of;
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b) {
            if (cls[a] != cls[b]) continue;
            for (std::size_t c = 0; c < m.size(); ++c) {
                if (cls[m.op(a, c)] != cls[m.op(b, c)])
                    return Failure{"congruence",
                                   {m.element_name(a), m.element_name(b), m.element_name(c)},
                                   m.element_name(m.op(a, c)),
                                   m.element_name(m.op(b, c))};
                if (cls[m.op(c, a)] != cls[m.op(c, b)])
                    return Failure{"congruence",
                                   {m.element_name(a), m.element_name(b), m.element_name(c)},
                                   m.element_name(m.op(c, a)),
                                   m.element_name(m.op(c, b))};
            }
        }
    return std::nullopt;
}

Partition kernel_pair_partition(const MonoidPtr& m, std::span<const std::size_t> mapping) {
    if (mapping.size() != m->size()) throw Error("kernel_pair_partition: size mismatch");
    std::vector<std::size_t> raw(m->size());
    std::unordered_map<std::size_t, std::size_t> first_with_value;
    for (std::size_t i = 0; i < m->size(); ++i) {
        auto it = first_with_value.find(mapping[i]);
        if (it == first_with_value.end())
            it = first_with_value.emplace(mapping[i], i).first;
        raw[i] = it->second;
    }
    return normalize_partition(m, raw);
}

bool same_partition(const Partition& a, const Partition& b) {
    return a.class_of == b.class_of;  // both normalized by least representative
}

}  // namespace sbp
