#include "sbp/maps.hpp"

#include <algorithm>

namespace sbp {

const char* to_string(MapKind kind) {
    switch (kind) {
        case MapKind::not_pointed: return "not_pointed";
        case MapKind::pointed_only: return "pointed_only";
        case MapKind::homomorphism: return "homomorphism";
    }
    return "?";
}

MapClassification classify_map(const FiniteMonoid& domain, const FiniteMonoid& codomain,
                               std::span<const std::size_t> mapping) {
    if (mapping.size() != domain.size())
        throw Error("classify_map: mapping length differs from |domain|");
    for (std::size_t v : mapping)
        if (v >= codomain.size()) throw Error("classify_map: mapping value out of range");

    if (mapping[domain.identity()] != codomain.identity())
        return {MapKind::not_pointed, std::nullopt};

    for (std::size_t a = 0; a < domain.size(); ++a)
        for (std::size_t b = 0; b < domain.size(); ++b)
            if (mapping[domain.op(a, b)] != codomain.op(mapping[a], mapping[b]))
                return {MapKind::pointed_only, std::array<std::size_t, 2>{a, b}};
    return {MapKind::homomorphism, std::nullopt};
}

PointedMap::PointedMap(MonoidPtr domain, MonoidPtr codomain, std::vector<std::size_t> mapping)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), mapping_(std::move(mapping)) {
    if (!domain_ || !codomain_) throw Error("map: null monoid");
    if (mapping_.size() != domain_->size())
        throw Error("map: mapping length differs from |domain|");
    for (std::size_t v : mapping_)
        if (v >= codomain_->size()) throw Error("map: mapping value out of range");
    if (mapping_[domain_->identity()] != codomain_->identity())
        throw Error("map: identity is not preserved");
}

Homomorphism::Homomorphism(MonoidPtr domain, MonoidPtr codomain,
                           std::vector<std::size_t> mapping)
    : PointedMap(std::move(domain), std::move(codomain), std::move(mapping)) {
    auto cls = classify_map(*this->domain(), *this->codomain(), this->mapping());
    if (cls.kind != MapKind::homomorphism) {
        std::string what = "homomorphism: operation not preserved";
        if (cls.witness) {
            what += " at (" + this->domain()->element_name((*cls.witness)[0]) + "," +
                    this->domain()->element_name((*cls.witness)[1]) + ")";
        }
        throw Error(what);
    }
}

Homomorphism identity_hom(const MonoidPtr& m) {
    std::vector<std::size_t> mapping(m->size());
    for (std::size_t i = 0; i < m->size(); ++i) mapping[i] = i;
    return Homomorphism(m, m, std::move(mapping));
}

Homomorphism zero_hom(const MonoidPtr& domain, const MonoidPtr& codomain) {
    return Homomorphism(domain, codomain,
                        std::vector<std::size_t>(domain->size(), codomain->identity()));
}

namespace {
std::vector<std::size_t> composed_mapping(const PointedMap& outer, const PointedMap& inner) {
    if (!inner.codomain()->same_structure(*outer.domain()))
        throw Error("compose: codomain of inner differs from domain of outer");
    std::vector<std::size_t> mapping(inner.domain()->size());
    for (std::size_t i = 0; i < mapping.size(); ++i) mapping[i] = outer(inner(i));
    return mapping;
}
}  // namespace

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
    return Homomorphism(inner.domain(), outer.codomain(), composed_mapping(outer, inner));
}

PointedMap compose_pointed(const PointedMap& outer, const PointedMap& inner) {
    return PointedMap(inner.domain(), outer.codomain(), composed_mapping(outer, inner));
}

std::pair<MonoidPtr, Homomorphism> kernel(const Homomorphism& p) {
    const FiniteMonoid& a = *p.domain();
    const std::size_t target = p.codomain()->identity();

    std::vector<std::size_t> members;  // domain order
    for (std::size_t i = 0; i < a.size(); ++i)
        if (p(i) == target) members.push_back(i);

    std::vector<std::size_t> position(a.size(), a.size());
    for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = i;

    std::vector<std::string> elements;
    for (std::size_t m : members) elements.push_back(a.element_name(m));

    const std::size_t k = members.size();
    std::vector<std::size_t> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t prod = a.op(members[i], members[j]);
            // closed: p(x+y) = p(x)+p(y) = identity
            table[i * k + j] = position[prod];
        }

    auto ker = std::make_shared<const FiniteMonoid>(FiniteMonoid::from_indices(
        "Ker(" + a.name() + "->" + p.codomain()->name() + ")", std::move(elements),
        position[a.identity()], std::move(table)));
    return {ker, Homomorphism(ker, p.domain(), std::move(members))};
}

bool is_isomorphism(const Homomorphism& f) {
    if (f.domain()->size() != f.codomain()->size()) return false;
    std::vector<bool> hit(f.codomain()->size(), false);
    for (std::size_t i = 0; i < f.domain()->size(); ++i) {
        if (hit[f(i)]) return false;
        hit[f(i)] = true;
    }
    return true;
}

Homomorphism inverse(const Homomorphism& f) {
    if (!is_isomorphism(f)) throw Error("inverse: map is not an isomorphism");
    std::vector<std::size_t> mapping(f.codomain()->size());
    for (std::size_t i = 0; i < f.domain()->size(); ++i) mapping[f(i)] = i;
    return Homomorphism(f.codomain(), f.domain(), std::move(mapping));
}

std::pair<MonoidPtr, Homomorphism> quotient(const MonoidPtr& m, const Partition& part) {
    if (part.class_of.size() != m->size()) throw Error("quotient: partition size mismatch");
    if (auto bad = congruence_violation(part)) {
        std::string what = "quotient: partition is not a congruence, witness (";
        for (std::size_t i = 0; i < bad->witness.size(); ++i)
            what += (i ? "," : "") + bad->witness[i];
        what += ")";
        throw Error(what);
    }

    const std::size_t k = part.class_count;
    std::vector<std::size_t> representative(k, m->size());
    for (std::size_t i = 0; i < m->size(); ++i)
        if (representative[part.class_of[i]] == m->size())
            representative[part.class_of[i]] = i;  // least index, classes are so ordered

    std::vector<std::string> elements;
    for (std::size_t c = 0; c < k; ++c)
        elements.push_back("[" + m->element_name(representative[c]) + "]");

    std::vector<std::size_t> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            table[i * k + j] = part.class_of[m->op(representative[i], representative[j])];

    auto q = std::make_shared<const FiniteMonoid>(FiniteMonoid::from_indices(
        m->name() + "/~", std::move(elements), part.class_of[m->identity()],
        std::move(table)));
    return {q, Homomorphism(m, q, part.class_of)};
}

std::vector<PointedMap> enumerate_pointed_maps(const MonoidPtr& m, const MonoidPtr& n) {
    std::vector<PointedMap> out;
    const std::size_t dn = m->size(), cn = n->size();
    std::vector<std::size_t> mapping(dn, 0);
    mapping[m->identity()] = n->identity();

    std::vector<std::size_t> free_slots;
    for (std::size_t i = 0; i < dn; ++i)
        if (i != m->identity()) free_slots.push_back(i);

    bool done = false;
    while (!done) {
        out.emplace_back(m, n, mapping);
        done = true;
        for (std::size_t c = free_slots.size(); c-- > 0;) {
            if (++mapping[free_slots[c]] < cn) {
                done = false;
                break;
            }
            mapping[free_slots[c]] = 0;
        }
    }
    return out;
}

void for_each_hom(const MonoidPtr& m, const MonoidPtr& n,
                  const std::function<bool(const Homomorphism&)>& visit) {
    const std::size_t dn = m->size(), cn = n->size();
    const std::size_t unset = cn;
    std::vector<std::size_t> mapping(dn, unset);
    mapping[m->identity()] = n->identity();

    // Consistency of a partial assignment: every product whose factors and
    // result are all assigned must be preserved.
    auto consistent_with = [&](std::size_t slot) {
        for (std::size_t a = 0; a < dn; ++a) {
            if (mapping[a] == unset) continue;
            for (std::size_t b = 0; b < dn; ++b) {
                if (mapping[b] == unset) continue;
                if (a != slot && b != slot && m->op(a, b) != slot) continue;
                std::size_t ab = m->op(a, b);
                if (mapping[ab] == unset) continue;
                if (mapping[ab] != n->op(mapping[a], mapping[b])) return false;
            }
        }
        return true;
    };

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < dn; ++i)
        if (i != m->identity()) order.push_back(i);

    bool stopped = false;
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (stopped) return;
        if (depth == order.size()) {
            if (!visit(Homomorphism(m, n, mapping))) stopped = true;
            return;
        }
        const std::size_t slot = order[depth];
        for (std::size_t v = 0; v < cn && !stopped; ++v) {
            mapping[slot] = v;
            if (consistent_with(slot)) self(self, depth + 1);
        }
        mapping[slot] = unset;
    };
    recurse(recurse, 0);
}

std::vector<Homomorphism> enumerate_homs(const MonoidPtr& m, const MonoidPtr& n) {
    std::vector<Homomorphism> out;
    for_each_hom(m, n, [&](const Homomorphism& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

}  // namespace sbp
