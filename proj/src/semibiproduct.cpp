#include "sbp/semibiproduct.hpp"

#include <algorithm>
#include <set>

namespace sbp {

SemiBiproduct SemiBiproduct::create(MonoidPtr X, MonoidPtr A, MonoidPtr B, Homomorphism p,
                                    Homomorphism k, PointedMap q, PointedMap s) {
    if (!p.domain()->same_structure(*A) || !p.codomain()->same_structure(*B))
        throw Error("semi-biproduct: p must map A to B");
    if (!k.domain()->same_structure(*X) || !k.codomain()->same_structure(*A))
        throw Error("semi-biproduct: k must map X to A");
    if (!q.domain()->same_structure(*A) || !q.codomain()->same_structure(*X))
        throw Error("semi-biproduct: q must map A to X");
    if (!s.domain()->same_structure(*B) || !s.codomain()->same_structure(*A))
        throw Error("semi-biproduct: s must map B to A");
    return SemiBiproduct{std::move(X), std::move(A), std::move(B),
                         std::move(p), std::move(k), std::move(q), std::move(s)};
}

bool SemiBiproduct::same_diagram(const SemiBiproduct& other) const {
    return X->same_structure(*other.X) && A->same_structure(*other.A) &&
           B->same_structure(*other.B) && p.mapping() == other.p.mapping() &&
           k.mapping() == other.k.mapping() && q.mapping() == other.q.mapping() &&
           s.mapping() == other.s.mapping();
}

namespace {

/// Scans one identity over a single index, recording the first (or all)
/// failures.
template <typename Lhs, typename Rhs>
LawStatus scan_law(const char* law, const FiniteMonoid& over, const FiniteMonoid& values,
                   Lhs lhs, Rhs rhs, bool exhaustive) {
    LawStatus status{law, {}};
    for (std::size_t i = 0; i < over.size(); ++i) {
        std::size_t l = lhs(i), r = rhs(i);
        if (l != r) {
            status.failures.push_back(
                {law, {over.element_name(i)}, values.element_name(l), values.element_name(r)});
            if (!exhaustive) break;
        }
    }
    return status;
}

}  // namespace

SbpReport verify(const SemiBiproduct& d, bool exhaustive_witnesses) {
    SbpReport report;
    const auto& [X, A, B, p, k, q, s] = d;

    report.laws.push_back(scan_law(
        "ps=1", *B, *B, [&](std::size_t b) { return p(s(b)); },
        [](std::size_t b) { return b; }, exhaustive_witnesses));
    report.laws.push_back(scan_law(
        "qk=1", *X, *X, [&](std::size_t x) { return q(k(x)); },
        [](std::size_t x) { return x; }, exhaustive_witnesses));
    report.laws.push_back(scan_law(
        "pk=0", *X, *B, [&](std::size_t x) { return p(k(x)); },
        [&](std::size_t) { return B->identity(); }, exhaustive_witnesses));
    report.laws.push_back(scan_law(
        "qs=0", *B, *X, [&](std::size_t b) { return q(s(b)); },
        [&](std::size_t) { return X->identity(); }, exhaustive_witnesses));
    report.laws.push_back(scan_law(
        "kq+sp=1", *A, *A, [&](std::size_t a) { return A->op(k(q(a)), s(p(a))); },
        [](std::size_t a) { return a; }, exhaustive_witnesses));
    return report;
}

void require_verified(const SemiBiproduct& d) {
    auto report = verify(d);
    if (!report.ok()) {
        std::string what = "diagram is not a semi-biproduct; failing:";
        for (const auto& law : report.failed_laws()) what += " " + law;
        throw Error(what);
    }
}

std::pair<std::size_t, std::size_t> beta(const SemiBiproduct& d, std::size_t a) {
    require_verified(d);
    return {d.q(a), d.p(a)};
}

std::size_t alpha(const SemiBiproduct& d, std::size_t x, std::size_t b) {
    require_verified(d);
    return d.A->op(d.k(x), d.s(b));
}

std::vector<std::pair<std::size_t, std::size_t>> image_of_beta(const SemiBiproduct& d) {
    require_verified(d);
    std::vector<std::pair<std::size_t, std::size_t>> image;
    for (std::size_t a = 0; a < d.A->size(); ++a)
        image.emplace_back(d.q(a), d.p(a));

    // Cross-check: the image must be exactly {(x^b, b)}.
    std::set<std::pair<std::size_t, std::size_t>> as_set(image.begin(), image.end());
    std::set<std::pair<std::size_t, std::size_t>> corrected;
    for (std::size_t x = 0; x < d.X->size(); ++x)
        for (std::size_t b = 0; b < d.B->size(); ++b)
            corrected.emplace(d.x_pow_b(x, b), b);
    if (as_set != corrected)
        throw InternalError("image_of_beta: image differs from the corrected-pair set");
    return image;
}

bool is_schreier(const SemiBiproduct& d) {
    require_verified(d);
    bool trivial_correction = true;
    for (std::size_t x = 0; x < d.X->size() && trivial_correction; ++x)
        for (std::size_t b = 0; b < d.B->size(); ++b)
            if (d.x_pow_b(x, b) != x) {
                trivial_correction = false;
                break;
            }

    // Equivalent formulations; disagreement would be an implementation bug.
    std::set<std::pair<std::size_t, std::size_t>> image;
    for (std::size_t a = 0; a < d.A->size(); ++a) image.emplace(d.q(a), d.p(a));
    const bool beta_surjective = image.size() == d.X->size() * d.B->size();
    const bool full_size = d.A->size() == d.X->size() * d.B->size();
    if (trivial_correction != beta_surjective || trivial_correction != full_size)
        throw InternalError("is_schreier: equivalent characterizations disagree");
    return trivial_correction;
}

SbpMorphism SbpMorphism::create(SemiBiproduct source, SemiBiproduct target, Homomorphism f1,
                                Homomorphism f2, Homomorphism f3) {
    if (!f1.domain()->same_structure(*source.X) || !f1.codomain()->same_structure(*target.X))
        throw Error("sbp morphism: f1 must map X to X'");
    if (!f2.domain()->same_structure(*source.A) || !f2.codomain()->same_structure(*target.A))
        throw Error("sbp morphism: f2 must map A to A'");
    if (!f3.domain()->same_structure(*source.B) || !f3.codomain()->same_structure(*target.B))
        throw Error("sbp morphism: f3 must map B to B'");
    return SbpMorphism{std::move(source), std::move(target), std::move(f1), std::move(f2),
                       std::move(f3)};
}

SbpMorphism identity_morphism(const SemiBiproduct& d) {
    return SbpMorphism::create(d, d, identity_hom(d.X), identity_hom(d.A), identity_hom(d.B));
}

SbpMorphism compose(const SbpMorphism& outer, const SbpMorphism& inner) {
    if (!inner.target.same_diagram(outer.source))
        throw Error("sbp morphism compose: target of inner differs from source of outer");
    return SbpMorphism::create(inner.source, outer.target, compose(outer.f1, inner.f1),
                               compose(outer.f2, inner.f2), compose(outer.f3, inner.f3));
}

ValidationReport verify_morphism(const SbpMorphism& m) {
    ValidationReport report;
    const auto& src = m.source;
    const auto& tgt = m.target;

    auto check_square = [&](const char* law, const FiniteMonoid& over,
                            const FiniteMonoid& values, auto lhs, auto rhs) {
        for (std::size_t i = 0; i < over.size(); ++i) {
            std::size_t l = lhs(i), r = rhs(i);
            if (l != r) {
                report.failures.push_back({law,
                                           {over.element_name(i)},
                                           values.element_name(l),
                                           values.element_name(r)});
                break;
            }
        }
    };

    check_square(
        "f2k=k'f1", *src.X, *tgt.A, [&](std::size_t x) { return m.f2(src.k(x)); },
        [&](std::size_t x) { return tgt.k(m.f1(x)); });
    check_square(
        "p'f2=f3p", *src.A, *tgt.B, [&](std::size_t a) { return tgt.p(m.f2(a)); },
        [&](std::size_t a) { return m.f3(src.p(a)); });
    check_square(
        "f2s=s'f3", *src.B, *tgt.A, [&](std::size_t b) { return m.f2(src.s(b)); },
        [&](std::size_t b) { return tgt.s(m.f3(b)); });
    check_square(
        "q'f2=f1q", *src.A, *tgt.X, [&](std::size_t a) { return tgt.q(m.f2(a)); },
        [&](std::size_t a) { return m.f1(src.q(a)); });
    return report;
}

bool check_kernel(const SemiBiproduct& d) {
    std::set<std::size_t> image;
    for (std::size_t x = 0; x < d.X->size(); ++x) image.insert(d.k(x));
    if (image.size() != d.X->size()) return false;  // k not injective

    std::set<std::size_t> fibre;
    for (std::size_t a = 0; a < d.A->size(); ++a)
        if (d.p(a) == d.B->identity()) fibre.insert(a);
    return image == fibre;
}

bool check_cokernel(const SemiBiproduct& d) {
    std::vector<std::pair<std::size_t, std::size_t>> seeds;
    for (std::size_t x = 0; x < d.X->size(); ++x)
        seeds.emplace_back(d.k(x), d.A->identity());
    Partition theta = congruence_closure(d.A, seeds);

    std::vector<bool> hit(d.B->size(), false);
    for (std::size_t a = 0; a < d.A->size(); ++a) hit[d.p(a)] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;

    Partition ker_pair = kernel_pair_partition(d.A, d.p.mapping());
    return same_partition(theta, ker_pair);
}

SemiBiproduct pullback(const SemiBiproduct& d, const Homomorphism& h) {
    require_verified(d);
    if (!h.codomain()->same_structure(*d.B))
        throw Error("pullback: h must land in B");
    const MonoidPtr& C = h.domain();
    const FiniteMonoid& A = *d.A;

    std::vector<std::pair<std::size_t, std::size_t>> carrier;  // (A-index, C-index), lex
    for (std::size_t a = 0; a < A.size(); ++a)
        for (std::size_t c = 0; c < C->size(); ++c)
            if (d.p(a) == h(c)) carrier.emplace_back(a, c);

    auto position = [&](std::size_t a, std::size_t c) {
        auto it = std::lower_bound(carrier.begin(), carrier.end(), std::make_pair(a, c));
        if (it == carrier.end() || *it != std::make_pair(a, c))
            throw InternalError("pullback: product left the fibre carrier");
        return static_cast<std::size_t>(it - carrier.begin());
    };

    std::vector<std::string> elements;
    for (const auto& [a, c] : carrier)
        elements.push_back("(" + A.element_name(a) + "," + C->element_name(c) + ")");

    const std::size_t n = carrier.size();
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] =
                position(A.op(carrier[i].first, carrier[j].first),
                         C->op(carrier[i].second, carrier[j].second));

    auto P = std::make_shared<const FiniteMonoid>(FiniteMonoid::from_indices(
        "(" + A.name() + " xB " + C->name() + ")", std::move(elements),
        position(A.identity(), C->identity()), std::move(table)));

    std::vector<std::size_t> proj2(n), proj1q(n), k_in(d.X->size()), s_in(C->size());
    for (std::size_t i = 0; i < n; ++i) {
        proj2[i] = carrier[i].second;
        proj1q[i] = d.q(carrier[i].first);
    }
    for (std::size_t x = 0; x < d.X->size(); ++x)
        k_in[x] = position(d.k(x), C->identity());
    for (std::size_t c = 0; c < C->size(); ++c)
        s_in[c] = position(d.s(h(c)), c);

    auto result = SemiBiproduct::create(
        d.X, P, C, Homomorphism(P, C, std::move(proj2)), Homomorphism(d.X, P, std::move(k_in)),
        PointedMap(P, d.X, std::move(proj1q)), PointedMap(C, P, std::move(s_in)));
    if (!verify(result).ok())
        throw InternalError("pullback: result failed verification");
    return result;
}

SemiBiproduct biproduct(const MonoidPtr& X, const MonoidPtr& B) {
    MonoidPtr P = product(X, B);
    const std::size_t nb = B->size();

    std::vector<std::size_t> proj_b(P->size()), proj_x(P->size());
    for (std::size_t i = 0; i < P->size(); ++i) {
        proj_b[i] = i % nb;
        proj_x[i] = i / nb;
    }
    std::vector<std::size_t> inj_x(X->size()), inj_b(B->size());
    for (std::size_t x = 0; x < X->size(); ++x) inj_x[x] = x * nb + B->identity();
    for (std::size_t b = 0; b < B->size(); ++b) inj_b[b] = X->identity() * nb + b;

    return SemiBiproduct::create(X, P, B, Homomorphism(P, B, std::move(proj_b)),
                                 Homomorphism(X, P, std::move(inj_x)),
                                 PointedMap(P, X, std::move(proj_x)),
                                 PointedMap(B, P, std::move(inj_b)));
}

}  // namespace sbp
