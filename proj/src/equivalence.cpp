#include "sbp/equivalence.hpp"

#include <algorithm>

namespace sbp {

std::size_t SyntheticCarrier::position(std::size_t x, std::size_t b) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, b));
    if (it == pairs.end() || *it != std::make_pair(x, b)) return pairs.size();
    return static_cast<std::size_t>(it - pairs.begin());
}

SyntheticCarrier synthetic_carrier(const PseudoAction& pa) {
    SyntheticCarrier carrier{pa, {}};
    for (std::size_t x = 0; x < pa.X->size(); ++x)
        for (std::size_t b = 0; b < pa.B->size(); ++b)
            if (pa.rho_at(x, b) == x) carrier.pairs.emplace_back(x, b);
    if (carrier.position(pa.X->identity(), pa.B->identity()) == carrier.pairs.size())
        throw Error("synthetic carrier does not contain (0,1); unit laws are violated");
    return carrier;
}

SyntheticCandidate build_synthetic_candidate(const PseudoAction& pa) {
    SyntheticCandidate cand{synthetic_carrier(pa), {}, 0, {}};
    const auto& pairs = cand.carrier.pairs;
    const std::size_t n = pairs.size();

    for (const auto& [x, b] : pairs)
        cand.element_names.push_back("(" + pa.X->element_name(x) + "," +
                                     pa.B->element_name(b) + ")");
    cand.identity = cand.carrier.position(pa.X->identity(), pa.B->identity());

    cand.table.assign(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& [x, b] = pairs[i];
            const auto& [x2, b2] = pairs[j];
            cand.table[i * n + j] =
                cand.carrier.position(pa.w(x, b, x2, b2), pa.B->op(b, b2));
        }
    return cand;
}

MonoidData synthetic_square_table(const PseudoAction& pa) {
    MonoidData data;
    const std::size_t nx = pa.X->size(), nb = pa.B->size();
    data.name = "square(" + pa.X->name() + "," + pa.B->name() + ")";
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t b = 0; b < nb; ++b)
            data.elements.push_back("(" + pa.X->element_name(x) + "," +
                                    pa.B->element_name(b) + ")");
    data.identity = "(" + pa.X->element_name(pa.X->identity()) + "," +
                    pa.B->element_name(pa.B->identity()) + ")";
    data.table.assign(nx * nb, std::vector<std::string>(nx * nb));
    for (std::size_t i = 0; i < nx * nb; ++i)
        for (std::size_t j = 0; j < nx * nb; ++j) {
            const std::size_t x = i / nb, b = i % nb, x2 = j / nb, b2 = j % nb;
            const std::size_t w = pa.w(x, b, x2, b2);
            data.table[i][j] = data.elements[w * nb + pa.B->op(b, b2)];
        }
    return data;
}

PseudoAction extract(const SemiBiproduct& d) {
    require_verified(d);
    const std::size_t nx = d.X->size(), nb = d.B->size();
    std::vector<std::size_t> rho(nx * nb), phi(nb * nx), gamma(nb * nb);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t b = 0; b < nb; ++b)
            rho[x * nb + b] = d.q(d.A->op(d.k(x), d.s(b)));
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t x = 0; x < nx; ++x)
            phi[b * nx + x] = d.q(d.A->op(d.s(b), d.k(x)));
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t b2 = 0; b2 < nb; ++b2)
            gamma[b * nb + b2] = d.q(d.A->op(d.s(b), d.s(b2)));

    auto pa = PseudoAction::create(d.X, d.B, std::move(rho), std::move(phi), std::move(gamma));
    if (!verify_pseudo_action(pa).ok())
        throw InternalError("extract: pseudo-action of a verified diagram failed to verify");
    return pa;
}

SemiBiproduct synthesize(const PseudoAction& pa) {
    require_verified(pa);
    auto cand = build_synthetic_candidate(pa);
    const std::size_t n = cand.carrier.pairs.size();

    auto report = validate_monoid_indices(cand.element_names, cand.identity, cand.table);
    if (!report.ok())
        throw InternalError("synthesize: synthetic operation is not a monoid on the carrier");

    auto R = std::make_shared<const FiniteMonoid>(
        FiniteMonoid::from_indices("R(" + pa.X->name() + "," + pa.B->name() + ")",
                                   cand.element_names, cand.identity, cand.table));

    std::vector<std::size_t> proj_b(n), proj_x(n);
    for (std::size_t i = 0; i < n; ++i) {
        proj_b[i] = cand.carrier.pairs[i].second;
        proj_x[i] = cand.carrier.pairs[i].first;
    }
    std::vector<std::size_t> inj_x(pa.X->size()), inj_b(pa.B->size());
    for (std::size_t x = 0; x < pa.X->size(); ++x) {
        inj_x[x] = cand.carrier.position(x, pa.B->identity());
        if (inj_x[x] == n) throw InternalError("synthesize: (x,1) missing from carrier");
    }
    for (std::size_t b = 0; b < pa.B->size(); ++b) {
        inj_b[b] = cand.carrier.position(pa.X->identity(), b);
        if (inj_b[b] == n) throw InternalError("synthesize: (0,b) missing from carrier");
    }

    auto d = SemiBiproduct::create(pa.X, R, pa.B, Homomorphism(R, pa.B, std::move(proj_b)),
                                   Homomorphism(pa.X, R, std::move(inj_x)),
                                   PointedMap(R, pa.X, std::move(proj_x)),
                                   PointedMap(pa.B, R, std::move(inj_b)));
    if (!verify(d).ok())
        throw InternalError("synthesize: synthetic diagram failed verification");
    return d;
}

PaMorphism extract_morphism(const SbpMorphism& m) {
    if (!verify_morphism(m).ok())
        throw Error("extract_morphism: input is not a semi-biproduct morphism");
    auto pa_morphism =
        PaMorphism::create(extract(m.source), extract(m.target), m.f1, m.f3);
    if (!verify_pa_morphism(pa_morphism).ok())
        throw InternalError("extract_morphism: (f1,f3) is not a pseudo-action morphism");
    return pa_morphism;
}

SbpMorphism synthesize_morphism(const PaMorphism& m) {
    if (!verify_pa_morphism(m).ok())
        throw Error("synthesize_morphism: input is not a pseudo-action morphism");
    SemiBiproduct src = synthesize(m.source);
    SemiBiproduct tgt = synthesize(m.target);

    auto tgt_carrier = synthetic_carrier(m.target);
    std::vector<std::size_t> h(src.A->size());
    auto src_carrier = synthetic_carrier(m.source);
    for (std::size_t i = 0; i < src_carrier.pairs.size(); ++i) {
        const auto& [x, b] = src_carrier.pairs[i];
        h[i] = tgt_carrier.position(m.f(x), m.g(b));
        if (h[i] == tgt_carrier.pairs.size())
            throw InternalError("synthesize_morphism: image pair left the target carrier");
    }

    auto result = SbpMorphism::create(src, tgt, m.f,
                                      Homomorphism(src.A, tgt.A, std::move(h)), m.g);
    if (!verify_morphism(result).ok())
        throw InternalError("synthesize_morphism: (f,h,g) is not a semi-biproduct morphism");
    return result;
}

bool roundtrip_action(const PseudoAction& pa) {
    require_verified(pa);
    return extract(synthesize(pa)).equals(pa);
}

RoundtripResult roundtrip_diagram(const SemiBiproduct& d) {
    require_verified(d);
    SemiBiproduct synthetic = synthesize(extract(d));
    auto carrier = synthetic_carrier(extract(d));

    // beta: A -> R, a |-> (q(a), p(a)); alpha: R -> A, (x,b) |-> k(x)+s(b).
    std::vector<std::size_t> beta_map(d.A->size());
    for (std::size_t a = 0; a < d.A->size(); ++a) {
        beta_map[a] = carrier.position(d.q(a), d.p(a));
        if (beta_map[a] == carrier.pairs.size())
            throw InternalError("roundtrip: beta image left the synthetic carrier");
    }
    std::vector<std::size_t> alpha_map(carrier.pairs.size());
    for (std::size_t i = 0; i < carrier.pairs.size(); ++i) {
        const auto& [x, b] = carrier.pairs[i];
        alpha_map[i] = d.A->op(d.k(x), d.s(b));
    }

    RoundtripResult result{
        synthetic,
        SbpMorphism::create(d, synthetic, identity_hom(d.X),
                            Homomorphism(d.A, synthetic.A, beta_map), identity_hom(d.B)),
        SbpMorphism::create(synthetic, d, identity_hom(d.X),
                            Homomorphism(synthetic.A, d.A, alpha_map), identity_hom(d.B)),
        {}};

    for (std::size_t a = 0; a < d.A->size(); ++a)
        if (alpha_map[beta_map[a]] != a) {
            result.report.failures.push_back({"alpha.beta=1",
                                              {d.A->element_name(a)},
                                              d.A->element_name(alpha_map[beta_map[a]]),
                                              d.A->element_name(a)});
            break;
        }
    for (std::size_t r = 0; r < carrier.pairs.size(); ++r)
        if (beta_map[alpha_map[r]] != r) {
            result.report.failures.push_back(
                {"beta.alpha=1",
                 {synthetic.A->element_name(r)},
                 synthetic.A->element_name(beta_map[alpha_map[r]]),
                 synthetic.A->element_name(r)});
            break;
        }

    for (const auto* morphism : {&result.to_synthetic, &result.from_synthetic}) {
        auto square_report = verify_morphism(*morphism);
        for (auto& f : square_report.failures) result.report.failures.push_back(std::move(f));
    }
    return result;
}

bool check_naturality(const SbpMorphism& m) {
    if (!verify_morphism(m).ok()) throw Error("check_naturality: not a morphism");
    RoundtripResult src_rt = roundtrip_diagram(m.source);
    RoundtripResult tgt_rt = roundtrip_diagram(m.target);
    SbpMorphism h = synthesize_morphism(extract_morphism(m));

    const auto& beta = src_rt.to_synthetic.f2;
    const auto& beta2 = tgt_rt.to_synthetic.f2;
    const auto& alpha = src_rt.from_synthetic.f2;
    const auto& alpha2 = tgt_rt.from_synthetic.f2;

    for (std::size_t a = 0; a < m.source.A->size(); ++a)
        if (h.f2(beta(a)) != beta2(m.f2(a))) return false;
    for (std::size_t r = 0; r < src_rt.synthetic.A->size(); ++r)
        if (m.f2(alpha(r)) != alpha2(h.f2(r))) return false;
    return true;
}

}  // namespace sbp
