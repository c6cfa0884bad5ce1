#include "sbp/pseudoaction.hpp"

#include <algorithm>
#include <thread>

namespace sbp {

PseudoAction PseudoAction::create(MonoidPtr X, MonoidPtr B, std::vector<std::size_t> rho,
                                  std::vector<std::size_t> phi,
                                  std::vector<std::size_t> gamma) {
    if (!X || !B) throw Error("pseudo-action: null monoid");
    const std::size_t nx = X->size(), nb = B->size();
    if (rho.size() != nx * nb) throw Error("pseudo-action: rho must be |X| x |B|");
    if (phi.size() != nb * nx) throw Error("pseudo-action: phi must be |B| x |X|");
    if (gamma.size() != nb * nb) throw Error("pseudo-action: gamma must be |B| x |B|");
    for (std::size_t v : rho)
        if (v >= nx) throw Error("pseudo-action: rho value out of range");
    for (std::size_t v : phi)
        if (v >= nx) throw Error("pseudo-action: phi value out of range");
    for (std::size_t v : gamma)
        if (v >= nx) throw Error("pseudo-action: gamma value out of range");
    return PseudoAction{std::move(X), std::move(B), std::move(rho), std::move(phi),
                        std::move(gamma)};
}

namespace {

std::string xname(const PseudoAction& pa, std::size_t x) { return pa.X->element_name(x); }
std::string bname(const PseudoAction& pa, std::size_t b) { return pa.B->element_name(b); }

/// The associativity law at one 6-tuple: both sides of
/// w(x, b, w(x',b',x'',b''), b'b'') = w(w(x,b,x',b'), bb', x'', b'').
struct AssocSides {
    std::size_t lhs, rhs;
};

AssocSides assoc_sides(const PseudoAction& pa, std::size_t x, std::size_t b, std::size_t x2,
                       std::size_t b2, std::size_t x3, std::size_t b3) {
    const std::size_t lhs = pa.w(x, b, pa.w(x2, b2, x3, b3), pa.B->op(b2, b3));
    const std::size_t rhs = pa.w(pa.w(x, b, x2, b2), pa.B->op(b, b2), x3, b3);
    return {lhs, rhs};
}

Failure assoc_failure(const PseudoAction& pa, std::size_t x, std::size_t b, std::size_t x2,
                      std::size_t b2, std::size_t x3, std::size_t b3) {
    auto sides = assoc_sides(pa, x, b, x2, b2, x3, b3);
    return Failure{"associativity",
                   {xname(pa, x), bname(pa, b), xname(pa, x2), bname(pa, b2), xname(pa, x3),
                    bname(pa, b3)},
                   xname(pa, sides.lhs),
                   xname(pa, sides.rhs)};
}

/// Scans the associativity law over the linearized 6-tuple space
/// [begin, end), appending failures in scan order.
void scan_assoc_range(const PseudoAction& pa, std::size_t begin, std::size_t end,
                      bool exhaustive, std::vector<Failure>& out) {
    const std::size_t nx = pa.X->size(), nb = pa.B->size();
    const std::size_t per_pair = nx * nb;
    for (std::size_t idx = begin; idx < end; ++idx) {
        std::size_t rest = idx;
        const std::size_t t3 = rest % per_pair;
        rest /= per_pair;
        const std::size_t t2 = rest % per_pair;
        const std::size_t t1 = rest / per_pair;
        const std::size_t x = t1 / nb, b = t1 % nb;
        const std::size_t x2 = t2 / nb, b2 = t2 % nb;
        const std::size_t x3 = t3 / nb, b3 = t3 % nb;
        auto sides = assoc_sides(pa, x, b, x2, b2, x3, b3);
        if (sides.lhs != sides.rhs) {
            out.push_back(assoc_failure(pa, x, b, x2, b2, x3, b3));
            if (!exhaustive) return;
        }
    }
}

LawStatus check_associativity(const PseudoAction& pa, const PaVerifyOptions& opts) {
    LawStatus status{"associativity", {}};
    const std::size_t per_pair = pa.X->size() * pa.B->size();
    const std::size_t total = per_pair * per_pair * per_pair;

    unsigned jobs = opts.jobs == 0 ? 1 : opts.jobs;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
    if (jobs <= 1) {
        scan_assoc_range(pa, 0, total, opts.exhaustive_witnesses, status.failures);
        return status;
    }

    std::vector<std::vector<Failure>> partial(jobs);
    std::vector<std::thread> workers;
    const std::size_t chunk = (total + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(total, begin + chunk);
        workers.emplace_back([&, w, begin, end] {
            if (begin < end)
                scan_assoc_range(pa, begin, end, opts.exhaustive_witnesses, partial[w]);
        });
    }
    for (auto& t : workers) t.join();

    // Ranges are contiguous and scanned in order, so concatenation keeps
    // global scan order; the least witness comes first either way.
    for (auto& part : partial) {
        for (auto& f : part) {
            status.failures.push_back(std::move(f));
            if (!opts.exhaustive_witnesses) return status;
        }
    }
    return status;
}

}  // namespace

PaReport verify_pseudo_action(const PseudoAction& pa, const PaVerifyOptions& opts) {
    PaReport report;
    const FiniteMonoid& X = *pa.X;
    const FiniteMonoid& B = *pa.B;
    const std::size_t one = B.identity();
    const std::size_t zero = X.identity();
    const bool all = opts.exhaustive_witnesses;

    auto scan = [&](const char* law, std::size_t count, auto witness, auto lhs, auto rhs) {
        LawStatus status{law, {}};
        for (std::size_t i = 0; i < count; ++i) {
            std::size_t l = lhs(i), r = rhs(i);
            if (l != r) {
                status.failures.push_back(
                    {law, witness(i), X.element_name(l), X.element_name(r)});
                if (!all) break;
            }
        }
        report.laws.push_back(std::move(status));
    };

    scan(
        "x^1=x", X.size(),
        [&](std::size_t x) { return std::vector<std::string>{xname(pa, x)}; },
        [&](std::size_t x) { return pa.rho_at(x, one); }, [](std::size_t x) { return x; });
    scan(
        "0^b=0", B.size(),
        [&](std::size_t b) { return std::vector<std::string>{bname(pa, b)}; },
        [&](std::size_t b) { return pa.rho_at(zero, b); },
        [&](std::size_t) { return zero; });
    scan(
        "1.x=x", X.size(),
        [&](std::size_t x) { return std::vector<std::string>{xname(pa, x)}; },
        [&](std::size_t x) { return pa.phi_at(one, x); }, [](std::size_t x) { return x; });
    scan(
        "b.0=0", B.size(),
        [&](std::size_t b) { return std::vector<std::string>{bname(pa, b)}; },
        [&](std::size_t b) { return pa.phi_at(b, zero); },
        [&](std::size_t) { return zero; });
    scan(
        "1xb=0", B.size(),
        [&](std::size_t b) { return std::vector<std::string>{bname(pa, b)}; },
        [&](std::size_t b) { return pa.gamma_at(one, b); },
        [&](std::size_t) { return zero; });
    scan(
        "bx1=0", B.size(),
        [&](std::size_t b) { return std::vector<std::string>{bname(pa, b)}; },
        [&](std::size_t b) { return pa.gamma_at(b, one); },
        [&](std::size_t) { return zero; });

    report.laws.push_back(check_associativity(pa, opts));

    scan(
        "(b.x)^b=b.x", B.size() * X.size(),
        [&](std::size_t i) {
            return std::vector<std::string>{bname(pa, i / X.size()), xname(pa, i % X.size())};
        },
        [&](std::size_t i) { return pa.rho_at(pa.phi_at(i / X.size(), i % X.size()), i / X.size()); },
        [&](std::size_t i) { return pa.phi_at(i / X.size(), i % X.size()); });
    scan(
        "(bxb')^(bb')=bxb'", B.size() * B.size(),
        [&](std::size_t i) {
            return std::vector<std::string>{bname(pa, i / B.size()), bname(pa, i % B.size())};
        },
        [&](std::size_t i) {
            const std::size_t b = i / B.size(), b2 = i % B.size();
            return pa.rho_at(pa.gamma_at(b, b2), B.op(b, b2));
        },
        [&](std::size_t i) { return pa.gamma_at(i / B.size(), i % B.size()); });

    return report;
}

void require_verified(const PseudoAction& pa) {
    auto report = verify_pseudo_action(pa);
    if (!report.ok()) {
        std::string what = "pseudo-action fails:";
        for (const auto& law : report.failed_laws()) what += " " + law;
        throw Error(what);
    }
}

PaReport check_derived_identities(const PseudoAction& pa) {
    PaReport report;
    const FiniteMonoid& X = *pa.X;
    const FiniteMonoid& B = *pa.B;

    auto scan2 = [&](const char* law, auto lhs, auto rhs, bool over_xxb) {
        LawStatus status{law, {}};
        const std::size_t n1 = over_xxb ? X.size() : B.size();
        for (std::size_t i = 0; i < n1 && status.failures.empty(); ++i)
            for (std::size_t j = 0;
                 j < (over_xxb ? X.size() : B.size()) && status.failures.empty(); ++j)
                for (std::size_t b = 0; b < B.size(); ++b) {
                    std::size_t l = lhs(i, j, b), r = rhs(i, j, b);
                    if (l != r) {
                        std::vector<std::string> witness =
                            over_xxb ? std::vector<std::string>{xname(pa, i), xname(pa, j),
                                                                bname(pa, b)}
                                     : std::vector<std::string>{bname(pa, i), bname(pa, j),
                                                                bname(pa, b)};
                        status.failures.push_back(
                            {law, witness, X.element_name(l), X.element_name(r)});
                        break;
                    }
                }
        report.laws.push_back(std::move(status));
    };

    // (x^b)^b = x^b
    {
        LawStatus status{"(x^b)^b=x^b", {}};
        for (std::size_t x = 0; x < X.size() && status.failures.empty(); ++x)
            for (std::size_t b = 0; b < B.size(); ++b) {
                std::size_t xb = pa.rho_at(x, b);
                if (pa.rho_at(xb, b) != xb) {
                    status.failures.push_back({status.law,
                                               {xname(pa, x), bname(pa, b)},
                                               X.element_name(pa.rho_at(xb, b)),
                                               X.element_name(xb)});
                    break;
                }
            }
        report.laws.push_back(std::move(status));
    }

    // (b.(x+y))^b = (b.x + b.y)^b
    scan2(
        "(b.(x+y))^b=(b.x+b.y)^b",
        [&](std::size_t x, std::size_t y, std::size_t b) {
            return pa.rho_at(pa.phi_at(b, X.op(x, y)), b);
        },
        [&](std::size_t x, std::size_t y, std::size_t b) {
            return pa.rho_at(X.op(pa.phi_at(b, x), pa.phi_at(b, y)), b);
        },
        true);

    // (x+y)^b = (x + y^b)^b
    scan2(
        "(x+y)^b=(x+y^b)^b",
        [&](std::size_t x, std::size_t y, std::size_t b) { return pa.rho_at(X.op(x, y), b); },
        [&](std::size_t x, std::size_t y, std::size_t b) {
            return pa.rho_at(X.op(x, pa.rho_at(y, b)), b);
        },
        true);

    // (x^b + b.y)^b = (x + (b.y)^b)^b
    scan2(
        "(x^b+b.y)^b=(x+(b.y)^b)^b",
        [&](std::size_t x, std::size_t y, std::size_t b) {
            return pa.rho_at(X.op(pa.rho_at(x, b), pa.phi_at(b, y)), b);
        },
        [&](std::size_t x, std::size_t y, std::size_t b) {
            return pa.rho_at(X.op(x, pa.rho_at(pa.phi_at(b, y), b)), b);
        },
        true);

    // (b.(x+y))^b = ((b.x)^b + b.y)^b
    scan2(
        "(b.(x+y))^b=((b.x)^b+b.y)^b",
        [&](std::size_t x, std::size_t y, std::size_t b) {
            return pa.rho_at(pa.phi_at(b, X.op(x, y)), b);
        },
        [&](std::size_t x, std::size_t y, std::size_t b) {
            return pa.rho_at(X.op(pa.rho_at(pa.phi_at(b, x), b), pa.phi_at(b, y)), b);
        },
        true);

    // factor cocycle:
    // (b.(b'xb'')^(b'b'') + (bx(b'b'')))^(bb'b'') = ((bxb')^(bb') + ((bb')xb''))^(bb'b'')
    scan2(
        "factor-cocycle",
        [&](std::size_t b, std::size_t b2, std::size_t b3) {
            const std::size_t inner = pa.rho_at(pa.gamma_at(b2, b3), B.op(b2, b3));
            return pa.rho_at(X.op(pa.phi_at(b, inner), pa.gamma_at(b, B.op(b2, b3))),
                             B.op(b, B.op(b2, b3)));
        },
        [&](std::size_t b, std::size_t b2, std::size_t b3) {
            const std::size_t inner = pa.rho_at(pa.gamma_at(b, b2), B.op(b, b2));
            return pa.rho_at(X.op(inner, pa.gamma_at(B.op(b, b2), b3)),
                             B.op(B.op(b, b2), b3));
        },
        false);

    // (x^b + bxb')^(bb') = (x + bxb')^(bb')
    {
        LawStatus status{"(x^b+bxb')^(bb')=(x+bxb')^(bb')", {}};
        for (std::size_t x = 0; x < X.size() && status.failures.empty(); ++x)
            for (std::size_t b = 0; b < B.size() && status.failures.empty(); ++b)
                for (std::size_t b2 = 0; b2 < B.size(); ++b2) {
                    const std::size_t bb2 = B.op(b, b2);
                    const std::size_t l =
                        pa.rho_at(X.op(pa.rho_at(x, b), pa.gamma_at(b, b2)), bb2);
                    const std::size_t r = pa.rho_at(X.op(x, pa.gamma_at(b, b2)), bb2);
                    if (l != r) {
                        status.failures.push_back({status.law,
                                                   {xname(pa, x), bname(pa, b), bname(pa, b2)},
                                                   X.element_name(l),
                                                   X.element_name(r)});
                        break;
                    }
                }
        report.laws.push_back(std::move(status));
    }

    // factor conjugation:
    // (b.(b'.x)^(b') + (bxb'))^(bb') = ((bxb')^(bb') + (bb').x)^(bb')
    {
        LawStatus status{"factor-conjugation", {}};
        for (std::size_t b = 0; b < B.size() && status.failures.empty(); ++b)
            for (std::size_t b2 = 0; b2 < B.size() && status.failures.empty(); ++b2)
                for (std::size_t x = 0; x < X.size(); ++x) {
                    const std::size_t bb2 = B.op(b, b2);
                    const std::size_t inner = pa.rho_at(pa.phi_at(b2, x), b2);
                    const std::size_t l =
                        pa.rho_at(X.op(pa.phi_at(b, inner), pa.gamma_at(b, b2)), bb2);
                    const std::size_t r = pa.rho_at(
                        X.op(pa.rho_at(pa.gamma_at(b, b2), bb2), pa.phi_at(bb2, x)), bb2);
                    if (l != r) {
                        status.failures.push_back({status.law,
                                                   {bname(pa, b), bname(pa, b2), xname(pa, x)},
                                                   X.element_name(l),
                                                   X.element_name(r)});
                        break;
                    }
                }
        report.laws.push_back(std::move(status));
    }

    return report;
}

PaMorphism PaMorphism::create(PseudoAction source, PseudoAction target, Homomorphism f,
                              Homomorphism g) {
    if (!f.domain()->same_structure(*source.X) || !f.codomain()->same_structure(*target.X))
        throw Error("pa morphism: f must map X to X'");
    if (!g.domain()->same_structure(*source.B) || !g.codomain()->same_structure(*target.B))
        throw Error("pa morphism: g must map B to B'");
    return PaMorphism{std::move(source), std::move(target), std::move(f), std::move(g)};
}

PaMorphism identity_pa_morphism(const PseudoAction& pa) {
    return PaMorphism::create(pa, pa, identity_hom(pa.X), identity_hom(pa.B));
}

ValidationReport verify_pa_morphism(const PaMorphism& m) {
    ValidationReport report;
    const PseudoAction& src = m.source;
    const PseudoAction& tgt = m.target;
    const FiniteMonoid& X = *src.X;
    const FiniteMonoid& B = *src.B;
    const FiniteMonoid& X2 = *tgt.X;

    for (std::size_t x = 0; x < X.size(); ++x)
        for (std::size_t b = 0; b < B.size(); ++b)
            if (m.f(src.rho_at(x, b)) != tgt.rho_at(m.f(x), m.g(b))) {
                report.failures.push_back({"f(x^b)=f(x)^g(b)",
                                           {X.element_name(x), B.element_name(b)},
                                           X2.element_name(m.f(src.rho_at(x, b))),
                                           X2.element_name(tgt.rho_at(m.f(x), m.g(b)))});
                goto rho_done;
            }
rho_done:
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t x = 0; x < X.size(); ++x)
            if (m.f(src.phi_at(b, x)) != tgt.phi_at(m.g(b), m.f(x))) {
                report.failures.push_back({"f(b.x)=g(b).f(x)",
                                           {B.element_name(b), X.element_name(x)},
                                           X2.element_name(m.f(src.phi_at(b, x))),
                                           X2.element_name(tgt.phi_at(m.g(b), m.f(x)))});
                goto phi_done;
            }
phi_done:
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t b2 = 0; b2 < B.size(); ++b2)
            if (m.f(src.gamma_at(b, b2)) != tgt.gamma_at(m.g(b), m.g(b2))) {
                report.failures.push_back({"f(bxb')=g(b)xg(b')",
                                           {B.element_name(b), B.element_name(b2)},
                                           X2.element_name(m.f(src.gamma_at(b, b2))),
                                           X2.element_name(tgt.gamma_at(m.g(b), m.g(b2)))});
                goto gamma_done;
            }
gamma_done:

    // Implied: f(w(x,b,x',b')) = w'(f(x),g(b),f(x'),g(b')). A violation
    // with the three component laws intact is an implementation bug.
    if (report.ok()) {
        for (std::size_t x = 0; x < X.size(); ++x)
            for (std::size_t b = 0; b < B.size(); ++b)
                for (std::size_t x2 = 0; x2 < X.size(); ++x2)
                    for (std::size_t b2 = 0; b2 < B.size(); ++b2)
                        if (m.f(src.w(x, b, x2, b2)) !=
                            tgt.w(m.f(x), m.g(b), m.f(x2), m.g(b2)))
                            throw InternalError(
                                "pa morphism: component laws hold but w is not preserved");
    }
    return report;
}

PseudoAction trivial_action(const MonoidPtr& X, const MonoidPtr& B) {
    const std::size_t nx = X->size(), nb = B->size();
    std::vector<std::size_t> rho(nx * nb), phi(nb * nx), gamma(nb * nb, X->identity());
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t b = 0; b < nb; ++b) rho[x * nb + b] = x;
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t x = 0; x < nx; ++x) phi[b * nx + x] = x;
    auto pa = PseudoAction::create(X, B, std::move(rho), std::move(phi), std::move(gamma));
    if (!verify_pseudo_action(pa).ok())
        throw InternalError("trivial_action: result failed verification");
    return pa;
}

std::vector<PseudoAction> enumerate_pseudo_actions(const MonoidPtr& X, const MonoidPtr& B,
                                                   std::size_t stride) {
    if (stride == 0) throw Error("enumerate_pseudo_actions: stride must be positive");
    const std::size_t nx = X->size(), nb = B->size();
    const std::size_t zero = X->identity(), one = B->identity();

    // Unit laws pin rho on (x,1) and (0,b), phi on (1,x) and (b,0), gamma
    // on (1,b') and (b,1); only the remaining entries are free.
    std::vector<std::size_t> rho(nx * nb), phi(nb * nx), gamma(nb * nb, zero);
    for (std::size_t x = 0; x < nx; ++x) rho[x * nb + one] = x;
    for (std::size_t b = 0; b < nb; ++b) rho[zero * nb + b] = zero;
    for (std::size_t x = 0; x < nx; ++x) phi[one * nx + x] = x;
    for (std::size_t b = 0; b < nb; ++b) phi[b * nx + zero] = zero;

    std::vector<std::size_t*> slots;
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t b = 0; b < nb; ++b)
            if (x != zero && b != one) slots.push_back(&rho[x * nb + b]);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t x = 0; x < nx; ++x)
            if (b != one && x != zero) slots.push_back(&phi[b * nx + x]);
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t b2 = 0; b2 < nb; ++b2)
            if (b != one && b2 != one) slots.push_back(&gamma[b * nb + b2]);

    for (auto* s : slots) *s = 0;

    std::vector<PseudoAction> out;
    std::size_t serial = 0;
    bool done = false;
    while (!done) {
        if (serial % stride == 0) {
            auto pa = PseudoAction::create(X, B, rho, phi, gamma);
            if (verify_pseudo_action(pa).ok()) out.push_back(std::move(pa));
        }
        ++serial;
        done = true;
        for (std::size_t c = slots.size(); c-- > 0;) {
            if (++*slots[c] < nx) {
                done = false;
                break;
            }
            *slots[c] = 0;
        }
    }
    return out;
}

}  // namespace sbp
