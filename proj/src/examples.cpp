#include "sbp/examples.hpp"

#include <algorithm>

#include "sbp/maps.hpp"

namespace sbp::examples {

namespace {

std::vector<std::size_t> mapping_by_names(
    const MonoidPtr& dom, const MonoidPtr& cod,
    const std::vector<std::pair<std::string, std::string>>& assignments) {
    std::vector<std::size_t> mapping(dom->size(), cod->size());
    for (const auto& [from, to] : assignments) {
        auto i = dom->index_of(from);
        auto j = cod->index_of(to);
        if (!i || !j) throw Error("corpus: unknown element name in mapping");
        mapping[*i] = *j;
    }
    for (std::size_t v : mapping)
        if (v == cod->size()) throw Error("corpus: mapping is not total");
    return mapping;
}

MonoidPtr chain_x() {
    return make_monoid({"X",
                        {"0", "a", "b"},
                        "0",
                        {{"0", "a", "b"}, {"a", "a", "b"}, {"b", "b", "b"}}});
}

MonoidPtr chain_b() {
    return make_monoid({"B", {"0", "c"}, "0", {{"0", "c"}, {"c", "c"}}});
}

/// One of the eight five-element case-study diagrams, sharing X, B and the
/// four structure maps; only the table of A varies.
ExampleRecord case_record(const std::string& name,
                          const std::vector<std::vector<std::string>>& table,
                          ExampleExpectations expected) {
    auto X = chain_x();
    auto B = chain_b();
    auto A = make_monoid({name, {"0", "a", "b", "c", "d"}, "0", table});

    Homomorphism k(X, A, mapping_by_names(X, A, {{"0", "0"}, {"a", "a"}, {"b", "b"}}));
    Homomorphism p(A, B, mapping_by_names(A, B, {{"0", "0"},
                                                 {"a", "0"},
                                                 {"b", "0"},
                                                 {"c", "c"},
                                                 {"d", "c"}}));
    PointedMap q(A, X, mapping_by_names(A, X, {{"0", "0"},
                                               {"a", "a"},
                                               {"b", "b"},
                                               {"c", "0"},
                                               {"d", "a"}}));
    PointedMap s(B, A, mapping_by_names(B, A, {{"0", "0"}, {"c", "c"}}));

    expected.q_kind = MapKind::pointed_only;
    expected.q_witness_pair = {"b", "c"};
    expected.q_witness_rhs = "b";
    expected.kernel_ok = true;

    ExampleRecord record{name,
                         SemiBiproduct::create(X, A, B, p, k, q, s),
                         std::move(expected),
                         std::nullopt,
                         std::nullopt};
    return record;
}

std::vector<ExampleRecord> build_corpus() {
    std::vector<ExampleRecord> corpus;

    {
        ExampleExpectations e;
        e.verified = false;
        e.failed_axioms = {"kq+sp=1"};
        e.failure_witness = "d";
        e.failure_lhs = "c";
        e.commutative = false;
        e.s_is_homomorphism = false;
        e.q_witness_lhs = "0";
        e.cokernel_ok = true;  // p splits via c |-> d even though s does not
        auto record = case_record("A1",
                                  {{"0", "a", "b", "c", "d"},
                                   {"a", "a", "b", "c", "d"},
                                   {"b", "b", "b", "c", "d"},
                                   {"c", "c", "d", "d", "d"},
                                   {"d", "d", "d", "d", "d"}},
                                  e);
        record.s_prime = PointedMap(
            record.diagram.B, record.diagram.A,
            mapping_by_names(record.diagram.B, record.diagram.A, {{"0", "0"}, {"c", "d"}}));
        corpus.push_back(std::move(record));
    }
    {
        ExampleExpectations e;
        e.verified = false;
        e.failed_axioms = {"kq+sp=1"};
        e.failure_witness = "d";
        e.failure_lhs = "c";
        e.commutative = true;
        e.s_is_homomorphism = false;
        e.q_witness_lhs = "0";
        e.cokernel_ok = false;
        auto record = case_record("A2",
                                  {{"0", "a", "b", "c", "d"},
                                   {"a", "a", "b", "c", "d"},
                                   {"b", "b", "b", "c", "d"},
                                   {"c", "c", "c", "d", "c"},
                                   {"d", "d", "d", "c", "d"}},
                                  e);
        // Y is the submonoid of A2 on {0, c, d}; g collapses the kernel.
        auto Y = make_monoid(
            {"Y", {"0", "c", "d"}, "0", {{"0", "c", "d"}, {"c", "d", "c"}, {"d", "c", "d"}}});
        record.counterexample_g =
            Homomorphism(record.diagram.A, Y,
                         mapping_by_names(record.diagram.A, Y,
                                          {{"0", "0"}, {"a", "0"}, {"b", "0"},
                                           {"c", "c"}, {"d", "d"}}));
        corpus.push_back(std::move(record));
    }
    {
        ExampleExpectations e;
        e.verified = false;
        e.failed_axioms = {"kq+sp=1"};
        e.failure_witness = "d";
        e.failure_lhs = "c";
        e.commutative = false;
        e.s_is_homomorphism = true;
        e.q_witness_lhs = "0";
        corpus.push_back(case_record("A3",
                                     {{"0", "a", "b", "c", "d"},
                                      {"a", "a", "b", "c", "c"},
                                      {"b", "b", "b", "c", "c"},
                                      {"c", "c", "c", "c", "c"},
                                      {"d", "d", "c", "c", "c"}},
                                     e));
    }
    {
        ExampleExpectations e;
        e.verified = false;
        e.failed_axioms = {"kq+sp=1"};
        e.failure_witness = "d";
        e.failure_lhs = "c";
        e.commutative = true;
        e.s_is_homomorphism = true;
        e.q_witness_lhs = "0";
        corpus.push_back(case_record("A4",
                                     {{"0", "a", "b", "c", "d"},
                                      {"a", "a", "b", "c", "c"},
                                      {"b", "b", "b", "c", "c"},
                                      {"c", "c", "c", "c", "c"},
                                      {"d", "c", "c", "c", "c"}},
                                     e));
    }
    {
        ExampleExpectations e;
        e.verified = true;
        e.schreier = false;
        e.beta_image_size = 5;
        e.commutative = false;
        e.s_is_homomorphism = false;
        e.q_witness_lhs = "a";
        corpus.push_back(case_record("A5",
                                     {{"0", "a", "b", "c", "d"},
                                      {"a", "a", "b", "d", "d"},
                                      {"b", "b", "b", "d", "d"},
                                      {"c", "c", "c", "d", "d"},
                                      {"d", "d", "d", "d", "d"}},
                                     e));
    }
    {
        ExampleExpectations e;
        e.verified = true;
        e.schreier = false;
        e.beta_image_size = 5;
        e.commutative = true;
        e.s_is_homomorphism = false;
        e.q_witness_lhs = "a";
        corpus.push_back(case_record("A6",
                                     {{"0", "a", "b", "c", "d"},
                                      {"a", "a", "b", "d", "d"},
                                      {"b", "b", "b", "d", "d"},
                                      {"c", "d", "d", "d", "d"},
                                      {"d", "d", "d", "d", "d"}},
                                     e));
    }
    {
        ExampleExpectations e;
        e.verified = true;
        e.schreier = false;
        e.beta_image_size = 5;
        e.commutative = false;
        e.s_is_homomorphism = true;
        e.q_witness_lhs = "a";
        corpus.push_back(case_record("A7",
                                     {{"0", "a", "b", "c", "d"},
                                      {"a", "a", "b", "d", "d"},
                                      {"b", "b", "b", "d", "d"},
                                      {"c", "c", "c", "c", "c"},
                                      {"d", "d", "d", "d", "d"}},
                                     e));
    }
    {
        ExampleExpectations e;
        e.verified = true;
        e.schreier = false;
        e.beta_image_size = 5;
        e.commutative = true;
        e.s_is_homomorphism = true;
        e.q_witness_lhs = "a";
        corpus.push_back(case_record("A8",
                                     {{"0", "a", "b", "c", "d"},
                                      {"a", "a", "b", "d", "d"},
                                      {"b", "b", "b", "d", "d"},
                                      {"c", "d", "d", "c", "d"},
                                      {"d", "d", "d", "d", "d"}},
                                     e));
    }

    // Chain semilattice on the three-pair relation carrier. Elements in
    // lexicographic (x, b) order, matching the synthetic construction.
    {
        auto X = make_monoid({"X", {"0", "s"}, "0", {{"0", "s"}, {"s", "s"}}});
        auto B = make_monoid({"B", {"1", "t"}, "1", {{"1", "t"}, {"t", "t"}}});
        auto R = make_monoid({"R(X,B)",
                              {"(0,1)", "(0,t)", "(s,1)"},
                              "(0,1)",
                              {{"(0,1)", "(0,t)", "(s,1)"},
                               {"(0,t)", "(0,t)", "(0,t)"},
                               {"(s,1)", "(0,t)", "(s,1)"}}});
        Homomorphism p(R, B, mapping_by_names(R, B, {{"(0,1)", "1"},
                                                     {"(s,1)", "1"},
                                                     {"(0,t)", "t"}}));
        Homomorphism k(X, R, mapping_by_names(X, R, {{"0", "(0,1)"}, {"s", "(s,1)"}}));
        PointedMap q(R, X, mapping_by_names(R, X, {{"(0,1)", "0"},
                                                   {"(s,1)", "s"},
                                                   {"(0,t)", "0"}}));
        PointedMap s(B, R, mapping_by_names(B, R, {{"1", "(0,1)"}, {"t", "(0,t)"}}));

        ExampleExpectations e;
        e.verified = true;
        e.schreier = false;
        e.beta_image_size = 3;
        e.commutative = true;
        e.s_is_homomorphism = true;
        e.q_kind = MapKind::pointed_only;
        e.q_witness_pair = {"(s,1)", "(0,t)"};
        e.q_witness_lhs = "0";
        e.q_witness_rhs = "s";
        corpus.push_back({"chain", SemiBiproduct::create(X, R, B, p, k, q, s), e,
                          std::nullopt, std::nullopt});
    }

    // Sign multiplication carrier over a two-element group kernel.
    {
        auto X = make_monoid({"X", {"0", "s"}, "0", {{"0", "s"}, {"s", "0"}}});
        auto B = make_monoid({"B", {"1", "t"}, "1", {{"1", "t"}, {"t", "t"}}});
        auto A = make_monoid({"signs",
                              {"1", "-1", "0"},
                              "1",
                              {{"1", "-1", "0"}, {"-1", "1", "0"}, {"0", "0", "0"}}});
        Homomorphism p(A, B, mapping_by_names(A, B, {{"1", "1"}, {"-1", "1"}, {"0", "t"}}));
        Homomorphism k(X, A, mapping_by_names(X, A, {{"0", "1"}, {"s", "-1"}}));
        PointedMap q(A, X, mapping_by_names(A, X, {{"1", "0"}, {"-1", "s"}, {"0", "0"}}));
        PointedMap s(B, A, mapping_by_names(B, A, {{"1", "1"}, {"t", "0"}}));

        ExampleExpectations e;
        e.verified = true;
        e.schreier = false;
        e.beta_image_size = 3;
        e.commutative = true;
        e.s_is_homomorphism = true;
        e.q_kind = MapKind::pointed_only;
        e.q_witness_pair = {"-1", "0"};
        e.q_witness_lhs = "0";
        e.q_witness_rhs = "s";
        corpus.push_back({"signs", SemiBiproduct::create(X, A, B, p, k, q, s), e,
                          std::nullopt, std::nullopt});
    }

    // An idempotent kernel under a two-element group quotient.
    {
        auto X = make_monoid({"X", {"1", "a"}, "1", {{"1", "a"}, {"a", "a"}}});
        auto B = make_monoid({"B", {"1", "t"}, "1", {{"1", "t"}, {"t", "1"}}});
        auto A = make_monoid({"bgroup",
                              {"1", "a", "b"},
                              "1",
                              {{"1", "a", "b"}, {"a", "a", "b"}, {"b", "b", "a"}}});
        Homomorphism p(A, B, mapping_by_names(A, B, {{"1", "1"}, {"a", "1"}, {"b", "t"}}));
        Homomorphism k(X, A, mapping_by_names(X, A, {{"1", "1"}, {"a", "a"}}));
        PointedMap q(A, X, mapping_by_names(A, X, {{"1", "1"}, {"a", "a"}, {"b", "1"}}));
        PointedMap s(B, A, mapping_by_names(B, A, {{"1", "1"}, {"t", "b"}}));

        ExampleExpectations e;
        e.verified = true;
        e.schreier = false;
        e.beta_image_size = 3;
        e.commutative = true;
        e.s_is_homomorphism = false;
        e.q_kind = MapKind::pointed_only;
        e.q_witness_pair = {"b", "b"};
        e.q_witness_lhs = "a";
        e.q_witness_rhs = "1";
        corpus.push_back({"bgroup", SemiBiproduct::create(X, A, B, p, k, q, s), e,
                          std::nullopt, std::nullopt});
    }

    // The three-chain extension with both ends of size two.
    {
        auto X = make_monoid({"X", {"1", "a"}, "1", {{"1", "a"}, {"a", "a"}}});
        auto B = make_monoid({"B", {"1", "b"}, "1", {{"1", "b"}, {"b", "b"}}});
        auto A = make_monoid({"simple",
                              {"1", "a", "b"},
                              "1",
                              {{"1", "a", "b"}, {"a", "a", "b"}, {"b", "b", "b"}}});
        Homomorphism p(A, B, mapping_by_names(A, B, {{"1", "1"}, {"a", "1"}, {"b", "b"}}));
        Homomorphism k(X, A, mapping_by_names(X, A, {{"1", "1"}, {"a", "a"}}));
        PointedMap q(A, X, mapping_by_names(A, X, {{"1", "1"}, {"a", "a"}, {"b", "1"}}));
        PointedMap s(B, A, mapping_by_names(B, A, {{"1", "1"}, {"b", "b"}}));

        ExampleExpectations e;
        e.verified = true;
        e.schreier = false;
        e.beta_image_size = 3;
        e.commutative = true;
        e.s_is_homomorphism = true;
        e.q_kind = MapKind::pointed_only;
        e.q_witness_pair = {"a", "b"};
        e.q_witness_lhs = "1";
        e.q_witness_rhs = "a";
        corpus.push_back({"simple", SemiBiproduct::create(X, A, B, p, k, q, s), e,
                          std::nullopt, std::nullopt});
    }

    // Biproduct baseline.
    {
        auto X = make_monoid({"X", {"0", "s"}, "0", {{"0", "s"}, {"s", "s"}}});
        auto B = make_monoid({"B", {"1", "t"}, "1", {{"1", "t"}, {"t", "t"}}});
        ExampleExpectations e;
        e.verified = true;
        e.schreier = true;
        e.beta_image_size = 4;
        e.commutative = true;
        e.s_is_homomorphism = true;
        e.q_kind = MapKind::homomorphism;
        corpus.push_back({"product", biproduct(X, B), e, std::nullopt, std::nullopt});
    }

    return corpus;
}

}  // namespace

const std::vector<ExampleRecord>& examples_corpus() {
    static const std::vector<ExampleRecord> corpus = build_corpus();
    return corpus;
}

const ExampleRecord* find_example(const std::string& name) {
    for (const auto& record : examples_corpus())
        if (record.name == name) return &record;
    return nullptr;
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

void push_fact(ExampleRunResult& result, const std::string& name, const std::string& expected,
               const std::string& actual) {
    result.facts.push_back({name, expected, actual, expected == actual});
}

}  // namespace

ExampleRunResult run_example(const ExampleRecord& record) {
    ExampleRunResult result;
    result.name = record.name;
    const SemiBiproduct& d = record.diagram;
    const ExampleExpectations& e = record.expected;

    result.verify_report = verify(d);
    push_fact(result, "verified", bool_str(e.verified), bool_str(result.verify_report.ok()));
    push_fact(result, "failed-axioms",
              [&] {
                  std::string joined;
                  for (const auto& a : e.failed_axioms) joined += (joined.empty() ? "" : ",") + a;
                  return joined;
              }(),
              [&] {
                  std::string joined;
                  for (const auto& a : result.verify_report.failed_laws())
                      joined += (joined.empty() ? "" : ",") + a;
                  return joined;
              }());
    if (!e.failed_axioms.empty()) {
        const LawStatus* status = result.verify_report.find(e.failed_axioms.front());
        std::string witness, lhs;
        if (status && !status->failures.empty()) {
            witness = status->failures.front().witness.front();
            lhs = status->failures.front().lhs;
        }
        push_fact(result, "failure-witness", e.failure_witness, witness);
        push_fact(result, "failure-lhs", e.failure_lhs, lhs);
    }

    if (e.schreier)
        push_fact(result, "schreier", bool_str(*e.schreier), bool_str(is_schreier(d)));
    if (e.beta_image_size)
        push_fact(result, "beta-image-size", std::to_string(*e.beta_image_size),
                  std::to_string(image_of_beta(d).size()));

    push_fact(result, "commutative", bool_str(e.commutative), bool_str(is_commutative(*d.A)));

    auto s_kind = classify_map(*d.B, *d.A, d.s.mapping()).kind;
    push_fact(result, "s-is-homomorphism", bool_str(e.s_is_homomorphism),
              bool_str(s_kind == MapKind::homomorphism));

    auto q_class = classify_map(*d.A, *d.X, d.q.mapping());
    push_fact(result, "q-kind", to_string(e.q_kind), to_string(q_class.kind));
    if (!e.q_witness_pair[0].empty()) {
        auto u = d.A->index_of(e.q_witness_pair[0]);
        auto v = d.A->index_of(e.q_witness_pair[1]);
        if (!u || !v) throw Error("corpus: unknown witness element");
        push_fact(result, "q-witness-lhs", e.q_witness_lhs,
                  d.X->element_name(d.q(d.A->op(*u, *v))));
        push_fact(result, "q-witness-rhs", e.q_witness_rhs,
                  d.X->element_name(d.X->op(d.q(*u), d.q(*v))));
    }

    push_fact(result, "kernel", bool_str(e.kernel_ok), bool_str(check_kernel(d)));
    push_fact(result, "cokernel", bool_str(e.cokernel_ok), bool_str(check_cokernel(d)));

    if (record.s_prime) {
        auto kind = classify_map(*d.B, *d.A, record.s_prime->mapping()).kind;
        push_fact(result, "s-prime-is-homomorphism", "true",
                  bool_str(kind == MapKind::homomorphism));
    }
    if (record.counterexample_g) {
        // No gbar: B -> Y satisfies gbar . p = g.
        const Homomorphism& g = *record.counterexample_g;
        bool factorization_exists = false;
        for_each_hom(d.B, g.codomain(), [&](const Homomorphism& gbar) {
            bool equal = true;
            for (std::size_t a = 0; a < d.A->size(); ++a)
                if (gbar(d.p(a)) != g(a)) {
                    equal = false;
                    break;
                }
            if (equal) {
                factorization_exists = true;
                return false;
            }
            return true;
        });
        push_fact(result, "g-has-no-factorization", "true", bool_str(!factorization_exists));
    }

    return result;
}

}  // namespace sbp::examples
