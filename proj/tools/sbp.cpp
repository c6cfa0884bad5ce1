// sbp — finite-monoid semi-biproduct toolbox.
//
// Exit codes: 0 success / all checks passed, 1 verification failure
// (reports carry witnesses), 2 structural or input error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sbp/equivalence.hpp"
#include "sbp/examples.hpp"
#include "sbp/json_io.hpp"
#include "sbp/search.hpp"

namespace {

using sbp::json_io::Json;

struct GlobalOptions {
    bool json = false;
    std::size_t max_size = 64;
    unsigned jobs = 1;
    bool exhaustive = false;
};

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sbp::Error("cannot open file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Stable-order report skeleton; command-specific payload is appended
/// before timing so identical inputs produce identical documents apart
/// from the timing field.
class Report {
public:
    Report(std::string command, const std::vector<std::pair<std::string, std::string>>& inputs) {
        json_["command"] = std::move(command);
        Json in = Json::array();
        for (const auto& [path, bytes] : inputs)
            in.push_back(Json{{"path", path}, {"digest", digest_hex(bytes)}});
        json_["inputs"] = std::move(in);
        start_ = std::chrono::steady_clock::now();
    }

    Json& payload() { return json_; }

    void emit(bool as_json) {
        json_["timing_ms"] = static_cast<std::int64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start_)
                .count());
        if (as_json) std::cout << json_.dump(2) << "\n";
    }

private:
    Json json_;
    std::chrono::steady_clock::time_point start_;
};

Json failures_to_json(const std::vector<sbp::Failure>& failures) {
    Json arr = Json::array();
    for (const auto& f : failures) {
        Json j;
        j["law"] = f.law;
        j["witness"] = f.witness;
        j["lhs"] = f.lhs;
        j["rhs"] = f.rhs;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json law_report_to_json(const sbp::LawReport& report) {
    Json arr = Json::array();
    for (const auto& law : report.laws) {
        Json j;
        j["law"] = law.law;
        j["ok"] = law.ok();
        j["failures"] = failures_to_json(law.failures);
        arr.push_back(std::move(j));
    }
    return arr;
}

void print_law_report(const sbp::LawReport& report) {
    for (const auto& law : report.laws) {
        if (law.ok()) {
            std::cout << "  ok    " << law.law << "\n";
        } else {
            const auto& f = law.failures.front();
            std::cout << "  FAIL  " << law.law << "  witness (";
            for (std::size_t i = 0; i < f.witness.size(); ++i)
                std::cout << (i ? "," : "") << f.witness[i];
            std::cout << ")  lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
        }
    }
}

sbp::SemiBiproduct load_diagram(const std::string& path, const std::string& monoids_path) {
    sbp::json_io::MonoidContext ctx;
    if (!monoids_path.empty()) {
        Json bundle = sbp::json_io::parse_file(monoids_path);
        if (!bundle.is_object() || !bundle.contains("monoids"))
            throw sbp::Error("monoid bundle must be an object with a \"monoids\" array");
        for (const auto& mj : bundle.at("monoids"))
            ctx.add(sbp::json_io::monoid_from_json(mj));
    }
    return sbp::json_io::diagram_from_json(sbp::json_io::parse_file(path), ctx);
}

void write_output(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw sbp::Error("cannot write file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

int cmd_validate(const GlobalOptions& g, const std::string& path) {
    Report report("validate", {{path, slurp(path)}});
    auto data = sbp::json_io::monoid_data_from_json(sbp::json_io::parse_file(path));
    auto validation = sbp::validate_monoid(data);
    report.payload()["name"] = data.name;
    report.payload()["ok"] = validation.ok();
    report.payload()["failures"] = failures_to_json(validation.failures);
    if (!g.json) {
        std::cout << "validate " << data.name << ": " << (validation.ok() ? "ok" : "FAIL")
                  << "\n";
        for (const auto& f : validation.failures) {
            std::cout << "  " << f.law << " (";
            for (std::size_t i = 0; i < f.witness.size(); ++i)
                std::cout << (i ? "," : "") << f.witness[i];
            std::cout << ")";
            if (!f.rhs.empty()) std::cout << "  " << f.lhs << " vs " << f.rhs;
            std::cout << "\n";
        }
    }
    report.emit(g.json);
    return validation.ok() ? 0 : 1;
}

int cmd_verify(const GlobalOptions& g, const std::string& path,
               const std::string& monoids_path) {
    Report report("verify", {{path, slurp(path)}});
    auto d = load_diagram(path, monoids_path);
    auto verification = sbp::verify(d, g.exhaustive);
    report.payload()["ok"] = verification.ok();
    report.payload()["axioms"] = law_report_to_json(verification);
    if (!g.json) {
        std::cout << "verify: " << (verification.ok() ? "ok" : "FAIL") << "\n";
        print_law_report(verification);
    }
    report.emit(g.json);
    return verification.ok() ? 0 : 1;
}

int cmd_schreier(const GlobalOptions& g, const std::string& path,
                 const std::string& monoids_path) {
    Report report("schreier", {{path, slurp(path)}});
    auto d = load_diagram(path, monoids_path);
    auto verification = sbp::verify(d);
    if (!verification.ok()) {
        report.payload()["ok"] = false;
        report.payload()["axioms"] = law_report_to_json(verification);
        if (!g.json) {
            std::cout << "schreier: diagram does not verify\n";
            print_law_report(verification);
        }
        report.emit(g.json);
        return 1;
    }
    const bool schreier = sbp::is_schreier(d);
    report.payload()["ok"] = true;
    report.payload()["schreier"] = schreier;
    if (!g.json) std::cout << "schreier: " << (schreier ? "true" : "false") << "\n";
    report.emit(g.json);
    return 0;
}

int cmd_cokernel(const GlobalOptions& g, const std::string& path,
                 const std::string& monoids_path) {
    Report report("cokernel", {{path, slurp(path)}});
    auto d = load_diagram(path, monoids_path);
    const bool ok = sbp::check_cokernel(d);
    report.payload()["cokernel"] = ok;
    if (!g.json) std::cout << "cokernel: " << (ok ? "true" : "false") << "\n";
    report.emit(g.json);
    return 0;
}

int cmd_pullback(const GlobalOptions& g, const std::string& diagram_path,
                 const std::string& h_path, const std::string& out_path) {
    Report report("pullback", {{diagram_path, slurp(diagram_path)}, {h_path, slurp(h_path)}});
    auto d = load_diagram(diagram_path, "");
    sbp::json_io::MonoidContext ctx;
    ctx.add(d.B);
    auto h = sbp::json_io::hom_from_json(sbp::json_io::parse_file(h_path), ctx);
    auto result = sbp::pullback(d, h);
    report.payload()["carrier_size"] = result.A->size();
    report.payload()["diagram"] = sbp::json_io::diagram_to_json(result);
    if (!out_path.empty()) write_output(sbp::json_io::diagram_to_json(result), out_path);
    if (!g.json)
        std::cout << "pullback: verified, carrier size " << result.A->size() << "\n";
    report.emit(g.json);
    return 0;
}

int cmd_extract(const GlobalOptions& g, const std::string& path, const std::string& out_path) {
    auto d = load_diagram(path, "");
    auto pa = sbp::extract(d);
    write_output(sbp::json_io::pa_to_json(pa), out_path);
    if (!g.json && !out_path.empty()) std::cout << "extract: ok\n";
    return 0;
}

int cmd_synthesize(const GlobalOptions& g, const std::string& path,
                   const std::string& out_path) {
    auto pa = sbp::json_io::pa_from_json(sbp::json_io::parse_file(path));
    auto d = sbp::synthesize(pa);
    write_output(sbp::json_io::diagram_to_json(d), out_path);
    if (!g.json && !out_path.empty())
        std::cout << "synthesize: ok, carrier size " << d.A->size() << "\n";
    return 0;
}

int cmd_pa_verify(const GlobalOptions& g, const std::string& path) {
    Report report("pa-verify", {{path, slurp(path)}});
    auto pa = sbp::json_io::pa_from_json(sbp::json_io::parse_file(path));
    sbp::PaVerifyOptions opts;
    opts.exhaustive_witnesses = g.exhaustive;
    opts.jobs = g.jobs;
    auto verification = sbp::verify_pseudo_action(pa, opts);
    report.payload()["ok"] = verification.ok();
    report.payload()["laws"] = law_report_to_json(verification);
    if (!g.json) {
        std::cout << "pa-verify: " << (verification.ok() ? "ok" : "FAIL") << "\n";
        print_law_report(verification);
    }
    report.emit(g.json);
    return verification.ok() ? 0 : 1;
}

int cmd_roundtrip(const GlobalOptions& g, const std::string& path) {
    Report report("roundtrip", {{path, slurp(path)}});
    Json j = sbp::json_io::parse_file(path);
    if (sbp::json_io::looks_like_pseudo_action(j)) {
        auto pa = sbp::json_io::pa_from_json(j);
        const bool ok = sbp::roundtrip_action(pa);
        report.payload()["kind"] = "pseudo-action";
        report.payload()["roundtrip"] = ok;
        if (!g.json) std::cout << "roundtrip (pseudo-action): " << (ok ? "ok" : "FAIL") << "\n";
        report.emit(g.json);
        return ok ? 0 : 1;
    }
    auto d = sbp::json_io::diagram_from_json(j, {});
    auto result = sbp::roundtrip_diagram(d);
    report.payload()["kind"] = "diagram";
    report.payload()["roundtrip"] = result.ok();
    report.payload()["carrier_size"] = result.synthetic.A->size();
    report.payload()["failures"] = failures_to_json(result.report.failures);
    if (!g.json)
        std::cout << "roundtrip (diagram): " << (result.ok() ? "ok" : "FAIL")
                  << ", synthetic carrier size " << result.synthetic.A->size() << "\n";
    report.emit(g.json);
    return result.ok() ? 0 : 1;
}

sbp::RelationSeed load_seed(const std::string& x_path, const std::string& b_path,
                            const std::string& relation_path) {
    auto X = sbp::json_io::monoid_from_json(sbp::json_io::parse_file(x_path));
    auto B = sbp::json_io::monoid_from_json(sbp::json_io::parse_file(b_path));
    Json j = sbp::json_io::parse_file(relation_path);
    if (!j.is_object() || !j.contains("R") || !j.contains("u") || !j.contains("q"))
        throw sbp::Error("relation file must carry keys \"R\", \"u\", \"q\"");

    std::vector<std::pair<std::size_t, std::size_t>> relation;
    for (const auto& pair : j.at("R")) {
        if (!pair.is_array() || pair.size() != 2)
            throw sbp::Error("relation: R entries must be [x, b] pairs");
        auto x = X->index_of(pair.at(0).get<std::string>());
        auto b = B->index_of(pair.at(1).get<std::string>());
        if (!x || !b) throw sbp::Error("relation: unknown element in R");
        relation.emplace_back(*x, *b);
    }
    std::sort(relation.begin(), relation.end());

    std::vector<std::size_t> u(B->size(), X->size());
    for (const auto& [bn, xn] : j.at("u").items()) {
        auto b = B->index_of(bn);
        auto x = X->index_of(xn.get<std::string>());
        if (!b || !x) throw sbp::Error("relation: unknown element in u");
        u[*b] = *x;
    }
    for (std::size_t b = 0; b < B->size(); ++b)
        if (u[b] == X->size()) throw sbp::Error("relation: u is not total");

    std::vector<std::size_t> q(relation.size(), X->size());
    for (const auto& [key, xn] : j.at("q").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw sbp::Error("relation: q keys must be \"x,b\"");
        auto x = X->index_of(key.substr(0, comma));
        auto b = B->index_of(key.substr(comma + 1));
        if (!x || !b) throw sbp::Error("relation: unknown element in q key");
        auto it = std::lower_bound(relation.begin(), relation.end(), std::make_pair(*x, *b));
        if (it == relation.end() || *it != std::make_pair(*x, *b))
            throw sbp::Error("relation: q assigns a pair outside R");
        auto xv = X->index_of(xn.get<std::string>());
        if (!xv) throw sbp::Error("relation: unknown q value");
        q[static_cast<std::size_t>(it - relation.begin())] = *xv;
    }
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] == X->size()) throw sbp::Error("relation: q is not total on R");

    return sbp::RelationSeed::create(X, B, std::move(relation), std::move(u), std::move(q));
}

int cmd_construct(const GlobalOptions& g, const std::string& x_path, const std::string& b_path,
                  const std::string& relation_path) {
    Report report("construct", {{x_path, slurp(x_path)},
                                {b_path, slurp(b_path)},
                                {relation_path, slurp(relation_path)}});
    auto result = sbp::build_from_relation(load_seed(x_path, b_path, relation_path));
    report.payload()["candidate_tables"] = result.candidate_tables;
    report.payload()["accepted"] = result.accepted.size();
    Json rejected = Json::array();
    for (const auto& r : result.rejected)
        rejected.push_back(Json{{"reason", sbp::to_string(r.reason)}, {"detail", r.detail}});
    report.payload()["rejected"] = std::move(rejected);
    Json diagrams = Json::array();
    for (const auto& d : result.accepted) diagrams.push_back(sbp::json_io::diagram_to_json(d));
    report.payload()["diagrams"] = std::move(diagrams);
    if (!g.json) {
        std::cout << "construct: " << result.candidate_tables << " candidate table(s), "
                  << result.accepted.size() << " accepted, " << result.rejected.size()
                  << " rejected\n";
        for (const auto& r : result.rejected)
            std::cout << "  rejected (" << sbp::to_string(r.reason) << "): " << r.detail
                      << "\n";
    }
    report.emit(g.json);
    return 0;
}

int cmd_enumerate(const GlobalOptions& g, const std::string& x_path, const std::string& b_path,
                  std::size_t budget) {
    Report report("enumerate", {{x_path, slurp(x_path)}, {b_path, slurp(b_path)}});
    auto X = sbp::json_io::monoid_from_json(sbp::json_io::parse_file(x_path));
    auto B = sbp::json_io::monoid_from_json(sbp::json_io::parse_file(b_path));
    sbp::EnumerationOptions opts;
    if (budget) opts.max_results = budget;
    auto result = sbp::enumerate_semibiproducts(X, B, opts);
    report.payload()["count"] = result.diagrams.size();
    report.payload()["complete"] = result.complete;
    report.payload()["seeds_examined"] = result.seeds_examined;
    Json diagrams = Json::array();
    for (const auto& d : result.diagrams) diagrams.push_back(sbp::json_io::diagram_to_json(d));
    report.payload()["diagrams"] = std::move(diagrams);
    if (!g.json) {
        std::cout << "enumerate: " << result.diagrams.size() << " diagram(s)"
                  << (result.complete ? "" : " (partial)") << " from " << result.seeds_examined
                  << " seed(s)\n";
        for (const auto& d : result.diagrams)
            std::cout << "  carrier " << d.A->name() << " of size " << d.A->size()
                      << (sbp::is_schreier(d) ? " (schreier)" : "") << "\n";
    }
    report.emit(g.json);
    return 0;
}

int cmd_complete(const GlobalOptions& g, const std::string& bundle_path) {
    Report report("complete", {{bundle_path, slurp(bundle_path)}});
    Json j = sbp::json_io::parse_file(bundle_path);
    if (!j.is_object() || !j.contains("monoids") || !j.contains("X") || !j.contains("A") ||
        !j.contains("B") || !j.contains("k") || !j.contains("p"))
        throw sbp::Error("extension bundle must carry \"monoids\", \"X\", \"A\", \"B\", "
                         "\"k\", \"p\"");
    sbp::json_io::MonoidContext ctx;
    for (const auto& mj : j.at("monoids")) ctx.add(sbp::json_io::monoid_from_json(mj));
    auto X = ctx.resolve(j.at("X").get<std::string>());
    auto A = ctx.resolve(j.at("A").get<std::string>());
    auto B = ctx.resolve(j.at("B").get<std::string>());
    auto k = sbp::json_io::hom_from_json(j.at("k"), ctx);
    auto p = sbp::json_io::hom_from_json(j.at("p"), ctx);

    auto pairs = sbp::complete_extension(X, A, B, k, p);
    report.payload()["count"] = pairs.size();
    Json out = Json::array();
    for (const auto& [q, s] : pairs)
        out.push_back(Json{{"q", sbp::json_io::map_to_json(q, false)},
                           {"s", sbp::json_io::map_to_json(s, false)}});
    report.payload()["completions"] = std::move(out);
    if (!g.json)
        std::cout << "complete: " << pairs.size() << " completion(s) found\n";
    report.emit(g.json);
    return 0;
}

int cmd_nat_demo(const GlobalOptions& g, std::int64_t bound) {
    Report report("nat-demo", {});
    auto demo = sbp::nat_order_demo(bound);
    report.payload()["bound"] = demo.bound;
    report.payload()["ok"] = demo.ok();
    report.payload()["pairs_checked"] = demo.pairs_checked;
    report.payload()["note"] = demo.note;
    Json checks = Json::array();
    for (const auto& c : demo.checks)
        checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
    report.payload()["checks"] = std::move(checks);
    if (!g.json) {
        std::cout << "nat-demo (bound " << demo.bound << "): " << (demo.ok() ? "ok" : "FAIL")
                  << " over " << demo.pairs_checked << " pairs, " << demo.note << "\n";
        for (const auto& c : demo.checks)
            std::cout << "  " << (c.ok ? "ok    " : "FAIL  ") << c.name
                      << (c.witness.empty() ? "" : "  witness " + c.witness) << "\n";
    }
    report.emit(g.json);
    return demo.ok() ? 0 : 1;
}

Json example_result_to_json(const sbp::examples::ExampleRunResult& run) {
    Json j;
    j["name"] = run.name;
    j["verified"] = run.verify_report.ok();
    j["axioms"] = law_report_to_json(run.verify_report);
    Json facts = Json::array();
    for (const auto& f : run.facts)
        facts.push_back(Json{{"name", f.name},
                             {"expected", f.expected},
                             {"actual", f.actual},
                             {"matched", f.matched}});
    j["facts"] = std::move(facts);
    j["all_matched"] = run.all_matched();
    return j;
}

int cmd_examples(const GlobalOptions& g, const std::string& action, const std::string& name,
                 bool run_all) {
    if (action == "list") {
        Report report("examples-list", {});
        Json names = Json::array();
        for (const auto& record : sbp::examples::examples_corpus()) {
            names.push_back(record.name);
            if (!g.json) std::cout << record.name << "\n";
        }
        report.payload()["examples"] = std::move(names);
        report.emit(g.json);
        return 0;
    }
    if (action != "run") throw sbp::Error("examples: expected \"list\" or \"run\"");

    if (run_all) {
        Report report("examples-run-all", {});
        Json runs = Json::array();
        bool all_matched = true;
        for (const auto& record : sbp::examples::examples_corpus()) {
            auto run = sbp::examples::run_example(record);
            all_matched = all_matched && run.all_matched();
            if (!g.json)
                std::cout << record.name << ": "
                          << (run.all_matched() ? "expectations matched" : "MISMATCH") << "\n";
            runs.push_back(example_result_to_json(run));
        }
        report.payload()["runs"] = std::move(runs);
        report.payload()["all_matched"] = all_matched;
        if (!g.json)
            std::cout << (all_matched ? "all expectations reproduced"
                                      : "EXPECTATION DRIFT DETECTED")
                      << "\n";
        report.emit(g.json);
        return all_matched ? 0 : 1;
    }

    const auto* record = sbp::examples::find_example(name);
    if (!record) throw sbp::Error("unknown example \"" + name + "\"");
    Report report("examples-run", {});
    auto run = sbp::examples::run_example(*record);
    report.payload()["result"] = example_result_to_json(run);
    if (!g.json) {
        std::cout << record->name << ": " << (run.verify_report.ok() ? "verified" : "FAIL")
                  << "\n";
        print_law_report(run.verify_report);
        for (const auto& f : run.facts)
            std::cout << "  " << (f.matched ? "ok    " : "DRIFT ") << f.name << " = "
                      << f.actual << (f.matched ? "" : " (expected " + f.expected + ")")
                      << "\n";
    }
    report.emit(g.json);
    if (!run.all_matched()) return 1;
    return run.verify_report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-monoid semi-biproduct toolbox"};
    app.require_subcommand(1);

    GlobalOptions g;
    if (const char* env = std::getenv("SBP_MAX_SIZE"))
        g.max_size = std::strtoull(env, nullptr, 10);
    app.add_flag("--json", g.json, "emit a JSON report instead of text");
    app.add_option("--max-size", g.max_size, "largest accepted monoid size");
    app.add_option("--jobs", g.jobs, "worker threads for exhaustive checks");
    app.add_flag("--exhaustive-witnesses", g.exhaustive,
                 "collect every witness instead of the first");

    std::string path, monoids_path, second_path, out_path;
    std::string x_path, b_path, relation_path, bundle_path;
    std::size_t budget = 0;
    std::int64_t bound = 20;
    std::string examples_action, example_name;
    bool run_all = false;

    auto* validate = app.add_subcommand("validate", "check the monoid laws on a table file");
    validate->add_option("file", path)->required();

    auto* verify = app.add_subcommand("verify", "check the five diagram identities");
    verify->add_option("file", path)->required();
    verify->add_option("--monoids", monoids_path, "sibling bundle with monoid tables");

    auto* schreier = app.add_subcommand("schreier", "decide whether the correction is trivial");
    schreier->add_option("file", path)->required();
    schreier->add_option("--monoids", monoids_path);

    auto* pullback = app.add_subcommand("pullback", "pull the diagram back along h: C -> B");
    pullback->add_option("file", path)->required();
    pullback->add_option("hom", second_path, "homomorphism into B")->required();
    pullback->add_option("-o,--output", out_path);

    auto* cokernel = app.add_subcommand("cokernel", "decide whether p is the cokernel of k");
    cokernel->add_option("file", path)->required();
    cokernel->add_option("--monoids", monoids_path);

    auto* extract = app.add_subcommand("extract", "pseudo-action of a verified diagram");
    extract->add_option("file", path)->required();
    extract->add_option("-o,--output", out_path);

    auto* synthesize = app.add_subcommand("synthesize", "synthetic diagram of a pseudo-action");
    synthesize->add_option("file", path)->required();
    synthesize->add_option("-o,--output", out_path);

    auto* roundtrip = app.add_subcommand("roundtrip", "certify the equivalence round trip");
    roundtrip->add_option("file", path)->required();

    auto* pa_verify = app.add_subcommand("pa-verify", "check the pseudo-action laws");
    pa_verify->add_option("file", path)->required();

    auto* construct = app.add_subcommand("construct", "search monoid structures on a relation");
    construct->add_option("--x", x_path)->required();
    construct->add_option("--b", b_path)->required();
    construct->add_option("--relation", relation_path)->required();

    auto* enumerate = app.add_subcommand("enumerate", "enumerate semi-biproducts over X, B");
    enumerate->add_option("--x", x_path)->required();
    enumerate->add_option("--b", b_path)->required();
    enumerate->add_option("--budget", budget, "stop after this many diagrams");

    auto* complete = app.add_subcommand("complete", "search (q,s) completing an extension");
    complete->add_option("--bundle", bundle_path)->required();

    auto* nat_demo = app.add_subcommand("nat-demo", "bounded order-relation demo");
    nat_demo->add_option("--bound", bound)->check(CLI::PositiveNumber);

    auto* examples = app.add_subcommand("examples", "built-in corpus");
    examples->add_option("action", examples_action, "list | run")->required();
    examples->add_option("name", example_name);
    examples->add_flag("--all", run_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        sbp::config::set_max_monoid_size(g.max_size);
        if (validate->parsed()) return cmd_validate(g, path);
        if (verify->parsed()) return cmd_verify(g, path, monoids_path);
        if (schreier->parsed()) return cmd_schreier(g, path, monoids_path);
        if (pullback->parsed()) return cmd_pullback(g, path, second_path, out_path);
        if (cokernel->parsed()) return cmd_cokernel(g, path, monoids_path);
        if (extract->parsed()) return cmd_extract(g, path, out_path);
        if (synthesize->parsed()) return cmd_synthesize(g, path, out_path);
        if (roundtrip->parsed()) return cmd_roundtrip(g, path);
        if (pa_verify->parsed()) return cmd_pa_verify(g, path);
        if (construct->parsed()) return cmd_construct(g, x_path, b_path, relation_path);
        if (enumerate->parsed()) return cmd_enumerate(g, x_path, b_path, budget);
        if (complete->parsed()) return cmd_complete(g, bundle_path);
        if (nat_demo->parsed()) return cmd_nat_demo(g, bound);
        if (examples->parsed()) {
            if (examples_action == "run" && !run_all && example_name.empty())
                throw sbp::Error("examples run: missing example name (or --all)");
            return cmd_examples(g, examples_action, example_name, run_all);
        }
    } catch (const sbp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
