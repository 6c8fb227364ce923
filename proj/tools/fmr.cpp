#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmr/canonical.hpp"
#include "fmr/finite_lab.hpp"
#include "fmr/formal_matrix.hpp"
#include "fmr/io.hpp"

using nlohmann::json;
using namespace fmr;

namespace {

// Exit codes: 0 success/true/Isomorphic, 1 false/NotIsomorphic/invalid
// table, 2 malformed input, 3 Inconclusive.
constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kBadInput = 2;
constexpr int kInconclusive = 3;

struct Output {
    bool as_json = false;
    json envelope;

    explicit Output(const std::string& command) {
        envelope = {{"command", command},
                    {"verdict", nullptr},
                    {"hypotheses", json::array()},
                    {"data", json::object()},
                    {"seed", nullptr}};
    }

    void verdict(const std::string& v) { envelope["verdict"] = v; }
    void seed(std::uint64_t s) { envelope["seed"] = s; }
    json& data() { return envelope["data"]; }

    void hypotheses(const std::vector<Hypothesis>& hs) {
        for (const auto& h : hs)
            envelope["hypotheses"].push_back({{"name", h.name}, {"pass", h.pass}});
    }

    void line(const std::string& text) {
        if (!as_json) std::cout << text << "\n";
    }

    void flush() {
        if (as_json) std::cout << envelope.dump(2) << "\n";
    }
};

std::string mat_to_string(const Mat& M) {
    std::ostringstream os;
    for (int i = 1; i <= M.n; ++i) {
        os << (i == 1 ? "[" : " ") << "[";
        for (int j = 1; j <= M.n; ++j) os << (j == 1 ? "" : " ") << M.at(i, j);
        os << "]" << (i == M.n ? "]" : "\n");
    }
    return os.str();
}

json mat_to_json(const Mat& M) {
    json rows = json::array();
    for (int i = 1; i <= M.n; ++i) {
        json row = json::array();
        for (int j = 1; j <= M.n; ++j) row.push_back(M.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Int pick_s(const SystemFile& a, const SystemFile& b, std::optional<Int> flag) {
    if (flag) return *flag;
    if (a.s && b.s) {
        if (*a.s != *b.s) throw ParseError("the two systems declare different s values");
        return *a.s;
    }
    if (a.s) return *a.s;
    if (b.s) return *b.s;
    // Infer from the tables; all-ones tables fall back to s = 1.
    auto va = a.sys.nonunit_values();
    auto vb = b.sys.nonunit_values();
    if (va.size() > 1 || vb.size() > 1) throw ParseError("systems are not binary");
    if (!va.empty() && !vb.empty() && va[0] != vb[0])
        throw ParseError("systems use different non-1 values");
    if (!va.empty()) return va[0];
    if (!vb.empty()) return vb[0];
    return 1;
}

int cmd_validate(const std::string& path, Output& out) {
    auto parsed = load_system_checked(path);
    if (std::holds_alternative<Violation>(parsed)) {
        const auto& v = std::get<Violation>(parsed);
        out.verdict("invalid");
        out.data()["violation"] = v.message();
        out.line("INVALID: " + v.message());
        out.flush();
        return kNo;
    }
    const auto& sf = std::get<SystemFile>(parsed);
    out.verdict("certified");
    out.data()["n"] = sf.sys.order();
    out.data()["ring"] = sf.sys.ring().describe();
    out.line("CERTIFIED: factor system of order " + std::to_string(sf.sys.order()) + " over " +
             sf.sys.ring().describe());
    auto rep = derived_relations_report(sf.sys);
    out.data()["derived_relations"] = rep.pass;
    if (!rep.pass) {
        out.line("WARNING: derived relations failed (" + rep.detail + ")");
        out.flush();
        return kNo;
    }
    out.flush();
    return kOk;
}

int cmd_canon(const std::string& path, std::optional<Int> s_flag, Output& out) {
    SystemFile sf = load_system(path);
    auto can = canonicalize(sf.sys, s_flag ? s_flag : sf.s);
    out.verdict("canonicalized");
    out.data()["tau"] = can.tau.images;
    out.data()["descriptor"] = {{"s", can.descriptor.s},
                                {"blocks", can.descriptor.block_sizes}};
    out.data()["canonical_S"] = mat_to_json(can.canonical_s);
    std::ostringstream tau;
    for (std::size_t i = 0; i < can.tau.images.size(); ++i)
        tau << (i ? " " : "") << can.tau.images[i];
    out.line("tau: " + tau.str());
    out.line("descriptor: " + can.descriptor.describe());
    out.line("canonical S:\n" + mat_to_string(can.canonical_s));
    out.flush();
    return kOk;
}

int cmd_iso(const std::string& pa, const std::string& pb, std::optional<Int> s_flag, Output& out) {
    SystemFile a = load_system(pa);
    SystemFile b = load_system(pb);
    if (!(a.sys.ring() == b.sys.ring())) throw ParseError("systems live over different rings");
    Int s = a.sys.ring().norm(pick_s(a, b, s_flag));
    IsoVerdict v = decide_isomorphism(a.sys.ring(), s, a.sys, b.sys);
    out.verdict(to_string(v.outcome));
    out.hypotheses(v.hypotheses);
    out.data()["note"] = v.note;
    if (v.witness) out.data()["witness"] = v.witness->images;
    std::string msg = to_string(v.outcome) + " (" + v.note + ")";
    out.line(msg);
    if (v.witness) {
        std::ostringstream w;
        for (std::size_t i = 0; i < v.witness->images.size(); ++i)
            w << (i ? " " : "") << v.witness->images[i];
        out.line("witness permutation: " + w.str());
    }
    out.flush();
    switch (v.outcome) {
        case IsoOutcome::Isomorphic: return kOk;
        case IsoOutcome::NotIsomorphic: return kNo;
        case IsoOutcome::Inconclusive: return kInconclusive;
    }
    return kBadInput;
}

int cmd_oracle_iso(const std::string& pa, const std::string& pb, std::size_t limit,
                   bool deterministic, Output& out) {
    SystemFile a = load_system(pa);
    SystemFile b = load_system(pb);
    auto Ta = materialize(make_ring(a.sys), limit);
    auto Tb = materialize(make_ring(b.sys), limit);
    OracleOptions opts;
    opts.limit = limit;
    opts.deterministic = deterministic;
    OracleResult r = oracle_isomorphic(Ta, Tb, opts);
    out.verdict(r.isomorphic ? "isomorphic" : "not-isomorphic");
    out.data()["size"] = Ta.size();
    out.data()["nodes_visited"] = r.nodes_visited;
    if (r.isomorphic) {
        out.line("ISOMORPHIC (" + std::to_string(Ta.size()) + " elements, witness verified, " +
                 std::to_string(r.nodes_visited) + " nodes)");
    } else {
        out.line("NOT ISOMORPHIC (search exhausted, " + std::to_string(r.nodes_visited) +
                 " nodes)");
    }
    out.flush();
    return r.isomorphic ? kOk : kNo;
}

int cmd_radical(const std::string& path, std::size_t limit, Output& out) {
    SystemFile sf = load_system(path);
    FormalMatrixRing K = make_ring(sf.sys);
    auto T = materialize(K, limit);
    auto P = prime_radical(T);
    auto Q = quotient(T, P);

    // Greedy additive generators of the ideal.
    std::vector<Elem> gens;
    std::vector<bool> in_span(T.size(), false);
    in_span[0] = true;
    std::vector<Elem> span{0};
    for (Elem e : P.members) {
        if (in_span[e]) continue;
        gens.push_back(e);
        std::size_t base = span.size();
        Elem mult = e;
        while (mult != 0) {
            for (std::size_t i = 0; i < base; ++i) {
                Elem y = T.add(span[i], mult);
                if (!in_span[y]) {
                    in_span[y] = true;
                    span.push_back(y);
                }
            }
            mult = T.add(mult, e);
        }
    }

    out.verdict("ok");
    out.data()["radical_size"] = P.size();
    out.data()["quotient_size"] = Q.size();
    json gj = json::array();
    for (Elem g : gens) gj.push_back(mat_to_json(decode_matrix(K, g)));
    out.data()["radical_generators"] = gj;
    out.line("|P(K)| = " + std::to_string(P.size()));
    out.line("|K/P(K)| = " + std::to_string(Q.size()));
    out.line("additive generators of P(K):");
    for (Elem g : gens) out.line(mat_to_string(decode_matrix(K, g)));
    out.flush();
    return kOk;
}

int cmd_decompose(const std::string& path, std::size_t limit, Output& out) {
    SystemFile sf = load_system(path);
    auto T = materialize(make_ring(sf.sys), limit);
    auto Q = quotient(T, prime_radical(T));
    auto factors = central_idempotent_decomposition(Q);
    std::vector<std::size_t> sizes;
    for (const auto& f : factors) sizes.push_back(f.size());
    std::sort(sizes.rbegin(), sizes.rend());
    out.verdict("ok");
    out.data()["quotient_size"] = Q.size();
    out.data()["factor_sizes"] = sizes;
    std::ostringstream os;
    for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? " " : "") << sizes[i];
    out.line("|K/P(K)| = " + std::to_string(Q.size()));
    out.line("factor sizes of K/P(K): " + os.str());
    out.flush();
    return kOk;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int cmd_gen(const std::string& type, int n, const std::string& ring_desc,
            const std::string& classes, const std::string& g_text, Int s,
            const std::string& out_path, Output& out) {
    BaseRing R = parse_ring_descriptor(ring_desc);
    std::optional<FactorSystem> sys;
    std::optional<Int> s_out;
    if (type == "trivial") {
        sys = trivial_system(R, n);
    } else if (type == "binary") {
        if (classes.empty()) throw ParseError("gen binary requires --classes");
        sys = binary_system(R, parse_int_list(classes), s);
        s_out = R.norm(s);
    } else if (type == "coboundary") {
        if (g_text.empty()) throw ParseError("gen coboundary requires --g (rows ; separated)");
        ExponentMatrix g(n);
        std::stringstream ss(g_text);
        std::string row;
        int i = 1;
        while (std::getline(ss, row, ';')) {
            auto vals = parse_int_list(row);
            if (int(vals.size()) != n || i > n) throw ParseError("--g must be n rows of n entries");
            for (int j = 1; j <= n; ++j) g.at(i, j) = vals[std::size_t(j) - 1];
            ++i;
        }
        if (i != n + 1) throw ParseError("--g must be n rows of n entries");
        sys = coboundary_system(R, g, s);
        s_out = R.norm(s);
    } else {
        throw ParseError("unknown generator type: " + type);
    }
    save_system(out_path, *sys, s_out);
    out.verdict("written");
    out.data()["path"] = out_path;
    out.line("wrote " + out_path);
    out.flush();
    return kOk;
}

int cmd_probe_assoc(const std::string& path, long samples, std::uint64_t seed, Output& out) {
    SystemFile sf = load_system(path);
    auto rep = associativity_probe(make_ring(sf.sys), samples, seed);
    out.seed(seed);
    out.verdict(rep.pass ? "associative" : "counterexample");
    out.data()["samples_run"] = rep.samples_run;
    if (rep.pass) {
        out.line("PASS: associativity held on the matrix-unit sweep and " +
                 std::to_string(rep.samples_run) + " random triples (seed " +
                 std::to_string(seed) + ")");
    } else {
        out.line("FAIL: associativity counterexample found (seed " + std::to_string(seed) + ")");
        for (const auto& M : *rep.counterexample) out.line(mat_to_string(M));
    }
    out.flush();
    return rep.pass ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"formal matrix rings M(n,R,Sigma): validation, canonical forms, "
                 "isomorphism decision, and a finite-ring oracle"};
    app.require_subcommand(1);

    std::string file_a, file_b, out_path, ring_desc, classes, g_text, gen_type;
    bool as_json = false;
    bool deterministic = false;
    std::size_t limit = 4096;
    long samples = 1000;
    std::uint64_t seed = 42;
    int n = 2;
    Int s_value = 0;
    bool s_given = false;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "JSON envelope output"); };

    auto* validate_cmd = app.add_subcommand("validate", "check the factor-system relations");
    validate_cmd->add_option("file", file_a)->required();
    add_json(validate_cmd);

    auto* canon_cmd = app.add_subcommand("canon", "canonical form of the principal factor matrix");
    canon_cmd->add_option("file", file_a)->required();
    canon_cmd->add_option("--s", s_value, "the binary element s")->each([&](const std::string&) {
        s_given = true;
    });
    add_json(canon_cmd);

    auto* iso_cmd = app.add_subcommand("iso", "canonical-form isomorphism decision");
    iso_cmd->add_option("a", file_a)->required();
    iso_cmd->add_option("b", file_b)->required();
    iso_cmd->add_option("--s", s_value)->each([&](const std::string&) { s_given = true; });
    add_json(iso_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle-iso", "brute-force finite-ring isomorphism");
    oracle_cmd->add_option("a", file_a)->required();
    oracle_cmd->add_option("b", file_b)->required();
    oracle_cmd->add_option("--limit", limit, "max ring size to materialize");
    oracle_cmd->add_flag("--deterministic", deterministic,
                         "single-branch search with a fixed candidate order (default)");
    add_json(oracle_cmd);

    auto* radical_cmd = app.add_subcommand("radical", "prime radical of the materialized ring");
    radical_cmd->add_option("file", file_a)->required();
    radical_cmd->add_option("--limit", limit);
    add_json(radical_cmd);

    auto* decompose_cmd =
        app.add_subcommand("decompose", "central idempotent factors of K/P(K)");
    decompose_cmd->add_option("file", file_a)->required();
    decompose_cmd->add_option("--limit", limit);
    add_json(decompose_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "generate a factor-system file");
    gen_cmd->add_option("type", gen_type, "trivial | binary | coboundary")->required();
    gen_cmd->add_option("--n", n)->required();
    gen_cmd->add_option("--ring", ring_desc, "mod:M or int")->required();
    gen_cmd->add_option("--classes", classes, "comma-separated class labels (binary)");
    gen_cmd->add_option("--g", g_text, "exponent matrix rows, ; separated (coboundary)");
    gen_cmd->add_option("--s", s_value);
    gen_cmd->add_option("-o,--out", out_path)->required();
    add_json(gen_cmd);

    auto* probe_cmd = app.add_subcommand("probe", "randomized law probes");
    std::string probe_kind;
    probe_cmd->add_option("kind", probe_kind, "assoc")->required();
    probe_cmd->add_option("--file", file_a)->required();
    probe_cmd->add_option("--samples", samples);
    probe_cmd->add_option("--seed", seed);
    add_json(probe_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<Int> s_flag = s_given ? std::optional<Int>(s_value) : std::nullopt;
        if (validate_cmd->parsed()) {
            Output out("validate");
            out.as_json = as_json;
            return cmd_validate(file_a, out);
        }
        if (canon_cmd->parsed()) {
            Output out("canon");
            out.as_json = as_json;
            return cmd_canon(file_a, s_flag, out);
        }
        if (iso_cmd->parsed()) {
            Output out("iso");
            out.as_json = as_json;
            return cmd_iso(file_a, file_b, s_flag, out);
        }
        if (oracle_cmd->parsed()) {
            Output out("oracle-iso");
            out.as_json = as_json;
            return cmd_oracle_iso(file_a, file_b, limit, deterministic, out);
        }
        if (radical_cmd->parsed()) {
            Output out("radical");
            out.as_json = as_json;
            return cmd_radical(file_a, limit, out);
        }
        if (decompose_cmd->parsed()) {
            Output out("decompose");
            out.as_json = as_json;
            return cmd_decompose(file_a, limit, out);
        }
        if (gen_cmd->parsed()) {
            Output out("gen");
            out.as_json = as_json;
            return cmd_gen(gen_type, n, ring_desc, classes, g_text, s_value, out_path, out);
        }
        if (probe_cmd->parsed()) {
            if (probe_kind != "assoc") throw ParseError("unknown probe kind: " + probe_kind);
            Output out("probe");
            out.as_json = as_json;
            return cmd_probe_assoc(file_a, samples, seed, out);
        }
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
