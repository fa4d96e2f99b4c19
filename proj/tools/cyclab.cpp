// Command-line front end: check / grow / oracle / gen / scan.
//
// Exit codes: 0 success, 1 usage or parse error, 2 a proved property was
// violated, 3 the instance exceeded the exact-solver cap (inconclusive).

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "cyclab/conditions.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/families.hpp"
#include "cyclab/grower.hpp"
#include "cyclab/oracle.hpp"
#include "cyclab/verifier.hpp"

using namespace cyclab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInconclusive = 3;

DigraphFile load(const std::string& path) {
    if (path == "-") return read_digraph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_digraph(in);
}

// "-" means stdout.
class OutFile {
public:
    explicit OutFile(const std::string& path) {
        if (path != "-" && !path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Bitset pick_y(const DigraphFile& f, const std::vector<int>& override_set) {
    if (!override_set.empty()) {
        Bitset y(f.digraph.order());
        for (int v : override_set) {
            if (v < 0 || v >= f.digraph.order())
                throw std::runtime_error("set vertex out of range: " + std::to_string(v));
            y.set(v);
        }
        return y;
    }
    if (f.y) return *f.y;
    return Bitset::full(f.digraph.order());
}

int run_check(const std::string& file, const std::vector<int>& set_override) {
    DigraphFile f = load(file);
    const Digraph& d = f.digraph;
    Bitset y = pick_y(f, set_override);

    std::cout << "order " << d.order() << "\narcs " << d.arc_count() << "\n";
    std::cout << "Y";
    for (int v : y.members()) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "strong " << (is_strong(d) ? "yes" : "no") << "\n";
    if (d.order() >= 3) std::cout << "2-strong " << (is_2_strong(d) ? "yes" : "no") << "\n";
    std::cout << "Y-strong " << (is_S_strong(d, y) ? "yes" : "no") << "\n";

    A0Report a0 = check_A0(d, y);
    std::cout << "A0 " << (a0.holds ? "holds" : "fails") << " violations "
              << a0.violation_count << "\n";
    for (const auto& v : a0.violations) {
        std::cout << "A0-violation x=" << v.x << " y=" << v.y << " z=" << v.z << " missing-arc "
                  << (v.branch == A0Violation::Branch::NoArcXZ ? "xz" : "zx") << " lhs=" << v.lhs
                  << " rhs=" << v.rhs << "\n";
    }

    MeynielReport mr = check_meyniel_set(d, y);
    std::cout << "meyniel " << (mr.holds ? "holds" : "fails") << " violations "
              << mr.violation_count << "\n";
    for (const auto& v : mr.violations)
        std::cout << "meyniel-violation x=" << v.x << " y=" << v.y << " sum=" << v.degree_sum
                  << "\n";
    return kExitOk;
}

int run_grow(const std::string& file, const std::vector<int>& set_override, int budget,
             int oracle_cap) {
    DigraphFile f = load(file);
    Bitset y = pick_y(f, set_override);
    Certificate cert = grow(f.digraph, y, budget, oracle_cap);
    write_certificate(std::cout, cert);
    for (const auto& t : cert.trace)
        if (t.rfind("inconclusive", 0) == 0) return kExitInconclusive;
    if (cert.status == GrowStatus::TheoremViolation) return kExitViolation;
    return kExitOk;
}

int run_oracle(const std::string& file, const std::vector<int>& set_override, int cap) {
    DigraphFile f = load(file);
    Bitset y = pick_y(f, set_override);
    OracleResult res = max_Y_cycle(f.digraph, y, cap);
    std::cout << "max_Y_length " << res.max_y_length << "\n";
    if (res.best_cycle) {
        std::cout << "cycle";
        for (int v : res.best_cycle->vertices()) std::cout << " " << v;
        std::cout << "\n";
    } else {
        std::cout << "acyclic\n";
    }
    std::cout << "cyclable " << (res.max_y_length == y.count() ? "yes" : "no") << "\n";
    return kExitOk;
}

int run_gen(const std::string& family, const std::vector<int>& params,
            const std::string& variant, const std::string& out_path) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw CLI::ValidationError("gen", family + " takes " + std::to_string(k) +
                                                  " integer parameter(s)");
    };
    std::optional<Digraph> d;
    std::optional<Bitset> y;
    if (family == "remark1") {
        need(2);
        auto inst = gen_remark1(params[0], params[1]);
        d = std::move(inst.digraph);
        y = std::move(inst.y);
    } else if (family == "h_mm") {
        need(1);
        d = gen_h_mm(params[0]);
    } else if (family == "h_m_m1_1") {
        need(1);
        HubOrientation o = HubOrientation::In;
        if (variant == "out")
            o = HubOrientation::Out;
        else if (!variant.empty() && variant != "in")
            throw CLI::ValidationError("gen", "h_m_m1_1 variant must be in|out");
        d = gen_h_m_m1_1(params[0], o);
    } else if (family == "h_2m") {
        need(1);
        bool both = (variant == "both");
        if (!variant.empty() && variant != "both" && variant != "single")
            throw CLI::ValidationError("gen", "h_2m variant must be single|both");
        d = gen_h_2m(params[0], both);
    } else if (family == "d6") {
        need(0);
        d = gen_d6();
    } else if (family == "d6_prime") {
        need(0);
        d = gen_d6_prime();
    } else if (family == "k_star") {
        need(1);
        d = gen_k_star(params[0]);
    } else if (family == "k_star_bipartite") {
        need(2);
        d = gen_k_star_bipartite(params[0], params[1]);
    } else if (family == "two_cliques_plus_one") {
        need(1);
        d = gen_two_cliques_plus_one(params[0]);
    } else {
        throw CLI::ValidationError("gen", "unknown family " + family);
    }

    std::ostringstream header;
    header << "family: " << family;
    for (int p : params) header << " " << p;
    if (!variant.empty()) header << " " << variant;

    OutFile out(out_path);
    write_digraph(out.stream(), *d, y ? &*y : nullptr, {header.str()});
    return kExitOk;
}

int run_scan(const std::string& property, int n, const std::string& policy_str, long long trials,
             std::uint64_t seed, bool seed_given, double arc_prob, int workers, bool strict,
             const std::string& out_path) {
    if (strict && trials > 0 && !seed_given)
        throw CLI::ValidationError("scan", "--strict requires an explicit --seed");

    YPolicy policy = YPolicy::parse(policy_str);
    ScanReport rep;
    if (property.rfind("conjecture-", 0) == 0) {
        if (trials <= 0) throw CLI::ValidationError("scan", "conjecture scans need --trials");
        rep = conjecture_scan(n, property.substr(11), trials, seed, workers);
    } else if (trials > 0) {
        rep = random_scan(n, trials, seed, property, policy, arc_prob, workers);
    } else {
        rep = exhaustive_scan(n, property, policy, seed, workers);
    }

    OutFile out(out_path);
    write_scan_report(out.stream(), rep);
    if (!rep.violations.empty() && !rep.property_is_open) return kExitViolation;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclab: cycles through prescribed vertex sets in digraphs"};
    app.require_subcommand(1);
    bool strict = false;
    app.add_flag("--strict", strict, "CI mode: randomized commands need an explicit --seed");

    std::string file = "-";
    std::vector<int> set_override;

    auto* check = app.add_subcommand("check", "degree-condition and connectivity reports");
    check->add_option("file", file, "digraph file, - for stdin");
    check->add_option("--set", set_override, "override the Y set");

    int budget = 0, oracle_cap = kDefaultOracleCap;
    auto* grow_cmd = app.add_subcommand("grow", "build a cycle through Y, certificate out");
    grow_cmd->add_option("file", file, "digraph file, - for stdin");
    grow_cmd->add_option("--set", set_override, "override the Y set");
    grow_cmd->add_option("--budget", budget, "improvement iterations (0 = 10n)");
    grow_cmd->add_option("--oracle-cap", oracle_cap, "max order for the exact fallback");

    auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum Y-length cycle");
    oracle_cmd->add_option("file", file, "digraph file, - for stdin");
    oracle_cmd->add_option("--set", set_override, "override the Y set");
    oracle_cmd->add_option("--cap", oracle_cap, "max order accepted");

    std::string family, variant, out_path = "-";
    std::vector<int> params;
    auto* gen = app.add_subcommand("gen", "emit a family instance in digraph format");
    gen->add_option("family", family,
                    "remark1 n m | h_mm m | h_m_m1_1 m [in|out] | h_2m m [single|both] | d6 | "
                    "d6_prime | k_star n | k_star_bipartite p q | two_cliques_plus_one m")
        ->required();
    gen->add_option("params", params, "integer parameters");
    gen->add_option("--variant", variant, "family variant selector");
    gen->add_option("-o,--output", out_path, "output file, - for stdout");

    std::string property, policy_str = "V";
    int n = 4, workers = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    double arc_prob = 0.5;
    auto* scan = app.add_subcommand("scan", "property scan over small digraphs");
    scan->add_option("property", property, "registered property name")->required();
    scan->add_option("--n", n, "digraph order")->required();
    scan->add_option("--policy", policy_str, "Y policy: all | V | sampled-<k>");
    scan->add_option("--trials", trials, "random trials (omit for exhaustive)");
    auto* seed_opt = scan->add_option("--seed", seed, "RNG seed");
    scan->add_option("--arc-prob", arc_prob, "arc probability for random scans");
    scan->add_option("--workers", workers, "worker threads (0 = hardware)");
    scan->add_option("-o,--output", out_path, "report file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitOk;
    }

    try {
        if (check->parsed()) return run_check(file, set_override);
        if (grow_cmd->parsed()) return run_grow(file, set_override, budget, oracle_cap);
        if (oracle_cmd->parsed()) return run_oracle(file, set_override, oracle_cap);
        if (gen->parsed()) return run_gen(family, params, variant, out_path);
        if (scan->parsed())
            return run_scan(property, n, policy_str, trials, seed, seed_opt->count() > 0,
                            arc_prob, workers, strict, out_path);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
