#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kernelcut/cluster.hpp"
#include "kernelcut/generators.hpp"
#include "kernelcut/io.hpp"
#include "kernelcut/maxleaf.hpp"
#include "kernelcut/oracles.hpp"
#include "kernelcut/verify.hpp"

using namespace kernelcut;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, BadInput = 1, Cap = 2, Promise = 3 };

// Answers that ran into a cap or a timeout.
struct CapHit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

// Rotate to the smallest vertex; undirected cycles also run towards the smaller neighbour.
std::vector<int> canonical_cycle(std::vector<int> c, bool directed) {
    if (c.empty()) return c;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    if (!directed && c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
    return c;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += " " + std::to_string(x);
    return s;
}

// ---- kernelize ---------------------------------------------------------------

struct KernelizeArgs {
    std::string param, in = "-", out, report;
};

int cmd_kernelize(const KernelizeArgs& a) {
    Instance inst = parse_instance(read_input(a.in));
    const auto t0 = std::chrono::steady_clock::now();
    KernelResult r = kernelize(param_from_string(a.param), inst);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    write_output(a.out, serialize_result(r) + "\n");
    if (!a.report.empty()) {
        json rep{{"case", a.in},
                 {"suite", "kernelize"},
                 {"verdict", to_string(r.status)},
                 {"millis", ms},
                 {"detail", "param " + a.param + ", " + std::to_string(r.before.vertices) + " -> " +
                                std::to_string(r.after.vertices) + " vertices"}};
        write_output(a.report, rep.dump(2) + "\n");
    }
    return r.status == Status::PromiseViolated ? Promise : Ok;
}

// ---- solve -------------------------------------------------------------------

struct SolveArgs {
    std::string oracle, algo, in = "-";
};

void need_known(Answer a) {
    if (a == Answer::Unknown) throw CapHit("oracle cap or timeout reached");
}

int cmd_solve(const SolveArgs& a) {
    Instance inst = parse_instance(read_input(a.in));
    const Graph& g = inst.graph;
    if (!a.algo.empty()) {
        if (a.algo == "cluster-fpt") {
            const int cap = 4;
            if (inst.witness.ell > cap) throw CapHit("modulator larger than the enumeration cap " + std::to_string(cap));
            std::cout << (fpt_long_cycle_cluster(inst, cap) ? "YES" : "NO") << "\n";
        } else if (a.algo == "maxleaf") {
            KernelResult r = solve_long_cycle_maxleaf(inst);
            if (r.status == Status::PromiseViolated) {
                std::cout << "PROMISE-VIOLATED\n";
                return Promise;
            }
            std::cout << (r.status == Status::SolvedYes ? "YES" : "NO") << "\n";
        } else if (a.algo == "fp-fpt") {
            if (!inst.s || !inst.t) throw InputError("fp-fpt needs s and t");
            FptFpResult f = fpt_shortest_fp_path(g, *inst.s, *inst.t, inst.pairs, inst.witness.vertices);
            if (f.found) std::cout << f.length << "\n";
            else std::cout << "NO\n";
            std::cerr << "subsets enumerated: " << f.subsets_enumerated << "\n";
        } else {
            throw InputError("unknown algorithm '" + a.algo + "' (cluster-fpt, maxleaf, fp-fpt)");
        }
        return Ok;
    }
    const std::string& o = a.oracle;
    auto print_ham = [](const HamResult& h) {
        need_known(h.answer);
        std::cout << (h.answer == Answer::Yes ? "YES" + join(h.order) : std::string("NO")) << "\n";
    };
    auto print_len = [](const LengthResult& r) {
        need_known(r.status);
        std::cout << r.value << "\n";
    };
    auto print_parts = [](const DisjointResult& d) {
        need_known(d.answer);
        std::cout << (d.answer == Answer::Yes ? "YES" : "NO") << "\n";
        for (auto& p : d.parts) std::cout << join(p).substr(1) << "\n";
    };
    Graph plain = inst.labeled() ? expand_labels(g, inst.labels) : g;
    plain.multigraph = false;
    if (o == "decide") {
        Answer ans = decide(inst);
        need_known(ans);
        std::cout << to_string(ans) << "\n";
    } else if (o == "hamiltonian" || o == "hamiltonian-cycle") {
        HamResult h = hamiltonian_cycle(plain);
        h.order = canonical_cycle(h.order, plain.directed);
        print_ham(h);
    } else if (o == "hamiltonian-path") {
        if (inst.s && inst.t) print_ham(hamiltonian_st_path(plain, *inst.s, *inst.t));
        else print_ham(hamiltonian_path(plain));
    } else if (o == "longest-cycle") {
        print_len(longest_cycle(plain, inst.stand_ins.empty() ? std::vector<std::int64_t>{} : vertex_weights(inst)));
    } else if (o == "longest-path") {
        print_len(longest_path(plain, inst.stand_ins.empty() ? std::vector<std::int64_t>{} : vertex_weights(inst)));
    } else if (o == "disjoint-paths") {
        print_parts(disjoint_paths(plain, inst.pairs));
    } else if (o == "disjoint-cycles") {
        print_parts(disjoint_cycles(plain, inst.k.value_or(1)));
    } else if (o == "fp-path") {
        FpObjective obj = FpObjective::Exists;
        if (inst.problem == Problem::FpStPathShortest) obj = FpObjective::Shortest;
        if (inst.problem == Problem::FpStPathLongest) obj = FpObjective::Longest;
        if (inst.problem == Problem::FpLongestPath) obj = FpObjective::LongestAnywhere;
        const bool st = obj != FpObjective::LongestAnywhere;
        if (st && (!inst.s || !inst.t)) throw InputError("fp-path needs s and t");
        FpResult f = forbidden_pairs_path(plain, st ? *inst.s : 0, st ? *inst.t : 0, inst.pairs, obj);
        need_known(f.answer);
        if (f.answer == Answer::No) std::cout << "NO\n";
        else if (obj == FpObjective::Exists) std::cout << "YES" << join(f.path) << "\n";
        else std::cout << f.length << join(f.path) << "\n";
    } else if (o == "max-leaf") {
        std::cout << max_leaf_number(plain) << "\n";
    } else {
        throw InputError("unknown oracle '" + o +
                         "' (decide, hamiltonian, hamiltonian-path, longest-cycle, longest-path, disjoint-paths, "
                         "disjoint-cycles, fp-path, max-leaf)");
    }
    return Ok;
}

// ---- generate ----------------------------------------------------------------

struct GenerateArgs {
    std::string construction, out, problem;
    std::uint64_t seed = 1;
    int n = -1, ell = -1, r = 2, na = 2, k = -1, cliques = -1, max_clique = -1, pairs = -1;
    double p = -1;
    bool directed = false, tails = false, all_no = false;
};

std::string canonical_construction(const std::string& c) {
    static const std::map<std::string, std::string> alias = {
        {"bipartite-hampath", "prop1"},      {"bipaths-composition", "thm7"},
        {"outerplanar-composition", "thm8"}, {"multicolored-clique", "thm9"},
        {"ladder-composition", "thm11"},
    };
    auto it = alias.find(c);
    return it == alias.end() ? c : it->second;
}

json with_certificate(const Composition& c, const std::vector<bool>& inputs_yes) {
    json j = instance_to_json(c.instance);
    if (!c.certificate.empty()) j["certificate"] = c.certificate;
    j["inputs_yes"] = inputs_yes;
    return j;
}

int cmd_generate(const GenerateArgs& a) {
    const std::string c = canonical_construction(a.construction);
    std::mt19937_64 rng(a.seed);
    auto coin = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
    auto random_graph = [&](int n, double p) {
        Graph g;
        g.n = n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(p)) g.edges.push_back({u, v});
        return g;
    };
    const double p = a.p >= 0 ? a.p : 0.5;
    json out;
    if (c == "prop1") {
        const int n = a.n > 0 ? a.n : 4;
        if (n < 2) throw InputError("need n >= 2");
        Graph g = random_graph(n, p);
        BipartiteHamInstance b = gen_bipartite_hampath(g, 0, n - 1, a.directed);
        Instance inst;
        inst.problem = Problem::HamiltonianPath;
        inst.graph = b.graph;
        out = instance_to_json(inst);
        out["A"] = b.A;
        out["B"] = b.B;
        out["source"] = {{"n", g.n}, {"edges", g.edges}, {"s", 0}, {"t", n - 1}};
    } else if (c == "thm7" || c == "thm8") {
        const bool directed = c == "thm7";
        if (a.r < 1 || a.na < 1) throw InputError("need r >= 1 and nA >= 1");
        const int star = a.all_no ? -1 : static_cast<int>(rng() % static_cast<std::uint64_t>(a.r));
        std::vector<BipartiteHamInstance> in;
        for (int i = 0; i < a.r; ++i) in.push_back(random_bipartite_hampath(a.na, p * 0.6, directed, i == star, rng()));
        std::vector<bool> yes_flags;
        YesWitness yes;
        for (int i = 0; i < a.r; ++i) {
            std::vector<int> path;
            const bool y = bipartite_ham_answer(in[i], &path);
            yes_flags.push_back(y);
            if (y && !yes) yes = std::make_pair(i, path);
        }
        Composition comp = directed ? compose_bipaths(in, yes) : compose_outerplanar(in, yes);
        out = with_certificate(comp, yes_flags);
    } else if (c == "thm9") {
        ColoredGraph cg;
        cg.k = a.k > 0 ? a.k : 3;
        const int n = a.n > 0 ? a.n : 6;
        cg.graph = random_graph(n, p);
        for (int v = 0; v < n; ++v)
            cg.color.push_back(v < cg.k ? v + 1 : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cg.k)));
        out = instance_to_json(gen_multicolored_clique_fp(cg));
        out["source"] = {{"n", n}, {"edges", cg.graph.edges}, {"k", cg.k}, {"color", cg.color}};
        out["inputs_yes"] = std::vector<bool>{has_multicolored_clique(cg)};
    } else if (c == "thm11") {
        const int n = a.n > 0 ? a.n : 3;
        std::vector<FpInput> in;
        for (int i = 0; i < a.r; ++i) {
            FpInput f;
            f.graph = random_graph(n, p);
            std::set<Edge> H;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(0.2)) H.insert({u, v});
            f.H.assign(H.begin(), H.end());
            in.push_back(std::move(f));
        }
        std::vector<bool> yes_flags;
        YesWitness yes;
        for (int i = 0; i < a.r; ++i) {
            FpResult f = forbidden_pairs_path(in[i].graph, 0, n - 1, in[i].H, FpObjective::Exists);
            if (f.answer == Answer::Unknown) throw CapHit("input oracle timed out");
            yes_flags.push_back(f.answer == Answer::Yes);
            if (f.answer == Answer::Yes && !yes) yes = std::make_pair(i, f.path);
        }
        out = with_certificate(compose_fp_ladders(in, yes, a.tails), yes_flags);
    } else if (c.rfind("random-", 0) == 0) {
        static const std::map<std::string, std::pair<PlantedKind, Problem>> kinds = {
            {"random-vc", {PlantedKind::VertexCover, Problem::LongCycle}},
            {"random-cluster", {PlantedKind::Cluster, Problem::LongCycle}},
            {"random-maxleaf", {PlantedKind::MaxLeaf, Problem::LongCycle}},
            {"random-fp", {PlantedKind::ForbiddenPairs, Problem::FpStPath}},
        };
        auto it = kinds.find(c);
        if (it == kinds.end()) throw InputError("unknown construction '" + a.construction + "'");
        PlantedParams pp;
        pp.problem = a.problem.empty() ? it->second.second : problem_from_string(a.problem);
        pp.directed = a.directed;
        if (a.n > 0) pp.n = a.n;
        if (a.ell >= 0) pp.ell = a.ell;
        if (a.p >= 0) pp.p = a.p;
        if (a.cliques > 0) pp.cliques = a.cliques;
        if (a.max_clique > 0) pp.max_clique = a.max_clique;
        if (a.pairs >= 0) pp.pairs = a.pairs;
        if (a.k >= 0) pp.k = a.k;
        out = instance_to_json(gen_random_planted(it->second.first, pp, a.seed));
    } else {
        throw InputError("unknown construction '" + a.construction + "'");
    }
    write_output(a.out, out.dump(2) + "\n");
    return Ok;
}

// ---- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string suite, seeds, report;
    int jobs = 1;
    bool quiet = false;
};

int cmd_verify(const VerifyArgs& a) {
    VerifyOptions opt;
    opt.jobs = std::max(1, a.jobs);
    if (!a.seeds.empty()) {
        auto dots = a.seeds.find("..");
        try {
            if (dots == std::string::npos) {
                opt.seed_lo = opt.seed_hi = std::stoull(a.seeds);
            } else {
                opt.seed_lo = std::stoull(a.seeds.substr(0, dots));
                opt.seed_hi = std::stoull(a.seeds.substr(dots + 2));
            }
        } catch (const std::logic_error&) {
            throw InputError("--seeds expects a..b");
        }
        if (opt.seed_hi < opt.seed_lo || opt.seed_lo == 0) throw InputError("--seeds expects 1 <= a <= b");
    }
    auto reports = run_suite(a.suite, opt);
    std::string table = verdict_table(reports);
    if (a.quiet) table = table.substr(table.rfind("summary:"));
    std::cout << table;
    if (!a.report.empty()) write_output(a.report, reports_to_json(reports).dump(2) + "\n");
    return all_pass(reports) ? Ok : BadInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernelcut: kernels, exact oracles and hardness constructions for path and cycle problems"};
    app.require_subcommand(1);

    KernelizeArgs ka;
    auto* kz = app.add_subcommand("kernelize", "shrink an instance with a structural-parameter kernel");
    kz->add_option("--param", ka.param, "vc, maxleaf or cluster")->required();
    kz->add_option("-i,--input", ka.in, "instance JSON ('-' for stdin)");
    kz->add_option("-o,--output", ka.out, "result JSON (default stdout)");
    kz->add_option("--report", ka.report, "timing report JSON");

    SolveArgs sa;
    auto* sv = app.add_subcommand("solve", "answer an instance exactly");
    auto* oracle = sv->add_option("--oracle", sa.oracle, "exact oracle");
    auto* algo = sv->add_option("--algo", sa.algo, "cluster-fpt, maxleaf or fp-fpt");
    oracle->excludes(algo);
    sv->add_option("-i,--input", sa.in, "instance JSON ('-' for stdin)");

    GenerateArgs ga;
    auto* gn = app.add_subcommand("generate", "emit a construction or a random planted instance");
    gn->add_option("--construction", ga.construction,
                   "prop1, thm7, thm8, thm9, thm11, random-vc, random-cluster, random-maxleaf, random-fp")
        ->required();
    gn->add_option("--seed", ga.seed, "random seed");
    gn->add_option("-o,--output", ga.out, "output file (default stdout)");
    gn->add_option("--problem", ga.problem, "problem tag for random instances");
    gn->add_option("-n", ga.n, "vertex count");
    gn->add_option("--ell", ga.ell, "modulator size");
    gn->add_option("-r", ga.r, "number of composed inputs");
    gn->add_option("--na", ga.na, "|A| of composed bipartite inputs");
    gn->add_option("-k", ga.k, "k");
    gn->add_option("-p", ga.p, "edge probability");
    gn->add_option("--cliques", ga.cliques, "clique count (random-cluster)");
    gn->add_option("--max-clique", ga.max_clique, "largest clique (random-cluster)");
    gn->add_option("--pairs", ga.pairs, "terminal or forbidden pairs");
    gn->add_flag("--directed", ga.directed, "directed output where supported");
    gn->add_flag("--tails", ga.tails, "thm11: attach pendant tails and ask for a long path");
    gn->add_flag("--all-no", ga.all_no, "thm7/thm8: do not plant a YES input");

    VerifyArgs va;
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> names;
    for (auto& s : suites()) names.push_back(s.name);
    vf->add_option("--suite", va.suite, "suite name")->required()->check(CLI::IsMember(names));
    vf->add_option("--seeds", va.seeds, "seed range a..b");
    vf->add_option("--jobs", va.jobs, "worker threads");
    vf->add_option("--report", va.report, "JSON report path");
    vf->add_flag("--quiet", va.quiet, "print only the summary row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }
    try {
        if (kz->parsed()) return cmd_kernelize(ka);
        if (sv->parsed()) {
            if (sa.oracle.empty() && sa.algo.empty()) throw InputError("solve needs --oracle or --algo");
            return cmd_solve(sa);
        }
        if (gn->parsed()) return cmd_generate(ga);
        if (vf->parsed()) return cmd_verify(va);
    } catch (const CapHit& e) {
        std::cout << "UNKNOWN\n";
        std::cerr << "kernelcut: " << e.what() << "\n";
        return Cap;
    } catch (const std::exception& e) {
        std::cerr << "kernelcut: " << e.what() << "\n";
        return BadInput;
    }
    return BadInput;
}
