#include "kernelcut/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "kernelcut/cluster.hpp"
#include "kernelcut/generators.hpp"
#include "kernelcut/matching.hpp"
#include "kernelcut/maxleaf.hpp"
#include "kernelcut/vc.hpp"

namespace kernelcut {

std::string to_string(Param p) {
    switch (p) {
        case Param::VertexCover: return "vc";
        case Param::MaxLeaf: return "maxleaf";
        case Param::Cluster: return "cluster";
    }
    return "?";
}

Param param_from_string(const std::string& s) {
    if (s == "vc") return Param::VertexCover;
    if (s == "maxleaf") return Param::MaxLeaf;
    if (s == "cluster") return Param::Cluster;
    throw InputError("unknown parameter '" + s + "' (expected vc, maxleaf or cluster)");
}

KernelResult kernelize(Param param, const Instance& inst) {
    const Problem p = inst.problem;
    auto reject = [&](const std::string& why) {
        throw InputError("no kernel for " + to_string(p) + " under " + to_string(param) + ": " + why);
    };
    if (is_fp_problem(p)) {
        if (param == Param::VertexCover)
            reject("W[1]-hard parameterized by vertex cover; use solve --algo fp-fpt with a cover of H");
        reject("only the 2^|X| algorithm for a vertex cover of H is available");
    }
    switch (param) {
        case Param::VertexCover:
            if (p == Problem::HamiltonianCycle || p == Problem::HamiltonianPath) return hamiltonian_vc_bound(inst);
            return kernelize_vc(inst);
        case Param::MaxLeaf:
            if (p == Problem::LongPath || p == Problem::HamiltonianCycle)
                reject("not covered by the max-leaf kernels (long-cycle, disjoint-paths, hamiltonian-path, disjoint-cycles)");
            return kernelize_maxleaf(inst);
        case Param::Cluster:
            return kernelize_cluster(inst);
    }
    reject("unknown parameter");
    return {};
}

namespace {

using Rng = std::mt19937_64;
using Clock = std::chrono::steady_clock;

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a * 0x9e3779b97f4a7c15ULL + b + 0x632be59bd9b4e019ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int uni(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double unif01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string pad(std::uint64_t s) {
    std::string t = std::to_string(s);
    return std::string(t.size() < 6 ? 6 - t.size() : 0, '0') + t;
}

struct Check {
    std::string tag;  // appended to the job id
    std::string verdict;
    std::string detail;
};

Check pass(std::string tag, std::string detail = {}) { return {std::move(tag), "PASS", std::move(detail)}; }
Check fail(std::string tag, std::string detail) { return {std::move(tag), "FAIL", std::move(detail)}; }
Check unknown(std::string tag, std::string detail) { return {std::move(tag), "FAIL-UNKNOWN", std::move(detail)}; }
Check expect(std::string tag, bool ok, std::string detail) {
    return ok ? pass(std::move(tag), std::move(detail)) : fail(std::move(tag), std::move(detail));
}

const char* yn(bool b) { return b ? "YES" : "NO"; }

struct Job {
    std::string id;
    std::function<std::vector<Check>()> run;
};

std::vector<CaseReport> execute(const std::string& suite, std::vector<Job> jobs, int threads) {
    std::vector<std::vector<CaseReport>> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            auto t0 = Clock::now();
            std::vector<Check> checks;
            try {
                checks = jobs[i].run();
            } catch (const std::exception& e) {
                checks = {fail("", std::string("exception: ") + e.what())};
            }
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            for (auto& c : checks) {
                std::string id = jobs[i].id + (c.tag.empty() ? "" : "/" + c.tag);
                out[i].push_back({id, suite, c.verdict, static_cast<std::int64_t>(ms), c.detail});
            }
        }
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<CaseReport> flat;
    for (auto& v : out)
        for (auto& r : v) flat.push_back(std::move(r));
    std::stable_sort(flat.begin(), flat.end(), [](const CaseReport& a, const CaseReport& b) { return a.id < b.id; });
    return flat;
}

// ---- equivalence ----------------------------------------------------------------------

struct Cell {
    Param param;
    Problem problem;
    bool directed = false;
    std::string name() const {
        return to_string(param) + "/" + to_string(problem) + (directed ? "-directed" : "");
    }
};

std::vector<Cell> equivalence_cells() {
    using P = Problem;
    return {
        {Param::VertexCover, P::LongCycle},        {Param::VertexCover, P::LongCycle, true},
        {Param::VertexCover, P::LongPath},         {Param::VertexCover, P::LongPath, true},
        {Param::VertexCover, P::DisjointPaths},    {Param::VertexCover, P::DisjointCycles},
        {Param::VertexCover, P::HamiltonianCycle}, {Param::VertexCover, P::HamiltonianPath},
        {Param::MaxLeaf, P::LongCycle},            {Param::MaxLeaf, P::DisjointPaths},
        {Param::MaxLeaf, P::HamiltonianPath},      {Param::MaxLeaf, P::DisjointCycles},
        {Param::Cluster, P::LongCycle},            {Param::Cluster, P::LongPath},
        {Param::Cluster, P::HamiltonianCycle},     {Param::Cluster, P::HamiltonianPath},
        {Param::Cluster, P::DisjointPaths},        {Param::Cluster, P::DisjointCycles},
    };
}

constexpr int kEquivalenceMaxN = 14;

Instance equivalence_instance(const Cell& c, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(mix(seed, attempt * 131 + static_cast<std::uint64_t>(c.problem) * 7 + static_cast<int>(c.param)));
        PlantedParams pp;
        pp.problem = c.problem;
        pp.directed = c.directed;
        pp.pairs = uni(rng, 1, 3);
        pp.p = 0.25 + 0.6 * unif01(rng);
        PlantedKind kind = PlantedKind::VertexCover;
        switch (c.param) {
            case Param::VertexCover:
                pp.n = uni(rng, 3, kEquivalenceMaxN);
                pp.ell = uni(rng, 1, std::min(5, pp.n - 1));
                break;
            case Param::MaxLeaf:
                kind = PlantedKind::MaxLeaf;
                pp.core = uni(rng, 2, 5);
                pp.subdivide = uni(rng, 0, 3);
                pp.p = 0.2 + 0.5 * unif01(rng);
                break;
            case Param::Cluster:
                kind = PlantedKind::Cluster;
                pp.ell = uni(rng, 1, 3);
                pp.cliques = uni(rng, 1, 4);
                pp.max_clique = uni(rng, 1, 4);
                break;
        }
        Instance inst = gen_random_planted(kind, pp, rng());
        if (inst.graph.n <= kEquivalenceMaxN && inst.graph.n >= 1) return inst;
    }
}

std::string answer_str(Answer a) { return to_string(a); }

std::vector<Check> maxleaf_bounds(const Instance& in, const KernelResult& r) {
    if (r.status != Status::Reduced) return {pass("bounds", "solved, nothing to bound")};
    const Instance& out = r.instance;
    const int ell = in.witness.ell;
    std::ostringstream d;
    bool ok = true;
    if (in.problem == Problem::LongCycle) {
        std::map<Edge, int> mult;
        for (auto [a, b] : out.graph.edges) ++mult[{std::min(a, b), std::max(a, b)}];
        int mp = 0;
        for (auto& [e, c] : mult) mp = std::max(mp, c);
        const int bits_cap = static_cast<int>(std::ceil(std::log2(static_cast<double>(in.graph.n) + 1)));
        int bits = 0;
        for (auto L : out.labels) bits = std::max(bits, bit_length(L));
        ok = out.graph.n <= 4 * ell && mp <= ell && bits <= bits_cap;
        d << "|V|=" << out.graph.n << " (<= " << 4 * ell << "), parallels=" << mp << " (<= " << ell
          << "), label bits=" << bits << " (<= " << bits_cap << ")";
    } else if (in.problem == Problem::DisjointPaths) {
        auto deg = degrees(in.graph);
        std::int64_t L = 0, B = 0;
        for (int x : deg) {
            L += x == 1;
            B += x >= 3;
        }
        const std::int64_t cap = L + B + 4LL * ell * B;
        ok = out.graph.n <= cap;
        d << "|V|=" << out.graph.n << " (<= |L|+|B|+4*ell*|B| = " << cap << ")";
    } else {
        return {pass("bounds", "no vertex bound for this problem")};
    }
    return {expect("bounds", ok, d.str())};
}

std::vector<Check> equivalence_case(const Cell& c, std::uint64_t seed, const OracleLimits& lim) {
    Instance inst = equivalence_instance(c, seed);
    std::vector<Check> out;
    const Answer truth = decide(inst, lim);
    KernelResult r = kernelize(c.param, inst);
    std::string meta = "n=" + std::to_string(inst.graph.n) + " ell=" + std::to_string(inst.witness.ell) +
                       " status=" + to_string(r.status);
    if (truth == Answer::Unknown) {
        out.push_back(unknown("answer", "oracle timed out on the input; " + meta));
    } else if (r.status == Status::PromiseViolated) {
        out.push_back(fail("answer", "promise reported violated on a planted instance; " + meta));
    } else {
        Answer got;
        if (r.status == Status::SolvedYes) got = Answer::Yes;
        else if (r.status == Status::SolvedNo) got = Answer::No;
        else got = decide(r.instance, lim);
        if (got == Answer::Unknown)
            out.push_back(unknown("answer", "oracle timed out on the kernel; " + meta));
        else
            out.push_back(expect("answer", got == truth,
                                 "input " + answer_str(truth) + ", kernel " + answer_str(got) + "; " + meta +
                                     " n'=" + std::to_string(r.instance.graph.n)));
    }
    // a second pass must be a no-op
    try {
        KernelResult again = kernelize(c.param, r.instance);
        // a solved output is a fixed trivial instance; leaving it untouched also counts
        const bool same = again.instance == r.instance &&
                          (again.status == r.status || again.status == Status::Reduced);
        out.push_back(expect("idempotent", same,
                             same ? "" : "second pass changed the output (status " + to_string(again.status) + ")"));
    } catch (const std::exception& e) {
        out.push_back(fail("idempotent", std::string("second pass threw: ") + e.what()));
    }
    if (c.param == Param::MaxLeaf) {
        for (auto& b : maxleaf_bounds(inst, r)) out.push_back(b);
    } else if (c.param == Param::VertexCover && r.status == Status::Reduced) {
        const std::int64_t bound =
            vc_kernel_bound(inst.problem, inst.graph.directed,
                            inst.problem == Problem::DisjointPaths ? r.instance.witness.ell : inst.witness.ell);
        out.push_back(expect("bounds", r.instance.graph.n <= bound,
                             "|V|=" + std::to_string(r.instance.graph.n) + " (<= " + std::to_string(bound) + ")"));
    }
    return out;
}

// ---- sizes ------------------------------------------------------------------------------

std::vector<Check> sizes_case(Problem p, bool directed, std::uint64_t seed) {
    Rng rng(mix(seed, 17 + static_cast<int>(p) * 3 + directed));
    PlantedParams pp;
    pp.problem = p;
    pp.directed = directed;
    pp.n = uni(rng, 2, 60);
    pp.ell = uni(rng, 1, std::min(8, pp.n));
    pp.p = 0.1 + 0.8 * unif01(rng);
    pp.k = uni(rng, 5, std::max(5, pp.n));
    if (p == Problem::DisjointCycles) pp.k = uni(rng, 1, std::max(1, pp.n / 3));
    Instance inst = gen_random_planted(PlantedKind::VertexCover, pp, rng());
    KernelResult r = kernelize_vc(inst);
    const std::int64_t ell = inst.witness.ell;
    const std::int64_t bound = vc_kernel_bound(p, directed, ell);
    const std::int64_t got = r.status == Status::Reduced ? r.instance.graph.n : 0;
    return {expect("", got <= bound,
                   "n=" + std::to_string(inst.graph.n) + " ell=" + std::to_string(ell) + " -> " +
                       std::to_string(got) + " (<= " + std::to_string(bound) + ", " + to_string(r.status) + ")")};
}

// ---- restriction property --------------------------------------------------------------------

std::vector<Check> restriction_case(std::uint64_t seed) {
    Rng rng(mix(seed, 2));
    BipartiteGraph h;
    h.right = uni(rng, 1, 12);
    h.left = uni(rng, 1, 14);
    const double p = 0.1 + 0.7 * unif01(rng);
    for (int a = 0; a < h.left; ++a)
        for (int b = 0; b < h.right; ++b)
            if (unif01(rng) < p) h.edges.push_back({a, b});
    const bool ok = matched_restriction_holds(h);
    return {expect("", ok,
                   "left=" + std::to_string(h.left) + " right=" + std::to_string(h.right) +
                       " edges=" + std::to_string(h.edges.size()))};
}

// ---- Held-Karp -------------------------------------------------------------------------------

std::vector<Check> heldkarp_case(std::uint64_t seed, const OracleLimits& lim) {
    Rng rng(mix(seed, 4));
    Graph m;
    m.n = uni(rng, 1, 8);
    m.multigraph = true;
    std::vector<std::int64_t> labels;
    const int edges = m.n < 2 ? 0 : uni(rng, 0, std::min(12, 2 * m.n));
    for (int i = 0; i < edges; ++i) {
        int a = uni(rng, 0, m.n - 1), b = uni(rng, 0, m.n - 2);
        if (b >= a) ++b;
        m.edges.push_back({std::min(a, b), std::max(a, b)});
        labels.push_back(uni(rng, 0, 5));
    }
    // parallel edges without internal vertices would collapse in the expansion
    std::set<Edge> bare;
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        if (labels[i] == 0 && !bare.insert(m.edges[i]).second) labels[i] = 1;
    const std::int64_t hk = held_karp_longest_cycle(m, labels);
    Graph x = expand_labels(m, labels);
    x.multigraph = false;
    LengthResult brute = longest_cycle(x, {}, std::nullopt, lim);
    if (brute.status == Answer::Unknown) return {unknown("", "brute force timed out")};
    return {expect("", hk == brute.value,
                   "n=" + std::to_string(m.n) + " m=" + std::to_string(edges) + " held-karp=" + std::to_string(hk) +
                       " brute=" + std::to_string(brute.value))};
}

// ---- cluster enumeration ----------------------------------------------------------------------

std::vector<Check> cluster_fpt_case(std::uint64_t seed, const OracleLimits& lim) {
    Instance inst;
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(mix(seed, 5 + 1000 * attempt));
        PlantedParams pp;
        pp.problem = Problem::LongCycle;
        pp.ell = uni(rng, 0, 3);
        pp.cliques = uni(rng, 1, 5);
        pp.max_clique = uni(rng, 1, 4);
        pp.p = 0.2 + 0.6 * unif01(rng);
        inst = gen_random_planted(PlantedKind::Cluster, pp, rng());
        if (inst.graph.n <= 14) {
            inst.k = uni(rng, 3, std::max(3, inst.graph.n));
            break;
        }
    }
    const bool fpt = fpt_long_cycle_cluster(inst);
    const Answer truth = decide(inst, lim);
    if (truth == Answer::Unknown) return {unknown("", "oracle timed out")};
    return {expect("", fpt == (truth == Answer::Yes),
                   "n=" + std::to_string(inst.graph.n) + " ell=" + std::to_string(inst.witness.ell) +
                       " k=" + std::to_string(*inst.k) + " enumeration=" + yn(fpt) + " oracle=" + to_string(truth))};
}

// ---- forbidden pairs with a cover of H -----------------------------------------------------------

std::vector<Check> fp_fpt_case(std::uint64_t seed, const OracleLimits& lim) {
    Rng rng(mix(seed, 6));
    PlantedParams pp;
    pp.problem = Problem::FpStPath;
    pp.n = uni(rng, 2, 12);
    pp.ell = uni(rng, 0, std::min(6, pp.n));
    pp.p = 0.08 + 0.35 * unif01(rng);
    pp.pairs = uni(rng, 0, 3 * std::max(1, pp.ell));
    Instance inst = gen_random_planted(PlantedKind::ForbiddenPairs, pp, rng());
    const auto& X = inst.witness.vertices;
    FptFpResult f = fpt_shortest_fp_path(inst.graph, *inst.s, *inst.t, inst.pairs, X);
    FpResult b = forbidden_pairs_path(inst.graph, *inst.s, *inst.t, inst.pairs, FpObjective::Shortest, lim);
    if (b.answer == Answer::Unknown) return {unknown("", "brute force timed out")};
    const bool agree = f.found == (b.answer == Answer::Yes) && (!f.found || f.length == b.length);
    const std::uint64_t want = std::uint64_t{1} << X.size();
    std::ostringstream d;
    d << "n=" << inst.graph.n << " |X|=" << X.size() << " fpt=" << (f.found ? std::to_string(f.length) : "none")
      << " brute=" << (b.answer == Answer::Yes ? std::to_string(b.length) : "none") << " subsets=" << f.subsets_enumerated
      << "/" << want;
    return {expect("length", agree, d.str()), expect("subsets", f.subsets_enumerated == want, d.str())};
}

// ---- generators ------------------------------------------------------------------------------------

Graph random_graph(Rng& rng, int n, double p) {
    Graph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unif01(rng) < p) g.edges.push_back({u, v});
    return g;
}

std::vector<BipartiteHamInstance> bipartite_inputs(Rng& rng, int r, int nA, bool directed, double p_plant) {
    std::vector<BipartiteHamInstance> in;
    for (int i = 0; i < r; ++i)
        in.push_back(random_bipartite_hampath(nA, 0.15 + 0.4 * unif01(rng), directed, unif01(rng) < p_plant, rng()));
    return in;
}

// First YES input with its path, if any.
YesWitness first_yes(const std::vector<BipartiteHamInstance>& in, bool* unknown_seen = nullptr) {
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::vector<int> path;
        try {
            if (bipartite_ham_answer(in[i], &path)) return std::make_pair(static_cast<int>(i), path);
        } catch (const std::runtime_error&) {
            if (unknown_seen) *unknown_seen = true;
        }
    }
    return std::nullopt;
}

std::vector<Check> bipartite_hampath_case(std::uint64_t seed, const OracleLimits& lim) {
    Rng rng(mix(seed, 71));
    const int n = uni(rng, 2, 5);
    Graph g = random_graph(rng, n, 0.3 + 0.6 * unif01(rng));
    const int s = uni(rng, 0, n - 1);
    int t = uni(rng, 0, n - 2);
    if (t >= s) ++t;
    const bool directed = seed % 2 == 0;
    BipartiteHamInstance b = gen_bipartite_hampath(g, s, t, directed);
    const std::string why = bipartite_ham_violation(b);
    HamResult src = hamiltonian_st_path(g, s, t, lim);
    HamResult dst = hamiltonian_st_path(b.graph, b.B.front(), b.B.back(), lim);
    if (src.answer == Answer::Unknown || dst.answer == Answer::Unknown) return {unknown("", "oracle timed out")};
    return {expect("shape", why.empty(), why),
            expect("", src.answer == dst.answer,
                   std::string(directed ? "directed" : "undirected") + " n=" + std::to_string(n) + " source " +
                       to_string(src.answer) + ", generated " + to_string(dst.answer))};
}

std::vector<Check> bipaths_case(std::uint64_t seed, const OracleLimits& lim) {
    Rng rng(mix(seed, 72));
    // at most 34 vertices: r (3 nA + 2) + 1 + nA + 1
    static const std::vector<std::pair<int, int>> shapes = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2},
                                                            {2, 3}, {2, 4}, {3, 1}, {3, 2}};
    auto [r, nA] = shapes[seed % shapes.size()];
    auto in = bipartite_inputs(rng, r, nA, true, 0.3);
    bool unk = false;
    YesWitness yes = first_yes(in, &unk);
    if (unk) return {unknown("", "input oracle timed out")};
    Composition c = compose_bipaths(in, yes);
    std::vector<Check> out;
    HamResult h = hamiltonian_cycle(c.instance.graph, lim);
    const std::string shape = "r=" + std::to_string(r) + " nA=" + std::to_string(nA) +
                              " |V|=" + std::to_string(c.instance.graph.n);
    if (h.answer == Answer::Unknown) out.push_back(unknown("or", "composed oracle timed out; " + shape));
    else
        out.push_back(expect("or", (h.answer == Answer::Yes) == yes.has_value(),
                             "OR of inputs " + std::string(yn(yes.has_value())) + ", composed " +
                                 to_string(h.answer) + "; " + shape));
    if (yes)
        out.push_back(expect("certificate", validate_cycle(c.instance.graph, c.certificate, true), shape));
    return out;
}

std::vector<Check> outerplanar_case(std::uint64_t seed, const OracleLimits& lim) {
    Rng rng(mix(seed, 73));
    const int r = 2, nA = 2;
    auto in = bipartite_inputs(rng, r, nA, false, seed % 2 == 0 ? 0.0 : 0.4);
    bool unk = false;
    YesWitness yes = first_yes(in, &unk);
    if (unk) return {unknown("", "input oracle timed out")};
    Composition c = compose_outerplanar(in, yes);
    const std::string shape = "|V|=" + std::to_string(c.instance.graph.n);
    std::vector<Check> out;
    if (yes) out.push_back(expect("certificate", validate_cycle(c.instance.graph, c.certificate, true), shape));
    OracleLimits slow = lim;
    slow.timeout_ms = std::max<std::int64_t>(lim.timeout_ms, 120000);
    HamResult h = hamiltonian_cycle_backtrack(c.instance.graph, slow);
    if (h.answer == Answer::Unknown) out.push_back(unknown("or", "pruned backtracking timed out; " + shape));
    else
        out.push_back(expect("or", (h.answer == Answer::Yes) == yes.has_value(),
                             "OR of inputs " + std::string(yn(yes.has_value())) + ", composed " +
                                 to_string(h.answer) + "; " + shape));
    return out;
}

std::vector<Check> clique_case(std::uint64_t seed, const OracleLimits& lim) {
    Rng rng(mix(seed, 74));
    ColoredGraph cg;
    cg.k = uni(rng, 1, 3);
    const int n = uni(rng, cg.k, 10);
    cg.graph = random_graph(rng, n, 0.3 + 0.6 * unif01(rng));
    for (int v = 0; v < n; ++v) cg.color.push_back(v < cg.k ? v + 1 : uni(rng, 1, cg.k));
    Instance inst = gen_multicolored_clique_fp(cg);
    const bool clique = has_multicolored_clique(cg);
    FpResult f = forbidden_pairs_path(inst.graph, *inst.s, *inst.t, inst.pairs, FpObjective::Exists, lim);
    if (f.answer == Answer::Unknown) return {unknown("", "fp oracle timed out")};
    std::vector<Check> out{expect("", clique == (f.answer == Answer::Yes),
                                  "n=" + std::to_string(n) + " k=" + std::to_string(cg.k) + " clique " + yn(clique) +
                                      ", fp path " + to_string(f.answer))};
    if (f.answer == Answer::Yes)
        out.push_back(expect("length", static_cast<int>(f.path.size()) == 2 * cg.k + 1,
                             "path has " + std::to_string(f.path.size()) + " vertices"));
    return out;
}

std::vector<FpInput> fp_inputs(Rng& rng, int r, int n) {
    std::vector<FpInput> in;
    for (int i = 0; i < r; ++i) {
        FpInput f;
        f.graph = random_graph(rng, n, 0.4 + 0.5 * unif01(rng));
        const int h = uni(rng, 0, n);
        std::set<Edge> H;
        for (int j = 0; j < h; ++j) {
            int a = uni(rng, 0, n - 1), b = uni(rng, 0, n - 2);
            if (b >= a) ++b;
            H.insert({std::min(a, b), std::max(a, b)});
        }
        f.H.assign(H.begin(), H.end());
        in.push_back(std::move(f));
    }
    return in;
}

YesWitness first_fp_yes(const std::vector<FpInput>& in, const OracleLimits& lim, bool* unknown_seen) {
    for (std::size_t i = 0; i < in.size(); ++i) {
        const int n = in[i].graph.n;
        FpResult f = forbidden_pairs_path(in[i].graph, 0, n - 1, in[i].H, FpObjective::Exists, lim);
        if (f.answer == Answer::Unknown) *unknown_seen = true;
        if (f.answer == Answer::Yes) return std::make_pair(static_cast<int>(i), f.path);
    }
    return std::nullopt;
}

std::vector<Check> ladders_case(std::uint64_t seed, const OracleLimits& lim) {
    Rng rng(mix(seed, 75));
    const int r = uni(rng, 1, 2), n = uni(rng, 2, 4);
    auto in = fp_inputs(rng, r, n);
    bool unk = false;
    YesWitness yes = first_fp_yes(in, lim, &unk);
    if (unk) return {unknown("", "input oracle timed out")};
    Composition c = compose_fp_ladders(in, yes);
    const Instance& I = c.instance;
    const std::string shape = "r=" + std::to_string(r) + " n=" + std::to_string(n) + " |V|=" + std::to_string(I.graph.n);
    FpResult f = forbidden_pairs_path(I.graph, *I.s, *I.t, I.pairs, FpObjective::Exists, lim);
    std::vector<Check> out;
    if (f.answer == Answer::Unknown) out.push_back(unknown("or", "composed oracle timed out; " + shape));
    else
        out.push_back(expect("or", (f.answer == Answer::Yes) == yes.has_value(),
                             "OR of inputs " + std::string(yn(yes.has_value())) + ", composed " + to_string(f.answer) +
                                 "; " + shape));
    if (yes) {
        out.push_back(expect("certificate", validate_fp_path(I.graph, I.pairs, c.certificate, I.s, I.t), shape));
        Composition t = compose_fp_ladders(in, yes, true);
        const bool ok = validate_fp_path(t.instance.graph, t.instance.pairs, t.certificate) &&
                        static_cast<std::int64_t>(t.certificate.size()) >= *t.instance.k;
        out.push_back(expect("certificate-tails", ok, "k=" + std::to_string(*t.instance.k)));
    }
    return out;
}

// Large planted compositions: certificates must validate quickly.
std::vector<Check> smoke_case(std::uint64_t seed) {
    Rng rng(mix(seed, 76));
    std::vector<Check> out;
    auto timed = [&](const std::string& tag, auto&& fn) {
        auto t0 = Clock::now();
        bool ok = fn();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        out.push_back(expect(tag, ok && ms < 1000, std::to_string(ms) + " ms"));
    };
    const int r = 10, nA = 10;
    for (bool directed : {true, false}) {
        std::vector<BipartiteHamInstance> in;
        const int star = uni(rng, 0, r - 1);
        for (int i = 0; i < r; ++i) in.push_back(random_bipartite_hampath(nA, 0.2, directed, i == star, rng()));
        // inputs have 21 vertices, small enough for the exact oracle
        std::vector<int> path;
        {
            const auto& b = in[star];
            HamResult h = hamiltonian_st_path(b.graph, b.B.front(), b.B.back());
            if (h.answer != Answer::Yes) {
                out.push_back(fail(directed ? "bipaths" : "outerplanar", "planted input not solved"));
                continue;
            }
            path = h.order;
        }
        timed(directed ? "bipaths" : "outerplanar", [&] {
            Composition c = directed ? compose_bipaths(in, std::make_pair(star, path))
                                     : compose_outerplanar(in, std::make_pair(star, path));
            return validate_cycle(c.instance.graph, c.certificate, true);
        });
    }
    {
        const int n = 6;
        std::vector<FpInput> in;
        for (int i = 0; i < 10; ++i) {
            FpInput f;
            f.graph.n = n;
            for (int v = 0; v + 1 < n; ++v) f.graph.edges.push_back({v, v + 1});
            in.push_back(f);
        }
        std::vector<int> path(n);
        for (int v = 0; v < n; ++v) path[v] = v;
        timed("ladders", [&] {
            Composition c = compose_fp_ladders(in, std::make_pair(9, path), true);
            return validate_fp_path(c.instance.graph, c.instance.pairs, c.certificate) &&
                   static_cast<std::int64_t>(c.certificate.size()) >= *c.instance.k;
        });
    }
    return out;
}

std::vector<Check> structure_case(std::uint64_t seed) {
    Rng rng(mix(seed, 77));
    std::vector<Check> out;
    {
        const int r = uni(rng, 1, 6), nA = uni(rng, 1, 6);
        Composition c = compose_bipaths(bipartite_inputs(rng, r, nA, true, 0.0));
        const int x = static_cast<int>(c.instance.witness.vertices.size());
        out.push_back(expect("bipaths-modulator", x == 1 + nA + 1 && x == c.expected_modulator,
                             "|X*|=" + std::to_string(x) + " want " + std::to_string(nA + 2)));
        WitnessReport w = check_structure(c.instance.graph, c.instance.witness);
        out.push_back(expect("bipaths-structure", w.status == WitnessReport::Status::Holds, w.reason));
    }
    {
        const int r = uni(rng, 1, 6), nA = uni(rng, 1, 6);
        Composition c = compose_outerplanar(bipartite_inputs(rng, r, nA, false, 0.0));
        const int x = static_cast<int>(c.instance.witness.vertices.size());
        out.push_back(expect("outerplanar-modulator", x == 3 + nA + 1 && x == c.expected_modulator,
                             "|X*|=" + std::to_string(x) + " want " + std::to_string(nA + 4)));
        out.push_back(expect("outerplanar-template", matches_domino_template(c.instance, r, nA),
                             "r=" + std::to_string(r) + " nA=" + std::to_string(nA)));
    }
    {
        const int r = uni(rng, 1, 4), n = uni(rng, 2, 6);
        Composition c = compose_fp_ladders(fp_inputs(rng, r, n));
        const int x = static_cast<int>(c.instance.witness.vertices.size());
        const int want = 1 + n + 2 * n * (n * (n - 1) / 2);
        out.push_back(expect("ladders-modulator", x == want && x == c.expected_modulator,
                             "|X*|=" + std::to_string(x) + " want " + std::to_string(want)));
        WitnessReport w = check_structure(c.instance.graph, c.instance.witness, c.instance.pairs);
        out.push_back(expect("ladders-cover", w.ok(), w.reason));
    }
    return out;
}

// ---- suite table ------------------------------------------------------------------------------------

using SeedJobs = std::function<void(std::uint64_t, std::vector<Job>&, const OracleLimits&)>;

struct SuiteDef {
    SuiteInfo info;
    SeedJobs per_seed;
};

const std::vector<SuiteDef>& suite_defs() {
    static const std::vector<SuiteDef> defs = [] {
        std::vector<SuiteDef> d;
        d.push_back({{"equivalence", 200, "kernel answers match the exact oracle; kernels are idempotent; max-leaf bounds"},
                     [](std::uint64_t s, std::vector<Job>& jobs, const OracleLimits& lim) {
                         for (const Cell& c : equivalence_cells())
                             jobs.push_back({c.name() + "/" + pad(s), [c, s, lim] { return equivalence_case(c, s, lim); }});
                     }});
        d.push_back({{"sizes", 500, "vertex-cover kernel sizes on planted instances with n <= 60"},
                     [](std::uint64_t s, std::vector<Job>& jobs, const OracleLimits&) {
                         jobs.push_back({"long-cycle/" + pad(s), [s] { return sizes_case(Problem::LongCycle, false, s); }});
                         jobs.push_back({"long-cycle-directed/" + pad(s),
                                         [s] { return sizes_case(Problem::LongCycle, true, s); }});
                         jobs.push_back({"long-path/" + pad(s), [s] { return sizes_case(Problem::LongPath, false, s); }});
                         jobs.push_back({"disjoint-cycles/" + pad(s),
                                         [s] { return sizes_case(Problem::DisjointCycles, false, s); }});
                     }});
        d.push_back({{"theorem2", 1000, "restriction property of maximum matchings, |right| <= 12"},
                     [](std::uint64_t s, std::vector<Job>& jobs, const OracleLimits&) {
                         jobs.push_back({pad(s), [s] { return restriction_case(s); }});
                     }});
        d.push_back({{"heldkarp", 200, "Held-Karp longest cycle vs brute force on the expansion"},
                     [](std::uint64_t s, std::vector<Job>& jobs, const OracleLimits& lim) {
                         jobs.push_back({pad(s), [s, lim] { return heldkarp_case(s, lim); }});
                     }});
        d.push_back({{"cluster-fpt", 200, "cluster enumeration algorithm vs oracle, ell <= 3, n <= 14"},
                     [](std::uint64_t s, std::vector<Job>& jobs, const OracleLimits& lim) {
                         jobs.push_back({pad(s), [s, lim] { return cluster_fpt_case(s, lim); }});
                     }});
        d.push_back({{"fp-fpt", 200, "shortest forbidden-pairs path via a cover of H vs brute force"},
                     [](std::uint64_t s, std::vector<Job>& jobs, const OracleLimits& lim) {
                         jobs.push_back({pad(s), [s, lim] { return fp_fpt_case(s, lim); }});
                     }});
        d.push_back({{"compositions", 20, "OR-equivalence and certificates of the hardness constructions"},
                     [](std::uint64_t s, std::vector<Job>& jobs, const OracleLimits& lim) {
                         jobs.push_back({"bipartite-hampath/" + pad(s), [s, lim] { return bipartite_hampath_case(s, lim); }});
                         jobs.push_back({"bipaths/" + pad(s), [s, lim] { return bipaths_case(s, lim); }});
                         jobs.push_back({"outerplanar/" + pad(s), [s, lim] { return outerplanar_case(s, lim); }});
                         jobs.push_back({"multicolored-clique/" + pad(s), [s, lim] { return clique_case(s, lim); }});
                         jobs.push_back({"ladders/" + pad(s), [s, lim] { return ladders_case(s, lim); }});
                         if (s % 5 == 1) jobs.push_back({"smoke/" + pad(s), [s] { return smoke_case(s); }});
                     }});
        d.push_back({{"structures", 50, "modulator sizes, bi-paths and domino-chain templates, domino proof"},
                     [](std::uint64_t s, std::vector<Job>& jobs, const OracleLimits&) {
                         jobs.push_back({pad(s), [s] { return structure_case(s); }});
                     }});
        return d;
    }();
    return defs;
}

void add_jobs(const SuiteDef& def, const VerifyOptions& opts, std::vector<Job>& jobs, const std::string& prefix) {
    const std::uint64_t lo = opts.seed_lo;
    const std::uint64_t hi = opts.seed_hi ? opts.seed_hi : lo + def.info.default_seeds - 1;
    std::vector<Job> local;
    for (std::uint64_t s = lo; s <= hi; ++s) def.per_seed(s, local, opts.limits);
    for (auto& j : local) {
        j.id = prefix + j.id;
        jobs.push_back(std::move(j));
    }
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> list = [] {
        std::vector<SuiteInfo> v;
        for (auto& d : suite_defs()) v.push_back(d.info);
        v.push_back({"generators", 20, "compositions and structures together"});
        v.push_back({"matching-restriction", 1000, "same as theorem2"});
        return v;
    }();
    return list;
}

std::vector<CaseReport> run_suite(const std::string& requested, const VerifyOptions& opts) {
    const std::string name = requested == "matching-restriction" ? "theorem2" : requested;
    std::vector<Job> jobs;
    if (name == "generators") {
        for (auto& d : suite_defs())
            if (d.info.name == "compositions" || d.info.name == "structures") add_jobs(d, opts, jobs, d.info.name + "/");
        jobs.push_back({"structures/domino-proof", [] {
                            const auto covers = domino_boundary_covers();
                            return std::vector<Check>{expect("", domino_two_traversal_property(),
                                                             std::to_string(covers.size()) + " boundary covers")};
                        }});
        return execute(name, std::move(jobs), opts.jobs);
    }
    for (auto& d : suite_defs())
        if (d.info.name == name) {
            add_jobs(d, opts, jobs, "");
            if (name == "structures")
                jobs.push_back({"domino-proof", [] {
                                    const auto covers = domino_boundary_covers();
                                    return std::vector<Check>{expect("", domino_two_traversal_property(),
                                                                     std::to_string(covers.size()) + " boundary covers")};
                                }});
            return execute(name, std::move(jobs), opts.jobs);
        }
    throw InputError("unknown suite '" + name + "'");
}

nlohmann::json reports_to_json(const std::vector<CaseReport>& reports) {
    nlohmann::json a = nlohmann::json::array();
    for (auto& r : reports)
        a.push_back({{"case", r.id}, {"suite", r.suite}, {"verdict", r.verdict}, {"millis", r.millis}, {"detail", r.detail}});
    return a;
}

std::string verdict_table(const std::vector<CaseReport>& reports) {
    std::ostringstream o;
    std::size_t width = 4;
    for (auto& r : reports) width = std::max(width, r.id.size());
    std::map<std::string, int> count;
    for (auto& r : reports) {
        o << r.id << std::string(width - r.id.size() + 2, ' ') << r.verdict;
        if (!r.detail.empty()) o << "  " << r.detail;
        o << '\n';
        ++count[r.verdict];
    }
    o << "summary: " << reports.size() << " cases";
    for (auto& [v, c] : count) o << ", " << c << ' ' << v;
    o << '\n';
    return o.str();
}

bool all_pass(const std::vector<CaseReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CaseReport& r) { return r.verdict == "PASS"; });
}

}  // namespace kernelcut
