// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kernelcut/verify.hpp"

using namespace kernelcut;

namespace {

using Filter = std::function<bool(const CaseReport&)>;

bool has_prefix(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }
bool has_suffix(const std::string& s, const std::string& p) {
    return s.size() >= p.size() && s.compare(s.size() - p.size(), p.size(), p) == 0;
}

struct Tally {
    std::size_t total = 0, passed = 0, unknown = 0;
    std::string first_failure;
};

Tally tally(const std::vector<CaseReport>& reports, const Filter& keep) {
    Tally t;
    for (const auto& r : reports) {
        if (!keep(r)) continue;
        ++t.total;
        if (r.verdict == "PASS") {
            ++t.passed;
        } else {
            if (r.verdict == "FAIL-UNKNOWN") ++t.unknown;
            if (t.first_failure.empty()) t.first_failure = r.id + " " + r.detail;
        }
    }
    return t;
}

int failures = 0;

void report(int number, const std::string& what, const Tally& t, std::size_t expected, double seconds) {
    const bool ok = t.total > 0 && t.passed == t.total && t.unknown == 0 && (expected == 0 || t.total == expected);
    if (!ok) ++failures;
    std::printf("criterion %2d  %s  %s: %zu/%zu pass", number, ok ? "PASS" : "FAIL", what.c_str(), t.passed, t.total);
    if (t.unknown) std::printf(", %zu unknown", t.unknown);
    if (expected && t.total != expected) std::printf(", expected %zu cases", expected);
    std::printf(" (%.1f s)\n", seconds);
    if (!ok && !t.first_failure.empty()) std::printf("              first failure: %s\n", t.first_failure.c_str());
    std::fflush(stdout);
}

struct Timed {
    std::vector<CaseReport> reports;
    double seconds = 0;
};

Timed run(const std::string& suite, std::uint64_t seeds) {
    VerifyOptions opts;
    opts.seed_lo = 1;
    opts.seed_hi = seeds;
    const auto t0 = std::chrono::steady_clock::now();
    Timed t;
    t.reports = run_suite(suite, opts);
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return t;
}

}  // namespace

int main() {
    const Timed sizes = run("sizes", 500);
    report(1, "vertex-cover long-cycle kernel size", tally(sizes.reports, [](const CaseReport& r) {
               return has_prefix(r.id, "long-cycle/");
           }),
           500, sizes.seconds);

    const Timed eq = run("equivalence", 200);
    report(2, "answer preservation over all kernel cells",
           tally(eq.reports, [](const CaseReport& r) { return has_suffix(r.id, "/answer"); }), 18 * 200, eq.seconds);

    const Timed matching = run("matching-restriction", 1000);
    report(3, "matched-vertex restriction property", tally(matching.reports, [](const CaseReport&) { return true; }),
           1000, matching.seconds);

    const Timed hk = run("heldkarp", 200);
    report(4, "labeled multigraph longest cycle", tally(hk.reports, [](const CaseReport&) { return true; }), 200,
           hk.seconds);

    const Timed cl = run("cluster-fpt", 200);
    report(5, "cluster long-cycle enumeration", tally(cl.reports, [](const CaseReport&) { return true; }), 200,
           cl.seconds);

    const Timed fp = run("fp-fpt", 200);
    report(6, "forbidden-pairs subset enumeration", tally(fp.reports, [](const CaseReport&) { return true; }), 0,
           fp.seconds);

    const Timed comp = run("compositions", 20);
    report(7, "compositions answer the OR of their inputs",
           tally(comp.reports, [](const CaseReport&) { return true; }), 0, comp.seconds);

    const Timed st = run("structures", 50);
    Tally domino = tally(st.reports, [](const CaseReport& r) { return r.id == "domino-proof"; });
    Tally structure = tally(st.reports, [](const CaseReport&) { return true; });
    if (domino.total != 1) structure.passed = 0;  // the gadget proof must be part of the run
    report(8, "modulator sizes, structure checks and gadget proof", structure, 0, st.seconds);

    report(9, "max-leaf kernel bounds", tally(eq.reports, [](const CaseReport& r) {
               return has_prefix(r.id, "maxleaf/") && has_suffix(r.id, "/bounds");
           }),
           4 * 200, 0);

    report(10, "kernels are idempotent", tally(eq.reports, [](const CaseReport& r) {
               return has_suffix(r.id, "/idempotent");
           }),
           0, 0);

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
