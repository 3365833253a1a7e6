// Acceptance run: one PASS/FAIL line per criterion. Pass --long to also print
// the rank 6-8 table rows (informational, not gated).

#include <cstdio>
#include <cstring>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cfire/central.hpp"
#include "cfire/chips.hpp"
#include "cfire/folding.hpp"
#include "cfire/span.hpp"
#include "cfire/ucf.hpp"
#include "cfire/unlabeled.hpp"

using namespace cfire;

namespace {

// Potential audit shared by criteria 1-6.
PotentialAudit g_audit;
Coord g_min_required = std::numeric_limits<Coord>::max();

void note_type(const RootSystem& rs) { g_min_required = std::min(g_min_required, potential_min_drop(rs)); }

void audit(const RootSystem& rs, const Weight& from, const Weight& to) {
    note_type(rs);
    detail::audit_edge(rs, from, to, g_audit);
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int g_failures = 0;

void report(int k, const char* name, const Outcome& o) {
    std::printf("%s  %d  %s", o.ok ? "PASS" : "FAIL", k, name);
    if (!o.detail.empty()) std::printf("  (%s)", o.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!o.ok) ++g_failures;
}

std::vector<Weight> starts(const RootSystem& rs) {
    std::vector<Weight> out{rs.zero()};
    for (std::size_t i = 0; i < rs.rank(); ++i) out.push_back(rs.fundamental(i));
    return out;
}

std::string label(const Weight& w) {
    if (w.is_zero()) return "0";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 1) return "w" + std::to_string(i + 1);
    }
    return w.str(",");
}

bool table_rows_match(const RootSystem& rs, Outcome& o) {
    SearchOptions opts;
    opts.audit_potential = true;
    note_type(rs);
    bool all = true;
    for (const auto& w : starts(rs)) {
        auto r = decide_confluence(rs, w, opts);
        g_audit.merge(r.audit);
        if (r.confluent != conjecture_prediction(rs, w)) {
            o.fail(rs.type().str() + " from " + label(w));
            all = false;
        }
    }
    return all;
}

Outcome criterion1() {
    Outcome o;
    const char* types[] = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "C2",
                           "C3", "C4", "C5", "D3", "D4", "D5", "G2", "F4"};
    std::size_t rows = 0;
    for (auto t : types) {
        const auto& rs = root_system(t);
        table_rows_match(rs, o);
        rows += rs.rank() + 1;
    }
    if (o.ok) o.detail = std::to_string(rows) + " rows";
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto& d6 = root_system("D6");
    SearchOptions opts;
    opts.audit_potential = true;
    note_type(d6);
    auto r = decide_confluence(d6, d6.zero(), opts);
    g_audit.merge(r.audit);
    if (r.confluent) o.fail("D6 from 0 is confluent");

    const auto& e6 = root_system("E6");
    table_rows_match(e6, o);
    for (const auto& w : {e6.zero(), e6.fundamental(1)}) {
        if (conjecture_prediction(e6, w)) o.fail("E6 prediction marks " + label(w) + " confluent");
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    // (a) A3 unlabeled trajectory.
    const auto& a3 = root_system("A3");
    note_type(a3);
    auto g = orbit_graph(a3, OrbitWeight(a3.zero()));
    const std::set<Weight> states{{0, 0, 0}, {1, 0, 1}, {0, 2, 0}, {2, 1, 0}, {0, 1, 2}, {2, 0, 2}, {1, 2, 1}};
    std::set<Weight> got;
    for (const auto& [w, next] : g) {
        got.insert(w.rep);
        for (const auto& n : next) audit(a3, w.rep, n.rep);
    }
    if (got != states) o.fail("A3 orbit states differ");
    auto term = orbit_terminal_set(a3, OrbitWeight(a3.zero()));
    if (term.size() != 1 || term[0].rep != Weight({1, 2, 1})) o.fail("A3 terminal orbit is not (1,2,1)");
    const std::string fig =
        "0 0 0\n  {1,2,3} -> 1 0 1\n"
        "1 0 1\n  {2} -> 0 2 0\n"
        "0 2 0\n  {1} -> 2 1 0\n  {3} -> 0 1 2\n"
        "2 1 0\n  {3} -> 2 0 2\n"
        "0 1 2\n  {1} -> 2 0 2\n"
        "2 0 2\n  {2} -> 1 2 1\n"
        "1 2 1\n";
    if (ucf_trajectory_text(a3, a3.zero()) != fig) o.fail("A3 UCF trajectory text");

    // (b) E7 diamond.
    const auto& e7 = root_system("E7");
    note_type(e7);
    Weight w6 = e7.fundamental(5);
    std::set<Weight> first;
    for (const auto& [c, h] : ucf_successors(e7, w6)) {
        first.insert(h);
        audit(e7, w6, h);
    }
    if (first != std::set<Weight>{e7.fundamental(2), Coord{2} * e7.fundamental(6)}) o.fail("E7 first layer");
    const Weight bottom = e7.fundamental(1) + e7.fundamental(6);
    for (std::vector<std::size_t> script : {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{1, 0}}) {
        auto steps = ucf_scripted(e7, w6, script);
        Weight prev = w6;
        for (const auto& [c, h] : steps) {
            audit(e7, prev, h);
            prev = h;
        }
        if (prev != bottom) o.fail("E7 order " + std::to_string(script[0]) + "," + std::to_string(script[1]));
    }

    // (c) 11-chip example.
    UnlabeledConfig v{8, 8, 8, 8, 4, 3, 3, 0, 0, 0, 0};
    if (stabilize_unlabeled_typeA(v) != UnlabeledConfig({10, 9, 7, 6, 5, 4, 3, 1, 0, -1, -2})) o.fail("11-chip stabilization");
    if (pseudo_stabilization(v) != UnlabeledConfig({9, 8, 7, 6, 5, 4, 3, 2, 1, -1, -2})) o.fail("11-chip pseudo-stabilization");
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::size_t checked = 0;
    for (auto t : all_types(4)) {
        const auto& rs = root_system(t);
        note_type(rs);
        for (const auto& lam : rs.dominant_lattice_points(Coord{2} * rs.rho())) {
            OrbitWeight start(lam);
            auto g = orbit_graph(rs, start);
            for (const auto& [w, next] : g) {
                for (const auto& n : next) audit(rs, w.rep, n.rep);
            }
            if (orbit_terminal_set(rs, start).size() != 1) o.fail(t.str() + " from " + lam.str(","));
            ++checked;
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " orbits";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(20261016);
    std::size_t moves = 0;
    for (auto t : all_types(8)) {
        if (!t.simply_laced()) continue;
        const auto& rs = root_system(t);
        note_type(rs);
        for (int k = 0; k < 1000; ++k) {
            Weight f = rs.zero();
            for (std::size_t i = 0; i < rs.rank(); ++i) f[i] = (rng() % 2) ? 0 : static_cast<Coord>(rng() % 4);
            for (const auto& c : zero_components(rs, f)) {
                Weight a = ucf_move_affine(rs, f, c);
                if (a != ucf_move_highest_root(rs, f, c)) o.fail(t.str() + " at " + f.str(","));
                audit(rs, f, a);
                ++moves;
            }
        }
    }
    for (auto name : {"A3", "A4", "D4"}) {
        const auto& rs = root_system(name);
        for (const auto& f : rs.dominant_lattice_points(Coord{2} * rs.rho())) {
            if (!ucf_relation_equals_orbit_relation(rs, f)) o.fail(std::string(name) + " relation at " + f.str(","));
            for (const auto& [c, h] : ucf_successors(rs, f)) audit(rs, f, h);
        }
    }
    if (o.ok) o.detail = std::to_string(moves) + " moves compared";
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto check = [&](const RootSystem& rs, const Weight& lam) {
        note_type(rs);
        explore_graph(rs, lam, default_budget(), &g_audit);
        if (typeA_connected(rs, lam) != is_connected(rs, lam)) o.fail(rs.type().str() + " at " + lam.str(","));
    };
    std::size_t n = 0;
    for (auto name : {"A2", "A3"}) {
        const auto& rs = root_system(name);
        for (const auto& lam : rs.lattice_points(Coord{2} * rs.rho())) {
            check(rs, lam);
            ++n;
        }
    }
    const auto& a4 = root_system("A4");
    auto pts = a4.lattice_points(Coord{2} * a4.rho());
    std::mt19937_64 rng(77);
    std::shuffle(pts.begin(), pts.end(), rng);
    const std::size_t take = std::min<std::size_t>(pts.size(), 600);
    for (std::size_t k = 0; k < take; ++k) check(a4, pts[k]);
    if (o.ok) o.detail = std::to_string(n) + " exhaustive, " + std::to_string(take) + " A4 samples";
    return o;
}

Outcome criterion7() {
    Outcome o;
    if (g_audit.edges == 0) o.fail("no edges audited");
    if (g_audit.violations != 0) o.fail(std::to_string(g_audit.violations) + " violations");
    if (g_audit.min_drop < g_min_required) o.fail("min drop " + std::to_string(g_audit.min_drop));
    if (o.ok) {
        o.detail = std::to_string(g_audit.edges) + " edges, min drop " + std::to_string(g_audit.min_drop) + " >= " +
                   std::to_string(g_min_required);
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    struct Case {
        const char* source;
        std::vector<std::vector<std::size_t>> cycles;
        const char* target;
    };
    const std::vector<Case> cases{
        {"A3", {{1, 3}}, "B2"},
        {"A5", {{1, 5}, {2, 4}}, "B3"},
        {"D4", {{1, 3, 4}}, "G2"},
        {"D5", {{4, 5}}, "C4"},
        {"E6", {{1, 6}, {3, 5}}, "F4"},
    };
    for (const auto& c : cases) {
        const auto& rs = root_system(c.source);
        auto f = fold(rs, sigma_from_cycles(rs.rank(), c.cycles));
        if (f.target.str() != c.target) o.fail(std::string(c.source) + " folds to " + f.target.str());
        if (detail::folded_cartan(rs, f.orbits) != root_system(f.target).cartan_matrix()) o.fail(std::string(c.source) + " Cartan");
    }
    const auto& a3 = root_system("A3");
    auto f = fold(a3, sigma_from_cycles(3, {{1, 3}}));
    auto zero = confluence_propagation_check(a3, f, a3.zero());
    if (!zero.source_confluent || !zero.target_confluent || !zero.consistent) o.fail("A3 from 0 does not propagate");
    auto w2 = confluence_propagation_check(a3, f, a3.fundamental(1));
    if (w2.source_confluent || !w2.target_confluent) o.fail("converse failure at w2 not exhibited");
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (auto t : all_types(8)) {
        const auto& rs = root_system(t);
        const std::size_t n = static_cast<std::size_t>(t.rank);
        std::size_t roots = 0;
        Coord det = 1;
        switch (t.family) {
        case Family::A: roots = n * (n + 1) / 2; det = static_cast<Coord>(n) + 1; break;
        case Family::B:
        case Family::C: roots = n * n; det = 2; break;
        case Family::D: roots = n * (n - 1); det = 4; break;
        case Family::E: roots = n == 6 ? 36 : n == 7 ? 63 : 120; det = 9 - static_cast<Coord>(n); break;
        case Family::F: roots = 24; det = 1; break;
        case Family::G: roots = 6; det = 1; break;
        }
        if (rs.positive_roots().size() != roots) o.fail(t.str() + " root count");
        if (rs.det() != det) o.fail(t.str() + " det");
        if (static_cast<Coord>(rs.minuscule().size()) + 1 != det) o.fail(t.str() + " minuscule count");
    }
    return o;
}

void long_rows() {
    for (auto t : all_types(8)) {
        if (t.rank < 6) continue;
        const auto& rs = root_system(t);
        for (const auto& w : starts(rs)) {
            bool computed = is_confluent_from(rs, w);
            std::printf("INFO  %s %-3s computed=%d predicted=%d\n", t.str().c_str(), label(w).c_str(), computed,
                        conjecture_prediction(rs, w));
            std::fflush(stdout);
        }
    }
}

template <class F>
Outcome guarded(F f) {
    try {
        return f();
    } catch (const std::exception& e) {
        Outcome o;
        o.fail(std::string("exception: ") + e.what());
        return o;
    }
}

} // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    for (int i = 1; i < argc; ++i) long_run = long_run || std::strcmp(argv[i], "--long") == 0;

    report(1, "table rows, small rank", guarded(criterion1));
    report(2, "D6 from 0 and E6 rows", guarded(criterion2));
    report(3, "worked-example goldens", guarded(criterion3));
    report(4, "orbit firing confluence, rank <= 4", guarded(criterion4));
    report(5, "UCF rules and orbit equivalence", guarded(criterion5));
    report(6, "type A connectedness", guarded(criterion6));
    report(7, "termination potential", guarded(criterion7));
    report(8, "folding", guarded(criterion8));
    report(9, "root counts and |P/Q|", guarded(criterion9));
    if (long_run) long_rows();
    return g_failures == 0 ? 0 : 1;
}
