// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tilepump/certify.hpp"
#include "tilepump/engine/algorithm.hpp"
#include "tilepump/engine/conclude.hpp"
#include "tilepump/engine/monitor.hpp"
#include "tilepump/engine/uturn.hpp"
#include "tilepump/model/errors.hpp"
#include "tilepump/model/fragility.hpp"
#include "tilepump/model/pumping.hpp"
#include "tilepump/movies/bounds.hpp"
#include "tilepump/movies/wml.hpp"
#include "tilepump/visibility.hpp"
#include "tptest/corpus.hpp"
#include "tptest/fixtures.hpp"
#include "tptest/oracles.hpp"
#include "tptest/random.hpp"

using namespace tilepump;
namespace oracle = tptest::oracle;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(const std::string& name, Line line, double secs, double limit = 0)
{
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs << " s";
    if (limit > 0 && secs > limit) {
        line.pass = false;
        t << " > " << limit << " s limit";
    }
    if (!line.pass)
        ++failures;
    std::cout << (line.pass ? "PASS " : "FAIL ") << name << ": " << line.detail << " [" << t.str() << "]"
              << std::endl;
}

// One algorithm run recorded from the corpus, kept for the later criteria.
struct CorpusRun {
    std::size_t system = 0;
    PathAssembly prefix;
    std::optional<PumpableCertificate> pumpable;
    std::optional<FragileCertificate> fragile;
};

struct CorpusStats {
    std::size_t systems = 0, paths = 0, fired = 0, runs = 0;
    std::size_t pumpable = 0, fragile = 0, other = 0, bad_certs = 0, errors = 0;
    std::size_t invariant_violations = 0, invariant_checks = 0;
    std::size_t trous_pairs = 0, trous_violations = 0;
    std::string first_failure;
    double seconds = 0;
};

std::vector<tptest::CorpusSystem> systems;
std::vector<CorpusRun> runs;

CorpusStats run_corpus()
{
    const auto t0 = Clock::now();
    CorpusStats st;
    systems = tptest::corpus_systems(2);
    st.systems = systems.size();
    auto fail = [&](const std::string& what) {
        if (st.first_failure.empty())
            st.first_failure = what;
    };

    for (std::size_t s = 0; s < systems.size(); ++s) {
        const auto& sys = systems[s];
        // A run depends only on (P_[1,k], i, j, hand).
        std::set<std::tuple<std::vector<std::tuple<Coord, Coord, TileId>>, std::size_t, std::size_t, int>> memo;
        st.paths += tptest::enumerate_paths(sys.tas, 10, tptest::corpus_window(), [&](const tptest::PathVisit& v) {
            if (!v.uturn_candidate)
                return;
            const auto p = PathAssembly::unchecked(std::vector<Placement>(v.steps.begin(), v.steps.end()));
            for (Side hand : {Side::West, Side::East}) {
                const auto u = detect_nice_uturn(sys.tas, p, hand);
                if (!u)
                    continue;
                ++st.fired;
                std::vector<std::tuple<Coord, Coord, TileId>> key;
                for (std::size_t n = 1; n <= u->k; ++n)
                    key.emplace_back(p.pos(n).x, p.pos(n).y, p.type(n));
                if (!memo.insert({key, u->i, u->j, static_cast<int>(hand)}).second)
                    continue;
                ++st.runs;
                const PathAssembly pre = p.prefix(u->k);
                CorpusRun rec{s, pre, std::nullopt, std::nullopt};
                try {
                    const AlgoRun r = run_algorithm(sys.tas, pre, u->i, u->j, {}, hand);
                    ++st.invariant_checks;
                    if (check_stake_invariants(sys.tas, pre, r.outcome.state).claim != 0) {
                        ++st.invariant_violations;
                        fail(sys.id + ": final state breaks a stake claim");
                    }
                    const auto& state = r.outcome.state;
                    const auto trous =
                        south_pump_monitor(pre, state.history, pre.pos(state.j) - pre.pos(state.i));
                    st.trous_pairs += trous.kind != TrousCheck::Kind::Vacuous;
                    if (trous.kind == TrousCheck::Kind::Violation) {
                        ++st.trous_violations;
                        fail(sys.id + ": " + trous.detail);
                    }
                    if (r.outcome.kind == OutcomeKind::Pumpable && r.outcome.pumpable) {
                        ++st.pumpable;
                        rec.pumpable = r.outcome.pumpable;
                        if (!verify_pumpable(sys.tas, pre, *rec.pumpable) ||
                            !oracle::pumpable_valid(sys.tas, pre, *rec.pumpable)) {
                            ++st.bad_certs;
                            fail(sys.id + ": pumpable certificate rejected");
                        }
                    } else if (r.outcome.kind == OutcomeKind::Fragile && r.outcome.fragile) {
                        ++st.fragile;
                        rec.fragile = r.outcome.fragile;
                        if (!verify_fragile(sys.tas, pre, *rec.fragile) ||
                            !oracle::fragile_valid(sys.tas, pre, *rec.fragile)) {
                            ++st.bad_certs;
                            fail(sys.id + ": fragile certificate rejected");
                        }
                    } else {
                        ++st.other;
                        fail(sys.id + ": " + std::string(to_string(r.outcome.kind)) + " " + r.outcome.reason);
                    }
                } catch (const Error& e) {
                    ++st.errors;
                    if (e.code() == ErrorCode::InvariantViolation)
                        ++st.invariant_violations;
                    fail(sys.id + ": " + e.what());
                }
                runs.push_back(std::move(rec));
            }
        });
    }
    st.seconds = seconds_since(t0);
    return st;
}

Line bounds_line()
{
    const std::pair<const char*, std::map<std::string, std::uint64_t>> cases[] = {
        {"f_b", {{"T", 1}, {"n", 1}}},
        {"B_seed", {{"T", 2}, {"sigma", 1}}},
        {"B_s", {{"T", 1}, {"w", 3}, {"h", 2}}},
    };
    const char* expected[] = {"3", "5", "32"};
    Line l{true, ""};
    for (std::size_t n = 0; n < 3; ++n) {
        const auto got = bound(cases[n].first, cases[n].second).value.str();
        l.detail += std::string(n ? ", " : "") + cases[n].first + "=" + got;
        l.pass = l.pass && got == expected[n];
    }
    return l;
}

Line trichotomy_line(const CorpusStats& st)
{
    const bool ok = st.runs > 0 && st.other == 0 && st.errors == 0 && st.bad_certs == 0;
    std::ostringstream d;
    d << st.systems << " systems, " << st.paths << " paths, " << st.fired << " U-turns, " << st.runs
      << " distinct runs: " << st.pumpable << " pumpable, " << st.fragile << " fragile, " << st.other
      << " other, " << st.errors << " errors, " << st.bad_certs << " rejected certificates";
    if (!st.first_failure.empty())
        d << "; first failure " << st.first_failure;
    return {ok, d.str()};
}

Line lemma_line()
{
    std::mt19937_64 rng(2024);
    std::size_t split = 0, ordered = 0, tiles = 0;
    const std::size_t n = 1000;
    for (std::size_t k = 0; k < n; ++k) {
        const auto inst = tptest::draw_instance(rng, {1, 4, 2, 4, 30, 2, true, 3});
        tiles += inst.path.size();
        split += watershed(inst.path, inst.tas.seed()).split;
        ordered += check_order(inst.path, inst.tas.seed()).ok;
    }
    std::ostringstream d;
    d << "watershed split on " << split << "/" << n << ", order ok on " << ordered << "/" << n
      << " last-highest paths of mean length " << tiles / n;
    return {split == n && ordered == n, d.str()};
}

Line invariant_line(const CorpusStats& st)
{
    std::ostringstream d;
    d << st.invariant_checks << " runs checked at every step and at the final state, " << st.invariant_violations
      << " violations";
    return {st.invariant_checks > 0 && st.invariant_violations == 0, d.str()};
}

bool accepts(const std::function<Verdict()>& verify)
{
    try {
        return static_cast<bool>(verify());
    } catch (const Error&) {
        return false;
    }
}

Line soundness_line(const CorpusStats& st)
{
    const std::size_t emitted = st.pumpable + st.fragile;
    std::mt19937_64 rng(77);
    const Vector steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::size_t mutants = 0, rejected = 0, discarded = 0, attempts = 0;
    while (mutants < 500 && attempts < 100000) {
        ++attempts;
        const auto& run = runs[std::uniform_int_distribution<std::size_t>(0, runs.size() - 1)(rng)];
        const auto& tas = systems[run.system].tas;
        const auto& p = run.prefix;
        const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
        bool valid = false, accepted = false;
        if (run.pumpable) {
            PumpableCertificate c = *run.pumpable;
            const int delta = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
            switch (kind) {
            case 0: c.i += delta; break;
            case 1: c.j += delta; break;
            case 2: c.verified_horizon -= std::min<std::size_t>(c.verified_horizon, 1); break;
            default: c.decision_horizon -= std::min<std::size_t>(c.decision_horizon, 1); break;
            }
            if (c == *run.pumpable)
                continue;
            try {
                valid = oracle::pumpable_valid(tas, p, c);
            } catch (const std::exception&) {
                valid = false;
            }
            accepted = accepts([&] { return verify_pumpable(tas, p, c); });
        } else if (run.fragile) {
            FragileCertificate c = *run.fragile;
            auto& order = c.growth_order;
            const Vector shift = steps[std::uniform_int_distribution<int>(0, 3)(rng)];
            const std::size_t at = std::uniform_int_distribution<std::size_t>(0, order.size() - 1)(rng);
            switch (kind) {
            case 0: order[at].pos += shift; break;
            case 1: c.conflict_point += shift; break;
            case 2: order[at].tile = (order[at].tile + 1) % tas.tiles().size(); break;
            default:
                if (order.size() < 2)
                    continue;
                order.erase(order.begin() + static_cast<std::ptrdiff_t>(at));
                break;
            }
            if (c == *run.fragile)
                continue;
            valid = oracle::fragile_valid(tas, p, c);
            accepted = accepts([&] { return verify_fragile(tas, p, c); });
        } else {
            continue;
        }
        // A mutation can land on another genuine certificate; those are not counted.
        if (valid) {
            ++discarded;
            continue;
        }
        ++mutants;
        rejected += !accepted;
    }
    std::ostringstream d;
    d << emitted << " emitted certificates verified (" << st.bad_certs << " rejected); " << rejected << "/"
      << mutants << " invalid mutants rejected, " << discarded << " mutants still valid and set aside";
    return {emitted > 0 && st.bad_certs == 0 && mutants == 500 && rejected == mutants, d.str()};
}

Line pumping_oracle_line()
{
    std::size_t pairs = 0, agree = 0;
    std::string first;
    auto check = [&](const TileAssemblySystem& tas, const PathAssembly& p, const std::string& where) {
        for (std::size_t i = 1; i <= p.size(); ++i)
            for (std::size_t j = i + 1; j <= p.size(); ++j) {
                if (p.type(i) != p.type(j))
                    continue;
                ++pairs;
                const auto d = decide_pumping(tas, p, i, j);
                const std::size_t m = oracle::naive_horizon(tas, p, i, j);
                const auto naive = oracle::naive_pumping(tas, p, i, j, 3 * m);
                bool same = d.infinite == !naive.has_value();
                if (same && naive)
                    same = naive->point == d.point && naive->index == d.index;
                if (same)
                    ++agree;
                else if (first.empty())
                    first = where + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
    };
    for (const auto& run : runs)
        check(systems[run.system].tas, run.prefix, systems[run.system].id);
    std::ostringstream d;
    d << "decide_pumping matches naive growth to 3x the horizon on " << agree << "/" << pairs
      << " same-type pairs of " << runs.size() << " corpus instances";
    if (!first.empty())
        d << "; first mismatch " << first;
    return {pairs > 0 && agree == pairs, d.str()};
}

Line fragility_oracle_line()
{
    constexpr std::size_t kCap = 100000;
    constexpr std::size_t kStride = 20;
    std::size_t instances = 0, agree = 0, skipped = 0, conflicts = 0;
    std::string first;
    for (std::size_t s = 0; s < systems.size(); s += kStride) {
        const auto& sys = systems[s];
        tptest::enumerate_paths(sys.tas, 2, Box{-2, -2, 2, 2}, [&](const tptest::PathVisit& v) {
            const auto p = PathAssembly::unchecked(std::vector<Placement>(v.steps.begin(), v.steps.end()));
            const Box b = p.bounds().united(sys.tas.seed().bounds());
            if (b.width() > 2 || b.height() > 2)
                return;  // keeps the search window within 8x8
            ++instances;
            FragilityLimits limits;
            limits.window_margin = 3;
            limits.max_assemblies = kCap;
            std::optional<FragilityWitness> w;
            try {
                w = fragility_witness(sys.tas, p, limits);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SearchBudgetExhausted)
                    throw;
                ++skipped;
                return;
            }
            const auto e = oracle::producible_conflict(sys.tas, p, b.expanded(3), kCap);
            if (e.exhausted && !e.conflict_found) {
                ++skipped;
                return;
            }
            conflicts += e.conflict_found;
            if (w.has_value() == e.conflict_found)
                ++agree;
            else if (first.empty())
                first = sys.id;
        });
    }
    const std::size_t compared = instances - skipped;
    std::ostringstream d;
    d << "fragility_witness matches exhaustive enumeration on " << agree << "/" << compared << " instances ("
      << conflicts << " with a conflict, " << skipped << " over the " << kCap << "-assembly cap)";
    if (!first.empty())
        d << "; first mismatch " << first;
    return {compared > 0 && agree == compared, d.str()};
}

Line trous_line(const CorpusStats& st)
{
    std::ostringstream d;
    d << st.runs << " traces, " << st.trous_pairs << " with intersecting south attempts, " << st.trous_violations
      << " violations";
    return {st.runs > 0 && st.trous_violations == 0, d.str()};
}

bool same_outcome(Outcome a, Outcome b)
{
    return a.kind == b.kind && a.pumpable == b.pumpable && a.fragile == b.fragile && a.mode == b.mode &&
           a.suffix_index == b.suffix_index && a.state == b.state;
}

Line mirror_line()
{
    std::mt19937_64 rng(99);
    const std::size_t n = 200;
    std::size_t ok = 0, algorithm_runs = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto inst = tptest::draw_instance(rng, {2, 4, 3, 10, 30, 2, false, 4});
        const auto m = tptest::mirror(inst);
        bool good = true;
        for (Side side : {Side::East, Side::West})
            good = good && mirror(visible_glues(inst.path, inst.tas.seed(), side)) ==
                               visible_glues(m.path, m.tas.seed(), other(side));
        const auto a = conclude(inst.tas, inst.path);
        const auto b = conclude(m.tas, m.path);
        good = good && a.outcome == b.outcome;
        for (Side hand : {Side::West, Side::East}) {
            const auto pair = find_initial_pair(inst.tas, inst.path, default_height_budget(inst.tas), hand);
            const auto mpair = find_initial_pair(m.tas, m.path, default_height_budget(m.tas), other(hand));
            good = good && pair.kind == mpair.kind && pair.i == mpair.i && pair.j == mpair.j;
            if (pair.kind != InitialPair::Kind::Pair)
                continue;
            ++algorithm_runs;
            auto x = run_algorithm(inst.tas, inst.path, pair.i, pair.j, {}, hand).outcome;
            auto y = run_algorithm(m.tas, m.path, pair.i, pair.j, {}, other(hand)).outcome;
            good = good && same_outcome(mirror(x), y);
        }
        ok += good;
    }
    std::ostringstream d;
    d << ok << "/" << n << " instances map exactly (visibility both sides, conclude, " << algorithm_runs
      << " algorithm runs)";
    return {ok == n, d.str()};
}

Line fixtures_line()
{
    std::vector<std::string> bad;
    const auto line = tptest::fixture("line-e");
    const Box clip = line.path.bounds().united(line.tas.seed().bounds()).expanded(2);
    const auto w = wml_pump(line.tas, line.path, Window::vertical(1, clip), {2, 0});
    if (w.kind != WmlResult::Kind::Pumpable || !w.pumpable || !verify_pumpable(line.tas, line.path, *w.pumpable))
        bad.push_back("LINE-E");

    const auto col = tptest::fixture("col-n");
    const auto c = conclude(col.tas, col.path);
    if (c.outcome != OutcomeKind::Pumpable || !c.pumpable || !verify_pumpable(col.tas, col.path, *c.pumpable))
        bad.push_back("COL-N");

    const auto hook = tptest::fixture("hook-s");
    const auto h = decide_pumping(hook.tas, hook.path, 3, 4);
    if (h.infinite || h.point != Point{1, 0} || h.iteration != 1 || h.against != ConflictAgainst::Obstacle)
        bad.push_back("HOOK-S");

    const auto fork = tptest::fixture("fork");
    const auto f = conclude(fork.tas, fork.path);
    if (f.outcome != OutcomeKind::Fragile || !f.fragile || !verify_fragile(fork.tas, fork.path, *f.fragile))
        bad.push_back("FORK");

    std::string d = "LINE-E wml pumpable, COL-N pumpable, HOOK-S (3,4) obstacle at (1,0) in iteration 1, FORK fragile";
    if (!bad.empty()) {
        d = "wrong:";
        for (const auto& b : bad)
            d += " " + b;
    }
    return {bad.empty(), d};
}

}  // namespace

int main()
{
    auto t = Clock::now();
    report("bound formulas", bounds_line(), seconds_since(t), 1.0);

    const CorpusStats st = run_corpus();
    report("trichotomy on the small corpus", trichotomy_line(st), st.seconds, 600.0);

    t = Clock::now();
    report("watershed and order self-tests", lemma_line(), seconds_since(t), 60.0);

    report("stake invariants", invariant_line(st), st.seconds);

    t = Clock::now();
    report("certificate soundness", soundness_line(st), seconds_since(t));

    t = Clock::now();
    auto pumping = pumping_oracle_line();
    auto fragility = fragility_oracle_line();
    report("oracle equivalence",
           {pumping.pass && fragility.pass, pumping.detail + "; " + fragility.detail}, seconds_since(t));

    report("south-pump monitor", trous_line(st), st.seconds);

    t = Clock::now();
    report("mirror symmetry", mirror_line(), seconds_since(t));

    t = Clock::now();
    report("fixture outcomes", fixtures_line(), seconds_since(t), 10.0);

    std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failing criteria" << std::endl;
    return failures ? 1 : 0;
}
