#include "plurality/sweep.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <tuple>

#include "plurality/conditions.hpp"
#include "plurality/error.hpp"
#include "plurality/reduction.hpp"

namespace plurality {

namespace {

std::uint64_t bounded_universe(const Space& space, std::uint64_t bound, const char* purpose) {
    const std::uint64_t universe = space.universe_size();
    if (universe > bound)
        throw Error("position universe " + std::to_string(space.answer_count()) + "^" +
                    std::to_string(space.question_count()) + " exceeds the " + purpose +
                    " bound of " + std::to_string(bound));
    return universe;
}

Model subset_model(const Space& space, const std::vector<Position>& universe,
                   std::uint64_t mask) {
    std::vector<Position> members;
    members.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (mask >> i & 1)
            members.push_back(universe[i]);
    }
    return build_model(space, std::move(members));
}

// Literal re-evaluation of every quantified condition and its negation,
// kept deliberately separate from the evaluators it cross-checks.
struct NaiveConditions {
    bool g, not_g, m, not_m, weak_g, not_weak_g, weak_m, not_weak_m, s;
};

NaiveConditions naive_conditions(const Model& model) {
    const int k = model.size();
    const int n = model.space().question_count();
    const auto cell = [&](int x, int y) -> const std::vector<int>& {
        return model.answer_set(x, y);
    };

    NaiveConditions r{};
    r.g = true;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                r.g = r.g && cell(x, y) == cell(x, z);
    r.not_g = false;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                r.not_g = r.not_g || cell(x, y) != cell(x, z);
    r.m = true;
    for (int y = 1; y <= n; ++y)
        for (int w = 1; w <= k; ++w)
            for (int x = 1; x <= k; ++x)
                r.m = r.m && cell(w, y) == cell(x, y);
    r.not_m = false;
    for (int y = 1; y <= n; ++y)
        for (int w = 1; w <= k; ++w)
            for (int x = 1; x <= k; ++x)
                r.not_m = r.not_m || cell(w, y) != cell(x, y);
    r.weak_g = false;
    for (int x = 1; x <= k; ++x) {
        bool uniform = true;
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                uniform = uniform && cell(x, y) == cell(x, z);
        r.weak_g = r.weak_g || uniform;
    }
    r.not_weak_g = true;
    for (int x = 1; x <= k; ++x) {
        bool mixes = false;
        for (int y = 1; y <= n; ++y)
            for (int z = 1; z <= n; ++z)
                mixes = mixes || cell(x, y) != cell(x, z);
        r.not_weak_g = r.not_weak_g && mixes;
    }
    r.weak_m = false;
    for (int y = 1; y <= n; ++y) {
        bool constant = true;
        for (int w = 1; w <= k; ++w)
            for (int x = 1; x <= k; ++x)
                constant = constant && cell(w, y) == cell(x, y);
        r.weak_m = r.weak_m || constant;
    }
    r.not_weak_m = true;
    for (int y = 1; y <= n; ++y) {
        bool contested = false;
        for (int w = 1; w <= k; ++w)
            for (int x = 1; x <= k; ++x)
                contested = contested || cell(w, y) != cell(x, y);
        r.not_weak_m = r.not_weak_m && contested;
    }
    r.s = false;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= n; ++y)
            r.s = r.s || cell(x, y).size() > 1;
    return r;
}

class LawChecker {
public:
    LawChecker(const Space& space, const std::vector<Position>& universe)
        : space_(space), universe_(universe) {}

    void check(std::uint64_t mask, SweepReport& report) {
        const Model model = subset_model(space_, universe_, mask);
        const TaxonReport taxon = classify(model);
        ++report.models_checked;
        ++report.taxon_counts[static_cast<std::size_t>(taxon.primary)];
        report.hybrid_pluralist_count += taxon.hybrid_pluralist;
        report.hybrid_localist_count += taxon.hybrid_localist;
        report.strict_count += taxon.strict;

        check_profile_agreement(mask, model, taxon, report);
        check_unique_taxon(mask, taxon, report);
        check_entailments(mask, taxon.profile, report);
        check_subtotality(mask, taxon, report);
        check_witnesses(mask, model, taxon.profile, report);
        check_merge_invariance(mask, model, taxon, report);
    }

private:
    void violation(SweepReport& report, std::uint64_t mask, std::string law,
                   std::string detail) {
        report.law_violations.push_back({mask, std::move(law), std::move(detail)});
    }

    void check_profile_agreement(std::uint64_t mask, const Model& model,
                                 const TaxonReport& taxon, SweepReport& report) {
        const NaiveConditions naive = naive_conditions(model);
        if (naive.g == naive.not_g || naive.m == naive.not_m ||
            naive.weak_g == naive.not_weak_g || naive.weak_m == naive.not_weak_m)
            violation(report, mask, "quantifier-coherence",
                      "a condition and its negation evaluated alike");
        const auto& p = taxon.profile;
        if (p.g != naive.g || p.m != naive.m || p.weak_g != naive.weak_g ||
            p.weak_m != naive.weak_m || p.s != naive.s)
            violation(report, mask, "profile-agreement",
                      "profile disagrees with naive quantifier evaluation");
    }

    void check_unique_taxon(std::uint64_t mask, const TaxonReport& taxon,
                            SweepReport& report) {
        const auto& p = taxon.profile;
        const bool is[4] = {p.g && p.m, p.g && !p.m, !p.g && p.m, !p.g && !p.m};
        int hits = 0;
        for (bool b : is)
            hits += b;
        if (hits != 1 || !is[static_cast<std::size_t>(taxon.primary)])
            violation(report, mask, "unique-taxon",
                      "model does not fall under exactly its reported taxon");
    }

    void check_entailments(std::uint64_t mask, const ConditionProfile& p,
                           SweepReport& report) {
        if (p.g && !p.weak_g)
            violation(report, mask, "entailment", "(G) holds but (G') fails");
        if (p.m && !p.weak_m)
            violation(report, mask, "entailment", "(M) holds but (M') fails");
        if (!p.g && p.m && p.weak_g)
            violation(report, mask, "entailment", "(~G) and (M) hold but (G') holds");
        if (p.g && !p.m && p.weak_m)
            violation(report, mask, "entailment", "(G) and (~M) hold but (M') holds");
    }

    void check_subtotality(std::uint64_t mask, const TaxonReport& taxon,
                           SweepReport& report) {
        const bool lp = taxon.primary == Taxon::local_pluralism;
        if (!lp && (taxon.hybrid_pluralist || taxon.hybrid_localist || taxon.strict)) {
            violation(report, mask, "sub-totality", "refinement flag outside local pluralism");
            return;
        }
        if (lp && taxon.strict == (taxon.hybrid_pluralist || taxon.hybrid_localist))
            violation(report, mask, "sub-totality",
                      "local pluralism must be strict or hybrid, exclusively");
    }

    void check_witnesses(std::uint64_t mask, const Model& model, const ConditionProfile& p,
                         SweepReport& report) {
        const auto expect = [&](bool present, const std::optional<Witness>& w,
                                const char* name) {
            if (w.has_value() != present) {
                violation(report, mask, "witness-replay",
                          std::string(name) + (present ? " witness missing" : " witness spurious"));
                return;
            }
            if (w && !witness_holds(model, *w))
                violation(report, mask, "witness-replay",
                          std::string(name) + " witness does not replay");
        };
        expect(!p.g, p.mixed_position, "(~G)");
        expect(!p.m, p.contested_question, "(~M)");
        expect(p.weak_g, p.uniform_position, "(G')");
        expect(p.weak_m, p.constant_question, "(M')");
        expect(p.s, p.joint_answer, "(S)");
    }

    void check_merge_invariance(std::uint64_t mask, const Model& model,
                                const TaxonReport& taxon, SweepReport& report) {
        const Model merged = merge_questions(model);
        const TaxonReport after = classify(merged);
        if (!after.profile.same_truth_values(taxon.profile))
            violation(report, mask, "merge-invariance", "condition values changed by merge");
        if (after.primary != taxon.primary ||
            after.hybrid_pluralist != taxon.hybrid_pluralist ||
            after.hybrid_localist != taxon.hybrid_localist || after.strict != taxon.strict ||
            after.syncretist != taxon.syncretist)
            violation(report, mask, "merge-invariance", "taxon or flags changed by merge");
        if (merge_questions(merged) != merged)
            violation(report, mask, "merge-invariance", "merge is not idempotent");
    }

    const Space& space_;
    const std::vector<Position>& universe_;
};

} // namespace

std::vector<Position> enumerate_positions(const Space& space) {
    const std::uint64_t universe =
        bounded_universe(space, max_enumerable_universe, "enumeration");
    const int n = space.question_count();
    const int m = space.answer_count();

    std::vector<Position> positions;
    positions.reserve(static_cast<std::size_t>(universe));
    std::vector<int> odometer(static_cast<std::size_t>(n), 1);
    for (std::uint64_t i = 0; i < universe; ++i) {
        positions.push_back(Position(odometer));
        for (int q = n - 1; q >= 0; --q) {
            auto& digit = odometer[static_cast<std::size_t>(q)];
            if (digit < m) {
                ++digit;
                break;
            }
            digit = 1;
        }
    }
    return positions;
}

Model maximal_model(const Space& space) {
    return build_model(space, enumerate_positions(space));
}

std::uint64_t for_each_nonempty_subset(const Space& space,
                                       const std::function<void(const Model&)>& visit) {
    const std::uint64_t universe = bounded_universe(space, max_sweep_universe, "subset sweep");
    const std::vector<Position> positions = enumerate_positions(space);
    const std::uint64_t subsets = (std::uint64_t{1} << universe) - 1;
    for (std::uint64_t mask = 1; mask <= subsets; ++mask)
        visit(subset_model(space, positions, mask));
    return subsets;
}

SweepReport verify_laws(const Space& space, int threads) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t universe = bounded_universe(space, max_sweep_universe, "subset sweep");
    const std::vector<Position> positions = enumerate_positions(space);
    const std::uint64_t subsets = (std::uint64_t{1} << universe) - 1;

    int workers = threads;
    if (workers <= 0)
        workers = static_cast<int>(std::min<unsigned>(
            std::max(1u, std::thread::hardware_concurrency()), 8u));
    if (subsets < 8192)
        workers = 1;
    workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(workers), subsets));

    std::vector<SweepReport> partials(static_cast<std::size_t>(workers), SweepReport{space});
    const auto run = [&](int worker) {
        LawChecker checker(space, positions);
        SweepReport& local = partials[static_cast<std::size_t>(worker)];
        // Masks striped by worker; merged counts do not depend on the split.
        for (std::uint64_t mask = 1 + static_cast<std::uint64_t>(worker); mask <= subsets;
             mask += static_cast<std::uint64_t>(workers))
            checker.check(mask, local);
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto& t : pool)
            t.join();
    }

    SweepReport report{space};
    for (auto& partial : partials) {
        report.models_checked += partial.models_checked;
        for (std::size_t t = 0; t < report.taxon_counts.size(); ++t)
            report.taxon_counts[t] += partial.taxon_counts[t];
        report.hybrid_pluralist_count += partial.hybrid_pluralist_count;
        report.hybrid_localist_count += partial.hybrid_localist_count;
        report.strict_count += partial.strict_count;
        report.law_violations.insert(report.law_violations.end(),
                                     std::make_move_iterator(partial.law_violations.begin()),
                                     std::make_move_iterator(partial.law_violations.end()));
    }
    std::sort(report.law_violations.begin(), report.law_violations.end(),
              [](const LawViolation& a, const LawViolation& b) {
                  return std::tie(a.subset_mask, a.law, a.detail) <
                         std::tie(b.subset_mask, b.law, b.detail);
              });
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace plurality
