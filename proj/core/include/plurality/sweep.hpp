#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plurality/model.hpp"
#include "plurality/taxonomy.hpp"

namespace plurality {

/// Largest universe enumerate_positions / maximal_model will materialize.
inline constexpr std::uint64_t max_enumerable_universe = 1'000'000;

/// Largest universe the subset sweep will walk; 2^20 - 1 subsets at most.
inline constexpr std::uint64_t max_sweep_universe = 20;

/// All m^n single-valued positions of the space, in canonical index order
/// (the i-th element has canonical index i). Rejects universes larger than
/// max_enumerable_universe.
std::vector<Position> enumerate_positions(const Space& space);

/// The model admitting every possible position.
Model maximal_model(const Space& space);

/// Visits every non-empty subset of the position universe exactly once, each
/// as a valid model, in ascending order of the subset's bit mask over
/// canonical indices (bit i-1 = position with canonical index i). Returns
/// the number of models visited, 2^(m^n) - 1. Rejects universes larger than
/// max_sweep_universe. The callback must tolerate concurrent invocation on
/// distinct models if the caller parallelizes around this contract.
std::uint64_t for_each_nonempty_subset(const Space& space,
                                       const std::function<void(const Model&)>& visit);

/// One broken law found by verify_laws.
struct LawViolation {
    std::uint64_t subset_mask = 0;
    std::string law;
    std::string detail;
};

/// Outcome of a full subset sweep. Taxon and flag counts partition the
/// checked models; law_violations is empty on a correct build.
struct SweepReport {
    Space space;
    std::uint64_t models_checked = 0;
    std::array<std::uint64_t, 4> taxon_counts{}; // indexed by Taxon
    std::uint64_t hybrid_pluralist_count = 0;
    std::uint64_t hybrid_localist_count = 0;
    std::uint64_t strict_count = 0;
    std::vector<LawViolation> law_violations;
    std::chrono::duration<double> elapsed{};

    std::uint64_t taxon_count(Taxon taxon) const {
        return taxon_counts[static_cast<std::size_t>(taxon)];
    }
};

/// Sweeps every non-empty subset of the space's position universe and checks
/// each resulting model against the laws the taxonomy promises:
///   - exactly one primary taxon, the one its (G)/(M) values dictate;
///   - the entailments g => weak_g, m => weak_m, (!g && m) => !weak_g,
///     (g && !m) => !weak_m;
///   - local-pluralism sub-totality (strict XOR hybrid, flags only there);
///   - agreement of the reported profile with an independent re-evaluation
///     of every quantified condition and its negation;
///   - witness replay for every carried witness;
///   - merge invariance: taxon, flags and condition values survive
///     merge_questions, and merging is idempotent.
/// Violations are collected, not thrown. The mask range is partitioned
/// across `threads` workers (0 = pick automatically); reports merge
/// deterministically.
SweepReport verify_laws(const Space& space, int threads = 0);

} // namespace plurality
