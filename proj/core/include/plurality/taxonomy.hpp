#pragma once

#include <string>
#include <string_view>

#include "plurality/conditions.hpp"
#include "plurality/model.hpp"

namespace plurality {

/// The four primary taxa, determined by the truth values of (G) and (M).
enum class Taxon {
    global_monism,    ///< (G) and (M)
    global_pluralism, ///< (G) and not (M)
    local_monism,     ///< not (G) and (M)
    local_pluralism,  ///< not (G) and not (M)
};

/// Machine key, e.g. "global_monism".
std::string_view taxon_key(Taxon taxon);
/// Human name, e.g. "global monism".
std::string_view taxon_name(Taxon taxon);

/// Classification outcome. The hybrid and strict refinements only apply to
/// local pluralism: hybrid pluralist when (M') also holds, hybrid localist
/// when (G') also holds, strict when neither does. A local-pluralist report
/// is strict or hybrid, never both. The syncretist flag is an orthogonal
/// axis, set whenever (S) holds.
struct TaxonReport {
    Taxon primary = Taxon::global_monism;
    bool hybrid_pluralist = false;
    bool hybrid_localist = false;
    bool strict = false;
    bool syncretist = false;
    ConditionProfile profile;
};

/// Classifies a model. Everything is derived from the condition profile;
/// positions are never re-inspected here.
TaxonReport classify(const Model& model);

/// Full display name of a report's taxon, including refinements, e.g.
/// "strict local pluralism" or "local pluralism (hybrid pluralist)".
std::string taxon_display(const TaxonReport& report);

/// Deterministic plain-text account of a model: its positions, taxon, each
/// condition's truth value, and every witness spelled out with the space's
/// labels.
std::string explain(const Model& model);

/// Same, for an already computed report of the model.
std::string explain(const Model& model, const TaxonReport& report);

} // namespace plurality
