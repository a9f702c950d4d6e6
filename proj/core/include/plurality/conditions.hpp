#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "plurality/model.hpp"

namespace plurality {

/// What a witness certifies. Each kind fixes the shape of the reference
/// lists below.
enum class WitnessKind {
    mixed_position,     ///< ~G: one position, two questions it answers differently
    contested_question, ///< ~M: one question, two positions answering it differently
    uniform_position,   ///< G': one position giving a single answer throughout
    constant_question,  ///< M': one question answered identically in every position
    joint_answer,       ///< S: a position assigning several answers to one question
};

std::string_view witness_kind_name(WitnessKind kind);

/// Concrete evidence for a failed universal or satisfied existential
/// condition. Positions are 1-based ordinals into the model's canonically
/// ordered position set; questions are 1-based question ordinals.
struct Witness {
    WitnessKind kind;
    std::vector<int> positions;
    std::vector<int> questions;

    bool operator==(const Witness&) const = default;
};

/// Replays a witness against a model: true iff the referenced cells actually
/// certify the witness's condition. Throws Error when the references or the
/// shape do not fit the model.
bool witness_holds(const Model& model, const Witness& witness);

/// Truth value of one condition plus the witness its evaluator produces:
/// failure evidence for the universal conditions (G), (M); success evidence
/// for the existential ones (G'), (M'), (S).
struct ConditionCheck {
    bool holds = false;
    std::optional<Witness> witness;
};

/// (G): in every position, every pair of questions receives the same answer.
/// On failure the witness names a position and a question pair it mixes.
ConditionCheck eval_globalism(const Model& model);

/// (M): every question receives the same answer in every position. On
/// failure the witness names a question and a position pair disagreeing
/// on it.
ConditionCheck eval_monism(const Model& model);

/// (G'): some position gives one answer to every question. On success the
/// witness names the first such position.
ConditionCheck eval_weak_globalism(const Model& model);

/// (M'): some question receives one answer in every position. On success the
/// witness names the first such question.
ConditionCheck eval_weak_monism(const Model& model);

/// (S): some position assigns more than one answer to some question. Always
/// false on non-syncretic models.
ConditionCheck eval_syncretism(const Model& model);

/// Truth values of all five conditions with their witnesses. Witnesses are
/// present exactly for the false universals (G), (M) and the true
/// existentials (G'), (M'), (S). Answer comparison is answer-set equality,
/// which on single-valued cells coincides with answer equality.
struct ConditionProfile {
    bool g = false;      ///< (G)
    bool m = false;      ///< (M)
    bool weak_g = false; ///< (G')
    bool weak_m = false; ///< (M')
    bool s = false;      ///< (S)

    std::optional<Witness> mixed_position;     ///< present iff !g
    std::optional<Witness> contested_question; ///< present iff !m
    std::optional<Witness> uniform_position;   ///< present iff weak_g
    std::optional<Witness> constant_question;  ///< present iff weak_m
    std::optional<Witness> joint_answer;       ///< present iff s

    bool same_truth_values(const ConditionProfile& other) const {
        return g == other.g && m == other.m && weak_g == other.weak_g &&
               weak_m == other.weak_m && s == other.s;
    }
};

/// Evaluates all five conditions. The profile satisfies the entailments
/// g => weak_g, m => weak_m, (!g && m) => !weak_g and (g && !m) => !weak_m;
/// they hold by construction and are re-checked here, so a violation throws
/// std::logic_error.
ConditionProfile condition_profile(const Model& model);

} // namespace plurality
