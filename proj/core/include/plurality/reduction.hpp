#pragma once

#include <string>
#include <vector>

#include "plurality/model.hpp"

namespace plurality {

/// Grouping of a model's questions into co-answered classes: two questions
/// share a class exactly when they receive equal answers in every admissible
/// position. Classes are disjoint, cover all questions, and are listed by
/// ascending lowest member; members are ascending within a class.
struct QuestionPartition {
    std::vector<std::vector<int>> classes;
    /// One label per class: the member labels joined with "∧" in original
    /// question order (a singleton class keeps its plain label).
    std::vector<std::string> merged_labels;
};

/// Computes the co-answered partition. Answers are compared as answer sets,
/// so this is defined in both modes; pointwise equality makes the relation
/// an equivalence.
QuestionPartition coanswered_partition(const Model& model);

/// Collapses each co-answered class to its lowest-ordinal representative
/// column, labelled with the class's conjunction label. Keeps the position
/// count and their distinctness; classification is unaffected. A model whose
/// classes are all singletons is returned unchanged. Set-valued models are
/// rejected, as is the pathological case where a conjunction label collides
/// with another merged label.
Model merge_questions(const Model& model);

} // namespace plurality
