#include "plurality/reduction.hpp"

#include <algorithm>

#include "plurality/error.hpp"

namespace plurality {

namespace {

bool columns_equal(const Model& model, int y, int z) {
    for (int x = 1; x <= model.size(); ++x) {
        if (model.answer_set(x, y) != model.answer_set(x, z))
            return false;
    }
    return true;
}

} // namespace

QuestionPartition coanswered_partition(const Model& model) {
    const int n = model.space().question_count();
    QuestionPartition partition;
    std::vector<bool> assigned(static_cast<std::size_t>(n) + 1, false);

    for (int y = 1; y <= n; ++y) {
        if (assigned[static_cast<std::size_t>(y)])
            continue;
        std::vector<int> members{y};
        assigned[static_cast<std::size_t>(y)] = true;
        for (int z = y + 1; z <= n; ++z) {
            if (!assigned[static_cast<std::size_t>(z)] && columns_equal(model, y, z)) {
                members.push_back(z);
                assigned[static_cast<std::size_t>(z)] = true;
            }
        }
        std::string label;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i > 0)
                label += "∧"; // ∧
            label += model.space().question_label(members[i]);
        }
        partition.classes.push_back(std::move(members));
        partition.merged_labels.push_back(std::move(label));
    }
    return partition;
}

Model merge_questions(const Model& model) {
    if (model.syncretic())
        throw Error("merge is defined for single-valued models only");

    QuestionPartition partition = coanswered_partition(model);
    if (partition.classes.size() == static_cast<std::size_t>(model.space().question_count()))
        return model;

    std::vector<std::string> answer_labels(model.space().answer_labels().begin(),
                                           model.space().answer_labels().end());
    Space merged_space(static_cast<int>(partition.classes.size()),
                       model.space().answer_count(), std::move(partition.merged_labels),
                       std::move(answer_labels));

    // Keep each class's lowest-ordinal column. Deleted columns equal their
    // representative in every position, so distinctness and the relative
    // order of positions are preserved.
    std::vector<Position> merged_positions;
    merged_positions.reserve(static_cast<std::size_t>(model.size()));
    for (int x = 1; x <= model.size(); ++x) {
        std::vector<int> answers;
        answers.reserve(partition.classes.size());
        for (const auto& members : partition.classes)
            answers.push_back(model.answer(x, members.front()));
        merged_positions.push_back(Position(std::move(answers)));
    }

    std::vector<std::string> names(model.custom_names().begin(), model.custom_names().end());
    return build_model(std::move(merged_space), std::move(merged_positions), false,
                       std::move(names));
}

} // namespace plurality
