#include "plurality/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "plurality/error.hpp"
#include "plurality/indexing.hpp"

namespace plurality {

namespace {

std::vector<std::string> default_labels(const char* prefix, int count) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i)
        labels.push_back(prefix + std::to_string(i));
    return labels;
}

void check_labels(const char* what, const std::vector<std::string>& labels, int count) {
    if (static_cast<int>(labels.size()) != count)
        throw Error(std::string(what) + " labels: expected " + std::to_string(count) +
                    " entries, got " + std::to_string(labels.size()));
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels) {
        if (label.empty())
            throw Error(std::string(what) + " labels: empty label");
        if (!seen.insert(label).second)
            throw Error(std::string(what) + " labels: duplicate label \"" + label + "\"");
    }
}

} // namespace

Space::Space(int question_count, int answer_count)
    : Space(question_count, answer_count, {}, {}) {}

Space::Space(int question_count, int answer_count,
             std::vector<std::string> question_labels,
             std::vector<std::string> answer_labels)
    : question_count_(question_count), answer_count_(answer_count) {
    if (question_count < 1)
        throw Error("space: question count must be at least 1, got " +
                    std::to_string(question_count));
    if (answer_count < 1)
        throw Error("space: answer count must be at least 1, got " +
                    std::to_string(answer_count));
    question_labels_ = question_labels.empty() ? default_labels("Q", question_count)
                                               : std::move(question_labels);
    answer_labels_ = answer_labels.empty() ? default_labels("A", answer_count)
                                           : std::move(answer_labels);
    check_labels("question", question_labels_, question_count_);
    check_labels("answer", answer_labels_, answer_count_);
}

const std::string& Space::question_label(int q) const {
    if (q < 1 || q > question_count_)
        throw Error("question ordinal " + std::to_string(q) + " out of range 1.." +
                    std::to_string(question_count_));
    return question_labels_[static_cast<std::size_t>(q - 1)];
}

const std::string& Space::answer_label(int a) const {
    if (a < 1 || a > answer_count_)
        throw Error("answer ordinal " + std::to_string(a) + " out of range 1.." +
                    std::to_string(answer_count_));
    return answer_labels_[static_cast<std::size_t>(a - 1)];
}

std::uint64_t Space::universe_size() const {
    std::uint64_t size = 1;
    for (int i = 0; i < question_count_; ++i) {
        if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(answer_count_), &size))
            return std::numeric_limits<std::uint64_t>::max();
    }
    return size;
}

Position::Position(std::vector<int> answers) {
    cells_.reserve(answers.size());
    for (int a : answers)
        cells_.push_back({a});
}

Position::Position(std::vector<std::vector<int>> answer_sets)
    : cells_(std::move(answer_sets)) {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        auto& cell = cells_[i];
        std::sort(cell.begin(), cell.end());
        cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
        if (cell.empty())
            throw Error("position: empty answer set at question " + std::to_string(i + 1));
    }
}

bool Position::single_valued() const {
    return std::all_of(cells_.begin(), cells_.end(),
                       [](const auto& cell) { return cell.size() == 1; });
}

int Position::answer(int q) const {
    const auto& cell = answer_set(q);
    if (cell.size() != 1)
        throw Error("position assigns " + std::to_string(cell.size()) +
                    " answers to question " + std::to_string(q) +
                    "; read it with answer_set");
    return cell.front();
}

const std::vector<int>& Position::answer_set(int q) const {
    if (q < 1 || q > question_count())
        throw Error("question ordinal " + std::to_string(q) + " out of range 1.." +
                    std::to_string(question_count()));
    return cells_[static_cast<std::size_t>(q - 1)];
}

void validate_position(const Space& space, const Position& position) {
    if (position.question_count() != space.question_count())
        throw Error("position answers " + std::to_string(position.question_count()) +
                    " questions, space has " + std::to_string(space.question_count()));
    const auto& cells = position.cells();
    for (std::size_t q = 0; q < cells.size(); ++q) {
        if (cells[q].empty())
            throw Error("position: empty answer set at question " + std::to_string(q + 1));
        for (int a : cells[q]) {
            if (a < 1 || a > space.answer_count())
                throw Error("position: answer index " + std::to_string(a) +
                            " at question " + std::to_string(q + 1) +
                            " out of range 1.." + std::to_string(space.answer_count()));
        }
    }
}

Model::Model(Space space, std::vector<Position> positions, bool syncretic,
             std::vector<std::string> names, int duplicates_removed)
    : space_(std::move(space)), positions_(std::move(positions)), syncretic_(syncretic),
      names_(std::move(names)), duplicates_removed_(duplicates_removed) {}

const Position& Model::position(int ordinal) const {
    if (ordinal < 1 || ordinal > size())
        throw Error("position ordinal " + std::to_string(ordinal) + " out of range 1.." +
                    std::to_string(size()));
    return positions_[static_cast<std::size_t>(ordinal - 1)];
}

int Model::answer(int ordinal, int q) const {
    if (syncretic_)
        throw Error("syncretic model: read assignments with answer_set");
    return position(ordinal).answer(q);
}

const std::vector<int>& Model::answer_set(int ordinal, int q) const {
    if (q < 1 || q > space_.question_count())
        throw Error("question ordinal " + std::to_string(q) + " out of range 1.." +
                    std::to_string(space_.question_count()));
    return position(ordinal).answer_set(q);
}

std::string Model::position_name(int ordinal) const {
    const Position& p = position(ordinal);
    if (!names_.empty()) {
        const auto& custom = names_[static_cast<std::size_t>(ordinal - 1)];
        if (!custom.empty())
            return custom;
    }
    if (p.single_valued())
        return "P" + std::to_string(canonical_index(space_, p));
    return "#" + std::to_string(ordinal);
}

Model build_model(Space space, std::vector<Position> positions, bool syncretic,
                  std::vector<std::string> position_names) {
    if (positions.empty())
        throw Error("model: position set must be non-empty");
    if (!position_names.empty() && position_names.size() != positions.size())
        throw Error("model: " + std::to_string(position_names.size()) + " names for " +
                    std::to_string(positions.size()) + " positions");
    for (const auto& p : positions) {
        validate_position(space, p);
        if (!syncretic && !p.single_valued())
            throw Error("model: set-valued position in non-syncretic mode");
    }

    // Sort by position, stable in input order so the first occurrence of a
    // duplicate group comes first; then collapse equal runs keeping the first
    // non-empty name of each group.
    std::vector<std::size_t> order(positions.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return positions[a] < positions[b];
    });

    std::vector<Position> kept;
    std::vector<std::string> kept_names;
    kept.reserve(positions.size());
    bool any_name = false;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t run_end = i + 1;
        while (run_end < order.size() && positions[order[run_end]] == positions[order[i]])
            ++run_end;
        std::string name;
        if (!position_names.empty()) {
            for (std::size_t j = i; j < run_end && name.empty(); ++j)
                name = position_names[order[j]];
        }
        any_name = any_name || !name.empty();
        kept.push_back(std::move(positions[order[i]]));
        kept_names.push_back(std::move(name));
        i = run_end;
    }
    if (!any_name)
        kept_names.clear();

    const int removed = static_cast<int>(positions.size() - kept.size());
    return Model(std::move(space), std::move(kept), syncretic, std::move(kept_names), removed);
}

Model embed_syncretic(const Model& model) {
    std::vector<Position> positions(model.positions().begin(), model.positions().end());
    std::vector<std::string> names(model.custom_names().begin(), model.custom_names().end());
    return build_model(model.space(), std::move(positions), true, std::move(names));
}

std::string cell_text(const Space& space, const std::vector<int>& cell) {
    if (cell.size() == 1)
        return space.answer_label(cell.front());
    std::string out = "{";
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += space.answer_label(cell[i]);
    }
    out += "}";
    return out;
}

std::string assignment_text(const Space& space, const Position& position) {
    std::ostringstream out;
    out << "{";
    for (int q = 1; q <= position.question_count(); ++q) {
        if (q > 1)
            out << ", ";
        out << space.question_label(q) << ":" << cell_text(space, position.answer_set(q));
    }
    out << "}";
    return out.str();
}

} // namespace plurality
