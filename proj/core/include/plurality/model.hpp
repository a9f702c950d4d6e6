#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace plurality {

/// The question/answer frame: a count of questions, a count of answers, and
/// display labels for both. Counts are at least 1 and labels are unique
/// within each list. Answers never used by any position are legal.
class Space {
public:
    /// Frame with default labels Q1..Qn / A1..Am.
    Space(int question_count, int answer_count);

    /// Frame with explicit labels. An empty label list selects the defaults;
    /// a non-empty list must have exactly one non-empty label per question
    /// (answer), unique within the list.
    Space(int question_count, int answer_count,
          std::vector<std::string> question_labels,
          std::vector<std::string> answer_labels);

    int question_count() const { return question_count_; }
    int answer_count() const { return answer_count_; }

    /// Label of question q, 1-based.
    const std::string& question_label(int q) const;
    /// Label of answer a, 1-based.
    const std::string& answer_label(int a) const;

    std::span<const std::string> question_labels() const { return question_labels_; }
    std::span<const std::string> answer_labels() const { return answer_labels_; }

    /// Number of possible single-valued positions, m^n. Saturates at the
    /// maximum representable value when the true count does not fit.
    std::uint64_t universe_size() const;

    bool operator==(const Space&) const = default;

private:
    int question_count_;
    int answer_count_;
    std::vector<std::string> question_labels_;
    std::vector<std::string> answer_labels_;
};

/// One stance: an assignment of answers to every question. Cells are stored
/// as sorted sets of 1-based answer indices; a single-valued position has a
/// singleton cell for every question, a set-valued one may assign several
/// answers jointly. Cells are never empty.
///
/// A Position carries no reference to its Space; operations that need the
/// frame take both and validate the fit.
class Position {
public:
    /// Single-valued position: one answer index per question.
    explicit Position(std::vector<int> answers);

    /// Set-valued position. Each cell is sorted and deduplicated; an empty
    /// cell is rejected.
    explicit Position(std::vector<std::vector<int>> answer_sets);

    /// Number of questions answered (the position's length).
    int question_count() const { return static_cast<int>(cells_.size()); }

    /// True when every cell is a singleton.
    bool single_valued() const;

    /// The unique answer to question q (1-based). Rejects set-valued cells.
    int answer(int q) const;

    /// The answer set of question q (1-based); a singleton for single-valued
    /// positions.
    const std::vector<int>& answer_set(int q) const;

    const std::vector<std::vector<int>>& cells() const { return cells_; }

    bool operator==(const Position&) const = default;
    /// Lexicographic order over cells; on single-valued positions this is
    /// exactly the canonical index order.
    auto operator<=>(const Position&) const = default;

private:
    std::vector<std::vector<int>> cells_;
};

/// A space together with a non-empty set of distinct admissible positions.
/// Positions are stored deduplicated in canonical order (ascending canonical
/// index; set-valued positions fall into the same cell-lexicographic order).
/// Immutable after construction; safe to share across threads.
class Model {
public:
    const Space& space() const { return space_; }
    bool syncretic() const { return syncretic_; }

    /// Number of admissible positions, k.
    int size() const { return static_cast<int>(positions_.size()); }

    std::span<const Position> positions() const { return positions_; }

    /// Position by 1-based ordinal within the canonically ordered set.
    const Position& position(int ordinal) const;

    /// The unique answer of position `ordinal` to question q. Only valid on
    /// non-syncretic models; syncretic callers use answer_set.
    int answer(int ordinal, int q) const;

    /// The answer set of position `ordinal` at question q; singleton cells
    /// on non-syncretic models.
    const std::vector<int>& answer_set(int ordinal, int q) const;

    /// Display name of a position: the custom document name when present,
    /// else "P<canonical index>" for single-valued positions and
    /// "#<ordinal>" for set-valued ones.
    std::string position_name(int ordinal) const;

    /// Custom names aligned with positions(); empty when none were given.
    std::span<const std::string> custom_names() const { return names_; }

    /// How many duplicate positions were dropped at construction.
    int duplicates_removed() const { return duplicates_removed_; }

    /// Equality of the admissible set: same space, mode and positions.
    /// Custom names are presentation data and do not participate.
    bool operator==(const Model& other) const {
        return space_ == other.space_ && syncretic_ == other.syncretic_ &&
               positions_ == other.positions_;
    }

    friend Model build_model(Space space, std::vector<Position> positions,
                             bool syncretic, std::vector<std::string> position_names);

private:
    Model(Space space, std::vector<Position> positions, bool syncretic,
          std::vector<std::string> names, int duplicates_removed);

    Space space_;
    std::vector<Position> positions_;
    bool syncretic_;
    std::vector<std::string> names_; // empty, or one entry per position ("" = none)
    int duplicates_removed_;
};

/// Validates a position against a space: length n, every answer index in
/// 1..m, no empty cell. Throws Error with context on violation.
void validate_position(const Space& space, const Position& position);

/// Builds a model from a list of positions. Duplicates are removed silently
/// (the count is retained for diagnostics) and the survivors are sorted into
/// canonical order. In non-syncretic mode every position must be
/// single-valued. `position_names` optionally labels the input positions
/// one-to-one; duplicates keep the first non-empty name of their group.
Model build_model(Space space, std::vector<Position> positions,
                  bool syncretic = false,
                  std::vector<std::string> position_names = {});

/// The same admissible set viewed in syncretic mode, each answer read as a
/// singleton answer set.
Model embed_syncretic(const Model& model);

/// Renders an assignment as "{Q1:A1, Q2:{A1,A2}}" using the space's labels.
std::string assignment_text(const Space& space, const Position& position);

/// Renders one cell: the answer label, or "{A1, A2}" for a joint cell.
std::string cell_text(const Space& space, const std::vector<int>& cell);

} // namespace plurality
