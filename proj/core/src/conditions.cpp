#include "plurality/conditions.hpp"

#include <stdexcept>
#include <string>

#include "plurality/error.hpp"

namespace plurality {

namespace {

// Cells are sorted answer-index sets, so set equality is vector equality.
const std::vector<int>& cell(const Model& model, int pos, int q) {
    return model.position(pos).answer_set(q);
}

} // namespace

std::string_view witness_kind_name(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::mixed_position: return "mixed_position";
    case WitnessKind::contested_question: return "contested_question";
    case WitnessKind::uniform_position: return "uniform_position";
    case WitnessKind::constant_question: return "constant_question";
    case WitnessKind::joint_answer: return "joint_answer";
    }
    throw std::logic_error("unknown witness kind");
}

// Witness scans pick the lexicographically least candidate with position
// ordinals compared before question ordinals, which keeps reports stable
// across runs.

ConditionCheck eval_globalism(const Model& model) {
    const int k = model.size();
    const int n = model.space().question_count();
    for (int x = 1; x <= k; ++x) {
        for (int y = 1; y <= n; ++y) {
            for (int z = y + 1; z <= n; ++z) {
                if (cell(model, x, y) != cell(model, x, z))
                    return {false, Witness{WitnessKind::mixed_position, {x}, {y, z}}};
            }
        }
    }
    return {true, std::nullopt};
}

ConditionCheck eval_monism(const Model& model) {
    const int k = model.size();
    const int n = model.space().question_count();
    for (int w = 1; w <= k; ++w) {
        for (int x = w + 1; x <= k; ++x) {
            for (int y = 1; y <= n; ++y) {
                if (cell(model, w, y) != cell(model, x, y))
                    return {false, Witness{WitnessKind::contested_question, {w, x}, {y}}};
            }
        }
    }
    return {true, std::nullopt};
}

ConditionCheck eval_weak_globalism(const Model& model) {
    const int k = model.size();
    const int n = model.space().question_count();
    for (int x = 1; x <= k; ++x) {
        bool uniform = true;
        for (int y = 2; y <= n && uniform; ++y)
            uniform = cell(model, x, y) == cell(model, x, 1);
        if (uniform)
            return {true, Witness{WitnessKind::uniform_position, {x}, {}}};
    }
    return {false, std::nullopt};
}

ConditionCheck eval_weak_monism(const Model& model) {
    const int k = model.size();
    const int n = model.space().question_count();
    for (int y = 1; y <= n; ++y) {
        bool constant = true;
        for (int x = 2; x <= k && constant; ++x)
            constant = cell(model, x, y) == cell(model, 1, y);
        if (constant)
            return {true, Witness{WitnessKind::constant_question, {}, {y}}};
    }
    return {false, std::nullopt};
}

ConditionCheck eval_syncretism(const Model& model) {
    const int k = model.size();
    const int n = model.space().question_count();
    for (int x = 1; x <= k; ++x) {
        for (int y = 1; y <= n; ++y) {
            if (cell(model, x, y).size() > 1)
                return {true, Witness{WitnessKind::joint_answer, {x}, {y}}};
        }
    }
    return {false, std::nullopt};
}

ConditionProfile condition_profile(const Model& model) {
    ConditionProfile profile;

    auto g = eval_globalism(model);
    auto m = eval_monism(model);
    auto weak_g = eval_weak_globalism(model);
    auto weak_m = eval_weak_monism(model);
    auto s = eval_syncretism(model);

    profile.g = g.holds;
    profile.m = m.holds;
    profile.weak_g = weak_g.holds;
    profile.weak_m = weak_m.holds;
    profile.s = s.holds;
    profile.mixed_position = std::move(g.witness);
    profile.contested_question = std::move(m.witness);
    profile.uniform_position = std::move(weak_g.witness);
    profile.constant_question = std::move(weak_m.witness);
    profile.joint_answer = std::move(s.witness);

    // Entailments between the conditions; failures here are evaluator bugs,
    // not bad input.
    if ((profile.g && !profile.weak_g) || (profile.m && !profile.weak_m) ||
        (!profile.g && profile.m && profile.weak_g) ||
        (profile.g && !profile.m && profile.weak_m))
        throw std::logic_error("condition profile violates entailments");
    if (!model.syncretic() && profile.s)
        throw std::logic_error("syncretism reported on a non-syncretic model");

    return profile;
}

bool witness_holds(const Model& model, const Witness& witness) {
    const auto need = [&](std::size_t positions, std::size_t questions) {
        if (witness.positions.size() != positions || witness.questions.size() != questions)
            throw Error(std::string("witness shape does not match kind ") +
                        std::string(witness_kind_name(witness.kind)));
    };
    // cell() range-checks every reference via Model accessors.
    switch (witness.kind) {
    case WitnessKind::mixed_position: {
        need(1, 2);
        const int x = witness.positions[0];
        return cell(model, x, witness.questions[0]) != cell(model, x, witness.questions[1]);
    }
    case WitnessKind::contested_question: {
        need(2, 1);
        const int y = witness.questions[0];
        return cell(model, witness.positions[0], y) != cell(model, witness.positions[1], y);
    }
    case WitnessKind::uniform_position: {
        need(1, 0);
        const int x = witness.positions[0];
        for (int y = 2; y <= model.space().question_count(); ++y) {
            if (cell(model, x, y) != cell(model, x, 1))
                return false;
        }
        // Touch the single-question case so the ordinal is still validated.
        (void)cell(model, x, 1);
        return true;
    }
    case WitnessKind::constant_question: {
        need(0, 1);
        const int y = witness.questions[0];
        for (int x = 2; x <= model.size(); ++x) {
            if (cell(model, x, y) != cell(model, 1, y))
                return false;
        }
        (void)cell(model, 1, y);
        return true;
    }
    case WitnessKind::joint_answer:
        need(1, 1);
        return cell(model, witness.positions[0], witness.questions[0]).size() > 1;
    }
    throw std::logic_error("unknown witness kind");
}

} // namespace plurality
