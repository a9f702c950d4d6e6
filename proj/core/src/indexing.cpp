#include "plurality/indexing.hpp"

#include <string>

#include "plurality/error.hpp"

namespace plurality {

std::uint64_t canonical_index(const Space& space, const Position& position) {
    validate_position(space, position);
    if (!position.single_valued())
        throw Error("set-valued position has no canonical index");

    // Mixed-radix accumulation, most significant question first:
    // idx-1 = ((j_1-1)*m + (j_2-1))*m + ...
    const auto radix = static_cast<std::uint64_t>(space.answer_count());
    std::uint64_t acc = 0;
    for (int q = 1; q <= space.question_count(); ++q) {
        const auto digit = static_cast<std::uint64_t>(position.answer(q) - 1);
        if (__builtin_mul_overflow(acc, radix, &acc) ||
            __builtin_add_overflow(acc, digit, &acc))
            throw Error("canonical index overflows 64 bits for this space");
    }
    if (__builtin_add_overflow(acc, std::uint64_t{1}, &acc))
        throw Error("canonical index overflows 64 bits for this space");
    return acc;
}

Position position_from_index(const Space& space, std::uint64_t index) {
    const std::uint64_t universe = space.universe_size();
    if (index < 1 || index > universe)
        throw Error("position index " + std::to_string(index) + " out of range 1.." +
                    std::to_string(universe));

    const auto radix = static_cast<std::uint64_t>(space.answer_count());
    std::vector<int> answers(static_cast<std::size_t>(space.question_count()));
    std::uint64_t rest = index - 1;
    for (int q = space.question_count(); q >= 1; --q) {
        answers[static_cast<std::size_t>(q - 1)] = static_cast<int>(rest % radix) + 1;
        rest /= radix;
    }
    return Position(std::move(answers));
}

std::strong_ordering compare_positions(const Space& space, const Position& a,
                                       const Position& b) {
    validate_position(space, a);
    validate_position(space, b);
    return a <=> b;
}

} // namespace plurality
