#include "prefdom/never_condition.hpp"

#include <cctype>

#include "prefdom/errors.hpp"

namespace prefdom {

std::string FishburnCondition::to_string() const {
    return std::to_string(member) + "N" + std::to_string(slot);
}

FishburnCondition parse_fishburn_condition(std::string_view text) {
    if (text.size() == 3 && text[0] >= '1' && text[0] <= '3' &&
        (text[1] == 'N' || text[1] == 'n') && text[2] >= '1' && text[2] <= '3')
        return FishburnCondition{text[0] - '0', text[2] - '0'};
    throw parse_error("invalid never condition '" + std::string(text) + "' (expected iNj with i,j in 1..3)");
}

std::string NeverCondition::absolute_string() const {
    static constexpr char place[4] = {'?', 't', 'm', 'b'};
    return std::to_string(alternative()) + "N" + place[static_cast<std::size_t>(cond.slot)];
}

std::string NeverCondition::fishburn_string() const {
    return cond.to_string() + "@(" + std::to_string(triple[0]) + "," + std::to_string(triple[1]) +
           "," + std::to_string(triple[2]) + ")";
}

}  // namespace prefdom
