#include "endsym/integer.hpp"

#include <cctype>

namespace endsym {

Integer parse_integer(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw DomainError("expected an integer, got '" + std::string(text) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        unsigned char ch = static_cast<unsigned char>(text[pos]);
        if (!std::isdigit(ch))
            throw DomainError("expected an integer, got '" + std::string(text) + "'");
        value = value * 10 + (ch - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace endsym
