#include "snfa/symbol_class.hpp"

#include <cctype>
#include <cstdio>

namespace snfa {

std::string to_string(const SymbolClass& c) {
    if (c.is_any()) return "ANY";
    if (c.size() == 255) {
        for (int b = 0; b < 256; ++b) {
            if (!c.matches(static_cast<std::uint8_t>(b))) {
                char buf[16];
                if (std::isprint(b)) {
                    std::snprintf(buf, sizeof(buf), "NOT %c", b);
                } else {
                    std::snprintf(buf, sizeof(buf), "NOT 0x%02x", b);
                }
                return buf;
            }
        }
    }
    std::string out = "{";
    bool printable_only = true;
    for (int b = 0; b < 256; ++b) {
        if (c.matches(static_cast<std::uint8_t>(b)) && !std::isprint(b)) {
            printable_only = false;
            break;
        }
    }
    bool first = true;
    for (int b = 0; b < 256; ++b) {
        if (!c.matches(static_cast<std::uint8_t>(b))) continue;
        if (printable_only) {
            out.push_back(static_cast<char>(b));
        } else {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "%s0x%02x", first ? "" : " ", b);
            out += buf;
        }
        first = false;
    }
    out.push_back('}');
    return out;
}

}  // namespace snfa
