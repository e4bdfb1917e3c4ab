#ifndef SNFA_SYMBOL_CLASS_HPP
#define SNFA_SYMBOL_CLASS_HPP

#include <bitset>
#include <cstdint>
#include <string>

namespace snfa {

/// Set of byte values a state matches, kept as a 256-entry membership table.
///
/// Symbol classes live on states, not edges (the homogeneous-automaton
/// convention): a state consumes an input byte iff the byte is a member.
class SymbolClass {
public:
    SymbolClass() = default;

    static SymbolClass single(std::uint8_t b) {
        SymbolClass c;
        c.bits_.set(b);
        return c;
    }

    /// All 256 byte values.
    static SymbolClass any() {
        SymbolClass c;
        c.bits_.set();
        return c;
    }

    /// Every byte except b.
    static SymbolClass all_but(std::uint8_t b) {
        SymbolClass c;
        c.bits_.set();
        c.bits_.reset(b);
        return c;
    }

    void add(std::uint8_t b) { bits_.set(b); }
    bool matches(std::uint8_t b) const { return bits_.test(b); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool is_any() const { return bits_.all(); }

    bool operator==(const SymbolClass&) const = default;

private:
    std::bitset<256> bits_;
};

inline bool class_matches(const SymbolClass& c, std::uint8_t b) { return c.matches(b); }

/// Short display form: "ANY", "NOT c", "{AC}", or "{0x00 0x0a}" for
/// unprintable members.
std::string to_string(const SymbolClass& c);

}  // namespace snfa

#endif  // SNFA_SYMBOL_CLASS_HPP
