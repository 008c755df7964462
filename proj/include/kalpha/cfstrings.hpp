#pragma once

#include <string>
#include <string_view>

#include "kalpha/exactnum.hpp"
#include "kalpha/words.hpp"

namespace kalpha {

std::string cf_str(const CFString& s);            // "[a1,a2,...]"
CFString cf_parse(std::string_view text);         // accepts "[1,2]" or "1,2"

CFString right_conjugate(const CFString& s);      // S'
CFString left_conjugate(const CFString& s);       // 'S
CFString partial_shift(const CFString& s);        // the operator d (first digit decremented or dropped)
CFString cf_transpose(const CFString& s);         // ^t S
CFString cf_concat(const CFString& a, const CFString& b);

Int denominator(const CFString& s);               // q(S)
Int numerator(const CFString& s);                 // p(S)
Mobius string_matrix(const CFString& s);          // x -> S . x
// |I(S)|: distance between [0;S] and [0; a1, ..., an + 1].
Rational cylinder_length(const CFString& s);

bool alt_lex_lt(const CFString& s, const CFString& t);
bool string_ll(const CFString& s, const CFString& t);
bool string_lemma_check(const CFString& s, const CFString& t);

CFString runlength(const BinaryWord& w);
BinaryWord runlength_inverse(const CFString& s, char first_digit);

// A continued fraction of the same value with an even number of digits.
CFString even_length(const CFString& s);

enum class FareySide { FW0, FW1 };

struct FareyStructure {
    long long a = 1;
    FareyWord skeleton;
    FareySide side = FareySide::FW0;
    bool unique = true;
};

FareyStructure farey_structure(const CFString& s);
// Reassembles B_{e1} ... B_{en}.
CFString farey_blocks(const FareyStructure& fs);

}  // namespace kalpha
