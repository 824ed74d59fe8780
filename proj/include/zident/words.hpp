#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zident/rational.hpp"

namespace zident {

/// Integration letters.  Z ('0') is shared by both alphabets; A ('a') is the
/// square-root letter used on [0, 1] after substitution; One/Lam/Mu
/// ('1', 'l', 'm') form the cyclotomic alphabet at level 3.
enum class Letter : std::uint8_t { Z, A, One, Lam, Mu };

char letter_char(Letter l);

struct Word {
    std::vector<Letter> letters;

    int weight() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    /// Usable as a square-root-alphabet word (only '0'/'a').
    bool in_g_alphabet() const;
    /// Usable as a cyclotomic-alphabet word (no 'a').
    bool in_c_alphabet() const;
    auto operator<=>(const Word&) const = default;
};

using WordSum = std::map<Word, Rat>;

/// "a,0,a" / "0,0,1" / "l,m"; empty string is the empty word.
std::string word_to_string(const Word& w);
Word word_from_string(std::string_view s);

/// Shuffle product; multiplicities accumulate.  Words that cannot share an
/// alphabet are rejected.
WordSum shuffle(const Word& u, const Word& v);

WordSum wordsum_add(const WordSum& a, const WordSum& b);
WordSum wordsum_scale(const WordSum& a, const Rat& c);
std::string wordsum_to_string(const WordSum& s);

} // namespace zident
