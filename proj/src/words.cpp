#include "zident/words.hpp"

#include <sstream>

#include "zident/errors.hpp"

namespace zident {

char letter_char(Letter l) {
    switch (l) {
    case Letter::Z: return '0';
    case Letter::A: return 'a';
    case Letter::One: return '1';
    case Letter::Lam: return 'l';
    case Letter::Mu: return 'm';
    }
    return '?';
}

bool Word::in_g_alphabet() const {
    for (Letter l : letters)
        if (l != Letter::Z && l != Letter::A)
            return false;
    return true;
}

bool Word::in_c_alphabet() const {
    for (Letter l : letters)
        if (l == Letter::A)
            return false;
    return true;
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            s += ',';
        s += letter_char(w.letters[i]);
    }
    return s;
}

Word word_from_string(std::string_view s) {
    Word w;
    if (s.empty())
        return w;
    std::size_t pos = 0;
    bool expect_letter = true;
    while (pos < s.size()) {
        char c = s[pos];
        if (c == ',') {
            if (expect_letter)
                throw ParseError("expected a letter before ','", pos);
            expect_letter = true;
            ++pos;
            continue;
        }
        if (!expect_letter)
            throw ParseError("expected ',' between letters", pos);
        switch (c) {
        case '0': w.letters.push_back(Letter::Z); break;
        case 'a': w.letters.push_back(Letter::A); break;
        case '1': w.letters.push_back(Letter::One); break;
        case 'l': w.letters.push_back(Letter::Lam); break;
        case 'm': w.letters.push_back(Letter::Mu); break;
        default:
            throw ParseError(std::string("unknown letter '") + c + "'", pos);
        }
        expect_letter = false;
        ++pos;
    }
    if (expect_letter)
        throw ParseError("trailing ','", pos);
    if (!w.in_g_alphabet() && !w.in_c_alphabet())
        throw ParseError("word mixes the two alphabets", 0);
    return w;
}

namespace {

void shuffle_rec(const std::vector<Letter>& u, std::size_t i,
                 const std::vector<Letter>& v, std::size_t j,
                 std::vector<Letter>& prefix, WordSum& out) {
    if (i == u.size() && j == v.size()) {
        out[Word{prefix}] += 1;
        return;
    }
    if (i < u.size()) {
        prefix.push_back(u[i]);
        shuffle_rec(u, i + 1, v, j, prefix, out);
        prefix.pop_back();
    }
    if (j < v.size()) {
        prefix.push_back(v[j]);
        shuffle_rec(u, i, v, j + 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

WordSum shuffle(const Word& u, const Word& v) {
    const bool g_ok = u.in_g_alphabet() && v.in_g_alphabet();
    const bool c_ok = u.in_c_alphabet() && v.in_c_alphabet();
    if (!g_ok && !c_ok)
        throw DomainError("shuffle requires both words over one alphabet");
    WordSum out;
    std::vector<Letter> prefix;
    prefix.reserve(u.letters.size() + v.letters.size());
    shuffle_rec(u.letters, 0, v.letters, 0, prefix, out);
    return out;
}

WordSum wordsum_add(const WordSum& a, const WordSum& b) {
    WordSum out = a;
    for (const auto& [w, c] : b) {
        Rat& e = out[w];
        e += c;
        if (e == 0)
            out.erase(w);
    }
    return out;
}

WordSum wordsum_scale(const WordSum& a, const Rat& c) {
    WordSum out;
    if (c == 0)
        return out;
    for (const auto& [w, k] : a)
        out.emplace(w, k * c);
    return out;
}

std::string wordsum_to_string(const WordSum& s) {
    if (s.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : s) {
        if (!first)
            os << " + ";
        first = false;
        if (c != 1)
            os << rat_to_string(c) << "*";
        os << "(" << word_to_string(w) << ")";
    }
    return os.str();
}

} // namespace zident
