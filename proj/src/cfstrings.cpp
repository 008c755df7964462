#include "kalpha/cfstrings.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kalpha {

namespace {

void require_nonempty(const CFString& s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty string");
    for (long long a : s)
        if (a < 1) throw std::invalid_argument(std::string(what) + ": digits must be >= 1");
}

}  // namespace

std::string cf_str(const CFString& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

CFString cf_parse(std::string_view text) {
    CFString out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t used = 0;
        long long v = std::stoll(cur, &used);
        if (used != cur.size()) throw std::invalid_argument("bad digit '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        if (c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',') {
            flush();
            continue;
        }
        cur.push_back(c);
    }
    flush();
    require_nonempty(out, "cf_parse");
    return out;
}

CFString right_conjugate(const CFString& s) {
    require_nonempty(s, "right_conjugate");
    CFString t = s;
    if (t.back() > 1) {
        t.back() -= 1;
        t.push_back(1);
    } else {
        if (t.size() == 1) throw std::invalid_argument("right_conjugate: (1) has no conjugate in (0,1)");
        t.pop_back();
        t.back() += 1;
    }
    return t;
}

CFString left_conjugate(const CFString& s) {
    require_nonempty(s, "left_conjugate");
    CFString t;
    if (s.front() > 1) {
        t.push_back(1);
        t.push_back(s.front() - 1);
        t.insert(t.end(), s.begin() + 1, s.end());
    } else {
        if (s.size() == 1) throw std::invalid_argument("left_conjugate: (1) has no conjugate");
        t.push_back(s[1] + 1);
        t.insert(t.end(), s.begin() + 2, s.end());
    }
    return t;
}

CFString partial_shift(const CFString& s) {
    require_nonempty(s, "partial_shift");
    CFString t = s;
    if (t.front() > 1)
        t.front() -= 1;
    else
        t.erase(t.begin());
    return t;
}

CFString cf_transpose(const CFString& s) { return CFString(s.rbegin(), s.rend()); }

CFString cf_concat(const CFString& a, const CFString& b) {
    CFString out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Mobius string_matrix(const CFString& s) {
    Mobius m;
    for (long long a : s) m = m * Mobius::digit(a);
    return m;
}

// [0;S] = S . 0 = b/d for the matrix (a b; c d) of the string.
Int denominator(const CFString& s) {
    require_nonempty(s, "denominator");
    return string_matrix(s).d();
}

Int numerator(const CFString& s) {
    require_nonempty(s, "numerator");
    return string_matrix(s).b();
}

Rational cylinder_length(const CFString& s) {
    require_nonempty(s, "cylinder_length");
    CFString t = s;
    t.back() += 1;
    Rational d = cf_value(s) - cf_value(t);
    return d.sign() < 0 ? -d : d;
}

bool alt_lex_lt(const CFString& s, const CFString& t) {
    if (s.size() != t.size()) throw std::invalid_argument("alt_lex_lt: strings of different length");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == t[i]) continue;
        // position i+1 (1-based): odd positions compare descending, even ascending
        return (i % 2 == 0) ? s[i] > t[i] : s[i] < t[i];
    }
    return false;
}

bool string_ll(const CFString& s, const CFString& t) {
    std::size_t n = std::min(s.size(), t.size());
    for (std::size_t i = 1; i <= n; ++i) {
        CFString a(s.begin(), s.begin() + static_cast<long>(i)), b(t.begin(), t.begin() + static_cast<long>(i));
        if (alt_lex_lt(a, b)) return true;
    }
    return false;
}

bool string_lemma_check(const CFString& s, const CFString& t) {
    require_nonempty(s, "string_lemma_check");
    require_nonempty(t, "string_lemma_check");
    return alt_lex_lt(cf_concat(s, t), cf_concat(t, s));
}

CFString runlength(const BinaryWord& w) {
    if (w.empty()) throw std::invalid_argument("runlength of empty word");
    CFString out;
    long long run = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
            ++run;
        } else {
            out.push_back(run);
            run = 1;
        }
    }
    out.push_back(run);
    return out;
}

BinaryWord runlength_inverse(const CFString& s, char first_digit) {
    require_nonempty(s, "runlength_inverse");
    if (first_digit != '0' && first_digit != '1') throw std::invalid_argument("first digit must be 0 or 1");
    std::string out;
    char c = first_digit;
    for (long long a : s) {
        out.append(static_cast<std::size_t>(a), c);
        c = c == '0' ? '1' : '0';
    }
    return BinaryWord(out);
}

CFString even_length(const CFString& s) {
    require_nonempty(s, "even_length");
    if (s.size() % 2 == 0) return s;
    return right_conjugate(s);
}

FareyStructure farey_structure(const CFString& s) {
    require_nonempty(s, "farey_structure");
    if (s.size() % 2) throw std::invalid_argument("farey_structure: odd length " + cf_str(s));
    BinaryWord w = runlength_inverse(s, '0');
    if (!is_farey(w)) throw std::invalid_argument("farey_structure: " + cf_str(s) + " is not the runlength of a Farey word");
    FareyStructure fs;
    if (s == CFString{1, 1}) {
        fs.a = 1;
        fs.skeleton = FareyWord(BinaryWord("1"), Rational(1));
        fs.side = FareySide::FW0;
        fs.unique = false;
        return fs;
    }
    bool fw0 = w.count0() > w.count1();
    fs.side = fw0 ? FareySide::FW0 : FareySide::FW1;
    // block payloads: even positions for FW0 blocks (a_i, 1), odd for FW1 blocks (1, b_i)
    std::vector<long long> pay;
    for (std::size_t i = 0; i < s.size(); i += 2) {
        long long fixed = fw0 ? s[i + 1] : s[i];
        long long var = fw0 ? s[i] : s[i + 1];
        if (fixed != 1) throw std::invalid_argument("farey_structure: no block decomposition for " + cf_str(s));
        pay.push_back(var);
    }
    long long lo = *std::min_element(pay.begin(), pay.end());
    long long hi = *std::max_element(pay.begin(), pay.end());
    if (hi - lo > 1) throw std::invalid_argument("farey_structure: no block decomposition for " + cf_str(s));
    std::string f;
    if (hi == lo) {
        // A single block: the skeleton is a degenerate word and two choices exist.
        if (pay.size() != 1) throw std::invalid_argument("farey_structure: no block decomposition for " + cf_str(s));
        fs.unique = false;
        if (fw0) {
            fs.a = lo - 1;   // B0 = (a+1, 1)
            f = "0";
        } else {
            fs.a = lo - 1;   // B1 = (1, a+1)
            f = "1";
        }
        if (fs.a < 1) throw std::invalid_argument("farey_structure: no block decomposition for " + cf_str(s));
    } else {
        fs.a = lo;
        for (long long v : pay) {
            if (fw0)
                f.push_back(v == lo + 1 ? '0' : '1');
            else
                f.push_back(v == lo ? '0' : '1');
        }
    }
    BinaryWord fw(f);
    if (!is_farey(fw)) throw std::invalid_argument("farey_structure: skeleton " + f + " is not a Farey word");
    fs.skeleton = FareyWord(fw, rho_of(fw));
    return fs;
}

CFString farey_blocks(const FareyStructure& fs) {
    CFString out;
    for (char e : fs.skeleton.word.str()) {
        if (fs.side == FareySide::FW0) {
            out.push_back(e == '0' ? fs.a + 1 : fs.a);
            out.push_back(1);
        } else {
            out.push_back(1);
            out.push_back(e == '0' ? fs.a : fs.a + 1);
        }
    }
    return out;
}

}  // namespace kalpha
