#include "kalpha/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace kalpha {

BinaryWord::BinaryWord(std::string digits) : s_(std::move(digits)) {
    for (char c : s_)
        if (c != '0' && c != '1') throw std::invalid_argument("binary word may only contain 0 and 1: '" + s_ + "'");
}

std::size_t BinaryWord::count0() const { return static_cast<std::size_t>(std::count(s_.begin(), s_.end(), '0')); }
std::size_t BinaryWord::count1() const { return s_.size() - count0(); }

BinaryWord BinaryWord::transpose() const { return BinaryWord(std::string(s_.rbegin(), s_.rend())); }

BinaryWord BinaryWord::check() const {
    std::string t = s_;
    for (char& c : t) c = c == '0' ? '1' : '0';
    return BinaryWord(t);
}

BinaryWord BinaryWord::vee_first() const {
    if (s_.empty()) throw std::invalid_argument("vee of empty word");
    std::string t = s_;
    t.front() = t.front() == '0' ? '1' : '0';
    return BinaryWord(t);
}

BinaryWord BinaryWord::vee_last() const {
    if (s_.empty()) throw std::invalid_argument("vee of empty word");
    std::string t = s_;
    t.back() = t.back() == '0' ? '1' : '0';
    return BinaryWord(t);
}

BinaryWord BinaryWord::rotate(std::size_t k) const {
    if (s_.empty()) return *this;
    k %= s_.size();
    return BinaryWord(s_.substr(k) + s_.substr(0, k));
}

bool BinaryWord::is_palindrome() const { return std::equal(s_.begin(), s_.begin() + static_cast<long>(s_.size() / 2), s_.rbegin()); }

Int BinaryWord::as_integer() const {
    if (s_.empty()) return Int(0);
    return Int(s_, 2);
}

Rational rho_of(const BinaryWord& w) {
    if (w.empty()) throw std::invalid_argument("rho of empty word");
    return Rational(Int(static_cast<unsigned long>(w.count1())), Int(static_cast<unsigned long>(w.size())));
}

bool word_order_lt(const BinaryWord& u, const BinaryWord& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("word order needs nonempty words");
    return (u + v).str() < (v + u).str();
}

bool strong_order_ll(const BinaryWord& u, const BinaryWord& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("strong order needs nonempty words");
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (u[i] != v[i]) return u[i] < v[i];
    return false;
}

namespace {

long small(const Int& z, const char* what) {
    if (!z.fits_slong_p()) throw std::out_of_range(std::string(what) + ": value too large");
    return z.get_si();
}

struct TreeCache {
    std::shared_mutex mu;
    std::map<std::pair<long, long>, BinaryWord> words;
};

TreeCache& tree_cache() {
    static TreeCache cache;
    return cache;
}

constexpr long kCacheMaxDenominator = 4096;

void cache_store(long p, long q, const BinaryWord& w) {
    if (q > kCacheMaxDenominator) return;
    auto& c = tree_cache();
    std::unique_lock lock(c.mu);
    c.words.emplace(std::make_pair(p, q), w);
}

}  // namespace

std::vector<FareyWord> farey_list(int n) {
    if (n < 0) throw std::invalid_argument("farey_list: level must be >= 0");
    if (n > kFareyListCap)
        throw std::invalid_argument("farey_list: level " + std::to_string(n) + " exceeds cap " + std::to_string(kFareyListCap));
    std::vector<FareyWord> cur{FareyWord(BinaryWord("0"), Rational(0)), FareyWord(BinaryWord("1"), Rational(1))};
    for (int level = 0; level < n; ++level) {
        std::vector<FareyWord> next;
        next.reserve(2 * cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            next.push_back(cur[i]);
            const auto& a = cur[i];
            const auto& b = cur[i + 1];
            Rational mediant(a.rho.num() + b.rho.num(), a.rho.den() + b.rho.den());
            next.emplace_back(a.word + b.word, mediant);
        }
        next.push_back(cur.back());
        cur.swap(next);
    }
    for (const auto& fw : cur)
        if (fw.rho.den() <= kCacheMaxDenominator) cache_store(fw.rho.num().get_si(), fw.rho.den().get_si(), fw.word);
    return cur;
}

FareyWord word_from_rational(const Rational& r) {
    if (r.sign() < 0 || r > Rational(1)) throw std::invalid_argument("word_from_rational: r must lie in [0,1]");
    long p = small(r.num(), "word_from_rational"), q = small(r.den(), "word_from_rational");
    std::string s;
    s.reserve(static_cast<std::size_t>(q));
    if (q == 1) return FareyWord(BinaryWord(p == 0 ? "0" : "1"), r);
    for (long k = 1; k <= q; ++k) {
        long a = (k * p) / q, b = ((k - 1) * p) / q;
        s.push_back(a - b ? '1' : '0');
    }
    return FareyWord(BinaryWord(s), r);
}

FareyWord word_from_rational_tree(const Rational& r) {
    if (r.sign() < 0 || r > Rational(1)) throw std::invalid_argument("word_from_rational_tree: r must lie in [0,1]");
    long p = small(r.num(), "word_from_rational_tree"), q = small(r.den(), "word_from_rational_tree");
    {
        auto& c = tree_cache();
        std::shared_lock lock(c.mu);
        auto it = c.words.find({p, q});
        if (it != c.words.end()) return FareyWord(it->second, r);
    }
    if (q == 1) return FareyWord(BinaryWord(p == 0 ? "0" : "1"), r);
    long lp = 0, lq = 1, hp = 1, hq = 1;
    BinaryWord lw("0"), hw("1");
    while (true) {
        long mp = lp + hp, mq = lq + hq;
        BinaryWord mw = lw + hw;
        cache_store(mp, mq, mw);
        // compare p/q against mp/mq
        long long lhs = static_cast<long long>(p) * mq, rhs = static_cast<long long>(mp) * q;
        if (lhs == rhs) return FareyWord(mw, r);
        if (lhs < rhs) {
            hp = mp;
            hq = mq;
            hw = mw;
        } else {
            lp = mp;
            lq = mq;
            lw = mw;
        }
    }
}

BinaryWord phi_r_coding(const Rational& r, Side side) {
    if (r.sign() <= 0 || r >= Rational(1)) throw std::invalid_argument("phi_r_coding: need 0 < r < 1");
    if (side == Side::Plus) return word_from_rational(r).word;
    long p = small(r.num(), "phi_r_coding"), q = small(r.den(), "phi_r_coding");
    // x -> 0-: floor(kr - 0) = ceil(kr) - 1
    auto lower = [&](long k) { return (k * p + q - 1) / q - 1; };
    std::string s;
    for (long k = 1; k <= q; ++k) {
        long a = lower(k), b = k == 1 ? -1 : lower(k - 1);
        s.push_back(a - b ? '1' : '0');
    }
    return BinaryWord(s);
}

bool is_farey(const BinaryWord& w) {
    if (w.empty()) return false;
    return word_from_rational(rho_of(w)).word == w;
}

FareyWord farey_word(const BinaryWord& w) {
    if (!is_farey(w)) throw std::invalid_argument("not a Farey word: '" + w.str() + "'");
    return FareyWord(w, rho_of(w));
}

std::pair<Rational, Rational> farey_parents(const Rational& r) {
    if (r.sign() <= 0 || r >= Rational(1)) throw std::invalid_argument("farey_parents: need 0 < r < 1");
    Int p = r.num(), q = r.den();
    Int q1;
    if (mpz_invert(q1.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0) throw std::logic_error("non-invertible numerator");
    Int p1 = (p * q1 - 1) / q;
    return {Rational(p1, q1), Rational(p - p1, q - q1)};
}

std::pair<FareyWord, FareyWord> standard_factorization(const FareyWord& w) {
    if (w.degenerate()) throw std::invalid_argument("standard_factorization: degenerate word '" + w.str() + "'");
    auto [left, right] = farey_parents(w.rho);
    std::size_t q1 = static_cast<std::size_t>(left.den().get_ui());
    FareyWord a(w.word.prefix(q1), left), b(w.word.suffix_from(q1), right);
    if (!(word_from_rational(left).word == a.word) || !(word_from_rational(right).word == b.word))
        throw std::logic_error("standard factorization does not split into Farey words");
    return {a, b};
}

CyclicExtremes cyclic_extremes(const FareyWord& w) {
    auto [a, b] = standard_factorization(w);
    return {w.word, b.word + a.word, w.word.transpose()};
}

CyclicExtremes cyclic_extremes_bruteforce(const BinaryWord& w) {
    std::vector<std::string> all;
    for (std::size_t k = 0; k < w.size(); ++k) all.push_back(w.rotate(k).str());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    BinaryWord second = all.size() > 1 ? BinaryWord(all[1]) : BinaryWord(all[0]);
    return {BinaryWord(all.front()), second, BinaryWord(all.back())};
}

std::vector<Rational> rotation_set(const FareyWord& w) {
    if (w.degenerate()) throw std::invalid_argument("rotation_set: degenerate word");
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, w.size());
    den -= 1;
    std::vector<Rational> out;
    for (std::size_t k = 0; k < w.size(); ++k) out.emplace_back(w.word.rotate(k).as_integer(), den);
    std::sort(out.begin(), out.end());
    return out;
}

BinaryWord substitute(const BinaryWord& w, const BinaryWord& u0, const BinaryWord& u1) {
    std::string out;
    for (char c : w.str()) out += c == '0' ? u0.str() : u1.str();
    return BinaryWord(out);
}

BinaryWord apply_U0(const BinaryWord& w) { return substitute(w, BinaryWord("0"), BinaryWord("01")); }
BinaryWord apply_U1(const BinaryWord& w) { return substitute(w, BinaryWord("01"), BinaryWord("1")); }

FareyWord mirror(const FareyWord& w) { return FareyWord(w.word.check().transpose(), Rational(1) - w.rho); }

}  // namespace kalpha
