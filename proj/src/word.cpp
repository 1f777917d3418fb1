#include "upw/word.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace upw {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int x : letters_) {
        if (x < 1) throw precondition_error("word letters must be positive integers");
    }
}

int Word::max_letter() const {
    int m = 0;
    for (int x : letters_) m = std::max(m, x);
    return m;
}

Permutation::Permutation(Word w) : word_(std::move(w)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < word_.size(); ++i) {
        const int x = word_[i];
        if (x > n || seen[static_cast<std::size_t>(x)])
            throw precondition_error("not a permutation: letters must be 1..n, each once");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

std::size_t Permutation::position_of(int value) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (word_[i] == value) return i;
    throw precondition_error("value not present in permutation");
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

namespace {

bool is_separator(char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

int parse_decimal_token(std::string_view tok) {
    if (tok.empty()) throw parse_error("empty token in word");
    long long value = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("invalid character in word: '" + std::string(1, c) + "'");
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000) throw parse_error("letter out of range");
    }
    if (value < 1) throw parse_error("letters must be positive");
    return static_cast<int>(value);
}

}  // namespace

Word parse_word(std::string_view text) {
    // Trim whitespace only; a trailing comma marks a decimal token.
    const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    std::size_t begin = 0, end = text.size();
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    text = text.substr(begin, end - begin);
    if (text.empty()) return Word();

    const bool has_sep = std::any_of(text.begin(), text.end(), is_separator);
    if (!has_sep) {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw parse_error("invalid character in word: '" + std::string(1, c) + "'");
        }
        const bool has_zero = text.find('0') != std::string_view::npos;
        if (text.size() >= 2 && !has_zero) {
            std::vector<int> letters;
            letters.reserve(text.size());
            for (char c : text) letters.push_back(c - '0');
            return Word(std::move(letters));
        }
        return Word({parse_decimal_token(text)});
    }

    std::vector<int> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_separator(text[i])) ++i;
        if (i == text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !is_separator(text[j])) ++j;
        letters.push_back(parse_decimal_token(text.substr(i, j - i)));
        i = j;
    }
    return Word(std::move(letters));
}

Permutation parse_permutation(std::string_view text) {
    return Permutation(parse_word(text));
}

std::string to_string(const Word& w) {
    // A lone multi-digit letter would read back as compact form; a trailing
    // comma keeps it a decimal token.
    if (w.size() == 1 && w[0] >= 10) return std::to_string(w[0]) + ",";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

std::string to_string(const Permutation& p) { return to_string(p.word()); }

std::string to_compact_string(const Word& w) {
    if (w.max_letter() > 9) throw precondition_error("compact form requires letters <= 9");
    std::string out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out += static_cast<char>('0' + w[i]);
    return out;
}

std::string display_string(const Word& w) {
    return (!w.empty() && w.max_letter() <= 9) ? to_compact_string(w) : to_string(w);
}

bool order_isomorphic(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            const int du = (u[i] > u[j]) - (u[i] < u[j]);
            const int dv = (v[i] > v[j]) - (v[i] < v[j]);
            if (du != dv) return false;
        }
    return true;
}

bool order_isomorphic(const Word& u, const Word& v) { return order_isomorphic(u.view(), v.view()); }

bool order_homomorphic(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (u[i] > u[j] && !(v[i] > v[j])) return false;
    return true;
}

bool order_homomorphic(const Word& u, const Word& v) {
    return order_homomorphic(u.view(), v.view());
}

Permutation break_ties_decreasing(const Word& w) {
    if (w.empty()) throw precondition_error("break_ties_decreasing: empty word");
    // Positions of each value, in increasing position order.
    std::map<int, std::vector<std::size_t>> by_value;
    for (std::size_t i = 0; i < w.size(); ++i) by_value[w[i]].push_back(i);
    std::vector<int> out(w.size());
    int next = 1;
    for (auto& [value, positions] : by_value) {
        (void)value;
        const int k = static_cast<int>(positions.size());
        // Earliest position receives the largest value of this block.
        for (int i = 0; i < k; ++i) out[positions[static_cast<std::size_t>(i)]] = next + k - 1 - i;
        next += k;
    }
    return Permutation(std::move(out));
}

std::optional<Permutation> pattern_of(std::span<const int> window) {
    const std::size_t n = window.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return window[a] < window[b]; });
    std::vector<int> out(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (r > 0 && window[order[r]] == window[order[r - 1]]) return std::nullopt;
        out[order[r]] = static_cast<int>(r) + 1;
    }
    return Permutation(std::move(out));
}

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw precondition_error("factorial_u64: n out of range 0..20");
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

Permutation nth_permutation(int n, std::uint64_t index) {
    if (index >= factorial_u64(n)) throw precondition_error("nth_permutation: index out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) {
        const std::uint64_t f = factorial_u64(k - 1);
        const std::size_t pick = static_cast<std::size_t>(index / f);
        index %= f;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation(std::move(out));
}

std::uint64_t permutation_index(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::uint64_t index = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller_later;
        index += static_cast<std::uint64_t>(smaller_later) * factorial_u64(n - 1 - i);
    }
    return index;
}

}  // namespace upw
