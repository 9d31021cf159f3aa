#include "spc/words.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace spc {

bool is_proper(const ColorSequence& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == s[i - 1]) return false;
    return true;
}

bool is_strongly_proper(const ColorSequence& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (i >= 1 && s[i] == s[i - 1]) return false;
        if (i >= 2 && s[i] == s[i - 2]) return false;
    }
    return true;
}

bool nonrepetitive_after_append(const ColorSequence& s) {
    int n = static_cast<int>(s.size());
    for (int len = 1; 2 * len <= n; ++len) {
        // candidate square occupies s[n-2len .. n)
        bool square = true;
        for (int j = 1; j <= len; ++j) {
            if (s[n - j] != s[n - len - j]) {
                square = false;
                break;
            }
        }
        if (square) return false;
    }
    return true;
}

bool is_nonrepetitive(const ColorSequence& s) {
    ColorSequence prefix;
    prefix.reserve(s.size());
    for (int c : s) {
        prefix.push_back(c);
        if (!nonrepetitive_after_append(prefix)) return false;
    }
    return true;
}

ColorSequence canonical_sequence(int n, int start) {
    if (start < 1 || start > 3)
        throw std::invalid_argument("canonical_sequence: start must be in 1..3");
    if (n < 0) throw std::invalid_argument("canonical_sequence: negative length");
    ColorSequence s(n);
    for (int i = 0; i < n; ++i) s[i] = (start - 1 + i) % 3 + 1;
    return s;
}

ColorSequence thue_sequence(int n) {
    if (n < 0) throw std::invalid_argument("thue_sequence: negative length");
    ColorSequence word{1};
    while (static_cast<int>(word.size()) < n) {
        ColorSequence next;
        next.reserve(word.size() * 3);
        for (int c : word) {
            switch (c) {
                case 1: next.insert(next.end(), {1, 2, 3}); break;
                case 2: next.insert(next.end(), {1, 3}); break;
                default: next.push_back(2); break;
            }
        }
        word = std::move(next);
    }
    word.resize(n);
    return word;
}

namespace {

bool proper_after_append(const ColorSequence& s) {
    size_t n = s.size();
    return n < 2 || s[n - 1] != s[n - 2];
}

bool strong_after_append(const ColorSequence& s) {
    size_t n = s.size();
    if (n >= 2 && s[n - 1] == s[n - 2]) return false;
    if (n >= 3 && s[n - 1] == s[n - 3]) return false;
    return true;
}

ColorSequence alternating(int n) {
    ColorSequence s(n);
    for (int i = 0; i < n; ++i) s[i] = i % 2 + 1;
    return s;
}

}  // namespace

const SequenceProperty& proper_property() {
    static const SequenceProperty p{
        "proper", 2, true, is_proper, proper_after_append, alternating};
    return p;
}

const SequenceProperty& strongly_proper_property() {
    static const SequenceProperty p{
        "strong", 3, true, is_strongly_proper, strong_after_append,
        [](int n) { return canonical_sequence(n, 1); }};
    return p;
}

const SequenceProperty& nonrepetitive_property() {
    static const SequenceProperty p{
        "nonrep", 3, true, is_nonrepetitive, nonrepetitive_after_append, thue_sequence};
    return p;
}

const SequenceProperty* property_by_name(std::string_view name) {
    if (name == "proper") return &proper_property();
    if (name == "strong") return &strongly_proper_property();
    if (name == "nonrep") return &nonrepetitive_property();
    return nullptr;
}

namespace {

std::string sequence_to_string(const ColorSequence& s) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

}  // namespace

HonestyReport check_honesty(const SequenceProperty& p, int sample_len, int trials) {
    HonestyReport r;
    r.blocks_closed = r.concatenation_closed = r.generator_valid = true;
    r.reversal_closed = true;
    std::mt19937 rng(12345);

    std::vector<ColorSequence> samples;
    for (int len = 1; len <= sample_len; ++len) samples.push_back(p.generate(len));

    // (iii): generator output is valid and stays inside 1..m.
    for (const auto& s : samples) {
        bool in_alphabet = std::all_of(s.begin(), s.end(), [&](int c) {
            return c >= 1 && c <= p.alphabet_size;
        });
        if (!p.is_valid(s) || !in_alphabet) {
            r.generator_valid = false;
            if (r.witness.empty())
                r.witness = "generator emitted invalid sequence " + sequence_to_string(s);
        }
    }

    // Widen the pool with short random sequences the property accepts, so
    // the closure checks do not depend only on what the generator emits.
    for (int t = 0; t < trials; ++t) {
        int len = 1 + static_cast<int>(rng() % 8);
        ColorSequence s(static_cast<size_t>(len));
        for (int& c : s) c = 1 + static_cast<int>(rng() % p.alphabet_size);
        if (p.is_valid(s)) samples.push_back(std::move(s));
    }

    // (i): random blocks of valid samples are valid.
    for (int t = 0; t < trials; ++t) {
        const auto& s = samples[rng() % samples.size()];
        if (s.empty()) continue;
        int i = static_cast<int>(rng() % s.size());
        int j = i + 1 + static_cast<int>(rng() % (s.size() - i));
        ColorSequence block(s.begin() + i, s.begin() + j);
        if (!p.is_valid(block)) {
            r.blocks_closed = false;
            if (r.witness.empty())
                r.witness = "invalid block " + sequence_to_string(block) + " of valid " +
                            sequence_to_string(s);
            break;
        }
    }

    // (ii): concatenation over disjoint alphabets (second copy shifted by m).
    for (int t = 0; t < trials; ++t) {
        ColorSequence a = samples[rng() % samples.size()];
        ColorSequence b = samples[rng() % samples.size()];
        for (int& c : b) c += p.alphabet_size;
        a.insert(a.end(), b.begin(), b.end());
        if (!p.is_valid(a)) {
            r.concatenation_closed = false;
            if (r.witness.empty())
                r.witness = "invalid concatenation " + sequence_to_string(a);
            break;
        }
    }

    if (p.reversal_closed) {
        for (const auto& s : samples) {
            ColorSequence rev(s.rbegin(), s.rend());
            if (!p.is_valid(rev)) {
                r.reversal_closed = false;
                if (r.witness.empty())
                    r.witness = "invalid reversal " + sequence_to_string(rev);
                break;
            }
        }
    }
    return r;
}

}  // namespace spc
