#ifndef SPC_WORDS_HPP
#define SPC_WORDS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace spc {

using ColorSequence = std::vector<int>;

// No two adjacent symbols equal.
bool is_proper(const ColorSequence& s);

// No equal symbols at index distance 1 or 2 (every <=3 window is rainbow).
bool is_strongly_proper(const ColorSequence& s);

// No block of the form XX for nonempty X.
bool is_nonrepetitive(const ColorSequence& s);

// True iff no square ends at the last position of s. Assumes the prefix
// without the last symbol is nonrepetitive, which makes this check enough
// to maintain nonrepetitiveness incrementally.
bool nonrepetitive_after_append(const ColorSequence& s);

// Length-n block of the periodic word 1,2,3,1,2,3,... starting at `start`.
ColorSequence canonical_sequence(int n, int start);

// Length-n prefix of the fixed squarefree ternary word generated by the
// morphism 1 -> 123, 2 -> 13, 3 -> 2 from seed 1.
ColorSequence thue_sequence(int n);

/// Pluggable word property: validity predicate, alphabet size m(P), and a
/// generator of arbitrarily long valid sequences over 1..m.
struct SequenceProperty {
    std::string name;
    int alphabet_size = 0;  // m(P)
    bool reversal_closed = false;
    std::function<bool(const ColorSequence&)> is_valid;
    // Incremental form: given that s without its last symbol is valid, does
    // s remain valid? Sound for honest (block-closed) properties; used for
    // DFS prefix pruning.
    std::function<bool(const ColorSequence&)> valid_after_append;
    std::function<ColorSequence(int)> generate;
};

const SequenceProperty& proper_property();
const SequenceProperty& strongly_proper_property();
const SequenceProperty& nonrepetitive_property();

// CLI names: "proper", "strong", "nonrep". Null if unknown.
const SequenceProperty* property_by_name(std::string_view name);

struct HonestyReport {
    bool blocks_closed = false;        // honesty (i)
    bool concatenation_closed = false; // honesty (ii), over disjoint alphabets
    bool generator_valid = false;      // honesty (iii)
    bool reversal_closed = false;      // only meaningful if flag set
    std::string witness;               // first violation found, if any

    bool all_ok(bool check_reversal) const {
        return blocks_closed && concatenation_closed && generator_valid &&
               (!check_reversal || reversal_closed);
    }
};

// Spot-checks honesty (i)-(iii) and, when flagged, reversal closure on
// generated samples up to sample_len, plus `trials` random perturbations.
HonestyReport check_honesty(const SequenceProperty& p, int sample_len, int trials);

}  // namespace spc

#endif
