#pragma once

#include <string>
#include <vector>

#include "upw/word.hpp"

namespace upw {

/// One named value in a bounds table cell. Values are decimal strings
/// (integers, rationals, or float annotations).
struct BoundEntry {
    enum class Kind { lower, upper, exact, record, annotation };
    std::string name;
    Kind kind = Kind::lower;
    std::string value;
    int valid_from = 1;  // least n the formula applies to
    std::string note;
};

const char* to_string(BoundEntry::Kind kind);

/// One of the six problem flavors: containment x alphabet.
struct BoundsRow {
    std::string flavor;  // "factor/[n]", "subsequence/P", ...
    std::vector<BoundEntry> entries;
};

/// The full six-cell table for a given n.
struct BoundsReport {
    int n = 1;
    std::vector<BoundsRow> rows;
};

BoundsRow superperm_bounds_row(int n);      // factor over [n]
BoundsRow factor_n_plus_1_bounds_row(int n);
BoundsRow factor_unbounded_bounds_row(int n);
BoundsRow restricted_bounds_row(int n);     // subsequence over [n]
BoundsRow subseq_n_plus_1_bounds_row(int n);
BoundsRow superpattern_bounds_row(int n);   // subsequence over P

BoundsReport bounds_report(int n);

}  // namespace upw
