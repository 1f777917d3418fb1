#include "upw/bounds.hpp"

#include <cmath>

#include "upw/analytics.hpp"
#include "upw/subseq.hpp"
#include "upw/superperm.hpp"
#include "upw/zigzag.hpp"

namespace upw {

const char* to_string(BoundEntry::Kind kind) {
    switch (kind) {
        case BoundEntry::Kind::lower: return "lower";
        case BoundEntry::Kind::upper: return "upper";
        case BoundEntry::Kind::exact: return "exact";
        case BoundEntry::Kind::record: return "record";
        default: return "annotation";
    }
}

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

void add(BoundsRow& row, std::string name, BoundEntry::Kind kind, long long value,
         int valid_from = 1, std::string note = "") {
    row.entries.push_back({std::move(name), kind, std::to_string(value), valid_from,
                           std::move(note)});
}

}  // namespace

BoundsRow superperm_bounds_row(int n) {
    const auto b = superperm_bounds(n);
    BoundsRow row{"factor/[n]", {}};
    add(row, "window_count", BoundEntry::Kind::lower, b.lower_window_count);
    add(row, "cyclic_class", BoundEntry::Kind::lower, b.lower_cyclic_class);
    if (n >= 2) add(row, "trajectory", BoundEntry::Kind::lower, b.lower_trajectory, 2);
    if (n >= 5)
        add(row, "trajectory_plus_one", BoundEntry::Kind::lower, b.lower_trajectory_plus_one, 5,
            "announced strengthening, stated without proof");
    add(row, "recursive", BoundEntry::Kind::upper, b.upper_recursive);
    if (n >= 4) add(row, "egan", BoundEntry::Kind::upper, b.upper_egan, 4);
    if (b.exact) add(row, "shortest_known", BoundEntry::Kind::exact, *b.exact);
    if (b.record_upper)
        add(row, "record_construction", BoundEntry::Kind::record, *b.record_upper);
    return row;
}

BoundsRow factor_n_plus_1_bounds_row(int n) {
    const long long value = static_cast<long long>(factorial_u64(n)) + n - 1;
    BoundsRow row{"factor/[n+1]", {}};
    add(row, "window_count", BoundEntry::Kind::lower, value);
    add(row, "ucycle_linearization", BoundEntry::Kind::upper, value, 1,
        "a permutation ucycle over [n+1] always exists");
    add(row, "shortest", BoundEntry::Kind::exact, value);
    return row;
}

BoundsRow factor_unbounded_bounds_row(int n) {
    const long long value = static_cast<long long>(factorial_u64(n)) + n - 1;
    BoundsRow row{"factor/P", {}};
    add(row, "window_count", BoundEntry::Kind::lower, value);
    add(row, "ucycle_linearization", BoundEntry::Kind::upper, value);
    add(row, "shortest", BoundEntry::Kind::exact, value);
    return row;
}

BoundsRow restricted_bounds_row(int n) {
    const auto b = restricted_bounds(n);
    BoundsRow row{"subsequence/[n]", {}};
    add(row, "adversary", BoundEntry::Kind::lower, b.lower_adversary);
    if (n >= 3) add(row, "quadratic", BoundEntry::Kind::upper, b.upper_quadratic, 3);
    if (n >= 10)
        add(row, "quadratic_minus_one", BoundEntry::Kind::upper, b.upper_quadratic_minus_one, 10);
    if (n >= 7) add(row, "radomirovic", BoundEntry::Kind::upper, b.upper_radomirovic, 7);
    if (b.exact) add(row, "shortest_known", BoundEntry::Kind::exact, *b.exact);
    row.entries.push_back({"asymptotic", BoundEntry::Kind::annotation, "n^2", 1,
                           "asymptotically tight, constant not computable here"});
    return row;
}

BoundsRow subseq_n_plus_1_bounds_row(int n) {
    BoundsRow row{"subsequence/[n+1]", {}};
    const auto cb = counting_bound_n_plus_1(n);
    add(row, "occurrence_counting", BoundEntry::Kind::lower, cb.least_length);
    const long long miller = (static_cast<long long>(n) * n + n) / 2;
    add(row, "zigzag_runs", BoundEntry::Kind::upper, miller);
    row.entries.push_back({"asymptotic_lower", BoundEntry::Kind::annotation, fmt(cb.asymptotic),
                           1, "n^2/e"});
    return row;
}

BoundsRow superpattern_bounds_row(int n) {
    BoundsRow row{"subsequence/P", {}};
    add(row, "binomial_counting", BoundEntry::Kind::lower, arratia_min_length(n));
    const long long zeta_len = (static_cast<long long>(n) * n + 1 + 1) / 2;  // ceil((n^2+1)/2)
    add(row, "zeta", BoundEntry::Kind::upper, zeta_len);
    if (n <= 5)
        add(row, "shortest_known", BoundEntry::Kind::exact, zeta_len, 1,
            "matches the construction for n <= 5");
    if (n == 6) {
        add(row, "shortest_known", BoundEntry::Kind::exact, 17);
        add(row, "record_construction", BoundEntry::Kind::record, 17);
    }
    row.entries.push_back({"asymptotic_lower", BoundEntry::Kind::annotation,
                           fmt(static_cast<double>(n) * n / std::exp(2.0)), 1, "n^2/e^2"});
    return row;
}

BoundsReport bounds_report(int n) {
    if (n < 1) throw precondition_error("bounds_report: n must be positive");
    BoundsReport report;
    report.n = n;
    report.rows = {superperm_bounds_row(n),       factor_n_plus_1_bounds_row(n),
                   factor_unbounded_bounds_row(n), restricted_bounds_row(n),
                   subseq_n_plus_1_bounds_row(n), superpattern_bounds_row(n)};
    return report;
}

}  // namespace upw
