#include "hvg/construct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "hvg/error.hpp"

namespace hvg {

namespace {

int checked_size(std::size_t n, const char* what) {
    if (n == 0) throw DomainError(std::string(what) + " must not be empty");
    return static_cast<int>(n);
}

void check_finite(const DataSequence& d) {
    for (double v : d)
        if (!std::isfinite(v)) throw DomainError("sequence values must be finite");
}

} // namespace

Graph build_naive(const DataSequence& d) {
    const int n = checked_size(d.size(), "data sequence");
    check_finite(d);
    std::vector<Edge> edges;
    edges.reserve(n > 1 ? 2 * n - 3 : 0);
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(i, i + 1);
        // Scan right while tracking the max over intermediates; once it
        // reaches d_i no later vertex can see i.
        double blocker = d[i];  // value at i+1, the first intermediate
        for (int j = i + 2; j <= n; ++j) {
            if (blocker < d[i - 1] && blocker < d[j - 1]) edges.emplace_back(i, j);
            if (blocker >= d[i - 1]) break;
            blocker = std::max(blocker, d[j - 1]);
        }
    }
    return Graph(n, std::move(edges));
}

Graph build_fast(const DataSequence& d) {
    const int n = checked_size(d.size(), "data sequence");
    check_finite(d);
    std::vector<Edge> edges;
    edges.reserve(n > 1 ? 2 * n - 3 : 0);
    std::vector<int> stack;  // indices, values strictly decreasing
    stack.reserve(n);
    for (int j = 1; j <= n; ++j) {
        const double dj = d[j - 1];
        while (!stack.empty() && d[stack.back() - 1] < dj) {
            edges.emplace_back(stack.back(), j);
            stack.pop_back();
        }
        if (!stack.empty()) {
            edges.emplace_back(stack.back(), j);
            // An equal value cannot see past j; drop it to keep the
            // stack strictly decreasing.
            if (d[stack.back() - 1] == dj) stack.pop_back();
        }
        stack.push_back(j);
    }
    return Graph(n, std::move(edges));
}

DataSequence rank_normalize(const DataSequence& d) {
    checked_size(d.size(), "data sequence");
    check_finite(d);
    DataSequence sorted = d;
    std::sort(sorted.begin(), sorted.end());
    DataSequence out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), d[i]);
        out[i] = static_cast<double>(it - sorted.begin());
    }
    return out;
}

namespace {

constexpr double kExactLimit = 1099511627776.0;  // 2^40

bool integral(double v) { return std::nearbyint(v) == v && std::fabs(v) <= kExactLimit; }

// d_k (t_j - t_i) < d_j (t_j - t_i) + (d_i - d_j)(t_j - t_k), all in
// exact integer arithmetic (t_j > t_i, so no sign adjustment is needed
// beyond the cross-multiplication itself).
bool below_segment_exact(std::int64_t ti, std::int64_t di, std::int64_t tj, std::int64_t dj,
                         std::int64_t tk, std::int64_t dk) {
    using Wide = __int128;
    const Wide lhs = Wide(dk) * (tj - ti);
    const Wide rhs = Wide(dj) * (tj - ti) + Wide(di - dj) * (tj - tk);
    return lhs < rhs;
}

bool below_segment_real(double ti, double di, double tj, double dj, double tk, double dk) {
    return dk < dj + (di - dj) * (tj - tk) / (tj - ti);
}

} // namespace

Graph build_vg(const TimedSequence& s) {
    const int n = checked_size(s.size(), "timed sequence");
    bool exact = true;
    for (const TimedPoint& p : s) {
        if (!std::isfinite(p.t) || !std::isfinite(p.value))
            throw DomainError("timed sequence entries must be finite");
        exact = exact && integral(p.t) && integral(p.value);
    }
    for (int i = 1; i < n; ++i)
        if (!(s[i - 1].t < s[i].t))
            throw DomainError("time stamps must be strictly increasing (violated at position " +
                              std::to_string(i + 1) + ")");

    std::vector<Edge> edges;
    edges.reserve(n > 1 ? 2 * n - 3 : 0);
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            bool visible = true;
            for (int k = i + 1; k < j && visible; ++k) {
                if (exact) {
                    visible = below_segment_exact(
                        static_cast<std::int64_t>(s[i - 1].t), static_cast<std::int64_t>(s[i - 1].value),
                        static_cast<std::int64_t>(s[j - 1].t), static_cast<std::int64_t>(s[j - 1].value),
                        static_cast<std::int64_t>(s[k - 1].t), static_cast<std::int64_t>(s[k - 1].value));
                } else {
                    visible = below_segment_real(s[i - 1].t, s[i - 1].value, s[j - 1].t,
                                                 s[j - 1].value, s[k - 1].t, s[k - 1].value);
                }
            }
            if (visible) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

} // namespace hvg
