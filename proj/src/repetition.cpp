#include "dioph/repetition.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace dioph {

std::string RepetitionWitness::to_json() const {
    const Rational s = score();
    return "{\"u\":" + std::to_string(u) + ",\"v\":" + std::to_string(v) + ",\"m\":" + std::to_string(m) +
           ",\"score_num\":\"" + s.get_num().get_str() + "\",\"score_den\":\"" + s.get_den().get_str() + "\"}";
}

bool witness_before(const RepetitionWitness& a, const RepetitionWitness& b) {
    // m_a / s_a vs m_b / s_b by cross-multiplication; sizes stay far below 2^32.
    const auto lhs = static_cast<unsigned __int128>(a.m) * b.span();
    const auto rhs = static_cast<unsigned __int128>(b.m) * a.span();
    if (lhs != rhs) return lhs > rhs;
    if (a.span() != b.span()) return a.span() > b.span();
    return a.u < b.u;
}

std::size_t default_threshold(std::size_t prefix_length) {
    return std::max<std::size_t>(1, prefix_length / 20);
}

namespace {

void check_scan_input(const Word& prefix, std::size_t threshold) {
    if (prefix.size() < 2) throw std::invalid_argument("degenerate prefix");
    if (threshold == 0 || threshold > prefix.size() / 2) {
        throw std::invalid_argument("threshold must lie in [1, N/2]");
    }
}

struct Best {
    RepetitionWitness global{0, 0, 0};
    RepetitionWitness persistent{0, 0, 0};
    bool has_global = false;
    bool has_persistent = false;

    void offer(const RepetitionWitness& w, std::size_t threshold) {
        if (!has_global || witness_before(w, global)) {
            global = w;
            has_global = true;
        }
        if (w.span() >= threshold && (!has_persistent || witness_before(w, persistent))) {
            persistent = w;
            has_persistent = true;
        }
    }

    void merge(const Best& other, std::size_t threshold) {
        if (other.has_global) offer(other.global, 0);
        if (other.has_persistent) offer(other.persistent, threshold);
    }
};

// Could a witness of span >= s still reach (or tie) the scores held in `best`?
// The best conceivable score at span s is N / s.
bool can_improve(const Best& best, std::size_t n, std::size_t s, std::size_t threshold) {
    const auto reach = [&](const RepetitionWitness& w, std::size_t span) {
        return static_cast<unsigned __int128>(n) * w.span() >= static_cast<unsigned __int128>(w.m) * span;
    };
    if (!best.has_global || reach(best.global, s)) return true;
    return !best.has_persistent || reach(best.persistent, std::max(s, threshold));
}

// For a fixed period v, run(u) = length of the longest k with
// a[u + j] = a[u + v + j] for all j < k. run(u) = run(u - 1) - 1 whenever
// run(u - 1) > 0, so only restarts cost a fresh comparison.
void scan_period(std::span<const Letter> a, std::size_t v, std::size_t threshold, Best& best) {
    const std::size_t n = a.size();
    std::size_t run = 0;
    bool have_run = false;
    for (std::size_t u = 0; u + v <= n; ++u) {
        const std::size_t s = u + v;
        if (!can_improve(best, n, s, threshold)) break;
        if (have_run && run > 0) {
            --run;
        } else {
            run = 0;
            while (s + run < n && a[u + run] == a[s + run]) ++run;
            have_run = true;
        }
        best.offer({u, v, s + run}, threshold);
    }
}

Best scan_periods(std::span<const Letter> a, std::size_t first, std::size_t stride, std::size_t threshold) {
    Best best;
    for (std::size_t v = first; v <= a.size(); v += stride) {
        if (!can_improve(best, a.size(), v, threshold)) break;
        scan_period(a, v, threshold, best);
    }
    return best;
}

ExponentEstimate finish(const Best& best, std::size_t n, std::size_t threshold) {
    if (!best.has_global || !best.has_persistent) throw std::logic_error("scan produced no witness");
    return {best.global, best.persistent, n, threshold};
}

std::vector<std::size_t> z_function(std::span<const Letter> a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0) return z;
    z[0] = n;
    std::size_t left = 0, right = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (i < right) z[i] = std::min(right - i, z[i - left]);
        while (i + z[i] < n && a[z[i]] == a[i + z[i]]) ++z[i];
        if (i + z[i] > right) {
            left = i;
            right = i + z[i];
        }
    }
    return z;
}

}  // namespace

ExponentEstimate dio_estimate(const Word& prefix, std::size_t threshold, ScanOptions options) {
    check_scan_input(prefix, threshold);
    const auto a = prefix.symbols();
    const std::size_t workers = std::max(1u, options.threads);
    if (workers == 1) return finish(scan_periods(a, 1, 1, threshold), a.size(), threshold);

    std::vector<Best> partial(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] { partial[t] = scan_periods(a, t + 1, workers, threshold); });
        }
    }
    Best merged;
    for (const Best& b : partial) merged.merge(b, threshold);
    return finish(merged, a.size(), threshold);
}

ExponentEstimate ice_estimate(const Word& prefix, std::size_t threshold, ScanOptions) {
    check_scan_input(prefix, threshold);
    const auto a = prefix.symbols();
    const std::size_t n = a.size();
    const auto z = z_function(a);
    Best best;
    for (std::size_t v = 1; v < n; ++v) best.offer({0, v, v + z[v]}, threshold);
    best.offer({0, n, n}, threshold);
    return finish(best, n, threshold);
}

bool verify_witness(const Word& prefix, const RepetitionWitness& w) {
    if (w.m > prefix.size()) throw std::invalid_argument("witness exceeds prefix");
    if (w.v == 0 || w.m < w.u + w.v) return false;
    const auto a = prefix.symbols();
    for (std::size_t i = w.u; i + w.v < w.m; ++i) {
        if (a[i] != a[i + w.v]) return false;
    }
    return true;
}

}  // namespace dioph
