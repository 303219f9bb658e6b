#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dioph::oracle {

Triple best_repetition(const std::vector<std::uint32_t>& a, std::size_t min_span, bool initial_only) {
    const std::size_t n = a.size();
    Triple best{};
    bool have = false;
    for (std::size_t s = std::max<std::size_t>(min_span, 1); s <= n; ++s) {
        for (std::size_t u = 0; u < s; ++u) {
            if (initial_only && u != 0) break;
            const std::size_t v = s - u;
            std::size_t m = s;
            while (m < n && a[m] == a[m - v]) ++m;
            // Higher score wins; on a tie the larger span (hence larger m)
            // wins, and ascending u keeps the smallest u within one span.
            const std::size_t best_s = best.u + best.v;
            if (!have || m * best_s > best.m * s || (m * best_s == best.m * s && s > best_s)) {
                best = {u, v, m};
                have = true;
            }
        }
    }
    return best;
}

std::vector<std::uint64_t> naive_complexity(const std::vector<std::uint32_t>& a, std::size_t n_max) {
    std::vector<std::uint64_t> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::set<std::vector<std::uint32_t>> seen;
        for (std::size_t i = 0; i + n <= a.size(); ++i) seen.emplace(a.begin() + i, a.begin() + i + n);
        out.push_back(seen.size());
    }
    return out;
}

std::vector<std::uint32_t> fibonacci_word(std::size_t length) {
    std::vector<std::uint32_t> w{0};
    while (w.size() < length) {
        std::vector<std::uint32_t> next;
        for (auto c : w) {
            next.push_back(0);
            if (c == 0) next.push_back(1);
        }
        w = std::move(next);
    }
    w.resize(length);
    return w;
}

std::vector<std::uint32_t> standard_word(const std::vector<unsigned long>& partial, std::size_t length) {
    if (partial.empty() || partial[0] == 0) throw std::invalid_argument("need a_1 >= 1");
    std::vector<std::uint32_t> older{1}, old{0};
    std::size_t k = 0;
    while (true) {
        // d_1 = a_1 - 1, d_n = a_n afterwards.
        const unsigned long d = k == 0 ? partial[0] - 1 : partial.at(k);
        std::vector<std::uint32_t> next;
        for (unsigned long r = 0; r < d; ++r) next.insert(next.end(), old.begin(), old.end());
        next.insert(next.end(), older.begin(), older.end());
        older = std::move(old);
        old = std::move(next);
        ++k;
        if (k >= 2 && old.size() >= length) break;
    }
    old.resize(length);
    return old;
}

std::vector<std::uint32_t> long_division(const mpz_class& p, const mpz_class& q, unsigned base, std::size_t count) {
    mpz_class r = p % q;
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < count; ++i) {
        r *= base;
        const mpz_class d = r / q;
        out.push_back(static_cast<std::uint32_t>(d.get_ui()));
        r -= d * q;
    }
    return out;
}

std::vector<std::uint32_t> e_partial_sum_digits(unsigned terms, std::size_t count) {
    mpq_class sum = 0;
    mpz_class fact = 1;
    for (unsigned k = 0; k <= terms; ++k) {
        if (k > 0) fact *= k;
        sum += mpq_class(mpz_class(1), fact);
    }
    sum.canonicalize();
    return long_division(sum.get_num(), sum.get_den(), 10, count);
}

std::string render(const std::vector<std::uint32_t>& a) {
    std::string s;
    for (auto c : a) s.push_back(static_cast<char>('0' + c));
    return s;
}

}  // namespace dioph::oracle
