#include "dioph/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dioph {

Word::Word(std::vector<Letter> symbols, Letter alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    if (alphabet_size_ == 0) throw std::invalid_argument("alphabet size must be positive");
    for (Letter c : symbols_) {
        if (c >= alphabet_size_) throw std::invalid_argument("letter outside alphabet");
    }
}

Word Word::from_digits(std::string_view digits, Letter alphabet_size) {
    if (alphabet_size > 10) throw std::invalid_argument("digit strings need an alphabet of size <= 10");
    std::vector<Letter> out;
    out.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char ch = digits[i];
        if (ch < '0' || ch > '9') throw ParseError("expected a digit", i);
        out.push_back(static_cast<Letter>(ch - '0'));
    }
    return Word(std::move(out), alphabet_size);
}

Word Word::prefix(std::size_t n) const {
    n = std::min(n, symbols_.size());
    return Word(std::vector<Letter>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(n)),
                alphabet_size_);
}

std::string Word::render() const {
    std::string out;
    if (alphabet_size_ <= 10) {
        out.reserve(symbols_.size());
        for (Letter c : symbols_) out.push_back(static_cast<char>('0' + c));
        return out;
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(symbols_[i]);
    }
    return out;
}

std::string Word::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(symbols_[i]);
    }
    out.push_back(']');
    return out;
}

std::string ComplexityProfile::to_csv() const {
    std::ostringstream os;
    os << "n,p_n,gap\n";
    for (std::size_t n = 1; n <= counts.size(); ++n) {
        os << n << ',' << counts[n - 1] << ','
           << static_cast<std::int64_t>(counts[n - 1]) - static_cast<std::int64_t>(n) << '\n';
    }
    return os.str();
}

Word fractional_power(const Word& base, const Rational& exponent) {
    if (base.empty()) throw std::invalid_argument("empty base word");
    if (exponent <= 0) throw std::invalid_argument("exponent must be positive");
    const BigInt whole = floor_of(exponent);
    const Rational frac = exponent - Rational(whole);
    const BigInt tail = ceil_of(frac * Rational(BigInt(base.size())));
    if (!whole.fits_ulong_p()) throw std::invalid_argument("exponent too large");

    const auto copies = whole.get_ui();
    const auto tail_len = tail.get_ui();
    std::vector<Letter> out;
    out.reserve(copies * base.size() + tail_len);
    const auto sym = base.symbols();
    for (unsigned long k = 0; k < copies; ++k) out.insert(out.end(), sym.begin(), sym.end());
    out.insert(out.end(), sym.begin(), sym.begin() + static_cast<std::ptrdiff_t>(tail_len));
    return Word(std::move(out), base.alphabet_size());
}

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kHashBase = 1'000'003;

std::uint64_t mul_mod61(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kMersenne61) + static_cast<std::uint64_t>(p >> 61);
    if (r >= kMersenne61) r -= kMersenne61;
    return r;
}

// Window hashes are extended one letter per round; equal hashes are confirmed
// letter by letter so collisions never merge distinct factors.
std::vector<std::uint64_t> profile_by_hash(std::span<const Letter> a, std::size_t n_max) {
    const std::size_t len = a.size();
    std::vector<std::uint64_t> hash(len, 0);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed;
    std::vector<std::uint32_t> reps;
    std::vector<std::uint64_t> counts;
    counts.reserve(n_max);

    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::size_t windows = len - n + 1;
        keyed.clear();
        for (std::size_t i = 0; i < windows; ++i) {
            hash[i] = mul_mod61(hash[i], kHashBase);
            hash[i] += static_cast<std::uint64_t>(a[i + n - 1]) + 1;
            if (hash[i] >= kMersenne61) hash[i] -= kMersenne61;
            keyed.emplace_back(hash[i], static_cast<std::uint32_t>(i));
        }
        std::sort(keyed.begin(), keyed.end());

        std::uint64_t distinct = 0;
        for (std::size_t g = 0; g < keyed.size();) {
            std::size_t end = g;
            while (end < keyed.size() && keyed[end].first == keyed[g].first) ++end;
            reps.clear();
            for (std::size_t k = g; k < end; ++k) {
                const auto start = a.begin() + keyed[k].second;
                const bool seen = std::any_of(reps.begin(), reps.end(), [&](std::uint32_t r) {
                    return std::equal(start, start + static_cast<std::ptrdiff_t>(n), a.begin() + r);
                });
                if (!seen) reps.push_back(keyed[k].second);
            }
            distinct += reps.size();
            g = end;
        }
        counts.push_back(distinct);
    }
    return counts;
}

class SuffixAutomaton {
public:
    explicit SuffixAutomaton(std::span<const Letter> a) {
        states_.reserve(2 * a.size() + 1);
        states_.push_back({});
        for (Letter c : a) extend(c);
    }

    // Each non-root state holds exactly one factor of every length in
    // (len(link), len].
    std::vector<std::uint64_t> counts_by_length(std::size_t n_max) const {
        std::vector<std::int64_t> diff(n_max + 2, 0);
        for (std::size_t s = 1; s < states_.size(); ++s) {
            const std::size_t lo = states_[static_cast<std::size_t>(states_[s].link)].len + 1;
            const std::size_t hi = std::min<std::size_t>(states_[s].len, n_max);
            if (lo > hi) continue;
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
        std::vector<std::uint64_t> counts(n_max);
        std::int64_t running = 0;
        for (std::size_t n = 1; n <= n_max; ++n) {
            running += diff[n];
            counts[n - 1] = static_cast<std::uint64_t>(running);
        }
        return counts;
    }

private:
    static constexpr std::int32_t kNone = -1;

    struct State {
        std::uint32_t len = 0;
        std::int32_t link = kNone;
        std::vector<std::pair<Letter, std::int32_t>> next;

        std::int32_t go(Letter c) const {
            for (const auto& [letter, target] : next) {
                if (letter == c) return target;
            }
            return kNone;
        }
        void set(Letter c, std::int32_t target) {
            for (auto& [letter, t] : next) {
                if (letter == c) {
                    t = target;
                    return;
                }
            }
            next.emplace_back(c, target);
        }
    };

    State& at(std::int32_t i) { return states_[static_cast<std::size_t>(i)]; }

    void extend(Letter c) {
        const auto cur = static_cast<std::int32_t>(states_.size());
        states_.push_back({at(last_).len + 1, kNone, {}});
        std::int32_t p = last_;
        while (p != kNone && at(p).go(c) == kNone) {
            at(p).set(c, cur);
            p = at(p).link;
        }
        if (p == kNone) {
            at(cur).link = 0;
        } else if (const std::int32_t q = at(p).go(c); at(p).len + 1 == at(q).len) {
            at(cur).link = q;
        } else {
            const auto clone = static_cast<std::int32_t>(states_.size());
            State copy = at(q);
            copy.len = at(p).len + 1;
            states_.push_back(std::move(copy));
            while (p != kNone && at(p).go(c) == q) {
                at(p).set(c, clone);
                p = at(p).link;
            }
            at(q).link = clone;
            at(cur).link = clone;
        }
        last_ = cur;
    }

    std::vector<State> states_;
    std::int32_t last_ = 0;
};

}  // namespace

ComplexityProfile complexity_profile(const Word& w, std::size_t n_max, ProfileMethod method) {
    if (n_max == 0) throw std::invalid_argument("window must be positive");
    if (n_max > w.size()) throw std::invalid_argument("window exceeds prefix");
    if (method == ProfileMethod::automatic) {
        method = n_max <= 64 ? ProfileMethod::rolling_hash : ProfileMethod::suffix_automaton;
    }
    ComplexityProfile profile;
    profile.prefix_length = w.size();
    if (method == ProfileMethod::rolling_hash) {
        profile.counts = profile_by_hash(w.symbols(), n_max);
    } else {
        profile.counts = SuffixAutomaton(w.symbols()).counts_by_length(n_max);
    }
    return profile;
}

std::size_t occurrence_count(const Word& w, Letter letter) {
    if (letter >= w.alphabet_size()) throw std::invalid_argument("letter outside alphabet");
    return static_cast<std::size_t>(std::count(w.symbols().begin(), w.symbols().end(), letter));
}

std::vector<std::int64_t> gap_profile(const ComplexityProfile& profile) {
    std::vector<std::int64_t> gaps;
    gaps.reserve(profile.counts.size());
    for (std::size_t n = 1; n <= profile.counts.size(); ++n) {
        gaps.push_back(static_cast<std::int64_t>(profile.counts[n - 1]) - static_cast<std::int64_t>(n));
    }
    return gaps;
}

}  // namespace dioph
