#pragma once

#include "dioph/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dioph {

using Letter = std::uint32_t;

/// A finite word over {0, ..., alphabet_size - 1}.
class Word {
public:
    Word() = default;
    Word(std::vector<Letter> symbols, Letter alphabet_size);

    /// Digit string "0110..." over the given alphabet (alphabet_size <= 10).
    static Word from_digits(std::string_view digits, Letter alphabet_size = 10);

    std::span<const Letter> symbols() const noexcept { return symbols_; }
    Letter alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Letter operator[](std::size_t i) const { return symbols_[i]; }

    Word prefix(std::size_t n) const;

    /// Digits for alphabets up to 10, comma-separated integers otherwise.
    std::string render() const;
    /// JSON array of integers.
    std::string to_json() const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> symbols_;
    Letter alphabet_size_ = 2;
};

/// p(n) for n = 1..n_max over one finite prefix. Values are lower bounds
/// for the complexity of any infinite word extending the prefix.
struct ComplexityProfile {
    std::size_t prefix_length = 0;
    std::vector<std::uint64_t> counts;  // counts[n - 1] = p(n)

    std::size_t n_max() const noexcept { return counts.size(); }
    std::uint64_t at(std::size_t n) const { return counts.at(n - 1); }
    /// CSV with header "n,p_n,gap".
    std::string to_csv() const;
};

enum class ProfileMethod { automatic, rolling_hash, suffix_automaton };

/// W^x: floor(x) copies of W followed by the prefix of length
/// ceil(frac(x) * |W|).
Word fractional_power(const Word& base, const Rational& exponent);

/// Distinct-factor counts of `w` for lengths 1..n_max. `automatic` uses the
/// rolling hash for n_max <= 64 and the suffix automaton otherwise.
ComplexityProfile complexity_profile(const Word& w, std::size_t n_max,
                                     ProfileMethod method = ProfileMethod::automatic);

std::size_t occurrence_count(const Word& w, Letter letter);

/// p(n) - n for every n in the profile.
std::vector<std::int64_t> gap_profile(const ComplexityProfile& profile);

}  // namespace dioph
