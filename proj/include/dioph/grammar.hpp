#pragma once

// Text forms accepted by the command line and the Python module.
//
//   real:   rat:P/Q | e | shallit | surd:P,Q,D | cf:a0,a1,...[,(p1,...)*]
//           | cf:@file.json | mobius:a,b,c,d:(REAL) | sturmian:SLOPE
//   slope:  surd:P,Q,D | cfslope:m1,m2,...[,(p1,...)*] | cfslope:powers:B
//           | fibonacci | golden | unbounded
//   morphism: 0>01;1>001
//   word source: word:0101 | word:[0,1,2] | mech:SLOPE
//           | quasi:W|MORPHISM|SLOPE | any real (expanded in the chosen base)
//
// Malformed input raises ParseError carrying the offending position.

#include "dioph/realnum.hpp"
#include "dioph/sturmian.hpp"
#include "dioph/words.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace dioph {

RealSpec parse_real(std::string_view text);
SlopeSpec parse_slope(std::string_view text);
Morphism parse_morphism(std::string_view text);
/// Digit string or JSON integer array; alphabet is max letter + 1 (at least 2).
Word parse_word(std::string_view text);

/// JSON file contents for "cf:@file": an array of quotients (a finite
/// expansion) or {"head": [...], "period": [...]} / {"head": [...], "open_tail": true}.
CFQuotients parse_cf_json(const std::string& json_text);

/// The first `length` letters named by a word source. Real-number sources
/// are expanded in `base`; an uncertifiable digit raises BudgetExhausted.
Word materialize_word(std::string_view source, unsigned base, std::size_t length,
                      const Budget& budget = Budget::from_env());

}  // namespace dioph
