#include "dioph/grammar.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace dioph {

namespace {

class Cursor {
public:
    Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t where() const { return offset_ + pos_; }
    std::string_view rest() const { return text_.substr(pos_); }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, where()); }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token)) fail("expected '" + std::string(token) + "'");
    }

    void expect_end() const {
        if (!done()) fail("unexpected trailing input");
    }

    BigInt integer() {
        const std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        const std::size_t digits = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        std::string token(text_.substr(start, pos_ - start));
        if (token.front() == '+') token.erase(0, 1);
        return parse_bigint(token);
    }

    // "a,b,c" optionally followed by ",(p,q)*" (or just "(p,q)*").
    void quotient_list(std::vector<BigInt>& head, std::vector<BigInt>& period) {
        bool first = true;
        while (!done()) {
            if (!first) expect(",");
            first = false;
            if (accept("(")) {
                period.push_back(integer());
                while (accept(",")) period.push_back(integer());
                expect(")*");
                return;
            }
            head.push_back(integer());
        }
    }

    // Text inside a balanced "( ... )" group; leaves the cursor after ')'.
    std::pair<std::string_view, std::size_t> group() {
        expect("(");
        const std::size_t start = pos_;
        int depth = 1;
        while (!done()) {
            const char c = text_[pos_];
            if (c == '(') ++depth;
            if (c == ')' && --depth == 0) {
                const auto inner = text_.substr(start, pos_ - start);
                ++pos_;
                return {inner, offset_ + start};
            }
            ++pos_;
        }
        fail("unbalanced parenthesis");
    }

private:
    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

RealSpec parse_real_at(std::string_view text, std::size_t offset);
SlopeSpec parse_slope_at(std::string_view text, std::size_t offset);

template <class Fn>
auto rethrow_at(const Cursor& cur, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        cur.fail(e.what());
    }
}

RealSpec parse_real_at(std::string_view text, std::size_t offset) {
    Cursor cur(text, offset);
    if (cur.accept("rat:")) {
        const BigInt p = cur.integer();
        BigInt q = 1;
        if (cur.accept("/")) q = cur.integer();
        cur.expect_end();
        return rethrow_at(cur, [&] { return RealSpec::rational(p, q); });
    }
    if (cur.accept("e")) {
        cur.expect_end();
        return RealSpec::e();
    }
    if (cur.accept("shallit")) {
        cur.expect_end();
        return RealSpec::shallit();
    }
    if (cur.accept("surd:")) {
        const BigInt p = cur.integer();
        cur.expect(",");
        const BigInt q = cur.integer();
        cur.expect(",");
        const BigInt d = cur.integer();
        cur.expect_end();
        return rethrow_at(cur, [&] { return RealSpec::surd(p, q, d); });
    }
    if (cur.accept("cf:")) {
        if (cur.peek() == '@') {
            const std::size_t at = cur.where();
            const std::string path(cur.rest().substr(1));
            std::ifstream in(path);
            if (!in) throw ParseError("cannot open continued fraction file '" + path + "'", at);
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                return RealSpec::from_cf(parse_cf_json(buf.str()));
            } catch (const std::exception& e) {
                throw ParseError(std::string("bad continued fraction file: ") + e.what(), at);
            }
        }
        CFQuotients q;
        cur.quotient_list(q.head, q.period);
        cur.expect_end();
        if (q.head.empty()) cur.fail("continued fraction needs a_0 before any periodic tail");
        return rethrow_at(cur, [&] { return RealSpec::from_cf(std::move(q)); });
    }
    if (cur.accept("mobius:")) {
        const BigInt a = cur.integer();
        cur.expect(",");
        const BigInt b = cur.integer();
        cur.expect(",");
        const BigInt c = cur.integer();
        cur.expect(",");
        const BigInt d = cur.integer();
        cur.expect(":");
        const auto [inner, inner_offset] = cur.group();
        cur.expect_end();
        RealSpec inner_spec = parse_real_at(inner, inner_offset);
        return rethrow_at(cur, [&] { return RealSpec::mobius(a, b, c, d, std::move(inner_spec)); });
    }
    if (cur.accept("sturmian:")) {
        const std::size_t at = cur.where();
        return RealSpec::custom(mechanical_number(parse_slope_at(cur.rest(), at)));
    }
    cur.fail("unknown real number form");
}

SlopeSpec parse_slope_at(std::string_view text, std::size_t offset) {
    Cursor cur(text, offset);
    if (cur.accept("fibonacci")) {
        cur.expect_end();
        return SlopeSpec::surd(-3, -2, 5);
    }
    if (cur.accept("golden")) {
        cur.expect_end();
        CFQuotients q;
        q.head = {BigInt(0)};
        q.period = {BigInt(1)};
        return SlopeSpec::continued_fraction(std::move(q));
    }
    if (cur.accept("unbounded")) {
        cur.expect_end();
        return SlopeSpec::continued_fraction(CFQuotients::powers(10));
    }
    if (cur.accept("surd:")) {
        const BigInt p = cur.integer();
        cur.expect(",");
        const BigInt q = cur.integer();
        cur.expect(",");
        const BigInt d = cur.integer();
        cur.expect_end();
        return rethrow_at(cur, [&] { return SlopeSpec::surd(p, q, d); });
    }
    if (cur.accept("cfslope:")) {
        if (cur.accept("powers:")) {
            const BigInt base = cur.integer();
            cur.expect_end();
            if (base < 1 || !base.fits_ulong_p()) cur.fail("powers base must be a positive integer");
            return SlopeSpec::continued_fraction(CFQuotients::powers(base.get_ui()));
        }
        CFQuotients q;
        q.head = {BigInt(0)};
        cur.quotient_list(q.head, q.period);
        cur.expect_end();
        return rethrow_at(cur, [&] { return SlopeSpec::continued_fraction(std::move(q)); });
    }
    cur.fail("unknown slope form");
}

std::vector<Letter> letters_from_json(const nlohmann::json& arr) {
    std::vector<Letter> out;
    for (const auto& v : arr) {
        if (!v.is_number_unsigned()) throw std::invalid_argument("word arrays hold nonnegative integers");
        out.push_back(v.get<Letter>());
    }
    return out;
}

Word word_with_inferred_alphabet(std::vector<Letter> symbols) {
    const Letter top = symbols.empty() ? 0 : *std::max_element(symbols.begin(), symbols.end());
    return Word(std::move(symbols), std::max<Letter>(2, top + 1));
}

Word parse_word_at(std::string_view text, std::size_t offset) {
    if (!text.empty() && text.front() == '[') {
        try {
            return word_with_inferred_alphabet(letters_from_json(nlohmann::json::parse(text)));
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad word array: ") + e.what(), offset);
        }
    }
    std::vector<Letter> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a digit", offset + i);
        out.push_back(static_cast<Letter>(text[i] - '0'));
    }
    return word_with_inferred_alphabet(std::move(out));
}

Morphism parse_morphism_at(std::string_view text, std::size_t offset) {
    Cursor cur(text, offset);
    cur.expect("0>");
    const auto split = text.find(';');
    if (split == std::string_view::npos) cur.fail("expected ';' between images");
    const auto zero = text.substr(2, split - 2);
    Cursor tail(text.substr(split + 1), offset + split + 1);
    tail.expect("1>");
    const auto one = text.substr(split + 3);
    if (zero.empty()) throw ParseError("morphism must be nonerasing", offset + 2);
    if (one.empty()) throw ParseError("morphism must be nonerasing", offset + split + 3);
    return Morphism(parse_word_at(zero, offset + 2), parse_word_at(one, offset + split + 3));
}

}  // namespace

RealSpec parse_real(std::string_view text) { return parse_real_at(text, 0); }
SlopeSpec parse_slope(std::string_view text) { return parse_slope_at(text, 0); }
Morphism parse_morphism(std::string_view text) { return parse_morphism_at(text, 0); }
Word parse_word(std::string_view text) { return parse_word_at(text, 0); }

CFQuotients parse_cf_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    const auto to_list = [](const nlohmann::json& arr) {
        std::vector<BigInt> out;
        for (const auto& v : arr) {
            if (v.is_string()) {
                out.push_back(parse_bigint(v.get<std::string>()));
            } else if (v.is_number_integer()) {
                out.emplace_back(std::to_string(v.get<long long>()));
            } else {
                throw std::invalid_argument("quotients must be integers or decimal strings");
            }
        }
        return out;
    };
    CFQuotients q;
    if (j.is_array()) {
        q.head = to_list(j);
    } else if (j.is_object()) {
        q.head = to_list(j.at("head"));
        if (j.contains("period")) q.period = to_list(j.at("period"));
        q.open_tail = j.value("open_tail", false);
    } else {
        throw std::invalid_argument("expected an array or object");
    }
    if (q.head.empty()) throw std::invalid_argument("continued fraction needs a_0");
    return q;
}

Word materialize_word(std::string_view source, unsigned base, std::size_t length, const Budget& budget) {
    if (source.starts_with("word:")) {
        Word w = parse_word_at(source.substr(5), 5);
        if (length == 0) return w;
        if (w.size() < length) throw std::invalid_argument("literal word shorter than the requested length");
        return w.prefix(length);
    }
    if (length == 0) throw std::invalid_argument("length must be positive");
    if (source.starts_with("mech:")) {
        return mechanical_word(parse_slope_at(source.substr(5), 5), 0, length);
    }
    if (source.starts_with("quasi:")) {
        const auto body = source.substr(6);
        const auto bar1 = body.find('|');
        const auto bar2 = bar1 == std::string_view::npos ? bar1 : body.find('|', bar1 + 1);
        if (bar2 == std::string_view::npos) throw ParseError("expected quasi:W|MORPHISM|SLOPE", 6);
        QuasiSturmianSpec spec{
            parse_word_at(body.substr(0, bar1), 6),
            parse_morphism_at(body.substr(bar1 + 1, bar2 - bar1 - 1), 6 + bar1 + 1),
            parse_slope_at(body.substr(bar2 + 1), 6 + bar2 + 1),
        };
        return apply_morphism(spec, length);
    }
    const DigitStream ds = digits(parse_real(source), base, length, budget);
    if (!ds.complete()) {
        throw BudgetExhausted("only " + std::to_string(ds.certified()) + " of " + std::to_string(length) +
                              " digits certified");
    }
    return ds.word();
}

}  // namespace dioph
