#include "facta/parse.hpp"

#include "facta/errors.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace facta {

namespace {

bool digit(int c) { return c >= '0' && c <= '9'; }

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Int parse_uint(std::string_view text, std::size_t offset) {
    if (text.empty())
        throw parse_error(offset, "digit");
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!digit(text[i]))
            throw parse_error(offset + i, "digit");
    return Int(std::string(text));
}

} // namespace

puiseux_monoid parse_monoid(std::string_view text) {
    text = trimmed(text);
    if (text.substr(0, 4) == "gen:") {
        std::string_view rest = text.substr(4);
        std::vector<rat> gens;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = rest.find(',', pos);
            std::string_view piece =
                comma == std::string_view::npos
                    ? rest.substr(pos)
                    : rest.substr(pos, comma - pos);
            gens.push_back(rat::parse(trimmed(piece)));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        return puiseux_monoid::fin_gen(std::move(gens));
    }
    if (text.substr(0, 5) == "grid:")
        return puiseux_monoid::grid(parse_uint(text.substr(5), 5));
    if (text.substr(0, 5) == "ppow:")
        return puiseux_monoid::p_power(parse_uint(text.substr(5), 5));
    throw parse_error(0, "monoid literal 'gen:q1,...', 'grid:L', or 'ppow:p'");
}

coeff_ring parse_ring(std::string_view text) {
    text = trimmed(text);
    if (text == "int")
        return coeff_ring::integers();
    if (text == "rat")
        return coeff_ring::rationals();
    if (text.substr(0, 3) == "fp:")
        return coeff_ring::prime_field(parse_uint(text.substr(3), 3));
    throw parse_error(0, "ring literal 'int', 'rat', or 'fp:p'");
}

poly_expr parse_poly(std::string_view text, const coeff_ring& ring,
                     const puiseux_monoid& monoid) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() &&
               std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto peek = [&]() -> int { return i < text.size() ? text[i] : -1; };
    auto read_digits = [&](const char* expected) {
        std::size_t start = i;
        while (i < text.size() && digit(text[i]))
            ++i;
        if (i == start)
            throw parse_error(start, expected);
        return std::string(text.substr(start, i - start));
    };
    // unsigned integer or a/b
    auto read_rational = [&](const char* expected) {
        Int num(read_digits(expected));
        Int den(1);
        if (peek() == '/') {
            ++i;
            den = Int(read_digits("digit after '/'"));
            if (den == 0)
                throw domain_error("parse_poly: coefficient denominator is 0");
        }
        mpq_class v(num, den);
        v.canonicalize();
        return v;
    };

    std::vector<term> terms;
    skip_ws();
    if (i == text.size())
        throw parse_error(i, "polynomial expression");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size())
            break;
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (text[i] == '-')
                sign = -1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw parse_error(i, "'+' or '-'");
        }

        mpq_class coeff(1);
        bool have_coeff = false;
        if (digit(peek())) {
            coeff = read_rational("digit");
            have_coeff = true;
            skip_ws();
        }
        rat exponent(Int(0), Int(1));
        bool have_var = false;
        if (peek() == 'X') {
            have_var = true;
            exponent = rat(Int(1), Int(1));
            ++i;
            skip_ws();
            if (peek() == '^') {
                ++i;
                skip_ws();
                if (digit(peek())) {
                    exponent = rat(Int(read_digits("digit")), Int(1));
                } else if (peek() == '(') {
                    ++i;
                    skip_ws();
                    Int num(read_digits("digit"));
                    Int den(1);
                    skip_ws();
                    if (peek() == '/') {
                        ++i;
                        skip_ws();
                        den = Int(read_digits("digit after '/'"));
                        if (den == 0)
                            throw domain_error(
                                "parse_poly: exponent denominator is 0");
                        skip_ws();
                    }
                    if (peek() != ')')
                        throw parse_error(i, "')'");
                    ++i;
                    exponent = rat(num, den);
                } else {
                    throw parse_error(i, "integer exponent or '('");
                }
            }
        }
        if (!have_coeff && !have_var)
            throw parse_error(i, "term");
        if (sign < 0)
            coeff = -coeff;
        terms.push_back({exponent, std::move(coeff)});
        first = false;
    }
    return poly_expr::make(ring, monoid, std::move(terms));
}

} // namespace facta
