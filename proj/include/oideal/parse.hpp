#ifndef OIDEAL_PARSE_HPP
#define OIDEAL_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "oideal/poly.hpp"

namespace oideal {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& msg)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar (whitespace insignificant):
///   ring   := ("QQ" | "GF(" int ")") "[" name ("," name)* "]"
///             [ "weights=(" int ("," int)* ")" ]
///             [ "order=" ("lex"|"grlex"|"grevlex"|"elim(" int ")") ]
///             [ "mod=(" poly ("," poly)* ")" ]
///   poly   := ["-"] term (("+"|"-") term)*
///   term   := [coeff "*"?] factor ("*" factor)* | coeff
///   factor := name ["^" int] | "(" poly ")" | int
///   coeff  := int ["/" int]
///   matrix := "[" row ("," row)* "]" ; row := "[" poly ("," poly)* "]"
Ring parse_ring(const std::string& text);
Polynomial parse_poly(const Ring& ring, const std::string& text);
std::vector<Polynomial> parse_poly_list(const Ring& ring, const std::string& text);
PolyMatrix parse_matrix(const Ring& ring, const std::string& text);

}  // namespace oideal

#endif
