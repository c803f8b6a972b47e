#ifndef KRG_PARSER_HPP
#define KRG_PARSER_HPP

#include <memory>
#include <string>

#include "krg/error.hpp"
#include "krg/krgring.hpp"

namespace krg {

// Parse error with the 0-based character offset of the offending token.
class ParseFailure : public Error {
public:
    ParseFailure(int pos, const std::string& msg)
        : Error(ErrorCode::ParseError, "at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    int position() const { return pos_; }

private:
    int pos_;
};

// Element grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' ['-'] INT)*
//   atom   := INT | eta | mu | beta | [wI] | dR(I) | dH(I) | lamI | dG(I) | r(expr) | (expr)
// beta and dG(I) are only meaningful inside r(...).
KRGElement parse_element(const std::shared_ptr<const KRAlgebra>& alg, const std::string& text);
// The same expression read in the complex forms, with eta = 0, mu = 2 beta^2 and r(z) = z + conj(z).
// Representation classes are read as plain classes, as inside r(...); quaternionic ones get no beta^2.
ComplexForm parse_complex(const std::shared_ptr<const KRAlgebra>& alg, const std::string& text);

}  // namespace krg

#endif
