#ifndef KRG_ERROR_HPP
#define KRG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace krg {

enum class ErrorCode {
    OddRankSymplectic,
    UnsupportedFamily,
    InvalidInvolution,
    NonDominant,
    NonInvariantInput,
    VirtualInput,
    NonPolynomial,
    UnclassifiableTwisted,
    MixedGroup,
    WrongSpec,
    UnsupportedGroup,
    NotRealClass,
    ParseError,
    TableError,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& msg)
        : std::runtime_error(std::string(error_name(c)) + ": " + msg), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace krg

#endif
