#ifndef GRADA_ERROR_HPP
#define GRADA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grada {

enum class Errc {
    MalformedTable,
    NotSubgroup,
    NotNormal,
    NotIdempotent,
    NonCommuting,
    BadWitness,
    QuiverMismatch,
    InvalidCoefficient,
    UnknownBuiltin,
    UnknownCheck,
    MissingEpsilonFamily,
    NotApplicable,
    ParseError,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NonCommuting: return "NonCommuting";
    case Errc::BadWitness: return "BadWitness";
    case Errc::QuiverMismatch: return "QuiverMismatch";
    case Errc::InvalidCoefficient: return "InvalidCoefficient";
    case Errc::UnknownBuiltin: return "UnknownBuiltin";
    case Errc::UnknownCheck: return "UnknownCheck";
    case Errc::MissingEpsilonFamily: return "MissingEpsilonFamily";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace grada

#endif
