#ifndef GRADA_VERDICT_HPP
#define GRADA_VERDICT_HPP

#include <cstdint>
#include <map>
#include <string>

namespace grada {

// Three-valued classification result. Fails always carries a replayable
// witness; Holds always carries a finite certificate; UpToBound records
// positive evidence that is only claimed within the bound.
enum class Status { Holds, Fails, UpToBound };

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::UpToBound: return "UpToBound";
    }
    return "?";
}

struct Verdict {
    Status status = Status::UpToBound;
    std::int64_t bound = 0;
    std::string witness;                           // nonempty iff Fails
    std::string certificate;                       // evidence summary otherwise
    std::map<std::string, std::string> details;    // stable extra key/values

    static Verdict holds(std::int64_t bound, std::string cert)
    {
        Verdict v;
        v.status = Status::Holds;
        v.bound = bound;
        v.certificate = std::move(cert);
        return v;
    }

    static Verdict fails(std::int64_t bound, std::string witness)
    {
        Verdict v;
        v.status = Status::Fails;
        v.bound = bound;
        v.witness = std::move(witness);
        return v;
    }

    static Verdict up_to_bound(std::int64_t bound, std::string cert)
    {
        Verdict v;
        v.status = Status::UpToBound;
        v.bound = bound;
        v.certificate = std::move(cert);
        return v;
    }
};

/// Holds > UpToBound > Fails; used by the hierarchy consistency invariant.
inline int status_rank(Status s)
{
    switch (s) {
    case Status::Holds: return 2;
    case Status::UpToBound: return 1;
    case Status::Fails: return 0;
    }
    return 0;
}

} // namespace grada

#endif
