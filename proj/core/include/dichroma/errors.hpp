#ifndef DICHROMA_ERRORS_HPP
#define DICHROMA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dichroma {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Construction / input validation

class VertexOutOfRange : public Error {
public:
    using Error::Error;
};

class SelfLoop : public Error {
public:
    using Error::Error;
};

// The simplicity invariant (at most one of uv, vu) is a hard error, never a
// silent merge.
class DuplicateOppositeArc : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class BadParameter : public Error {
public:
    using Error::Error;
};

class NotATournament : public Error {
public:
    using Error::Error;
};

class NotValidOrientation : public Error {
public:
    using Error::Error;
};

class NotStronglyConnected : public Error {
public:
    using Error::Error;
};

class NotAcyclic : public Error {
public:
    using Error::Error;
};

class BadPartition : public Error {
public:
    using Error::Error;
};

class PartialColoring : public Error {
public:
    using Error::Error;
};

// Raised when an exact search runs out of its node or time budget.
// Carries the best bounds established so far, so callers can treat the
// result as an interval instead of a hard failure.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, long long lower_bound, long long upper_bound)
        : Error(what), lower(lower_bound), upper(upper_bound) {}

    long long lower;
    long long upper;
};

// A user-supplied oracle returned a certificate that fails verification.
class OracleFailure : public Error {
public:
    using Error::Error;
};

// Internal palette accounting failed; unreachable when all inputs honor
// their contracts.
class ColorBudgetBug : public Error {
public:
    using Error::Error;
};

// A vertex of a would-be nice set has too many in- and out-neighbors
// outside the set. Signals a freeness violation upstream.
class NicenessViolated : public Error {
public:
    NicenessViolated(const std::string& what, int v,
                     std::vector<int> in_witness, std::vector<int> out_witness)
        : Error(what), vertex(v),
          big_in(std::move(in_witness)), big_out(std::move(out_witness)) {}

    int vertex;
    std::vector<int> big_in;
    std::vector<int> big_out;
};

// The input digraph contains a forbidden pattern; carries the embedding.
class FreenessViolated : public Error {
public:
    FreenessViolated(const std::string& what, std::vector<int> witness)
        : Error(what), embedding(std::move(witness)) {}

    std::vector<int> embedding;
};

class UncoveredVertex : public Error {
public:
    UncoveredVertex(const std::string& what, int v) : Error(what), vertex(v) {}

    int vertex;
};

} // namespace dichroma

#endif
