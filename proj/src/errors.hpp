#ifndef LZB_ERRORS_HPP
#define LZB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lzb {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg = "operands live over different fields")
        : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch") : Error(msg) {}
};

struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& msg = "subspaces have different ambient dimension")
        : Error(msg) {}
};

struct NotContained : Error {
    explicit NotContained(const std::string& msg = "inner subspace is not contained in outer")
        : Error(msg) {}
};

struct NotAnIdeal : Error {
    explicit NotAnIdeal(const std::string& msg = "subspace is not a two-sided ideal") : Error(msg) {}
};

struct NotValidated : Error {
    explicit NotValidated(const std::string& msg =
                              "algebra has not passed the Leibniz identity check")
        : Error(msg) {}
};

struct NotStem : Error {
    explicit NotStem(const std::string& msg = "pair is not a stem pair") : Error(msg) {}
};

struct CertificateInvalid : Error {
    explicit CertificateInvalid(const std::string& msg = "certificate does not verify")
        : Error(msg) {}
};

struct CenterNotPreserved : Error {
    explicit CenterNotPreserved(const std::string& msg =
                                    "map does not preserve the designated central part")
        : Error(msg) {}
};

struct FactorIdentityViolated : Error {
    explicit FactorIdentityViolated(const std::string& msg = "factor set identity fails")
        : Error(msg) {}
};

struct LeibnizCheckFailed : Error {
    explicit LeibnizCheckFailed(const std::string& msg =
                                    "constructed algebra fails the Leibniz identity")
        : Error(msg) {}
};

struct StemReductionIncomplete : Error {
    explicit StemReductionIncomplete(const std::string& msg =
                                         "heuristic stem reduction did not reach a stem pair")
        : Error(msg) {}
};

struct ParseError : Error {
    size_t line;
    ParseError(size_t line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace lzb

#endif
