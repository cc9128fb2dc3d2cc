#pragma once

#include <stdexcept>
#include <string>

namespace symgap {

struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what) : std::runtime_error(what) {}
};

struct NonGenericPoint : std::runtime_error {
    explicit NonGenericPoint(const std::string& what) : std::runtime_error(what) {}
};

struct NotFiniteType : std::runtime_error {
    explicit NotFiniteType(const std::string& what) : std::runtime_error(what) {}
};

struct NotClosed : std::runtime_error {
    int i, j;
    NotClosed(int i_, int j_)
        : std::runtime_error("bracket of generators " + std::to_string(i_) + ", " +
                             std::to_string(j_) + " leaves the span"),
          i(i_), j(j_) {}
    NotClosed(int i_, int j_, const std::string& what) : std::runtime_error(what), i(i_), j(j_) {}
};

struct NotADerivation : std::runtime_error {
    explicit NotADerivation(const std::string& what) : std::runtime_error(what) {}
};

struct NotDiagonalizable : std::runtime_error {
    explicit NotDiagonalizable(const std::string& what) : std::runtime_error(what) {}
};

struct PrescribedG0NotDerivations : std::runtime_error {
    explicit PrescribedG0NotDerivations(const std::string& what) : std::runtime_error(what) {}
};

struct NotFundamental : std::runtime_error {
    explicit NotFundamental(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateMetric : std::runtime_error {
    explicit DegenerateMetric(const std::string& what) : std::runtime_error(what) {}
};

struct IncompatibleFiltration : std::runtime_error {
    explicit IncompatibleFiltration(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroTrace : std::runtime_error {
    explicit ZeroTrace(const std::string& what) : std::runtime_error(what) {}
};

struct NoStabilization : std::runtime_error {
    explicit NoStabilization(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symgap
