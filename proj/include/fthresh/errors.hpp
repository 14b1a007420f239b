#ifndef FTHRESH_ERRORS_HPP
#define FTHRESH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fthresh {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyPointSet : std::invalid_argument {
    explicit EmptyPointSet(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidParameter : std::invalid_argument {
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct CostLimit : std::runtime_error {
    explicit CostLimit(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}

#endif
