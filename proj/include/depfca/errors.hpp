#pragma once

#include <stdexcept>
#include <string>

namespace depfca {

// Malformed input data (CSV parse failures, ragged rows, duplicate headers).
class IngestionError : public std::runtime_error {
public:
    explicit IngestionError(const std::string& what) : std::runtime_error(what) {}
};

// A hard size cap was exceeded (tuple-enumeration caps, attribute caps).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace depfca
