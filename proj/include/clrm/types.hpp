#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace clrm {

/// Node labels and array positions. Position 0 and n+1 are the virtual sentinels.
using node_t = std::uint64_t;
using value_t = std::int64_t;

using maybe_node = std::optional<node_t>;

/// A query argument outside its legal domain (bad index, bad rank, i > j, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A parameter the implementation cannot honor (micro size too large, oracle bound, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inconsistent input data: corrupted files, self-contradicting query providers.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace clrm
