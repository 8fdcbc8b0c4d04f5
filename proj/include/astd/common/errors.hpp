#pragma once

#include <stdexcept>
#include <string>

namespace astd {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed specification tree (unresolved call, duplicate attribute, ...).
class SpecError : public Error {
public:
    using Error::Error;
};

// Bad input data: unparseable timestamps, missing routing values, bad CSV.
class InputError : public Error {
public:
    using Error::Error;
};

// Invalid configuration (unknown detector, bad window parameters).
class ConfigError : public Error {
public:
    using Error::Error;
};

// A model was asked to fit on fewer samples than it needs.
class NotEnoughData : public Error {
public:
    using Error::Error;
};

} // namespace astd
