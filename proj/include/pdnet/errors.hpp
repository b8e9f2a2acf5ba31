/*
   Copyright 2026 The pdnet Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace pdnet {

/// A numeric argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A scenario/config file is malformed or inconsistent. what() names the field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(field)
    {
    }

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// No base station is available to associate with.
class NoCoverageError : public std::runtime_error {
public:
    NoCoverageError() : std::runtime_error("no candidate base station") {}
};

/// Conditional-mode capacity requested but no iteration was covered.
class UndefinedEstimate : public std::runtime_error {
public:
    explicit UndefinedEstimate(double coverage)
        : std::runtime_error("conditional capacity undefined: no covered iterations"),
          coverage_(coverage)
    {
    }

    [[nodiscard]] double coverage_probability() const noexcept { return coverage_; }

private:
    double coverage_;
};

}  // namespace pdnet
