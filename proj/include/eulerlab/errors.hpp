/*
   Copyright 2026 The eulerlab Authors

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

#ifndef EULERLAB_ERRORS_HPP
#define EULERLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulerlab
{

// Caller supplied something outside an operation's contract (CLI exit code 2).
class input_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request, e.g. the valuation of zero or a pole.
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// The implementation contradicted one of its own invariants (CLI exit code 3).
class consistency_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// A configured size bound would be exceeded.
class resource_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised by as_rational when a non-constant power-basis coefficient is nonzero.
class not_rational_error : public std::domain_error
{
public:
    explicit not_rational_error(std::size_t index)
        : std::domain_error("not rational: nonzero coefficient at index " + std::to_string(index)), index_(index)
    {
    }

    std::size_t index() const noexcept
    {
        return index_;
    }

private:
    std::size_t index_;
};

} // namespace eulerlab

#endif
