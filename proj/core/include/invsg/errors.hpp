/*
 *   Copyright 2026 The invsg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef INVSG_ERRORS_HPP_
#define INVSG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invsg {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// Malformed argument (bad letter index, empty factor, ...).
  class ArgumentError : public Error {
   public:
    using Error::Error;
  };

  /// A documented precondition of an operation does not hold.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  /// Syntax or scope error in a textual input, with a 0-based offset.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  /// A state or element budget was exhausted. `used()` reports how far the
  /// computation got before giving up.
  class ResourceLimit : public Error {
   public:
    ResourceLimit(std::string const& what, std::size_t used)
        : Error(what + " (budget exhausted after " + std::to_string(used)
                + " items)"),
          used_(used) {}

    std::size_t used() const noexcept {
      return used_;
    }

   private:
    std::size_t used_;
  };

}  // namespace invsg

#endif  // INVSG_ERRORS_HPP_
