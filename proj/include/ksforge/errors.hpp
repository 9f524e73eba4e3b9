// Copyright 2026 The ksforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ksforge {

// Malformed textual input (observable symbols, diagram files, symbol strings).
// `where` is a human-readable location: "position 3", "line 5", ...
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string where)
        : std::runtime_error(where.empty() ? what : what + " (" + where + ")"),
          where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

// A configured resource cap was exceeded (qubit count, kernel dimension, ...).
class CapExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ksforge
