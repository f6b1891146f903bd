// Copyright 2026 The Anyon Toolkit Authors
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

namespace anyon {

/** Invalid argument or precondition violation (CLI exit code 1). */
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/** Division by zero and similar arithmetic failures. */
class ArithmeticError : public DomainError {
 public:
  explicit ArithmeticError(const std::string& what) : DomainError(what) {}
};

/** A requested value lies outside the representable field. */
class UnrepresentableError : public DomainError {
 public:
  explicit UnrepresentableError(const std::string& what) : DomainError(what) {}
};

/** Malformed or missing catalog / table data. */
class DataError : public DomainError {
 public:
  explicit DataError(const std::string& what) : DomainError(what) {}
};

/** Unknown catalog entry. */
class NotFoundError : public DomainError {
 public:
  explicit NotFoundError(const std::string& what) : DomainError(what) {}
};

/** The polynomial system is inconsistent or could not be solved (exit 2). */
class UnsolvableError : public std::runtime_error {
 public:
  explicit UnsolvableError(const std::string& what) : std::runtime_error(what) {}
};

/** File system or parse failure (exit 3). */
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace anyon
