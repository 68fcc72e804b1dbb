// Copyright 2026 The autolabel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUTOLABEL_ERROR_HPP_
#define AUTOLABEL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace autolabel {

// Base of every error the library raises. The CLI maps the concrete type to
// an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad configuration value or malformed input table layout.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// An input or upstream artifact file does not exist.
class MissingFileError : public Error {
 public:
  explicit MissingFileError(const std::string& path)
      : Error("missing file: " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Input content could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A remote call failed in a way that may succeed on retry.
class RetryableError : public Error {
 public:
  RetryableError(const std::string& what, int status)
      : Error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

}  // namespace autolabel

#endif  // AUTOLABEL_ERROR_HPP_
