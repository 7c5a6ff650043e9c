// Copyright 2026 The rumorph Authors.
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

#ifndef RUMORPH_RESULT_HPP_
#define RUMORPH_RESULT_HPP_

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace rumorph {

enum class errc {
  not_russian,        // input is not a normalizable Russian word
  underflow,          // till(w, n) with n > |w|
  no_such_form,       // the requested slot does not exist for this lexeme
  invalid_slot,       // feature bundle not admitted by the part of speech
  not_adjective_shaped,
  range,              // numeral value outside 0..9999
  malformed_expression,
  missing_field,
  bad_field,
  parse,              // corpus/template parse failure
  empty,              // empty input collection
  io,                 // file could not be opened/read
};

const char* errc_name(errc c);

struct Error {
  errc code;
  std::string message;
};

inline Error make_error(errc c, std::string msg) { return Error{c, std::move(msg)}; }

/// Minimal expected-like return type; engine functions never throw on
/// grammatical inputs, they return the error branch instead.
template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    assert(ok());
    return std::get<T>(v_);
  }
  T& value() {
    assert(ok());
    return std::get<T>(v_);
  }
  const Error& error() const {
    assert(!ok());
    return std::get<Error>(v_);
  }

  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  T value_or(T fallback) const { return ok() ? value() : std::move(fallback); }

 private:
  std::variant<T, Error> v_;
};

}  // namespace rumorph

#endif  // RUMORPH_RESULT_HPP_
