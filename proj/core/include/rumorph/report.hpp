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

#ifndef RUMORPH_REPORT_HPP_
#define RUMORPH_REPORT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rumorph/features.hpp"
#include "rumorph/result.hpp"

namespace rumorph {

// Report data document: flat key -> integer or text.
using FieldValue = std::variant<std::int64_t, std::string>;
using DataDoc = std::map<std::string, FieldValue>;

/// Text template with typed placeholders "{name:type|key=value,...}".
///
/// Types and their data values:
///   text      verbatim string
///   noun      noun lemma, declined per case=/number=
///   adjective adjective lemma; either explicit case=/gender=/number= or
///             link=<noun placeholder> to copy its gender/animacy/case/number
///   verb      infinitive; tense= plus person=/number= or link= for
///             past-tense gender/number agreement
///   number    integer, verbalized as a cardinal (case=, gender=)
///   ordinal   integer, verbalized as an ordinal (case=, gender=)
///   quantity  integer, verbalized numeral + counted noun= (negative values
///             prepend "минус")
///   count     integer kept as digits + counted noun= by the paucal rule
///   date      ISO date "YYYY-MM-DD", rendered day-ordinal month genitive
///             year-ordinal "года"
///
/// Every link= must name another placeholder in the same template.
class Template {
 public:
  struct Placeholder {
    std::string name;
    std::string type;
    std::map<std::string, std::string> args;
  };

  static Result<Template> parse(std::string_view source);

  const std::string& source() const { return source_; }
  const std::vector<Placeholder>& placeholders() const { return holders_; }

  // Literal text chunks between placeholders; chunks_[i] precedes
  // holders_[i], the final chunk closes the template.
  const std::vector<std::string>& chunks() const { return chunks_; }

 private:
  std::string source_;
  std::vector<std::string> chunks_;
  std::vector<Placeholder> holders_;
};

/// Resolves every placeholder against `data` through the inflection engine.
/// Deterministic: equal template and data give byte-identical output.
Result<std::string> render_report(const Template& tpl, const DataDoc& data);

}  // namespace rumorph

#endif  // RUMORPH_REPORT_HPP_
