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

#include <set>
#include <string>

#include "doctest.h"
#include "rumorph/adjective.hpp"
#include "rumorph/features.hpp"
#include "rumorph/noun.hpp"
#include "rumorph/numeral.hpp"
#include "rumorph/paradigm.hpp"
#include "rumorph/verb.hpp"
#include "test_util.hpp"

using namespace rumorph;
using testutil::W;

namespace {

// Slot keys must be pairwise distinct or find() would alias forms.
void check_distinct_keys(const std::vector<FeatureBundle>& table) {
  std::set<std::string> tags;
  for (const FeatureBundle& b : table) tags.insert(b.tag());
  CHECK_EQ(tags.size(), table.size());
}

}  // namespace

TEST_SUITE("paradigm") {

TEST_CASE("slot table cardinalities are frozen") {
  CHECK_EQ(slot_table(Pos::Noun).size(), 12);
  CHECK_EQ(slot_table(Pos::Verb).size(), 24);
  CHECK_EQ(slot_table(Pos::Adjective).size(), 28);
  CHECK_EQ(slot_table(Pos::Adverb).size(), 2);
  CHECK_EQ(slot_table(Pos::Ordinal).size(), 18);
  CHECK_EQ(slot_table(Pos::Cardinal).size(), 24);
  CHECK_EQ(slot_table(Pos::ParticiplePresAct).size(), 28);
  CHECK_EQ(slot_table(Pos::ParticiplePastAct).size(), 28);
  CHECK_EQ(slot_table(Pos::ParticiplePastPass).size(), 28);
  CHECK_EQ(slot_table(Pos::Gerund).size(), 2);
  CHECK_EQ(slot_table(Pos::Imperative).size(), 2);
  for (Pos p : {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb,
                Pos::Ordinal, Pos::Cardinal, Pos::ParticiplePresAct,
                Pos::ParticiplePastAct, Pos::ParticiplePastPass, Pos::Gerund,
                Pos::Imperative})
    check_distinct_keys(slot_table(p));
}

TEST_CASE("generated paradigms follow their slot table exactly") {
  auto expect_table = [](const Paradigm& p) {
    const auto& table = slot_table(p.pos);
    REQUIRE_EQ(p.slots.size(), table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
      CHECK_EQ(p.slots[i].features, table[i]);
  };
  expect_table(*noun_paradigm(W("стол")));
  expect_table(*adjective_paradigm(W("красивый")));
  expect_table(*verb_paradigm(W("читать")));
  expect_table(*verb_paradigm(W("решить")));
  expect_table(*adverb_paradigm(W("быстро")));
  expect_table(*gerund_paradigm(W("читать")));
  expect_table(*imperative_paradigm(W("читать")));
  expect_table(*participle_paradigm(W("решить"), ParticipleKind::PastPassive));
  expect_table(*cardinal_paradigm(17));
  expect_table(*ordinal_paradigm(40));
}

TEST_CASE("unrealizable slots keep their keys") {
  // Perfective verbs have no present series and no analytic future.
  auto p = verb_paradigm(W("решить"));
  REQUIRE(p.ok());
  CHECK_EQ(p->size(), 24);
  const auto* pres =
      p->find(verb_present_slot(Person::First, Number::Singular));
  REQUIRE(pres);
  CHECK_FALSE(pres->form.has_value());
  const auto* fut = p->find(verb_future_slot(Person::First, Number::Singular));
  REQUIRE(fut);
  CHECK_EQ(fut->form->str(), "решу");
  CHECK_EQ(p->realized_count(), 11);  // inf + 6 futr + 4 past
}

TEST_CASE("the reserved verb slot never fills") {
  const FeatureBundle& reserved = verb_reserved_slot();
  for (const char* verb : {"читать", "решить", "быть", "улыбаться"}) {
    auto p = verb_paradigm(W(verb));
    REQUIRE(p.ok());
    const auto* slot = p->find(reserved);
    REQUIRE(slot);
    CHECK_FALSE(slot->form.has_value());
  }
}

TEST_CASE("imperfective verbs realize the analytic future") {
  auto p = verb_paradigm(W("читать"));
  REQUIRE(p.ok());
  const auto* plain =
      p->find(verb_future_slot(Person::Third, Number::Singular));
  REQUIRE(plain);
  CHECK_EQ(plain->form->str(), "будет читать");
  const auto* marked =
      p->find(verb_future_analytic_slot(Person::Third, Number::Singular));
  REQUIRE(marked);
  CHECK_EQ(marked->form->str(), "будет читать");
  CHECK_EQ(p->realized_count(), 23);  // everything but the reserved slot
}

TEST_CASE("short adjective slots are unrealized when skipped") {
  auto p = adjective_paradigm(W("третий"));
  REQUIRE(p.ok());
  CHECK_EQ(p->size(), 28);
  CHECK_EQ(p->realized_count(), 24);
  const auto* nom =
      p->find(adjective_long_slot(Case::Nominative, GenderOrPlural::Feminine));
  REQUIRE(nom);
  CHECK_EQ(nom->form->str(), "третья");
}

TEST_CASE("cardinal one lacks plural-style slots but keeps keys") {
  auto p = cardinal_paradigm(1);
  REQUIRE(p.ok());
  CHECK_EQ(p->size(), 24);
  CHECK_EQ(p->realized_count(), 24);
  auto p2 = cardinal_paradigm(10000);
  CHECK_FALSE(p2.ok());
  CHECK_EQ(p2.error().code, errc::range);
}

}  // TEST_SUITE
