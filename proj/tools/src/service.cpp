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

#include "service.hpp"

#include <charconv>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include <httplib.h>

#include "rumorph/agreement.hpp"
#include "rumorph/adjective.hpp"
#include "rumorph/corpus.hpp"
#include "rumorph/evaluate.hpp"
#include "rumorph/features.hpp"
#include "rumorph/noun.hpp"
#include "rumorph/numeral.hpp"
#include "rumorph/paradigm.hpp"
#include "rumorph/tables.hpp"
#include "rumorph/verb.hpp"
#include "rumorph/version.hpp"

namespace rumorph::srv {

namespace {

using nlohmann::json;

ApiResult bad_request(const std::string& message) {
  return {400,
          json{{"error", {{"code", "bad-request"}, {"message", message}}}}};
}

ApiResult from_engine_error(const Error& e) {
  int status = e.code == errc::no_such_form ? 422 : 400;
  return {status,
          json{{"error",
                {{"code", std::string(errc_name(e.code))},
                 {"message", e.message}}}}};
}

ApiResult ok_value(json value) {
  return {200, json{{"result", std::move(value)}}};
}

ApiResult ok_word(const Result<CyrillicWord>& r) {
  if (!r.ok()) return from_engine_error(r.error());
  return ok_value(r->str());
}

// Query argument reader: first missing/invalid argument wins and turns the
// whole call into a 400.
class Args {
 public:
  explicit Args(const Params& params) : params_(params) {}

  std::optional<std::string> raw(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<CyrillicWord> word(const std::string& key) {
    std::optional<std::string> v = need(key);
    if (!v) return std::nullopt;
    Result<CyrillicWord> w = CyrillicWord::parse(*v);
    if (!w.ok()) {
      fail(key + ": " + w.error().message);
      return std::nullopt;
    }
    return *w;
  }

  template <class T, class Parser>
  std::optional<T> token(const std::string& key, Parser parse) {
    std::optional<std::string> v = need(key);
    if (!v) return std::nullopt;
    std::optional<T> t = parse(*v);
    if (!t) fail("unknown " + key + " value: " + *v);
    return t;
  }

  template <class T, class Parser>
  std::optional<T> token_opt(const std::string& key, Parser parse) {
    std::optional<std::string> v = raw(key);
    if (!v) return std::nullopt;
    std::optional<T> t = parse(*v);
    if (!t) fail("unknown " + key + " value: " + *v);
    return t;
  }

  std::optional<int> number(const std::string& key) {
    std::optional<std::string> v = need(key);
    if (!v) return std::nullopt;
    int n = 0;
    const char* first = v->data();
    const char* last = first + v->size();
    if (first != last && *first == '-') ++first;
    auto [p, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || p != last) {
      fail(key + " is not an integer: " + *v);
      return std::nullopt;
    }
    return v->front() == '-' ? -n : n;
  }

  std::optional<GenderOrPlural> gender_or_plural(const std::string& key) {
    std::optional<std::string> v = need(key);
    if (!v) return std::nullopt;
    if (*v == "pl") return GenderOrPlural::Plural;
    std::optional<Gender> g = gender_from(*v);
    if (!g) {
      fail("unknown " + key + " value: " + *v);
      return std::nullopt;
    }
    return to_gender_or_plural(*g);
  }

  bool failed() const { return error_.has_value(); }
  ApiResult error() const { return bad_request(*error_); }

 private:
  std::optional<std::string> need(const std::string& key) {
    std::optional<std::string> v = raw(key);
    if (!v) fail("missing parameter: " + key);
    return v;
  }
  void fail(const std::string& message) {
    if (!error_) error_ = message;
  }

  const Params& params_;
  std::optional<std::string> error_;
};

ApiResult op_noun(const Params& params) {
  Args a(params);
  auto word = a.word("word");
  auto c = a.token<Case>("case", case_from);
  auto n = a.token<Number>("number", number_from);
  if (a.failed()) return a.error();
  return ok_word(inflect_noun(*word, *c, *n));
}

ApiResult op_adjective(const Params& params) {
  Args a(params);
  auto word = a.word("word");
  auto g = a.gender_or_plural("gender");
  auto c = a.token_opt<Case>("case", case_from);
  auto anim = a.token_opt<Animacy>("animacy", animacy_from);
  if (a.failed()) return a.error();
  FeatureBundle b = c ? adjective_long_slot(*c, *g) : adjective_short_slot(*g);
  b.animacy = anim;
  return ok_word(inflect_adjective(*word, b));
}

ApiResult op_verb(const Params& params) {
  Args a(params);
  auto word = a.word("word");
  auto tense = a.token_opt<Tense>("tense", tense_from);
  if (a.failed()) return a.error();
  FeatureBundle b;
  if (tense) {
    b.tense = tense;
    if (*tense == Tense::Past) {
      auto n = a.token<Number>("number", number_from);
      if (a.failed()) return a.error();
      b.number = n;
      if (*n == Number::Singular) {
        auto g = a.token<Gender>("gender", gender_from);
        if (a.failed()) return a.error();
        b.gender = g;
      }
    } else {
      auto p = a.token<Person>("person", person_from);
      auto n = a.token<Number>("number", number_from);
      if (a.failed()) return a.error();
      b.person = p;
      b.number = n;
      if (*tense == Tense::Future) {
        // aspect=impf requests the analytic series explicitly.
        auto asp = a.token_opt<Aspect>("aspect", aspect_from);
        if (a.failed()) return a.error();
        b.aspect = asp;
      }
    }
  }
  return ok_word(conjugate(*word, b));
}

ApiResult op_participle(const Params& params) {
  Args a(params);
  auto word = a.word("word");
  auto kind = a.token<ParticipleKind>("kind", participle_kind_from);
  auto g = a.gender_or_plural("gender");
  auto c = a.token_opt<Case>("case", case_from);
  auto anim = a.token_opt<Animacy>("animacy", animacy_from);
  if (a.failed()) return a.error();
  if (!c) {
    // Caseless request selects the short form (passive only).
    if (*kind != ParticipleKind::PastPassive)
      return bad_request("short forms exist only for kind=past-pass");
    return ok_word(participle_short(*word, *g));
  }
  return ok_word(
      participle(*word, *kind, *g, *c, anim.value_or(Animacy::Inanimate)));
}

ApiResult op_gerund(const Params& params) {
  Args a(params);
  auto word = a.word("word");
  auto asp = a.token_opt<Aspect>("aspect", aspect_from);
  if (a.failed()) return a.error();
  if (asp && *asp == Aspect::Biaspectual)
    return bad_request("aspect must be perf or impf");
  if (!asp) {
    Result<Aspect> inferred = get_perfectness(*word);
    if (!inferred.ok()) return from_engine_error(inferred.error());
    asp = *inferred == Aspect::Perfective ? Aspect::Perfective
                                          : Aspect::Imperfective;
  }
  return ok_word(*asp == Aspect::Perfective ? perfective_gerund(*word)
                                            : imperfective_gerund(*word));
}

ApiResult op_imperative(const Params& params) {
  Args a(params);
  auto word = a.word("word");
  auto n = a.token_opt<Number>("number", number_from);
  if (a.failed()) return a.error();
  return ok_word(imperative(*word, n.value_or(Number::Singular)));
}

ApiResult op_cardinal(const Params& params) {
  Args a(params);
  auto value = a.number("value");
  auto c = a.token_opt<Case>("case", case_from);
  auto g = a.token_opt<Gender>("gender", gender_from);
  auto anim = a.token_opt<Animacy>("animacy", animacy_from);
  if (a.failed()) return a.error();
  return ok_word(cardinal(value.value_or(0), c.value_or(Case::Nominative),
                          g.value_or(Gender::Masculine),
                          anim.value_or(Animacy::Inanimate)));
}

ApiResult op_ordinal(const Params& params) {
  Args a(params);
  auto value = a.number("value");
  auto c = a.token_opt<Case>("case", case_from);
  std::optional<GenderOrPlural> g;
  if (a.raw("gender")) g = a.gender_or_plural("gender");
  auto anim = a.token_opt<Animacy>("animacy", animacy_from);
  if (a.failed()) return a.error();
  return ok_word(ordinal(value.value_or(0),
                         g.value_or(GenderOrPlural::Masculine),
                         c.value_or(Case::Nominative),
                         anim.value_or(Animacy::Inanimate)));
}

ApiResult op_agree_adj_noun(const Params& params) {
  Args a(params);
  auto adj = a.word("adjective");
  auto noun = a.word("noun");
  auto c = a.token<Case>("case", case_from);
  auto n = a.token<Number>("number", number_from);
  if (a.failed()) return a.error();
  return ok_word(agree_adjective_noun(*adj, *noun, *c, *n));
}

ApiResult op_agree_verb_pronoun(const Params& params) {
  Args a(params);
  auto verb = a.word("verb");
  auto p = a.token<Person>("person", person_from);
  auto n = a.token<Number>("number", number_from);
  auto g = a.token_opt<Gender>("gender", gender_from);
  auto t = a.token_opt<Tense>("tense", tense_from);
  if (a.failed()) return a.error();
  return ok_word(
      agree_verb_pronoun(*verb, *p, *n, g, t.value_or(Tense::Present)));
}

ApiResult op_formula(const Params& params) {
  Args a(params);
  std::optional<std::string> expr = a.raw("expr");
  if (!expr) return bad_request("missing parameter: expr");
  return ok_word(formula_to_text(*expr));
}

ApiResult op_quantity(const Params& params) {
  Args a(params);
  auto value = a.number("value");
  auto noun = a.word("noun");
  auto c = a.token_opt<Case>("case", case_from);
  if (a.failed()) return a.error();
  return ok_word(
      quantity_phrase(*value, *noun, c.value_or(Case::Nominative)));
}

ApiResult op_paradigm(const Params& params) {
  Args a(params);
  auto pos = a.token<Pos>("pos", pos_from);
  auto w = a.raw("word");
  if (a.failed()) return a.error();
  if (!w) return bad_request("missing parameter: word");

  Result<Paradigm> paradigm = make_error(errc::invalid_slot, "unset");
  if (*pos == Pos::Cardinal || *pos == Pos::Ordinal) {
    int value = 0;
    auto [p, ec] = std::from_chars(w->data(), w->data() + w->size(), value);
    if (ec != std::errc() || p != w->data() + w->size()) {
      Result<CyrillicWord> lemma = CyrillicWord::parse(*w);
      if (!lemma.ok()) return from_engine_error(lemma.error());
      std::optional<int> v = *pos == Pos::Cardinal ? cardinal_value(*lemma)
                                                   : ordinal_value(*lemma);
      if (!v) return bad_request("unrecognized numeral lemma: " + *w);
      value = *v;
    }
    paradigm =
        *pos == Pos::Cardinal ? cardinal_paradigm(value) : ordinal_paradigm(value);
  } else {
    Result<CyrillicWord> lemma = CyrillicWord::parse(*w);
    if (!lemma.ok()) return from_engine_error(lemma.error());
    switch (*pos) {
      case Pos::Noun: paradigm = noun_paradigm(*lemma); break;
      case Pos::Adjective: paradigm = adjective_paradigm(*lemma); break;
      case Pos::Adverb: paradigm = adverb_paradigm(*lemma); break;
      case Pos::Verb: paradigm = verb_paradigm(*lemma); break;
      case Pos::Imperative: paradigm = imperative_paradigm(*lemma); break;
      case Pos::Gerund: paradigm = gerund_paradigm(*lemma); break;
      case Pos::ParticiplePresAct:
        paradigm = participle_paradigm(*lemma, ParticipleKind::PresentActive);
        break;
      case Pos::ParticiplePastAct:
        paradigm = participle_paradigm(*lemma, ParticipleKind::PastActive);
        break;
      case Pos::ParticiplePastPass:
        paradigm = participle_paradigm(*lemma, ParticipleKind::PastPassive);
        break;
      default: break;
    }
  }
  if (!paradigm.ok()) return from_engine_error(paradigm.error());

  json slots = json::array();
  for (const Paradigm::Slot& s : paradigm->slots) {
    json row;
    row["slot"] = s.features.tag();
    if (s.form)
      row["form"] = s.form->str();
    else
      row["form"] = nullptr;
    slots.push_back(std::move(row));
  }
  return ok_value(json{{"pos", std::string(name_of(*pos))},
                       {"lemma", paradigm->lemma.str()},
                       {"slots", std::move(slots)}});
}

ApiResult op_health(const Params&) {
  return ok_value(json{{"service", "rumorph"}, {"version", kVersion}});
}

}  // namespace

ApiResult api_call(const std::string& op, const Params& params) {
  if (op == "noun") return op_noun(params);
  if (op == "adjective") return op_adjective(params);
  if (op == "verb") return op_verb(params);
  if (op == "participle") return op_participle(params);
  if (op == "gerund") return op_gerund(params);
  if (op == "imperative") return op_imperative(params);
  if (op == "cardinal") return op_cardinal(params);
  if (op == "ordinal") return op_ordinal(params);
  if (op == "quantity") return op_quantity(params);
  if (op == "agree/adj-noun") return op_agree_adj_noun(params);
  if (op == "agree/verb-pronoun") return op_agree_verb_pronoun(params);
  if (op == "formula") return op_formula(params);
  if (op == "paradigm") return op_paradigm(params);
  if (op == "health") return op_health(params);
  return bad_request("unknown operation: " + op);
}

ConfigOverlay config_from_env() {
  ConfigOverlay o;
  auto take = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    return std::string(v);
  };
  o.host = take("RUMORPH_HOST");
  if (auto p = take("RUMORPH_PORT")) o.port = std::atoi(p->c_str());
  o.corpus = take("RUMORPH_CORPUS");
  o.tables_dir = take("RUMORPH_TABLES_DIR");
  o.log = take("RUMORPH_LOG");
  return o;
}

Result<ConfigOverlay> config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return make_error(errc::io, "cannot read config: " + path);
  ConfigOverlay o;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t\r");
      std::size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      return make_error(errc::parse, path + ":" + std::to_string(line_no) +
                                         ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "host") o.host = value;
    else if (key == "port") o.port = std::atoi(value.c_str());
    else if (key == "corpus") o.corpus = value;
    else if (key == "tables_dir") o.tables_dir = value;
    else if (key == "log") o.log = value;
    else
      return make_error(errc::parse, path + ":" + std::to_string(line_no) +
                                         ": unknown key " + key);
  }
  return o;
}

Result<ServiceConfig> resolve_config(const ConfigOverlay& flags,
                                     const std::string& config_file) {
  ServiceConfig cfg;
  auto apply = [&cfg](const ConfigOverlay& o) {
    if (o.host) cfg.host = *o.host;
    if (o.port) cfg.port = *o.port;
    if (o.corpus) cfg.corpus = *o.corpus;
    if (o.tables_dir) cfg.tables_dir = *o.tables_dir;
    if (o.log) cfg.log = *o.log;
  };
  apply(config_from_env());
  if (!config_file.empty()) {
    Result<ConfigOverlay> file = config_from_file(config_file);
    if (!file.ok()) return file.error();
    apply(*file);
  }
  apply(flags);

  if (cfg.port < 1 || cfg.port > 65535)
    return make_error(errc::range, "port out of range: " +
                                       std::to_string(cfg.port));
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!cfg.corpus.empty() && !fs::exists(cfg.corpus, ec))
    return make_error(errc::io, "corpus not found: " + cfg.corpus);
  if (!cfg.tables_dir.empty() && !fs::is_directory(cfg.tables_dir, ec))
    return make_error(errc::io, "tables dir not found: " + cfg.tables_dir);
  if (!cfg.log.empty()) {
    fs::path parent = fs::path(cfg.log).parent_path();
    if (!parent.empty() && !fs::is_directory(parent, ec))
      return make_error(errc::io,
                        "log directory not found: " + parent.string());
  }
  return cfg;
}

Result<bool> register_routes(httplib::Server& server,
                             const ServiceConfig& config) {
  if (!config.tables_dir.empty()) {
    Result<std::size_t> loaded = load_exception_dir(config.tables_dir);
    if (!loaded.ok()) return loaded.error();
  }

  std::shared_ptr<Lexicon> corpus;
  if (!config.corpus.empty()) {
    Result<Lexicon> lex = ingest_opencorpora_file(config.corpus);
    if (!lex.ok()) return lex.error();
    corpus = std::make_shared<Lexicon>(std::move(*lex));
  }

  auto mount = [&server](const std::string& op) {
    server.Get("/v1/" + op, [op](const httplib::Request& req,
                                 httplib::Response& res) {
      Params params;
      for (const auto& [k, v] : req.params) params[k] = v;
      ApiResult r = api_call(op, params);
      res.status = r.status;
      res.set_content(r.body.dump(), "application/json");
    });
  };
  for (const char* op :
       {"noun", "adjective", "verb", "participle", "gerund", "imperative",
        "cardinal", "ordinal", "quantity", "agree/adj-noun",
        "agree/verb-pronoun", "formula", "paradigm", "health"})
    mount(op);

  server.Post("/v1/batch", [](const httplib::Request& req,
                              httplib::Response& res) {
    nlohmann::json body = nlohmann::json::parse(req.body, nullptr, false);
    if (!body.is_array()) {
      res.status = 400;
      res.set_content(
          nlohmann::json{{"error",
                          {{"code", "bad-request"},
                           {"message", "body must be a JSON array"}}}}
              .dump(),
          "application/json");
      return;
    }
    nlohmann::json out = nlohmann::json::array();
    for (const nlohmann::json& item : body) {
      std::string op;
      if (item.contains("op") && item["op"].is_string())
        op = item["op"].get<std::string>();
      else if (item.contains("path") && item["path"].is_string()) {
        op = item["path"].get<std::string>();
        if (op.rfind("/v1/", 0) == 0) op = op.substr(4);
      }
      Params params;
      if (item.contains("params") && item["params"].is_object())
        for (const auto& [k, v] : item["params"].items())
          params[k] = v.is_string() ? v.get<std::string>() : v.dump();
      out.push_back(api_call(op, params).body);
    }
    res.status = 200;
    res.set_content(out.dump(), "application/json");
  });

  if (corpus) {
    server.Get("/v1/evaluate", [corpus](const httplib::Request& req,
                                        httplib::Response& res) {
      Params params;
      for (const auto& [k, v] : req.params) params[k] = v;
      Args a(params);
      auto pos = a.token<Pos>("pos", pos_from);
      if (a.failed()) {
        ApiResult r = a.error();
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
        return;
      }
      SampleSpec spec;
      if (auto s = params.find("sample"); s != params.end())
        spec.limit = static_cast<std::size_t>(std::atoll(s->second.c_str()));
      if (auto s = params.find("seed"); s != params.end())
        spec.seed = static_cast<std::uint64_t>(std::atoll(s->second.c_str()));
      Result<AgreementReport> rep = evaluate_pos(*corpus, *pos, spec);
      if (!rep.ok()) {
        ApiResult r = from_engine_error(rep.error());
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
        return;
      }
      nlohmann::json j{{"pos", std::string(name_of(rep->pos))},
                       {"words", rep->words},
                       {"forms_compared", rep->forms_compared},
                       {"matches", rep->matches},
                       {"rate", rep->rate()},
                       {"total_ms", rep->total_ms}};
      res.status = 200;
      res.set_content(nlohmann::json{{"result", std::move(j)}}.dump(),
                      "application/json");
    });
  }

  if (!config.log.empty()) {
    auto log = std::make_shared<std::ofstream>(config.log, std::ios::app);
    auto guard = std::make_shared<std::mutex>();
    server.set_logger([log, guard](const httplib::Request& req,
                                   const httplib::Response& res) {
      std::time_t now = std::time(nullptr);
      char stamp[32];
      std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ",
                    std::gmtime(&now));
      std::lock_guard<std::mutex> lock(*guard);
      *log << stamp << ' ' << req.method << ' ' << req.path << ' '
           << res.status << '\n';
      log->flush();
    });
  }
  return true;
}

int serve(const ServiceConfig& config) {
  httplib::Server server;
  Result<bool> mounted = register_routes(server, config);
  if (!mounted.ok()) {
    std::fprintf(stderr, "rumorph serve: %s\n",
                 mounted.error().message.c_str());
    return 2;
  }
  std::fprintf(stderr, "rumorph %s listening on %s:%d\n", kVersion,
               config.host.c_str(), config.port);
  if (!server.listen(config.host, config.port)) {
    std::fprintf(stderr, "rumorph serve: cannot listen on %s:%d\n",
                 config.host.c_str(), config.port);
    return 2;
  }
  return 0;
}

}  // namespace rumorph::srv
