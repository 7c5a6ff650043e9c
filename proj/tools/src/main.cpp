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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rumorph/corpus.hpp"
#include "rumorph/evaluate.hpp"
#include "rumorph/report.hpp"
#include "rumorph/variability.hpp"
#include "rumorph/version.hpp"
#include "service.hpp"

namespace {

using rumorph::srv::ApiResult;
using rumorph::srv::Params;

// Exit codes: 0 success, 1 usage error (CLI11 parse/validation), 2 data
// error (engine or file rejection).
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kData = 2;

int print_api(const std::string& op, const Params& params) {
  ApiResult r = rumorph::srv::api_call(op, params);
  if (r.status != 200) {
    const nlohmann::json& e = r.body["error"];
    std::cerr << e["code"].get<std::string>() << ": "
              << e["message"].get<std::string>() << "\n";
    return kData;
  }
  const nlohmann::json& result = r.body["result"];
  if (result.is_string())
    std::cout << result.get<std::string>() << "\n";
  else
    std::cout << result.dump(2) << "\n";
  return kOk;
}

int print_paradigm(const Params& params) {
  ApiResult r = rumorph::srv::api_call("paradigm", params);
  if (r.status != 200) {
    const nlohmann::json& e = r.body["error"];
    std::cerr << e["code"].get<std::string>() << ": "
              << e["message"].get<std::string>() << "\n";
    return kData;
  }
  for (const nlohmann::json& slot : r.body["result"]["slots"]) {
    std::string tag = slot["slot"].get<std::string>();
    if (tag.empty()) tag = "inf";
    std::cout << tag << "\t"
              << (slot["form"].is_null() ? "-"
                                         : slot["form"].get<std::string>())
              << "\n";
  }
  return kOk;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return true;
}

int run_report(const std::string& template_path, const std::string& data_path) {
  std::string template_text;
  if (!read_file(template_path, &template_text)) {
    std::cerr << "io: cannot read " << template_path << "\n";
    return kData;
  }
  std::string data_text;
  if (!read_file(data_path, &data_text)) {
    std::cerr << "io: cannot read " << data_path << "\n";
    return kData;
  }
  nlohmann::json data = nlohmann::json::parse(data_text, nullptr, false);
  if (!data.is_object()) {
    std::cerr << "parse: data file must be one JSON object\n";
    return kData;
  }
  rumorph::DataDoc doc;
  for (const auto& [key, value] : data.items()) {
    if (value.is_string())
      doc[key] = value.get<std::string>();
    else if (value.is_number_integer())
      doc[key] = value.get<std::int64_t>();
    else {
      std::cerr << "bad-field: " << key << " must be integer or string\n";
      return kData;
    }
  }
  rumorph::Result<rumorph::Template> tpl =
      rumorph::Template::parse(template_text);
  if (!tpl.ok()) {
    std::cerr << errc_name(tpl.error().code) << ": " << tpl.error().message
              << "\n";
    return kData;
  }
  rumorph::Result<std::string> rendered = rumorph::render_report(*tpl, doc);
  if (!rendered.ok()) {
    std::cerr << errc_name(rendered.error().code) << ": "
              << rendered.error().message << "\n";
    return kData;
  }
  std::cout << *rendered;
  return kOk;
}

int run_evaluate(const std::string& corpus_path,
                 const std::vector<std::string>& pos_names,
                 std::optional<std::size_t> sample, std::uint64_t seed,
                 const std::string& errata_path, const std::string& csv_path) {
  rumorph::Result<rumorph::Lexicon> lex =
      rumorph::ingest_opencorpora_file(corpus_path);
  if (!lex.ok()) {
    std::cerr << errc_name(lex.error().code) << ": " << lex.error().message
              << "\n";
    return kData;
  }
  rumorph::Errata errata;
  if (!errata_path.empty()) {
    std::string text;
    if (!read_file(errata_path, &text)) {
      std::cerr << "io: cannot read " << errata_path << "\n";
      return kData;
    }
    rumorph::Result<rumorph::Errata> parsed = rumorph::Errata::parse(text);
    if (!parsed.ok()) {
      std::cerr << errc_name(parsed.error().code) << ": "
                << parsed.error().message << "\n";
      return kData;
    }
    errata = *parsed;
  }
  if (!csv_path.empty() && pos_names.size() != 1) {
    std::cerr << "bad-field: --csv needs exactly one --pos\n";
    return kData;
  }
  rumorph::SampleSpec spec;
  spec.limit = sample;
  spec.seed = seed;
  for (const std::string& name : pos_names) {
    std::optional<rumorph::Pos> pos = rumorph::pos_from(name);
    if (!pos) {
      std::cerr << "bad-field: unknown pos " << name << "\n";
      return kData;
    }
    rumorph::Result<rumorph::AgreementReport> report =
        rumorph::evaluate_pos(*lex, *pos, spec);
    if (!report.ok()) {
      std::cerr << errc_name(report.error().code) << ": "
                << report.error().message << "\n";
      return kData;
    }
    rumorph::AgreementReport filtered =
        errata.empty() ? *report : rumorph::errata_filter(*report, errata);
    std::cout << rumorph::report_table(filtered) << "\n";
    if (!csv_path.empty()) {
      std::ofstream out(csv_path, std::ios::binary);
      if (!out) {
        std::cerr << "io: cannot write " << csv_path << "\n";
        return kData;
      }
      out << rumorph::discrepancy_csv(filtered);
    }
  }
  return kOk;
}

int run_variability(const std::string& corpus_path, const std::string& pos_name,
                    const std::string& out_path) {
  rumorph::Result<rumorph::Lexicon> lex =
      rumorph::ingest_opencorpora_file(corpus_path);
  if (!lex.ok()) {
    std::cerr << errc_name(lex.error().code) << ": " << lex.error().message
              << "\n";
    return kData;
  }
  std::optional<rumorph::Pos> pos = rumorph::pos_from(pos_name);
  if (!pos) {
    std::cerr << "bad-field: unknown pos " << pos_name << "\n";
    return kData;
  }
  rumorph::Result<rumorph::VariabilityCurve> curve =
      rumorph::variability_curve(*lex, *pos);
  if (!curve.ok()) {
    std::cerr << errc_name(curve.error().code) << ": " << curve.error().message
              << "\n";
    return kData;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "io: cannot write " << out_path << "\n";
    return kData;
  }
  out << rumorph::curve_csv(*curve);
  std::cout << "pos=" << pos_name << " records=" << curve->records.size()
            << " skipped=" << curve->skipped << "\n";
  return kOk;
}

const std::vector<std::string> kCaseNames = {"nom", "gen",  "dat",
                                             "acc", "ins",  "prep"};
const std::vector<std::string> kNumberNames = {"sg", "pl"};
const std::vector<std::string> kGenderNames = {"masc", "fem", "neut"};
const std::vector<std::string> kGopNames = {"masc", "fem", "neut", "pl"};
const std::vector<std::string> kPersonNames = {"1", "2", "3"};
const std::vector<std::string> kTenseNames = {"past", "pres", "futr"};
const std::vector<std::string> kAspectNames = {"perf", "impf"};
const std::vector<std::string> kAnimacyNames = {"anim", "inan"};
const std::vector<std::string> kKindNames = {"pres-act", "past-act",
                                             "past-pass"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rumorph: rule-based Russian morphological generation"};
  app.set_version_flag("--version", rumorph::kVersion);
  app.require_subcommand(1);

  // Every leaf subcommand stores its action here; main runs it after parse.
  std::function<int()> action;

  auto member = [](const std::vector<std::string>& names) {
    return CLI::IsMember(names);
  };

  // ---- inflect ------------------------------------------------------------
  CLI::App* inflect = app.add_subcommand("inflect", "Inflect one word");
  inflect->require_subcommand(1);
  {
    auto p = std::make_shared<Params>();
    CLI::App* noun = inflect->add_subcommand("noun", "Decline a noun");
    noun->add_option("lemma", (*p)["word"], "nominative singular lemma")
        ->required();
    noun->add_option("--case", (*p)["case"], "grammatical case")
        ->required()
        ->check(member(kCaseNames));
    noun->add_option("--number", (*p)["number"], "sg or pl")
        ->default_val("sg")
        ->check(member(kNumberNames));
    noun->callback([p, &action] {
      action = [p] { return print_api("noun", *p); };
    });
  }
  {
    auto p = std::make_shared<Params>();
    auto case_opt = std::make_shared<std::string>();
    auto anim_opt = std::make_shared<std::string>();
    CLI::App* adj = inflect->add_subcommand("adj", "Decline an adjective");
    adj->add_option("lemma", (*p)["word"], "nominative masculine lemma")
        ->required();
    adj->add_option("--gender", (*p)["gender"], "masc, fem, neut or pl")
        ->default_val("masc")
        ->check(member(kGopNames));
    adj->add_option("--case", *case_opt,
                    "grammatical case; omit for the short form")
        ->check(member(kCaseNames));
    adj->add_option("--animacy", *anim_opt, "accusative resolution")
        ->check(member(kAnimacyNames));
    adj->callback([p, case_opt, anim_opt, &action] {
      if (!case_opt->empty()) (*p)["case"] = *case_opt;
      if (!anim_opt->empty()) (*p)["animacy"] = *anim_opt;
      action = [p] { return print_api("adjective", *p); };
    });
  }
  {
    auto p = std::make_shared<Params>();
    auto opt = std::make_shared<std::map<std::string, std::string>>();
    CLI::App* verb = inflect->add_subcommand("verb", "Conjugate a verb");
    verb->add_option("lemma", (*p)["word"], "infinitive")->required();
    verb->add_option("--tense", (*opt)["tense"],
                     "past, pres or futr; omit for the infinitive")
        ->check(member(kTenseNames));
    verb->add_option("--person", (*opt)["person"], "1, 2 or 3")
        ->check(member(kPersonNames));
    verb->add_option("--number", (*opt)["number"], "sg or pl")
        ->check(member(kNumberNames));
    verb->add_option("--gender", (*opt)["gender"], "past singular gender")
        ->check(member(kGenderNames));
    verb->add_option("--aspect", (*opt)["aspect"],
                     "impf forces the analytic future")
        ->check(member(kAspectNames));
    verb->callback([p, opt, &action] {
      for (const auto& [k, v] : *opt)
        if (!v.empty()) (*p)[k] = v;
      action = [p] { return print_api("verb", *p); };
    });
  }
  {
    auto p = std::make_shared<Params>();
    auto opt = std::make_shared<std::map<std::string, std::string>>();
    CLI::App* part =
        inflect->add_subcommand("participle", "Decline a participle");
    part->add_option("lemma", (*p)["word"], "infinitive")->required();
    part->add_option("--kind", (*p)["kind"], "participle kind")
        ->required()
        ->check(member(kKindNames));
    part->add_option("--gender", (*p)["gender"], "masc, fem, neut or pl")
        ->default_val("masc")
        ->check(member(kGopNames));
    part->add_option("--case", (*opt)["case"],
                     "grammatical case; omit for the short form")
        ->check(member(kCaseNames));
    part->add_option("--animacy", (*opt)["animacy"], "accusative resolution")
        ->check(member(kAnimacyNames));
    part->callback([p, opt, &action] {
      for (const auto& [k, v] : *opt)
        if (!v.empty()) (*p)[k] = v;
      action = [p] { return print_api("participle", *p); };
    });
  }

  // ---- gerund / imperative ------------------------------------------------
  {
    auto p = std::make_shared<Params>();
    auto asp = std::make_shared<std::string>();
    CLI::App* ger = app.add_subcommand("gerund", "Form a gerund");
    ger->add_option("verb", (*p)["word"], "infinitive")->required();
    ger->add_option("--aspect", *asp, "perf or impf; defaults to the verb's")
        ->check(member(kAspectNames));
    ger->callback([p, asp, &action] {
      if (!asp->empty()) (*p)["aspect"] = *asp;
      action = [p] { return print_api("gerund", *p); };
    });
  }
  {
    auto p = std::make_shared<Params>();
    CLI::App* imp = app.add_subcommand("imperative", "Form the imperative");
    imp->add_option("verb", (*p)["word"], "infinitive")->required();
    imp->add_option("--number", (*p)["number"], "sg or pl")
        ->default_val("sg")
        ->check(member(kNumberNames));
    imp->callback([p, &action] {
      action = [p] { return print_api("imperative", *p); };
    });
  }

  // ---- number -------------------------------------------------------------
  CLI::App* number = app.add_subcommand("number", "Verbalize a number");
  number->require_subcommand(1);
  for (const char* kind : {"cardinal", "ordinal"}) {
    auto p = std::make_shared<Params>();
    auto anim = std::make_shared<std::string>();
    CLI::App* sub = number->add_subcommand(
        kind, std::string("Verbalize a ") + kind + " number");
    sub->add_option("n", (*p)["value"], "integer value")->required();
    sub->add_option("--case", (*p)["case"], "grammatical case")
        ->default_val("nom")
        ->check(member(kCaseNames));
    sub->add_option("--gender", (*p)["gender"], "agreement gender")
        ->default_val("masc")
        ->check(member(std::string(kind) == "ordinal" ? kGopNames
                                                      : kGenderNames));
    sub->add_option("--animacy", *anim, "accusative resolution")
        ->check(member(kAnimacyNames));
    std::string op = kind;
    sub->callback([p, anim, op, &action] {
      if (!anim->empty()) (*p)["animacy"] = *anim;
      action = [p, op] { return print_api(op, *p); };
    });
  }

  // ---- agree --------------------------------------------------------------
  CLI::App* agree = app.add_subcommand("agree", "Compose an agreed phrase");
  agree->require_subcommand(1);
  {
    auto p = std::make_shared<Params>();
    CLI::App* an = agree->add_subcommand("adj-noun",
                                         "Adjective agreed with a noun");
    an->add_option("adjective", (*p)["adjective"], "adjective lemma")
        ->required();
    an->add_option("noun", (*p)["noun"], "noun lemma")->required();
    an->add_option("--case", (*p)["case"], "grammatical case")
        ->default_val("nom")
        ->check(member(kCaseNames));
    an->add_option("--number", (*p)["number"], "sg or pl")
        ->default_val("sg")
        ->check(member(kNumberNames));
    an->callback([p, &action] {
      action = [p] { return print_api("agree/adj-noun", *p); };
    });
  }
  {
    auto p = std::make_shared<Params>();
    auto opt = std::make_shared<std::map<std::string, std::string>>();
    CLI::App* vp = agree->add_subcommand("verb-pronoun",
                                         "Pronoun plus agreed verb");
    vp->add_option("verb", (*p)["verb"], "infinitive")->required();
    vp->add_option("--person", (*p)["person"], "1, 2 or 3")
        ->required()
        ->check(member(kPersonNames));
    vp->add_option("--number", (*p)["number"], "sg or pl")
        ->required()
        ->check(member(kNumberNames));
    vp->add_option("--gender", (*opt)["gender"], "past singular gender")
        ->check(member(kGenderNames));
    vp->add_option("--tense", (*opt)["tense"], "past, pres or futr")
        ->check(member(kTenseNames));
    vp->callback([p, opt, &action] {
      for (const auto& [k, v] : *opt)
        if (!v.empty()) (*p)[k] = v;
      action = [p] { return print_api("agree/verb-pronoun", *p); };
    });
  }
  {
    auto p = std::make_shared<Params>();
    CLI::App* qp = agree->add_subcommand(
        "quantity", "Numeral with a counted noun (quantity government)");
    qp->add_option("n", (*p)["value"], "integer count")->required();
    qp->add_option("noun", (*p)["noun"], "counted noun lemma")->required();
    qp->add_option("--case", (*p)["case"], "grammatical case")
        ->default_val("nom")
        ->check(member(kCaseNames));
    qp->callback([p, &action] {
      action = [p] { return print_api("quantity", *p); };
    });
  }

  // ---- formula / report / paradigm ----------------------------------------
  {
    auto p = std::make_shared<Params>();
    CLI::App* f = app.add_subcommand("formula", "Verbalize arithmetic");
    f->add_option("expr", (*p)["expr"], "formula, e.g. \"2 + 3 = 5\"")
        ->required();
    f->callback([p, &action] {
      action = [p] { return print_api("formula", *p); };
    });
  }
  {
    auto tpl = std::make_shared<std::string>();
    auto data = std::make_shared<std::string>();
    CLI::App* rep = app.add_subcommand("report", "Render a data report");
    rep->add_option("template", *tpl, "template file")->required();
    rep->add_option("data", *data, "flat JSON data file")->required();
    rep->callback([tpl, data, &action] {
      action = [tpl, data] { return run_report(*tpl, *data); };
    });
  }
  {
    auto p = std::make_shared<Params>();
    CLI::App* par = app.add_subcommand("paradigm", "Print a full paradigm");
    par->add_option("pos", (*p)["pos"], "paradigm family")
        ->required()
        ->check(member({"noun", "adjective", "adverb", "verb", "cardinal",
                        "ordinal", "prt-pres-act", "prt-past-act",
                        "prt-past-pass", "gerund", "imperative"}));
    par->add_option("lemma", (*p)["word"], "lemma (or a number)")->required();
    par->callback([p, &action] {
      action = [p] { return print_paradigm(*p); };
    });
  }

  // ---- evaluate / variability ----------------------------------------------
  {
    auto corpus = std::make_shared<std::string>();
    auto pos = std::make_shared<std::vector<std::string>>();
    auto sample = std::make_shared<std::int64_t>(-1);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto errata = std::make_shared<std::string>();
    auto csv = std::make_shared<std::string>();
    CLI::App* ev = app.add_subcommand(
        "evaluate", "Score the engine against an OpenCorpora dictionary");
    ev->add_option("corpus", *corpus, "OpenCorpora XML (optionally .gz)")
        ->required();
    ev->add_option("--pos", *pos, "POS families to score")->required();
    ev->add_option("--sample", *sample, "random lexeme sample size");
    ev->add_option("--seed", *seed, "sample seed")->default_val(0);
    ev->add_option("--errata", *errata, "known-bad lexeme list");
    ev->add_option("--csv", *csv, "write discrepancies to this CSV");
    ev->callback([corpus, pos, sample, seed, errata, csv, &action] {
      action = [corpus, pos, sample, seed, errata, csv] {
        std::optional<std::size_t> limit;
        if (*sample >= 0) limit = static_cast<std::size_t>(*sample);
        return run_evaluate(*corpus, *pos, limit, *seed, *errata, *csv);
      };
    });
  }
  {
    auto corpus = std::make_shared<std::string>();
    auto pos = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    CLI::App* var = app.add_subcommand(
        "variability", "Export the sorted morphological-variability curve");
    var->add_option("corpus", *corpus, "OpenCorpora XML (optionally .gz)")
        ->required();
    var->add_option("--pos", *pos, "POS family")->required();
    var->add_option("--out", *out, "output CSV path")->required();
    var->callback([corpus, pos, out, &action] {
      action = [corpus, pos, out] {
        return run_variability(*corpus, *pos, *out);
      };
    });
  }

  // ---- serve ----------------------------------------------------------------
  {
    auto flags = std::make_shared<rumorph::srv::ConfigOverlay>();
    auto host = std::make_shared<std::string>();
    auto port = std::make_shared<int>(-1);
    auto corpus = std::make_shared<std::string>();
    auto tables = std::make_shared<std::string>();
    auto log = std::make_shared<std::string>();
    auto config = std::make_shared<std::string>();
    CLI::App* sv = app.add_subcommand("serve", "Run the JSON HTTP service");
    sv->add_option("--host", *host, "listen address");
    sv->add_option("--port", *port, "listen port");
    sv->add_option("--corpus", *corpus,
                   "OpenCorpora XML enabling /v1/evaluate");
    sv->add_option("--tables-dir", *tables, "exception-table overrides");
    sv->add_option("--log", *log, "request log file");
    sv->add_option("--config", *config,
                   "key = value config file (wins over environment)");
    sv->callback([flags, host, port, corpus, tables, log, config, &action] {
      if (!host->empty()) flags->host = *host;
      if (*port >= 0) flags->port = *port;
      if (!corpus->empty()) flags->corpus = *corpus;
      if (!tables->empty()) flags->tables_dir = *tables;
      if (!log->empty()) flags->log = *log;
      action = [flags, config] {
        rumorph::Result<rumorph::srv::ServiceConfig> cfg =
            rumorph::srv::resolve_config(*flags, *config);
        if (!cfg.ok()) {
          std::cerr << errc_name(cfg.error().code) << ": "
                    << cfg.error().message << "\n";
          return kData;
        }
        return rumorph::srv::serve(*cfg);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return action ? action() : kUsage;
}
