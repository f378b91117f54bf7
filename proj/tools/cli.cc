// Copyright 2026 The drsmatch Authors.
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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "drs/amr.h"
#include "drs/clause_io.h"
#include "drs/error.h"
#include "drs/match.h"
#include "drs/metrics.h"
#include "drs/oracle.h"
#include "drs/parallel.h"
#include "drs/spar.h"
#include "json.hpp"

namespace drs::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Fractions go to JSON with four decimals, percentages to text with one.
double Fraction(double x) { return std::round(x * 10000.0) / 10000.0; }

std::string Percent(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.1f", 100.0 * x);
  return buffer;
}

std::string Seconds(double s) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", s);
  return buffer;
}

Json PrfJson(const PrfScore &s) {
  return {{"precision", Fraction(s.precision)},
          {"recall", Fraction(s.recall)},
          {"f1", Fraction(s.f1)}};
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kDuplicateDocId:
    case ErrorCode::kWrongArity:
    case ErrorCode::kUnknownTag:
    case ErrorCode::kConstantInBoxPosition:
    case ErrorCode::kConstantInReferentPosition:
      return kExitParseError;
    case ErrorCode::kUnpairedDocument:
      return kExitPairingError;
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kTooLarge:
      return kExitLimitsExceeded;
    default:
      return kExitFailure;
  }
}

std::vector<CorpusDocument> LoadCorpus(const std::string &path) {
  const std::string text = ReadTextFile(path);
  try {
    return ParseCorpus(text);
  } catch (const Error &e) {
    throw Error(e.code(), path + ": " + e.what(), e.line());
  }
}

// Options shared by every command that runs the matcher.
struct MatchFlags {
  int restarts = 20;
  uint64_t seed = 42;
  bool keep_refs = false;
  bool oracle = false;
  int parallel = 1;
  int64_t max_nodes = OracleLimits{}.max_nodes;
  int max_vars = OracleLimits{}.max_vars_per_side;
  std::vector<std::string> schedule;
  bool json = false;
  bool timing = false;

  void Register(CLI::App *app) {
    app->add_option("--restarts", restarts, "Hill-climbing restarts")
        ->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Random seed");
    app->add_flag("--keep-refs", keep_refs,
                  "Keep redundant REF clauses when scoring");
    app->add_flag("--oracle", oracle,
                  "Exact matching (small inputs only)");
    app->add_option("--parallel", parallel, "Concurrent document evaluations")
        ->check(CLI::PositiveNumber);
    app->add_option("--max-nodes", max_nodes, "Node budget of --oracle")
        ->check(CLI::PositiveNumber);
    app->add_option("--max-vars", max_vars,
                    "Variables per side accepted by --oracle")
        ->check(CLI::PositiveNumber);
    app->add_option("--schedule", schedule,
                    "Seeds of the first restarts: concept, role, random")
        ->delimiter(',')
        ->check(CLI::IsMember({"concept", "role", "random"}));
    app->add_flag("--json", json, "Write a JSON report");
    app->add_flag("--timing", timing, "Include wall-clock times");
  }

  MatchConfig Config() const {
    MatchConfig config;
    config.restarts = restarts;
    config.rng_seed = seed;
    config.keep_refs = keep_refs;
    if (!schedule.empty()) {
      config.seed_schedule.clear();
      for (const auto &s : schedule) {
        config.seed_schedule.push_back(s == "concept" ? SeedKind::kConcept
                                       : s == "role"  ? SeedKind::kRole
                                                      : SeedKind::kRandom);
      }
    }
    return config;
  }

  OracleLimits Limits() const { return {max_nodes, max_vars}; }

  // `--parallel` is left out so reports do not depend on it.
  Json ConfigJson() const {
    Json schedule_json = Json::array();
    for (SeedKind kind : Config().seed_schedule) {
      schedule_json.push_back(SeedKindName(kind));
    }
    Json j = {{"restarts", restarts},
              {"seed", seed},
              {"schedule", schedule_json},
              {"keep_refs", keep_refs},
              {"oracle", oracle}};
    return j;
  }

  MatchResult Match(const ClausalForm &sys, const ClausalForm &gold) const {
    if (oracle) return OptimalMatch(sys, gold, Limits(), keep_refs);
    return MatchForms(sys, gold, Config());
  }
};

struct DocPair {
  const CorpusDocument *sys = nullptr;
  const CorpusDocument *gold = nullptr;
};

bool AllExplicit(const std::vector<CorpusDocument> &corpus) {
  return !corpus.empty() &&
         std::all_of(corpus.begin(), corpus.end(),
                     [](const CorpusDocument &d) { return d.explicit_id; });
}

std::set<std::string> IdsOf(const std::vector<CorpusDocument> &corpus) {
  std::set<std::string> ids;
  for (const auto &doc : corpus) ids.insert(doc.doc_id);
  return ids;
}

// Pairs by id when both sides carry `% id:` headers naming the same
// documents, else by position.
std::vector<DocPair> PairDocuments(const std::vector<CorpusDocument> &sys,
                                   const std::vector<CorpusDocument> &gold,
                                   std::ostream &err) {
  std::vector<DocPair> pairs;
  const bool both_explicit = AllExplicit(sys) && AllExplicit(gold);
  if (both_explicit && IdsOf(sys) == IdsOf(gold)) {
    std::map<std::string, const CorpusDocument *> by_id;
    for (const auto &doc : gold) by_id[doc.doc_id] = &doc;
    for (const auto &doc : sys) pairs.push_back({&doc, by_id.at(doc.doc_id)});
    return pairs;
  }
  if (sys.size() != gold.size()) {
    throw Error(ErrorCode::kUnpairedDocument,
                "document counts differ: " + std::to_string(sys.size()) +
                    " system vs " + std::to_string(gold.size()) + " gold");
  }
  if (both_explicit) {
    err << "warning: document ids differ between the two files; "
           "pairing by position\n";
  }
  for (size_t i = 0; i < sys.size(); ++i) pairs.push_back({&sys[i], &gold[i]});
  return pairs;
}

std::vector<DocumentResult> MatchPairs(const std::vector<DocPair> &pairs,
                                       const MatchFlags &flags) {
  std::vector<DocumentResult> results(pairs.size());
  ParallelFor(pairs.size(), flags.parallel, [&](size_t i) {
    results[i].doc_id = pairs[i].gold->doc_id;
    results[i].result = flags.Match(pairs[i].sys->form, pairs[i].gold->form);
  });
  return results;
}

Json MappingJson(const VariableMapping &mapping) {
  Json j = Json::object();
  for (const auto &[s, t] : mapping.pairs()) j[s] = t;
  return j;
}

void PrintRow(std::ostream &out, const std::string &label,
              const std::string &value) {
  out << label << std::string(label.size() < 18 ? 18 - label.size() : 1, ' ')
      << value << '\n';
}

// ---------------------------------------------------------------------------

struct ScoreCommand {
  std::string sys_path, gold_path;
  MatchFlags flags;
  bool print_mapping = false;
  bool per_doc = false;

  void Register(CLI::App *app) {
    app->add_option("system", sys_path, "System clausal forms")->required();
    app->add_option("gold", gold_path, "Gold clausal forms")->required();
    flags.Register(app);
    app->add_flag("--print-mapping", print_mapping,
                  "Show the best variable mapping per document");
    app->add_flag("--per-doc", per_doc, "Show per-document scores");
  }

  int Execute(std::ostream &out, std::ostream &err) const {
    const auto start = Clock::now();
    const auto sys = LoadCorpus(sys_path);
    const auto gold = LoadCorpus(gold_path);
    const auto pairs = PairDocuments(sys, gold, err);
    const CorpusScore score = Aggregate(MatchPairs(pairs, flags));
    const std::chrono::duration<double> elapsed = Clock::now() - start;

    if (flags.json) {
      Json docs = Json::array();
      for (const auto &doc : score.per_doc) {
        Json d = {{"doc_id", doc.doc_id},
                  {"matched", doc.result.matched},
                  {"size_sys", doc.result.size_sys},
                  {"size_gold", doc.result.size_gold},
                  {"precision", Fraction(doc.result.precision)},
                  {"recall", Fraction(doc.result.recall)},
                  {"f1", Fraction(doc.result.f1)}};
        if (print_mapping) d["mapping"] = MappingJson(doc.result.best_mapping);
        docs.push_back(std::move(d));
      }
      Json report = {{"command", "score"},
                     {"system", sys_path},
                     {"gold", gold_path},
                     {"config", flags.ConfigJson()},
                     {"documents", score.per_doc.size()},
                     {"matched", score.matched},
                     {"size_sys", score.size_sys},
                     {"size_gold", score.size_gold},
                     {"micro", PrfJson(score.micro)},
                     {"macro", PrfJson(score.macro)},
                     {"per_doc", std::move(docs)}};
      if (flags.timing) report["seconds"] = elapsed.count();
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (per_doc || print_mapping) {
      for (const auto &doc : score.per_doc) {
        out << doc.doc_id;
        if (per_doc) {
          out << "\tP " << Percent(doc.result.precision) << "\tR "
              << Percent(doc.result.recall) << "\tF "
              << Percent(doc.result.f1);
        }
        if (print_mapping) out << '\t' << doc.result.best_mapping.ToString();
        out << '\n';
      }
      out << '\n';
    }
    PrintRow(out, "Documents", std::to_string(score.per_doc.size()));
    PrintRow(out, "Matched clauses", std::to_string(score.matched));
    PrintRow(out, "System clauses", std::to_string(score.size_sys));
    PrintRow(out, "Gold clauses", std::to_string(score.size_gold));
    PrintRow(out, "Precision", Percent(score.micro.precision));
    PrintRow(out, "Recall", Percent(score.micro.recall));
    PrintRow(out, "F-score", Percent(score.micro.f1));
    PrintRow(out, "Macro F-score", Percent(score.macro.f1));
    if (flags.timing) PrintRow(out, "Seconds", Seconds(elapsed.count()));
    return kExitOk;
  }
};

struct TranslationsCommand {
  std::string a_path, b_path;
  MatchFlags flags;
  bool list = false;

  void Register(CLI::App *app) {
    app->add_option("source", a_path, "Source-language clausal forms")
        ->required();
    app->add_option("translation", b_path,
                    "Translation clausal forms, paired by id")
        ->required();
    flags.Register(app);
    app->add_flag("--list", list, "List documents scoring below 1.0");
  }

  int Execute(std::ostream &out, std::ostream &err) const {
    const auto start = Clock::now();
    const auto a = LoadCorpus(a_path);
    const auto b = LoadCorpus(b_path);
    std::map<std::string, const CorpusDocument *> by_id;
    for (const auto &doc : b) by_id[doc.doc_id] = &doc;
    std::vector<DocPair> pairs;
    std::vector<std::string> unpaired;
    for (const auto &doc : a) {
      auto it = by_id.find(doc.doc_id);
      if (it == by_id.end()) {
        unpaired.push_back(doc.doc_id);
        continue;
      }
      pairs.push_back({&doc, it->second});
      by_id.erase(it);
    }
    for (const auto &[id, doc] : by_id) unpaired.push_back(id);
    for (const auto &id : unpaired) {
      err << "warning: document " << id
          << " appears on one side only; skipped\n";
    }

    const CorpusScore score = Aggregate(MatchPairs(pairs, flags));
    std::vector<const DocumentResult *> imperfect;
    for (const auto &doc : score.per_doc) {
      const auto &r = doc.result;
      if (!(r.matched == r.size_sys && r.matched == r.size_gold)) {
        imperfect.push_back(&doc);
      }
    }
    const double share =
        pairs.empty() ? 0.0 : double(imperfect.size()) / double(pairs.size());
    const std::chrono::duration<double> elapsed = Clock::now() - start;

    if (flags.json) {
      Json report = {{"command", "translations"},
                     {"source", a_path},
                     {"translation", b_path},
                     {"config", flags.ConfigJson()},
                     {"documents", pairs.size()},
                     {"mean_f1", Fraction(score.macro.f1)},
                     {"micro", PrfJson(score.micro)},
                     {"below_one", imperfect.size()},
                     {"below_one_share", Fraction(share)},
                     {"unpaired", unpaired.size()}};
      if (list) {
        Json ids = Json::array();
        for (const auto *doc : imperfect) {
          ids.push_back({{"doc_id", doc->doc_id},
                         {"f1", Fraction(doc->result.f1)}});
        }
        report["below_one_documents"] = std::move(ids);
      }
      if (flags.timing) report["seconds"] = elapsed.count();
      out << report.dump(2) << '\n';
      return kExitOk;
    }
    PrintRow(out, "F-score", Percent(score.macro.f1));
    PrintRow(out, "Documents", std::to_string(pairs.size()));
    PrintRow(out, "F<1.0", std::to_string(imperfect.size()));
    PrintRow(out, "% total", Percent(share));
    PrintRow(out, "Unpaired", std::to_string(unpaired.size()));
    if (flags.timing) PrintRow(out, "Seconds", Seconds(elapsed.count()));
    if (list) {
      out << '\n';
      for (const auto *doc : imperfect) {
        out << doc->doc_id << '\t' << Percent(doc->result.f1) << '\n';
      }
    }
    return kExitOk;
  }
};

struct StatsCommand {
  std::string path;
  bool json = false;

  void Register(CLI::App *app) {
    app->add_option("corpus", path, "Clausal-form corpus")->required();
    app->add_flag("--json", json, "Write a JSON report");
  }

  int Execute(std::ostream &out, std::ostream &) const {
    const auto corpus = LoadCorpus(path);
    std::vector<ClausalForm> forms;
    for (const auto &doc : corpus) forms.push_back(doc.form);
    const ClauseTypeStats stats = CountClauseTypes(forms);
    if (json) {
      Json counts = Json::object();
      for (size_t i = 0; i < kNumClauseCategories; ++i) {
        counts[ClauseCategoryName(static_cast<ClauseCategory>(i))] =
            stats.counts[i];
      }
      Json report = {{"command", "stats"},
                     {"corpus", path},
                     {"documents", corpus.size()},
                     {"clauses", stats.total()},
                     {"counts", std::move(counts)}};
      out << report.dump(2) << '\n';
      return kExitOk;
    }
    PrintRow(out, "Documents", std::to_string(corpus.size()));
    for (size_t i = 0; i < kNumClauseCategories; ++i) {
      PrintRow(out, ClauseCategoryName(static_cast<ClauseCategory>(i)),
               std::to_string(stats.counts[i]));
    }
    PrintRow(out, "Total", std::to_string(stats.total()));
    return kExitOk;
  }
};

struct SweepCommand {
  std::string sys_path, gold_path;
  MatchFlags flags;
  std::vector<int> restart_list = {1, 5, 10, 20};
  bool oracle_row = false;
  bool by_length = false;

  void Register(CLI::App *app) {
    app->add_option("system", sys_path, "System clausal forms")->required();
    app->add_option("gold", gold_path, "Gold clausal forms")->required();
    flags.Register(app);
    app->add_option("--restart-list", restart_list,
                    "Ascending restart counts, comma separated")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    app->add_flag("--oracle-row", oracle_row, "Add an exact-search row");
    app->add_flag("--by-length", by_length,
                  "Break scores down by the gold `% length:` header");
  }

  int Execute(std::ostream &out, std::ostream &err) const {
    const auto sys = LoadCorpus(sys_path);
    const auto gold = LoadCorpus(gold_path);
    std::vector<SweepPair> pairs;
    for (const auto &p : PairDocuments(sys, gold, err)) {
      SweepPair pair{p.sys->form, p.gold->form, std::nullopt};
      if (auto it = p.gold->attributes.find("length");
          it != p.gold->attributes.end()) {
        pair.length = std::stoi(it->second);
      }
      pairs.push_back(std::move(pair));
    }
    SweepOptions options;
    options.include_optimal = oracle_row;
    options.limits = flags.Limits();
    options.parallel = flags.parallel;
    const SweepReport report =
        RunSweep(pairs, restart_list, flags.Config(), options);

    std::vector<const SweepRow *> rows;
    for (const auto &row : report.rows) rows.push_back(&row);
    if (report.optimal) rows.push_back(&*report.optimal);

    if (flags.json) {
      Json table = Json::array();
      for (const SweepRow *row : rows) {
        Json r;
        if (row->restarts > 0) {
          r["restarts"] = row->restarts;
        } else {
          r["restarts"] = "optimal";
        }
        r["precision"] = Fraction(row->score.precision);
        r["recall"] = Fraction(row->score.recall);
        r["f1"] = Fraction(row->score.f1);
        if (flags.timing) r["seconds"] = row->seconds;
        if (by_length) {
          Json lengths = Json::object();
          for (const auto &[len, s] : row->by_length) {
            lengths[std::to_string(len)] = PrfJson(s);
          }
          r["by_length"] = std::move(lengths);
        }
        table.push_back(std::move(r));
      }
      Json j = {{"command", "sweep"},
                {"system", sys_path},
                {"gold", gold_path},
                {"config", flags.ConfigJson()},
                {"documents", pairs.size()},
                {"rows", std::move(table)}};
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    out << "Restarts\tP%\tR%\tF1%";
    if (flags.timing) out << "\tSeconds";
    out << '\n';
    for (const SweepRow *row : rows) {
      out << (row->restarts > 0 ? std::to_string(row->restarts) : "Optimal")
          << '\t' << Percent(row->score.precision) << '\t'
          << Percent(row->score.recall) << '\t' << Percent(row->score.f1);
      if (flags.timing) out << '\t' << Seconds(row->seconds);
      out << '\n';
    }
    if (by_length) {
      out << "\nLength";
      for (const SweepRow *row : rows) {
        out << '\t'
            << (row->restarts > 0 ? std::to_string(row->restarts) : "Optimal");
      }
      out << '\n';
      std::set<int> lengths;
      for (const SweepRow *row : rows) {
        for (const auto &[len, s] : row->by_length) lengths.insert(len);
      }
      for (int len : lengths) {
        out << len;
        for (const SweepRow *row : rows) {
          auto it = row->by_length.find(len);
          out << '\t' << (it == row->by_length.end() ? "-" : Percent(it->second.f1));
        }
        out << '\n';
      }
    }
    return kExitOk;
  }
};

struct SparCommand {
  std::string path;
  MatchFlags flags;
  bool emit = false;
  int apply = 0;
  std::string apply_to;

  void Register(CLI::App *app) {
    app->add_option("corpus", path, "Corpus to select from")->required();
    flags.Register(app);
    auto *emit_flag =
        app->add_flag("--emit", emit, "Print the selected form");
    auto *apply_opt =
        app->add_option("--apply", apply,
                        "Print the selected form N times, as N documents")
            ->check(CLI::PositiveNumber);
    auto *apply_to_opt = app->add_option(
        "--apply-to", apply_to,
        "Print the selected form once per document of this corpus, "
        "reusing its ids");
    emit_flag->excludes(apply_opt)->excludes(apply_to_opt);
    apply_opt->excludes(apply_to_opt);
  }

  int Execute(std::ostream &out, std::ostream &err) const {
    const auto corpus = LoadCorpus(path);
    std::vector<ClausalForm> forms;
    for (const auto &doc : corpus) forms.push_back(doc.form);
    const SparSelection selection =
        SelectSpar(forms, flags.Config(), flags.parallel);
    const CorpusDocument &chosen = corpus[selection.index];
    err << "selected " << chosen.doc_id << " (mean F1 "
        << Percent(selection.mean_f1) << ")\n";

    std::vector<CorpusDocument> output;
    if (apply > 0) {
      for (int i = 0; i < apply; ++i) {
        CorpusDocument doc;
        doc.doc_id = std::to_string(i + 1);
        doc.form = chosen.form;
        output.push_back(std::move(doc));
      }
    } else if (!apply_to.empty()) {
      for (const auto &target : LoadCorpus(apply_to)) {
        CorpusDocument doc;
        doc.doc_id = target.doc_id;
        doc.explicit_id = target.explicit_id;
        doc.form = chosen.form;
        output.push_back(std::move(doc));
      }
    }

    if (flags.json) {
      Json report = {{"command", "spar"},
                     {"corpus", path},
                     {"config", flags.ConfigJson()},
                     {"selected", chosen.doc_id},
                     {"index", selection.index},
                     {"mean_f1", Fraction(selection.mean_f1)}};
      std::vector<CorpusDocument> selected = {chosen};
      report["form"] = Json::parse(CorpusToJson(selected))[0]["clauses"];
      if (!output.empty()) report["documents"] = Json::parse(CorpusToJson(output));
      out << report.dump(2) << '\n';
      return kExitOk;
    }
    if (!output.empty()) {
      out << SerializeCorpus(output);
    } else {
      out << "% id: " << chosen.doc_id << '\n' << SerializeForm(chosen.form);
    }
    return kExitOk;
  }
};

struct Amr2DrsCommand {
  std::string path;
  std::string dict_path;
  std::string on_unmapped = "fail";
  bool json = false;

  void Register(CLI::App *app) {
    app->add_option("penman", path, "PENMAN graphs, blank-line separated")
        ->required();
    app->add_option("--dict", dict_path,
                    "Extra dictionary entries (kind<TAB>source<TAB>target)");
    app->add_option("--on-unmapped", on_unmapped,
                    "Relations without a role: skip or fail")
        ->check(CLI::IsMember({"skip", "fail"}));
    app->add_flag("--json", json, "Write JSON forms");
  }

  int Execute(std::ostream &out, std::ostream &err) const {
    ConversionDictionary dictionary = ConversionDictionary::Default();
    if (!dict_path.empty()) {
      try {
        dictionary.Load(ReadTextFile(dict_path));
      } catch (const Error &e) {
        throw Error(e.code(), dict_path + ": " + e.what(), e.line());
      }
    }
    std::vector<PenmanBlock> blocks;
    try {
      blocks = ParsePenmanCorpus(ReadTextFile(path));
    } catch (const Error &e) {
      throw Error(e.code(), path + ": " + e.what(), e.line());
    }
    const UnmappedPolicy policy = on_unmapped == "skip"
                                      ? UnmappedPolicy::kSkip
                                      : UnmappedPolicy::kFail;
    std::vector<CorpusDocument> corpus;
    for (size_t i = 0; i < blocks.size(); ++i) {
      Conversion conversion = AmrToDrs(blocks[i].graph, dictionary, policy);
      for (const auto &warning : conversion.warnings) {
        err << "warning: graph " << blocks[i].id << ": " << warning << '\n';
      }
      CorpusDocument doc;
      doc.doc_id = blocks[i].id;
      doc.explicit_id = blocks[i].id != std::to_string(i + 1);
      doc.form = std::move(conversion.form);
      corpus.push_back(std::move(doc));
    }
    if (json) {
      out << CorpusToJson(corpus, 2) << '\n';
    } else {
      out << SerializeCorpus(corpus);
    }
    return kExitOk;
  }
};

struct ValidateCommand {
  std::string path;
  bool json = false;

  void Register(CLI::App *app) {
    app->add_option("corpus", path, "Clausal-form corpus")->required();
    app->add_flag("--json", json, "Write a JSON report");
  }

  int Execute(std::ostream &out, std::ostream &) const {
    const auto corpus = LoadCorpus(path);
    Json docs = Json::array();
    size_t invalid = 0;
    for (const auto &doc : corpus) {
      const ValidationReport report = ValidateForm(doc.form);
      if (!report.ok()) ++invalid;
      Json messages = Json::array();
      for (const auto &v : report.violations) {
        const char *level = v.severity == Severity::kError ? "error" : "warning";
        if (!json) out << doc.doc_id << '\t' << level << '\t' << v.message << '\n';
        messages.push_back({{"severity", level}, {"message", v.message}});
      }
      docs.push_back({{"doc_id", doc.doc_id}, {"violations", messages}});
    }
    if (json) {
      Json report = {{"command", "validate"},
                     {"corpus", path},
                     {"documents", corpus.size()},
                     {"invalid", invalid},
                     {"per_doc", std::move(docs)}};
      out << report.dump(2) << '\n';
    } else {
      PrintRow(out, "Documents", std::to_string(corpus.size()));
      PrintRow(out, "Invalid", std::to_string(invalid));
    }
    return invalid == 0 ? kExitOk : kExitFailure;
  }
};

struct JsonCommand {
  std::string path;

  void Register(CLI::App *app) {
    app->add_option("corpus", path, "Clausal-form corpus")->required();
  }

  int Execute(std::ostream &out, std::ostream &) const {
    out << CorpusToJson(LoadCorpus(path), 2) << '\n';
    return kExitOk;
  }
};

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Compare, convert and inspect DRS clausal forms", "drsmatch"};
  app.require_subcommand(1);

  ScoreCommand score;
  TranslationsCommand translations;
  StatsCommand stats;
  SweepCommand sweep;
  SparCommand spar;
  Amr2DrsCommand amr2drs;
  ValidateCommand validate;
  JsonCommand json;

  std::vector<std::pair<CLI::App *, std::function<int()>>> commands;
  auto add = [&](auto &command, const char *name, const char *help) {
    CLI::App *sub = app.add_subcommand(name, help);
    command.Register(sub);
    commands.emplace_back(sub, [&] { return command.Execute(out, err); });
  };
  add(score, "score", "Score system forms against gold forms");
  add(translations, "translations",
      "Compare forms of translated documents, paired by id");
  add(stats, "stats", "Clause-type distribution of a corpus");
  add(sweep, "sweep", "Scores for a list of restart counts");
  add(spar, "spar", "Select and emit the SPAR baseline form");
  add(amr2drs, "amr2drs", "Convert PENMAN AMR graphs to clausal forms");
  add(validate, "validate", "Structural checks on a corpus");
  add(json, "json", "Convert a corpus to JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  for (const auto &[sub, execute] : commands) {
    if (!sub->parsed()) continue;
    try {
      return execute();
    } catch (const Error &e) {
      err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
      return ExitCodeFor(e.code());
    } catch (const std::exception &e) {
      err << "error: " << e.what() << '\n';
      return kExitFailure;
    }
  }
  return kExitFailure;
}

}  // namespace drs::cli
