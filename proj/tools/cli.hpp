// Copyright 2026 The Lipogram Authors.
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

// The `lipogram` command line: train, translate, evaluate, sweep.
//
// Exit codes: 0 success (warnings allowed), 1 usage, 2 I/O or provider
// failure, 3 decode failure.

#ifndef LIPOGRAM_TOOLS_CLI_HPP_
#define LIPOGRAM_TOOLS_CLI_HPP_

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lipogram/config.hpp"
#include "lipogram/http.hpp"
#include "lipogram/lipogram.hpp"

namespace lipogram::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kDecode = 3 };

struct Args {
  std::string corpus;
  std::string lexicon;
  std::string dictionary;
  std::string model;
  std::string letters = "e";
  std::string method = "beam";
  int order = 3;
  std::optional<int> paragraphs;
  std::string config;
  std::string out = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> grammar_endpoint;
  std::optional<std::string> embed_endpoint;
  std::string candidate;
};

inline CLI::Option* env_option(CLI::App* app, const std::string& flag, auto& target,
                               const std::string& help) {
  std::string env = "LIPO_";
  for (char ch : flag.substr(2)) env.push_back(ch == '-' ? '_' : static_cast<char>(std::toupper(ch)));
  return app->add_option(flag, target, help)->envname(env);
}

struct Session {
  Args args;
  FileConfig file;
  ConstraintSet constraint;

  void load_config() {
    if (!args.config.empty()) file = lipogram::load_config(args.config);
    if (args.seed) file.decoder.seed = *args.seed;
    if (args.grammar_endpoint) file.grammar_endpoint = *args.grammar_endpoint;
    if (args.embed_endpoint) file.embed_endpoint = *args.embed_endpoint;
    constraint = ConstraintSet::parse(args.letters);
  }

  std::vector<std::string> corpus_paragraphs() const {
    if (args.corpus.empty()) throw InputError("--corpus is required");
    return split_paragraphs(read_file(args.corpus));
  }

  std::vector<std::string> first_paragraphs(const std::vector<std::string>& all) const {
    if (!args.paragraphs) return all;
    if (*args.paragraphs < 1) throw InputError("--paragraphs must be >= 1");
    const auto n = std::min(all.size(), static_cast<std::size_t>(*args.paragraphs));
    return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)};
  }

  std::filesystem::path out_path(const std::string& name) const {
    std::filesystem::create_directories(args.out);
    return std::filesystem::path(args.out) / name;
  }

  nlohmann::json echo() const {
    return {{"corpus", args.corpus},
            {"letters", constraint.letters()},
            {"method", args.method},
            {"paragraphs", args.paragraphs ? nlohmann::json(*args.paragraphs) : nlohmann::json(nullptr)},
            {"decoder", file.decoder.to_json()},
            {"grammar_endpoint", file.grammar_endpoint},
            {"embed_endpoint", file.embed_endpoint}};
  }
};

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Empty paragraphs would vanish from a blank-line separated file, so they
// are written as a lone period to keep paragraph counts aligned.
inline std::string document_text(const std::vector<std::string>& paragraphs) {
  std::vector<std::string> shown;
  for (const auto& p : paragraphs) shown.push_back(p.empty() ? "." : p);
  return join_paragraphs(shown);
}

inline int cmd_train(Session& s) {
  if (s.args.order < 1 || s.args.order > kMaxOrder) {
    throw InputError("--order must be between 1 and " + std::to_string(kMaxOrder));
  }
  if (s.args.model.empty()) throw InputError("--model (output path) is required");
  const auto paragraphs = s.corpus_paragraphs();
  const NGramModel model = NGramModel::train(paragraphs, s.args.order);
  model.save(s.args.model);
  std::cout << "order " << model.order() << ", vocabulary " << model.vocabulary_size()
            << ", tokens " << model.total() << ", paragraphs " << paragraphs.size() << '\n';
  return kOk;
}

inline int cmd_translate(Session& s) {
  s.load_config();
  const Method method = parse_method(s.args.method);
  if (s.args.lexicon.empty()) throw InputError("--lexicon is required");
  const auto all = s.corpus_paragraphs();
  const auto paragraphs = s.first_paragraphs(all);
  const Lexicon lexicon = load_lexicon(s.args.lexicon);

  std::optional<NGramModel> model;
  std::optional<TfIdfEmbedder> scorer;
  std::unique_ptr<Embedder> remote;
  std::unique_ptr<GrammarProvider> grammar = make_grammar_provider(s.file.grammar_endpoint);
  PipelineResources res;
  res.lexicon = &lexicon;
  if (method == Method::kBeam) {
    if (s.args.model.empty()) throw InputError("--model is required for --method beam");
    model = NGramModel::load(s.args.model);
    scorer = TfIdfEmbedder::from_documents(all);
    res.model = &*model;
    res.scorer = &*scorer;
    if (!s.file.embed_endpoint.empty()) {
      remote = std::make_unique<HttpEmbedder>(s.file.embed_endpoint);
      res.selector = remote.get();
    }
    res.grammar = grammar.get();
  }
  TranslationOptions options;
  options.method = method;
  options.decoder = s.file.decoder;
  const TranslationResult result = translate_document(paragraphs, s.constraint, options, res);

  const std::string text = document_text(result.paragraphs);
  write_file(s.out_path("translation.txt").string(), text);
  std::cout << "paragraphs " << paragraphs.size() << ", warnings " << result.warnings
            << ", E-score " << fixed2(e_score(text, s.constraint)) << '\n';
  return kOk;
}

inline int cmd_evaluate(Session& s) {
  s.load_config();
  if (s.args.candidate.empty()) throw InputError("--candidate is required");
  if (s.args.dictionary.empty()) throw InputError("--dictionary is required");
  const auto all = s.corpus_paragraphs();
  const auto source = s.first_paragraphs(all);
  const auto candidate = split_paragraphs(read_file(s.args.candidate));
  const Dictionary dictionary = load_dictionary(s.args.dictionary);

  const TfIdfEmbedder tfidf = TfIdfEmbedder::from_documents(all);
  std::unique_ptr<Embedder> remote;
  if (!s.file.embed_endpoint.empty()) remote = std::make_unique<HttpEmbedder>(s.file.embed_endpoint);
  const Embedder& embedder = remote ? *remote : static_cast<const Embedder&>(tfidf);
  auto grammar = make_grammar_provider(s.file.grammar_endpoint);

  const EvaluationReport report =
      evaluate_document(source, candidate, s.constraint, dictionary, *grammar, embedder);
  write_file(s.out_path("report.json").string(), lipogram::to_json(report, s.echo()).dump(2) + "\n");

  std::cout << "Similarity\tOOV %\tE-Score\tGrammar\tReadability (Flesch)\n";
  if (report.aggregates) {
    const auto& a = *report.aggregates;
    std::cout << fixed2(a.similarity) << '\t' << fixed2(a.oov) << '\t' << fixed2(a.e_score) << '\t'
              << fixed2(a.grammar_count) << '\t'
              << (a.readability ? fixed2(*a.readability) : std::string("n/a")) << '\n';
  }
  return kOk;
}

inline int cmd_sweep(Session& s) {
  if (!s.args.paragraphs) s.args.paragraphs = 200;
  s.load_config();
  const Method method = parse_method(s.args.method);
  if (s.args.lexicon.empty()) throw InputError("--lexicon is required");
  if (s.args.dictionary.empty()) throw InputError("--dictionary is required");
  if (method == Method::kBeam && s.args.model.empty()) {
    throw InputError("--model is required for --method beam");
  }
  if (s.args.corpus.empty()) throw InputError("--corpus is required");
  const std::string corpus_text = read_file(s.args.corpus);
  const auto all = split_paragraphs(corpus_text);
  const auto paragraphs = s.first_paragraphs(all);
  const FreqTable freq = letter_frequencies(corpus_text);
  const Lexicon lexicon = load_lexicon(s.args.lexicon);
  const Dictionary dictionary = load_dictionary(s.args.dictionary);
  const TfIdfEmbedder scorer = TfIdfEmbedder::from_documents(all);
  std::optional<NGramModel> model;
  if (method == Method::kBeam) model = NGramModel::load(s.args.model);
  auto grammar = make_grammar_provider(s.file.grammar_endpoint);

  PipelineResources res;
  res.lexicon = &lexicon;
  res.model = model ? &*model : nullptr;
  res.scorer = &scorer;
  res.grammar = grammar.get();
  TranslationOptions options;
  options.method = method;
  options.decoder = s.file.decoder;
  options.warn = [](std::string_view) {};
  SweepInputs in{&paragraphs, &freq, &dictionary, &scorer};

  std::vector<SweepPoint> points;
  for (const auto& c : default_constraint_sets(s.file.sweep_extra)) {
    points.push_back(run_sweep({c}, in, options, res).front());
    std::cerr << points.back().label << ": similarity " << points.back().mean_similarity << '\n';
  }
  std::optional<FitParams> fit;
  try {
    fit = fit_decay(points);
  } catch (const InputError&) {
  }
  emit_sweep_csv(points, s.out_path("sweep.csv").string());
  emit_report(points, fit, s.out_path("report.json").string(), s.echo());
  write_file(s.out_path("sweep.svg").string(), sweep_svg(points, fit));
  write_file(s.out_path("sweep.dat").string(), sweep_dat(points));
  std::cout << "points " << points.size() << ", spearman " << fixed2(spearman(points)) << '\n';
  return kOk;
}

inline int run(int argc, const char* const* argv) {
  CLI::App app{"Lipogram translation toolkit"};
  app.require_subcommand(1);
  Session session;
  Args& a = session.args;

  auto* train = app.add_subcommand("train", "Train an n-gram model from --corpus");
  env_option(train, "--corpus", a.corpus, "Training text");
  env_option(train, "--model", a.model, "Output model path");
  env_option(train, "--order", a.order, "n-gram order (1-5)");

  auto add_shared = [&](CLI::App* cmd) {
    env_option(cmd, "--corpus", a.corpus, "Source text (blank-line separated paragraphs)");
    env_option(cmd, "--letters", a.letters, "Forbidden letters");
    env_option(cmd, "--paragraphs", a.paragraphs, "Only the first N paragraphs");
    env_option(cmd, "--config", a.config, "key=value configuration file");
    env_option(cmd, "--out", a.out, "Output directory");
    env_option(cmd, "--seed", a.seed, "Decoder seed");
    env_option(cmd, "--grammar-endpoint", a.grammar_endpoint, "LanguageTool base URL");
    env_option(cmd, "--embed-endpoint", a.embed_endpoint, "Embedding service base URL");
  };
  auto* translate = app.add_subcommand("translate", "Rewrite --corpus without the letters");
  add_shared(translate);
  env_option(translate, "--lexicon", a.lexicon, "Lexicon TSV");
  env_option(translate, "--model", a.model, "Trained n-gram model");
  env_option(translate, "--method", a.method, "edelete, synonym or beam");

  auto* evaluate = app.add_subcommand("evaluate", "Score --candidate against --corpus");
  add_shared(evaluate);
  env_option(evaluate, "--candidate", a.candidate, "Translated document");
  env_option(evaluate, "--dictionary", a.dictionary, "Word list for OOV");

  auto* sweep = app.add_subcommand("sweep", "Translate under every default constraint set");
  add_shared(sweep);
  env_option(sweep, "--lexicon", a.lexicon, "Lexicon TSV");
  env_option(sweep, "--model", a.model, "Trained n-gram model");
  env_option(sweep, "--method", a.method, "edelete, synonym or beam");
  env_option(sweep, "--dictionary", a.dictionary, "Word list for OOV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*train) return cmd_train(session);
    if (*translate) return cmd_translate(session);
    if (*evaluate) return cmd_evaluate(session);
    return cmd_sweep(session);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DecodeFailure& e) {
    std::cerr << "decode failure: " << e.what() << '\n';
    return kDecode;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace lipogram::cli

#endif  // LIPOGRAM_TOOLS_CLI_HPP_
