// stance-net: command-line driver for target extraction, signed-network
// construction, message classification and evaluation.
//
// Exit codes: 0 success, 1 input error, 2 pipeline stage failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stancenet/stancenet.hpp"

#ifndef STANCENET_DATA_DIR
#define STANCENET_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace stancenet;

namespace {

constexpr int kInputError = 1;
constexpr int kStageError = 2;

WordSet lowered(const std::vector<std::string>& words) {
  WordSet out;
  for (const auto& w : words) out.insert(to_lower(w));
  return out;
}

std::ifstream open_in(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw input_error("cannot read " + p.string());
  return in;
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw input_error("cannot write " + p.string());
  return out;
}

void write_json_file(const fs::path& p, const nlohmann::json& j) {
  auto out = open_out(p);
  out << j.dump(2) << '\n';
}

void report_record_errors(const fs::path& file, const std::vector<RecordError>& errors) {
  for (const auto& e : errors)
    std::cerr << file.string() << ":" << e.line << ": skipped record: " << e.message << '\n';
}

std::vector<Document> load_or_throw(const fs::path& file, DocumentKind kind,
                                    const LanguageResources& res) {
  auto loaded = load_documents(file, kind, res.abbreviations);
  report_record_errors(file, loaded.errors);
  return std::move(loaded.documents);
}

struct Common {
  std::string data_dir = STANCENET_DATA_DIR;
  std::string lexicon;

  fs::path lexicon_path() const {
    return lexicon.empty() ? fs::path(data_dir) / "lexicon.tsv" : fs::path(lexicon);
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_lexicon) {
  cmd->add_option("--data-dir", c.data_dir, "Directory with the shipped word lists");
  if (with_lexicon)
    cmd->add_option("--lexicon", c.lexicon, "Sentiment lexicon (TSV); defaults to <data-dir>/lexicon.tsv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stance detection toward a news event via signed target networks"};
  app.require_subcommand(1);
  Common common;

  // extract-targets
  std::string et_articles, et_out, et_event = "event";
  std::vector<std::string> et_aliases;
  bool et_from_messages = false;
  auto* extract = app.add_subcommand("extract-targets", "Extract key-phrases and key-players");
  extract->add_option("--articles", et_articles, "Line-delimited article records")->required();
  extract->add_option("--out", et_out, "Output directory")->required();
  extract->add_option("--event-alias", et_aliases, "Event names excluded from the targets");
  extract->add_option("--event", et_event, "Event label used in the stats table");
  extract->add_flag("--messages-corpus", et_from_messages,
                    "Input holds messages (hashtags, mentions and URLs are stripped)");
  add_common(extract, common, false);

  // build-network
  std::string bn_articles, bn_assertions, bn_targets, bn_out, bn_event = "event";
  std::vector<std::string> bn_aliases;
  auto* build = app.add_subcommand("build-network", "Extract assertions and build the signed network");
  auto* bn_art_opt = build->add_option("--articles", bn_articles, "Line-delimited article records");
  auto* bn_as_opt = build->add_option("--assertions", bn_assertions,
                                      "Use existing assertion records instead of articles");
  bn_art_opt->excludes(bn_as_opt);
  build->add_option("--targets", bn_targets, "targets.jsonl from extract-targets")->required();
  build->add_option("--event-alias", bn_aliases, "Names of the event")->required();
  build->add_option("--out", bn_out, "Output directory")->required();
  build->add_option("--event", bn_event, "Event label used in the coverage table");
  add_common(build, common, true);

  // classify
  std::string cl_messages, cl_network, cl_out;
  std::optional<std::size_t> cl_window;
  auto* classify = app.add_subcommand("classify", "Label message stance");
  classify->add_option("--messages", cl_messages, "Line-delimited message records")->required();
  classify->add_option("--network", cl_network, "network.json from build-network")->required();
  classify->add_option("--out", cl_out, "Predictions file (line-delimited)")->required();
  classify->add_option("--window", cl_window, "Score sentiment within +/-N tokens of each mention");
  add_common(classify, common, true);

  // evaluate
  std::string ev_pred, ev_gold, ev_policy = "count-wrong";
  auto* eval = app.add_subcommand("evaluate", "Accuracy and F1 against gold labels");
  eval->add_option("--pred", ev_pred, "Predictions file")->required();
  eval->add_option("--gold", ev_gold, "Gold labels file")->required();
  eval->add_option("--neutral-policy", ev_policy, "count-wrong or exclude");

  // run
  std::string run_config, run_out, run_policy, run_data, run_lexicon;
  std::optional<std::size_t> run_window;
  auto* run = app.add_subcommand("run", "Full pipeline from a JSON run config");
  run->add_option("--config", run_config, "Run config (JSON)")->required();
  run->add_option("--out", run_out, "Override out_dir");
  run->add_option("--data-dir", run_data, "Override data_dir");
  run->add_option("--lexicon", run_lexicon, "Override lexicon");
  run->add_option("--neutral-policy", run_policy, "Override neutral_policy");
  run->add_option("--window", run_window, "Override sentiment_window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*extract) {
      auto res = LanguageResources::load(common.data_dir);
      auto docs = load_or_throw(et_articles,
                                et_from_messages ? DocumentKind::Message : DocumentKind::Article, res);
      TargetSet targets;
      try {
        targets = build_target_set(docs, target_options(res, lowered(et_aliases)));
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Input) throw;
        throw stage_error(std::string("target extraction: ") + e.what());
      }
      fs::path out(et_out);
      fs::create_directories(out);
      auto t = open_out(out / "targets.jsonl");
      records::write_targets(t, targets);
      write_json_file(out / "target_stats.json", records::target_stats_json(targets));
      std::cout << records::phrase_stats_table(et_event, targets);
    } else if (*build) {
      auto res = LanguageResources::load(common.data_dir);
      auto lexicon = load_lexicon(common.lexicon_path());
      auto in_targets = open_in(bn_targets);
      auto targets = records::read_targets(in_targets);
      auto aliases = lowered(bn_aliases);
      fs::path out(bn_out);
      fs::create_directories(out);

      std::vector<PolarityAssertion> assertions;
      if (!bn_assertions.empty()) {
        auto in = open_in(bn_assertions);
        assertions = records::read_assertions(in);
      } else if (!bn_articles.empty()) {
        auto docs = load_or_throw(bn_articles, DocumentKind::Article, res);
        auto pass1 = run_pass1(docs, MentionMatcher(targets, aliases), lexicon,
                               ClauseLexicon::from(res));
        write_json_file(out / "pass1_stats.json", records::pass1_stats_json(pass1));
        assertions = std::move(pass1.assertions);
      } else {
        throw input_error("build-network needs --articles or --assertions");
      }
      auto a_out = open_out(out / "assertions.jsonl");
      records::write_assertions(a_out, assertions);

      auto net = build_network(assertions, targets);
      propagate(net);
      auto e_out = open_out(out / "edges.jsonl");
      records::write_edges(e_out, net);
      write_json_file(out / "network.json", records::network_document(net, targets, aliases));
      auto dot = open_out(out / "network.dot");
      dot << to_dot(net);
      auto coverage = coverage_report(net);
      write_json_file(out / "coverage.json", records::to_json(coverage));
      auto parts = partition(net);
      std::cout << records::coverage_table(bn_event, coverage);
      if (!parts.violations.empty())
        std::cerr << parts.violations.size() << " balance violation(s) in the evidence\n";
    } else if (*classify) {
      auto res = LanguageResources::load(common.data_dir);
      auto lexicon = load_lexicon(common.lexicon_path());
      auto in_net = open_in(cl_network);
      auto j = nlohmann::json::parse(in_net, nullptr, false);
      if (j.is_discarded()) throw input_error(cl_network + " is not valid JSON");
      records::NetworkDocument doc;
      try {
        doc = records::network_document_from_json(j);
      } catch (const nlohmann::json::exception& e) {
        throw input_error(cl_network + ": " + e.what());
      }
      auto messages = load_or_throw(cl_messages, DocumentKind::Message, res);
      auto results = classify_corpus(messages, doc.polarity,
                                     MentionMatcher(doc.targets, doc.event_aliases), lexicon,
                                     StanceOptions{cl_window});
      auto out = open_out(cl_out);
      records::write_predictions(out, results);
    } else if (*eval) {
      auto policy = neutral_policy_from(ev_policy);
      auto in_pred = open_in(ev_pred);
      auto in_gold = open_in(ev_gold);
      auto report = evaluate(records::read_predictions(in_pred), records::read_gold(in_gold), policy);
      std::cout << records::to_json(report, policy).dump(2) << '\n';
    } else if (*run) {
      auto config = load_config(run_config);
      if (!run_out.empty()) config.out_dir = fs::path(run_out);
      if (!run_data.empty()) config.data_dir = run_data;
      if (!run_lexicon.empty()) config.lexicon = run_lexicon;
      if (!run_policy.empty()) config.neutral_policy = neutral_policy_from(run_policy);
      if (run_window) config.sentiment_window = run_window;
      auto result = run_pipeline(config);
      report_record_errors(config.articles, result.article_errors);
      report_record_errors(config.messages, result.message_errors);
      std::cout << run_report(config, result);
    }
  } catch (const Error& e) {
    std::cerr << "stance-net: " << e.what() << '\n';
    return e.kind() == ErrorKind::Input ? kInputError : kStageError;
  } catch (const std::exception& e) {
    std::cerr << "stance-net: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
