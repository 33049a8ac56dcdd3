// cloneseek: build, inspect, query and evaluate clone-search indexes.
//
//   cloneseek build --manifest m.tsv --sources src/ --strategy manual
//       --annotations a.tsv --index corpus.idx
//   cloneseek search --index corpus.idx --mode text "copy a file"
//   cloneseek eval --index corpus.idx --queries q.tsv --out reports/

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include "cloneseek/annotate.hpp"
#include "cloneseek/dataset.hpp"
#include "cloneseek/docbuild.hpp"
#include "cloneseek/error.hpp"
#include "cloneseek/eval.hpp"
#include "cloneseek/index.hpp"
#include "cloneseek/index_io.hpp"
#include "cloneseek/search.hpp"
#include "cloneseek/text.hpp"

namespace fs = std::filesystem;
using namespace cloneseek;

namespace {

struct RunConfig {
  std::string manifest;
  std::string sources;
  std::string annotations;
  std::string strategy = "baseline";
  std::optional<std::uint32_t> k;
  std::string stopwords;
  std::string index;
  std::string mode = "text";
  std::optional<std::size_t> top;
  std::string pairs;
  std::string queries;
  std::string query_file;
  std::string query_text;
  std::string out;
  bool counts = false;
  std::size_t threads = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::size_t worker_count(const RunConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

AnnotationStrategy resolve_strategy(const RunConfig& cfg) {
  const auto kind = parse_annotation_kind(cfg.strategy);
  if (!kind) throw UsageError("unknown strategy '" + cfg.strategy + "' (expected baseline, manual or auto)");
  if (cfg.k && *kind != AnnotationKind::automatic) throw UsageError("--k is only accepted with --strategy auto");
  switch (*kind) {
    case AnnotationKind::baseline: return AnnotationStrategy::baseline();
    case AnnotationKind::manual:
      if (cfg.annotations.empty()) throw UsageError("--strategy manual requires --annotations");
      return AnnotationStrategy::manual();
    case AnnotationKind::automatic:
      if (cfg.k && *cfg.k == 0) throw UsageError("--k must be >= 1");
      return AnnotationStrategy::automatic(cfg.k.value_or(AnnotationStrategy::kDefaultTopK));
  }
  throw UsageError("unknown strategy");
}

StopwordSet resolve_stopwords(const RunConfig& cfg) {
  if (cfg.stopwords.empty()) return StopwordSet::english();
  return StopwordSet::from_file(cfg.stopwords);
}

Dataset resolve_dataset(const RunConfig& cfg) {
  if (cfg.manifest.empty() || cfg.sources.empty()) throw UsageError("--manifest and --sources are required");
  std::optional<fs::path> annotations;
  if (!cfg.annotations.empty()) annotations = cfg.annotations;
  return load_manifest(cfg.manifest, annotations);
}

void write_output(const std::string& path, const std::string& text) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot write " + target.string());
  }
}

int cmd_build(const RunConfig& cfg) {
  const auto strategy = resolve_strategy(cfg);
  if (cfg.index.empty()) throw UsageError("--index is required");
  const auto stopwords = resolve_stopwords(cfg);
  const auto dataset = resolve_dataset(cfg);

  const auto idents = extract_dataset_identifiers(dataset, cfg.sources, worker_count(cfg));
  const auto annotations = annotate_dataset(dataset, idents, strategy, stopwords);
  const auto documents = build_documents(dataset, idents, annotations);
  const auto corpus = build_index(documents, dataset.refs, strategy);
  save_index(corpus, cfg.index);

  for (const auto& ex : corpus.excluded()) {
    std::cerr << "excluded doc " << ex.ref.doc_id << " (" << ex.ref.path << ":" << ex.ref.start_line << "-"
              << ex.ref.end_line << "): " << ex.reason << "\n";
  }
  std::cout << "J=" << corpus.corpus_size() << " vocabulary=" << corpus.vocabulary().size()
            << " excluded=" << corpus.excluded().size() << "\n";
  return 0;
}

int cmd_annotate_dump(const RunConfig& cfg) {
  const auto strategy = resolve_strategy(cfg);
  const auto stopwords = resolve_stopwords(cfg);
  const auto dataset = resolve_dataset(cfg);
  const auto idents = extract_dataset_identifiers(dataset, cfg.sources, worker_count(cfg));

  std::string text;
  if (cfg.counts) {
    std::map<ClassId, std::vector<TokenDocument>> by_class;
    for (std::size_t i = 0; i < dataset.refs.size(); ++i) by_class[dataset.refs[i].class_id].push_back(idents[i]);
    for (const auto& [id, docs] : by_class) {
      for (const auto& entry : count_terms(docs)) {
        text += std::to_string(id) + "\t" + entry.term + "\t" + std::to_string(entry.count) + "\n";
      }
    }
  } else {
    for (const auto& [id, set] : annotate_dataset(dataset, idents, strategy, stopwords)) {
      text += std::to_string(id) + "\t";
      for (std::size_t i = 0; i < set.words.size(); ++i) text += (i ? " " : "") + set.words[i];
      text += "\n";
    }
  }
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_output(cfg.out, text);
  }
  return 0;
}

int cmd_search(const RunConfig& cfg) {
  if (cfg.index.empty()) throw UsageError("--index is required");
  const auto mode = parse_query_mode(cfg.mode);
  if (!mode) throw UsageError("unknown mode '" + cfg.mode + "' (expected code or text)");
  if (cfg.query_file.empty() == cfg.query_text.empty()) {
    throw UsageError("give exactly one of a query argument or --query-file");
  }
  const std::size_t top = cfg.top.value_or(kDefaultTextTopK);
  if (top == 0) throw UsageError("--top must be >= 1");

  std::string raw = cfg.query_text;
  if (!cfg.query_file.empty()) raw = sanitize_utf8(read_file(cfg.query_file));
  const auto corpus = load_index(cfg.index);
  const auto query = prepare_query(std::move(raw), *mode, resolve_stopwords(cfg));
  const auto results = search(corpus, query, top);
  if (results.empty()) std::cerr << "no matches\n";
  std::cout << format_results_tsv(results);
  return 0;
}

int cmd_eval(const RunConfig& cfg) {
  if (cfg.index.empty()) throw UsageError("--index is required");
  if (cfg.pairs.empty() && cfg.queries.empty()) throw UsageError("eval needs --pairs and/or --queries");
  if (cfg.top && *cfg.top == 0) throw UsageError("--top must be >= 1");

  const auto corpus = load_index(cfg.index);
  const auto stopwords = resolve_stopwords(cfg);

  // Load and validate every input before running any query.
  std::vector<ClonePairLabel> pairs;
  std::map<DocId, TokenDocument> code_queries;
  if (!cfg.pairs.empty()) {
    if (!fs::is_regular_file(cfg.pairs)) throw Error("pairs file not found: " + cfg.pairs);
    pairs = load_pairs(cfg.pairs);
    const auto dataset = resolve_dataset(cfg);
    for (const auto& ref : dataset.refs) {
      const auto* indexed = corpus.find_ref(ref.doc_id);
      if (!indexed || *indexed != ref) {
        throw Error("manifest row for doc " + std::to_string(ref.doc_id) + " does not match the index");
      }
    }
    if (dataset.refs.size() != corpus.documents().size() + corpus.excluded().size()) {
      throw Error("manifest and index disagree on the number of methods");
    }
    for (const auto& p : pairs) {
      for (const DocId id : {p.doc_a, p.doc_b}) {
        if (!corpus.find_ref(id)) throw EvalError("pairs file names unknown doc_id " + std::to_string(id));
      }
    }
    const auto idents = extract_dataset_identifiers(dataset, cfg.sources, worker_count(cfg));
    for (std::size_t i = 0; i < idents.size(); ++i) code_queries.emplace(dataset.refs[i].doc_id, idents[i]);
  }
  std::vector<NLQueryCase> cases;
  if (!cfg.queries.empty()) {
    if (!fs::is_regular_file(cfg.queries)) throw Error("queries file not found: " + cfg.queries);
    cases = load_queries(cfg.queries);
    if (cases.empty()) throw EvalError("queries file " + cfg.queries + " holds no queries");
    for (const auto& c : cases) {
      if (!corpus.has_class(c.class_id)) {
        throw EvalError("query " + c.query_id + " names unknown class " + std::to_string(c.class_id));
      }
    }
  }

  std::string recall_csv;
  std::string nlq_csv;
  if (!cfg.pairs.empty()) {
    const auto report = eval_recall(corpus, code_queries, pairs, cfg.top.value_or(kDefaultEvalTopK), worker_count(cfg));
    for (const auto& d : report.diagnostics) std::cerr << d << "\n";
    recall_csv = format_recall_csv(report);
  }
  if (!cases.empty()) nlq_csv = format_nlq_csv(eval_nlq(corpus, cases, stopwords));

  if (cfg.out.empty()) {
    std::cout << recall_csv << nlq_csv;
  } else {
    fs::create_directories(cfg.out);
    if (!recall_csv.empty()) write_output((fs::path(cfg.out) / "recall.csv").string(), recall_csv);
    if (!nlq_csv.empty()) write_output((fs::path(cfg.out) / "nlq.csv").string(), nlq_csv);
  }
  return 0;
}

void add_dataset_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--manifest", cfg.manifest, "Clone manifest: class_id<TAB>path<TAB>start<TAB>end");
  cmd.add_option("--sources", cfg.sources, "Root directory the manifest paths are relative to");
  cmd.add_option("--annotations", cfg.annotations, "Class descriptions: class_id<TAB>description");
}

void add_strategy_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--strategy", cfg.strategy, "Annotation strategy: baseline, manual or auto")->capture_default_str();
  cmd.add_option("--k", cfg.k, "Keywords per class for --strategy auto (default 10)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clone search over natural-language documents built from Java methods"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* build = app.add_subcommand("build", "Build an index from a manifest and a source tree");
  add_dataset_options(*build, cfg);
  add_strategy_options(*build, cfg);
  build->add_option("--stopwords", cfg.stopwords, "Stopword list (default: embedded English list)");
  build->add_option("--index", cfg.index, "Output index file")->required();
  build->add_option("--threads", cfg.threads, "Worker threads (default: hardware concurrency)");

  auto* dump = app.add_subcommand("annotate-dump", "Print per-class annotation words");
  add_dataset_options(*dump, cfg);
  add_strategy_options(*dump, cfg);
  dump->add_option("--stopwords", cfg.stopwords, "Stopword list (default: embedded English list)");
  dump->add_flag("--counts", cfg.counts, "Print the ordered term count table of every class instead");
  dump->add_option("--out", cfg.out, "Output file (default: stdout)");
  dump->add_option("--threads", cfg.threads, "Worker threads (default: hardware concurrency)");

  auto* find = app.add_subcommand("search", "Query an index; prints rank, score, class_id, path, start, end");
  find->add_option("--index", cfg.index, "Index file")->required();
  find->add_option("--mode", cfg.mode, "Query form: code or text")->capture_default_str();
  find->add_option("--top", cfg.top, "Maximum results (default 10)");
  find->add_option("--stopwords", cfg.stopwords, "Stopword list for text queries");
  find->add_option("--query-file", cfg.query_file, "Read the query from a file");
  find->add_option("query", cfg.query_text, "Inline query text");

  auto* eval = app.add_subcommand("eval", "Recall (--pairs) and/or MRR/P@k (--queries) reports as CSV");
  eval->add_option("--index", cfg.index, "Index file")->required();
  add_dataset_options(*eval, cfg);
  eval->add_option("--pairs", cfg.pairs, "Labeled clone pairs: doc_a<TAB>doc_b<TAB>ptype[<TAB>similarity]");
  eval->add_option("--queries", cfg.queries, "Natural-language queries: query_id<TAB>class_id<TAB>text");
  eval->add_option("--top", cfg.top, "Results per code query for recall (default 900)");
  eval->add_option("--stopwords", cfg.stopwords, "Stopword list for text queries");
  eval->add_option("--out", cfg.out, "Directory for recall.csv / nlq.csv (default: stdout)");
  eval->add_option("--threads", cfg.threads, "Worker threads (default: hardware concurrency)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(cfg);
    if (dump->parsed()) return cmd_annotate_dump(cfg);
    if (find->parsed()) return cmd_search(cfg);
    if (eval->parsed()) return cmd_eval(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
