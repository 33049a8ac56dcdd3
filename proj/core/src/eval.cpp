#include "cloneseek/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>

#include "cloneseek/error.hpp"
#include "cloneseek/search.hpp"
#include "cloneseek/text.hpp"
#include "parallel.hpp"

namespace cloneseek {

namespace {

using PairKey = std::pair<DocId, DocId>;

PairKey unordered_key(DocId a, DocId b) { return a < b ? PairKey{a, b} : PairKey{b, a}; }

bool is_bucketed(PairType type) { return type != PairType::T1 && type != PairType::T2; }

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename Int>
std::optional<Int> parse_uint(std::string_view text) {
  text = trim(text);
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

bool is_skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

void check_query_set(std::size_t results, std::size_t truth) {
  if (results == 0) throw EvalError("empty query set");
  if (results != truth) throw EvalError("results and ground truth differ in length");
}

}  // namespace

std::string_view to_string(PairType type) {
  switch (type) {
    case PairType::T1: return "T1";
    case PairType::T2: return "T2";
    case PairType::VST3: return "VST3";
    case PairType::ST3: return "ST3";
    case PairType::MT3: return "MT3";
    case PairType::WT3_4: return "WT3_4";
  }
  return "unknown";
}

std::optional<PairType> parse_pair_type(std::string_view text) {
  for (const auto type : kAllPairTypes) {
    if (to_string(type) == text) return type;
  }
  if (text == "WT3/4") return PairType::WT3_4;
  return std::nullopt;
}

PairType bucket_type(double similarity) {
  if (!(similarity >= 0.0 && similarity < 1.0)) {
    throw InvariantError("similarity must lie in [0, 1), got " + std::to_string(similarity));
  }
  if (similarity >= 0.9) return PairType::VST3;
  if (similarity >= 0.7) return PairType::ST3;
  if (similarity >= 0.5) return PairType::MT3;
  return PairType::WT3_4;
}

std::vector<ClonePairLabel> parse_pairs(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  std::vector<ClonePairLabel> pairs;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (is_skippable(lines[i])) continue;
    const auto fields = split_tabs(lines[i]);
    if (fields.size() != 3 && fields.size() != 4) {
      throw ParseError(where, line_no, "expected doc_a<TAB>doc_b<TAB>ptype[<TAB>similarity]");
    }
    const auto a = parse_uint<DocId>(fields[0]);
    const auto b = parse_uint<DocId>(fields[1]);
    if (!a || !b) throw ParseError(where, line_no, "doc ids must be non-negative integers");
    if (*a == *b) throw ParseError(where, line_no, "a clone pair needs two distinct methods");
    const auto type = parse_pair_type(trim(fields[2]));
    if (!type) throw ParseError(where, line_no, "unknown clone type '" + std::string(trim(fields[2])) + "'");
    ClonePairLabel label{*a, *b, *type, std::nullopt};
    if (fields.size() == 4) {
      const auto sim = parse_double(fields[3]);
      if (!sim || *sim < 0.0 || *sim > 1.0) throw ParseError(where, line_no, "similarity must lie in [0, 1]");
      if (is_bucketed(*type) && (*sim >= 1.0 || bucket_type(*sim) != *type)) {
        throw ParseError(where, line_no, "similarity " + std::string(trim(fields[3])) + " does not fall in the " +
                                             std::string(to_string(*type)) + " range");
      }
      label.similarity = *sim;
    }
    pairs.push_back(label);
  }
  return pairs;
}

std::vector<ClonePairLabel> load_pairs(const std::filesystem::path& path) {
  return parse_pairs(sanitize_utf8(read_file(path.string())), path.string());
}

const RecallRow* RecallReport::find(PairType type) const {
  for (const auto& row : rows) {
    if (row.type == type) return &row;
  }
  return nullptr;
}

RecallReport eval_recall(const IndexedCorpus& corpus, const std::map<DocId, TokenDocument>& code_queries,
                         std::span<const ClonePairLabel> pairs, std::size_t top_k, std::size_t threads) {
  if (top_k == 0) throw InvariantError("top_k must be >= 1");
  for (const auto& p : pairs) {
    for (const DocId id : {p.doc_a, p.doc_b}) {
      if (!corpus.find_ref(id)) throw EvalError("clone pair names unknown doc_id " + std::to_string(id));
    }
  }
  const auto docs = corpus.documents();
  for (const auto& doc : docs) {
    if (!code_queries.contains(doc.ref.doc_id)) {
      throw EvalError("no code query for indexed doc " + std::to_string(doc.ref.doc_id));
    }
  }

  // One candidate list per query; merged afterwards so the union does not
  // depend on scheduling.
  std::vector<std::vector<PairKey>> per_query(docs.size());
  detail::parallel_for(docs.size(), threads, [&](std::size_t pos) {
    const DocId self = docs[pos].ref.doc_id;
    const auto& terms = code_queries.at(self).terms;
    for (const auto& hit : rank_documents(corpus, corpus.vectorize(terms), top_k)) {
      const DocId other = docs[hit.doc_pos].ref.doc_id;
      if (other != self) per_query[pos].push_back(unordered_key(self, other));
    }
  });
  std::set<PairKey> detected;
  for (const auto& keys : per_query) detected.insert(keys.begin(), keys.end());

  RecallReport report;
  for (const auto type : kAllPairTypes) {
    std::set<PairKey> labeled;
    for (const auto& p : pairs) {
      if (p.type == type) labeled.insert(unordered_key(p.doc_a, p.doc_b));
    }
    if (labeled.empty()) continue;
    RecallRow row{type, 0, labeled.size(), 0.0};
    for (const auto& key : labeled) {
      if (detected.contains(key)) {
        ++row.found;
        continue;
      }
      for (const DocId id : {key.first, key.second}) {
        if (const auto* ex = corpus.find_excluded(id)) {
          report.diagnostics.push_back(std::string(to_string(type)) + " pair (" + std::to_string(key.first) + ", " +
                                       std::to_string(key.second) + ") missed: doc " + std::to_string(id) +
                                       " excluded (" + ex->reason + ")");
          break;
        }
      }
    }
    row.recall = static_cast<double>(row.found) / static_cast<double>(row.total);
    report.rows.push_back(row);
  }
  return report;
}

std::string format_recall_csv(const RecallReport& report) {
  std::string out = "ptype,found,total,recall\n";
  for (const auto& row : report.rows) {
    out += std::string(to_string(row.type)) + "," + std::to_string(row.found) + "," + std::to_string(row.total) +
           "," + fixed4(row.recall) + "\n";
  }
  return out;
}

double precision_at_k(std::span<const RankedClasses> results, std::span<const ClassId> truth, std::size_t k) {
  if (k == 0) throw InvariantError("k must be >= 1");
  check_query_set(results.size(), truth.size());
  double sum = 0.0;
  for (std::size_t q = 0; q < results.size(); ++q) {
    const auto n = std::min(k, results[q].size());
    const auto relevant = std::count(results[q].begin(), results[q].begin() + static_cast<std::ptrdiff_t>(n), truth[q]);
    sum += static_cast<double>(relevant) / static_cast<double>(k);
  }
  return sum / static_cast<double>(results.size());
}

double mrr(std::span<const RankedClasses> results, std::span<const ClassId> truth) {
  check_query_set(results.size(), truth.size());
  double sum = 0.0;
  for (std::size_t q = 0; q < results.size(); ++q) {
    const auto it = std::find(results[q].begin(), results[q].end(), truth[q]);
    if (it != results[q].end()) sum += 1.0 / static_cast<double>(it - results[q].begin() + 1);
  }
  return sum / static_cast<double>(results.size());
}

std::vector<NLQueryCase> parse_queries(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  std::vector<NLQueryCase> cases;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (is_skippable(lines[i])) continue;
    const auto first = lines[i].find('\t');
    const auto second = first == std::string_view::npos ? first : lines[i].find('\t', first + 1);
    if (second == std::string_view::npos) throw ParseError(where, line_no, "expected query_id<TAB>class_id<TAB>text");
    const auto id = trim(lines[i].substr(0, first));
    const auto class_id = parse_uint<ClassId>(lines[i].substr(first + 1, second - first - 1));
    if (id.empty()) throw ParseError(where, line_no, "empty query_id");
    if (!class_id || *class_id == 0) throw ParseError(where, line_no, "class_id must be a positive integer");
    cases.push_back(NLQueryCase{std::string(id), *class_id, std::string(trim(lines[i].substr(second + 1)))});
  }
  return cases;
}

std::vector<NLQueryCase> load_queries(const std::filesystem::path& path) {
  return parse_queries(sanitize_utf8(read_file(path.string())), path.string());
}

EvalReport eval_nlq(const IndexedCorpus& corpus, std::span<const NLQueryCase> cases, const StopwordSet& stopwords,
                    std::vector<std::size_t> k_values) {
  if (cases.empty()) throw EvalError("empty query set");
  if (k_values.empty()) throw EvalError("no precision cut-offs requested");
  for (const auto k : k_values) {
    if (k == 0) throw InvariantError("k must be >= 1");
  }
  for (const auto& c : cases) {
    if (!corpus.has_class(c.class_id)) {
      throw EvalError("query " + c.query_id + " names unknown class " + std::to_string(c.class_id));
    }
  }

  const std::size_t depth = *std::max_element(k_values.begin(), k_values.end());
  std::vector<RankedClasses> ranked;
  std::vector<ClassId> truth;
  ranked.reserve(cases.size());
  for (const auto& c : cases) {
    RankedClasses classes;
    for (const auto& r : search(corpus, prepare_query(c.text, QueryMode::text, stopwords), depth)) {
      classes.push_back(r.ref.class_id);
    }
    ranked.push_back(std::move(classes));
    truth.push_back(c.class_id);
  }

  EvalReport report;
  report.k_values = k_values;
  for (std::size_t q = 0; q < cases.size(); ++q) {
    const std::span<const RankedClasses> one(&ranked[q], 1);
    const std::span<const ClassId> one_truth(&truth[q], 1);
    QueryMetrics row{cases[q].query_id, mrr(one, one_truth), {}};
    for (const auto k : k_values) row.precision.push_back(precision_at_k(one, one_truth, k));
    report.rows.push_back(std::move(row));
  }
  report.mean_reciprocal_rank = mrr(ranked, truth);
  for (const auto k : k_values) report.mean_precision.push_back(precision_at_k(ranked, truth, k));
  return report;
}

std::string format_nlq_csv(const EvalReport& report) {
  std::string out = "query_id,mrr";
  for (const auto k : report.k_values) out += ",p" + std::to_string(k);
  out += '\n';
  for (const auto& row : report.rows) {
    out += csv_field(row.query_id) + "," + fixed4(row.reciprocal_rank);
    for (const double p : row.precision) out += "," + fixed4(p);
    out += '\n';
  }
  out += "average," + fixed4(report.mean_reciprocal_rank);
  for (const double p : report.mean_precision) out += "," + fixed4(p);
  out += '\n';
  return out;
}

}  // namespace cloneseek
