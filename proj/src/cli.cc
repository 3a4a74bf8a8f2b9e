// Copyright 2026 The Snipmine Authors.
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

#include "snipmine/cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "snipmine/archive_ingest.h"
#include "snipmine/config.h"
#include "snipmine/content_extraction.h"
#include "snipmine/corpus_format.h"
#include "snipmine/dmoz_ingest.h"
#include "snipmine/errors.h"
#include "snipmine/extractive_summarizer.h"
#include "snipmine/filter_pipeline.h"
#include "snipmine/metrics.h"
#include "snipmine/pipeline_kernels.h"
#include "snipmine/query_generation.h"

namespace snipmine {

namespace {

// Options shared by the subcommands that read documents.
struct DocumentSource {
  std::vector<std::string> archives;
  std::string documents;
};

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
  int threads = 1;
};

void AddDocumentSource(CLI::App* cmd, DocumentSource* src) {
  cmd->add_option("--archive", src->archives, "WARC archive (repeatable)");
  cmd->add_option("--documents", src->documents, "Document records (JSONL)");
}

void AddCommon(CLI::App* cmd, Common* common) {
  cmd->add_option("--config", common->config_path, "key = value config file");
  cmd->add_option("--set", common->overrides,
                  "Config override key=value (repeatable)");
  cmd->add_option("--threads", common->threads, "Worker threads")
      ->check(CLI::PositiveNumber);
}

Config BuildConfig(const Common& common) {
  std::string contents;
  if (!common.config_path.empty()) {
    std::ifstream in(common.config_path);
    if (!in) throw ConfigError("cannot open config " + common.config_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    contents = buf.str() + "\n";
  }
  for (const std::string& line : common.overrides) contents += line + "\n";
  return ParseConfig(contents);
}

ContentConfig ContentSettings(const Config& config) {
  ContentConfig content;
  content.min_paragraph_chars = config.min_paragraph_chars;
  content.min_letter_ratio = config.min_letter_ratio;
  return content;
}

void ReportIngest(const IngestStats& stats, std::ostream& err) {
  for (const std::string& warning : stats.warnings) {
    err << "warning: " << warning << '\n';
  }
  err << "ingest: " << stats.records << " records, " << stats.documents
      << " documents, " << stats.non_ok_status << " non-2xx, "
      << stats.malformed << " malformed\n";
}

// Documents from archives and/or a JSONL file, with main content extracted
// for every record that still carries raw HTML and has none.
std::vector<DocumentRecord> LoadDocuments(const DocumentSource& src,
                                          const Config& config, int threads,
                                          std::ostream& err) {
  if (src.archives.empty() && src.documents.empty()) {
    throw CLI::RequiredError("--archive or --documents");
  }
  std::vector<DocumentRecord> docs;
  for (const std::string& path : src.archives) {
    IngestStats stats;
    std::vector<DocumentRecord> part = ReadArchive(path, &stats);
    ReportIngest(stats, err);
    std::move(part.begin(), part.end(), std::back_inserter(docs));
  }
  if (!src.documents.empty()) {
    std::vector<DocumentRecord> part = corpus::ReadDocuments(src.documents);
    std::move(part.begin(), part.end(), std::back_inserter(docs));
  }
  std::vector<std::size_t> pending;
  std::vector<DocumentRecord> to_extract;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].plain_text.empty() && !docs[i].raw_html.empty()) {
      pending.push_back(i);
      to_extract.push_back(docs[i]);
    }
  }
  to_extract = kernels::ExtractContentAll(std::move(to_extract),
                                          ContentSettings(config), threads);
  for (std::size_t k = 0; k < pending.size(); ++k) {
    docs[pending[k]] = std::move(to_extract[k]);
  }
  return docs;
}

std::unordered_map<std::string, const DocumentRecord*> IndexById(
    const std::vector<DocumentRecord>& docs) {
  std::unordered_map<std::string, const DocumentRecord*> index;
  for (const DocumentRecord& doc : docs) index.emplace(doc.doc_id, &doc);
  return index;
}

std::string Fixed(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << value;
  return out.str();
}

struct StatsRow {
  std::string name;
  std::size_t remaining = 0;
};

std::vector<StatsRow> ReadStatsTsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stats " + path);
  std::vector<StatsRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#' || line.rfind("step\t", 0) == 0) {
      continue;
    }
    std::istringstream fields(line);
    StatsRow row;
    std::string remaining;
    if (!std::getline(fields, row.name, '\t') ||
        !std::getline(fields, remaining, '\t')) {
      throw ParseError("stats line is not step<TAB>remaining<TAB>delta");
    }
    try {
      row.remaining = std::stoull(remaining);
    } catch (const std::exception&) {
      throw ParseError("bad count in stats line: " + line);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Mines query-biased snippet training data from web archives",
               "snipmine"};
  app.require_subcommand(1);
  Common common;
  DocumentSource source;

  // ingest
  CLI::App* ingest = app.add_subcommand("ingest", "WARC archives to documents");
  std::string ingest_out = "-";
  ingest->add_option("--archive", source.archives, "WARC archive (repeatable)")
      ->required();
  ingest->add_option("--out", ingest_out, "Output JSONL ('-' for stdout)");

  // extract-content
  CLI::App* extract =
      app.add_subcommand("extract-content", "Main content of each document");
  std::string extract_out = "-";
  AddDocumentSource(extract, &source);
  AddCommon(extract, &common);
  extract->add_option("--out", extract_out, "Output JSONL");

  // mine-anchors
  CLI::App* mine = app.add_subcommand(
      "mine-anchors", "Anchor contexts through the nine-step filter");
  std::string mine_out = "-";
  std::string stats_path;
  std::string stats_json_path;
  std::string spam_path;
  std::string qrels_path;
  std::string anchors_out;
  std::string documents_out;
  bool serial = false;
  AddDocumentSource(mine, &source);
  AddCommon(mine, &common);
  mine->add_option("--out", mine_out, "Snippet tuples (JSONL)");
  mine->add_option("--stats", stats_path, "Attrition table (TSV)");
  mine->add_option("--stats-json", stats_json_path, "Attrition table (JSONL)");
  mine->add_option("--spam", spam_path, "doc_id<TAB>percentile file");
  mine->add_option("--qrels", qrels_path, "TREC qrels; judged pages are kept");
  mine->add_option("--anchors-out", anchors_out, "Raw anchor contexts (JSONL)");
  mine->add_option("--documents-out", documents_out,
                   "Documents with extracted content (JSONL)");
  mine->add_flag("--serial", serial, "Use the single-threaded reference path");

  // mine-directory
  CLI::App* directory = app.add_subcommand(
      "mine-directory", "Directory descriptions to snippet tuples");
  std::string dump_path;
  std::string directory_out = "-";
  directory->add_option("--dump", dump_path, "content.rdf dump or TSV")
      ->required();
  AddDocumentSource(directory, &source);
  AddCommon(directory, &common);
  directory->add_option("--out", directory_out, "Snippet tuples (JSONL)");

  // gen-queries
  CLI::App* queries =
      app.add_subcommand("gen-queries", "Snippet tuples to training triples");
  std::vector<std::string> tuple_paths;
  std::string queries_out = "-";
  queries->add_option("--tuples", tuple_paths, "Snippet tuples (repeatable)")
      ->required();
  AddDocumentSource(queries, &source);
  AddCommon(queries, &common);
  queries->add_option("--out", queries_out, "Training triples (JSONL)");

  // summarize
  CLI::App* summarize = app.add_subcommand(
      "summarize", "Query-biased extractive model input or snippets");
  std::string triples_path;
  std::string mode = "input";
  std::string df_path;
  std::string df_out;
  std::string summarize_out = "-";
  summarize->add_option("--triples", triples_path, "Training triples")
      ->required();
  AddDocumentSource(summarize, &source);
  AddCommon(summarize, &common);
  summarize->add_option("--mode", mode, "input | snippet")
      ->check(CLI::IsMember({"input", "snippet"}));
  summarize->add_option("--df", df_path, "Document-frequency table");
  summarize->add_option("--df-out", df_out, "Write the table used");
  summarize->add_option("--out", summarize_out, "Output JSONL");

  // score
  CLI::App* score = app.add_subcommand("score", "Evaluate generated snippets");
  std::string generated_path;
  std::string lm_corpus;
  double uniform_vocab = 0.0;
  std::string score_out = "-";
  score->add_option("--triples", triples_path, "Reference triples")
      ->required();
  score->add_option("--generated", generated_path, "Generated snippets")
      ->required();
  AddDocumentSource(score, &source);
  AddCommon(score, &common);
  score->add_option("--lm-corpus", lm_corpus,
                    "Bigram LM training text, one text per line "
                    "(default: document texts)");
  score->add_option("--uniform-vocab", uniform_vocab,
                    "Score fluency with a uniform model of this size");
  score->add_option("--out", score_out, "Metric table (TSV)");

  // split
  CLI::App* split =
      app.add_subcommand("split", "train/validation/test split by document");
  std::string out_dir;
  split->add_option("--triples", triples_path, "Training triples")
      ->required();
  split->add_option("--out-dir", out_dir, "Output directory")->required();

  // report
  CLI::App* report = app.add_subcommand("report", "Render stats and counts");
  std::string report_stats;
  std::string report_triples;
  report->add_option("--stats", report_stats, "Attrition TSV");
  report->add_option("--triples", report_triples, "Training triples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const Config config = BuildConfig(common);
    const int threads = common.threads;

    if (ingest->parsed()) {
      std::vector<DocumentRecord> docs;
      for (const std::string& path : source.archives) {
        IngestStats stats;
        std::vector<DocumentRecord> part = ReadArchive(path, &stats);
        ReportIngest(stats, err);
        std::move(part.begin(), part.end(), std::back_inserter(docs));
      }
      corpus::WriteFile(ingest_out, docs);
      return 0;
    }

    if (extract->parsed()) {
      corpus::WriteFile(extract_out,
                        LoadDocuments(source, config, threads, err));
      return 0;
    }

    if (mine->parsed()) {
      std::vector<DocumentRecord> docs =
          LoadDocuments(source, config, threads, err);
      std::size_t malformed = 0;
      const std::vector<AnchorContextRecord> anchors = kernels::ExtractAnchorsAll(
          docs, config.context_window_chars, threads, &malformed);
      if (malformed > 0) {
        err << "warning: " << malformed << " pages with unparseable markup\n";
      }
      if (!anchors_out.empty()) corpus::WriteFile(anchors_out, anchors);
      if (!documents_out.empty()) corpus::WriteFile(documents_out, docs);
      StepResources res = StepResources::FromDocuments(std::move(docs), threads);
      if (!spam_path.empty()) res.spam_scores = LoadSpamScores(spam_path);
      if (!qrels_path.empty()) res.judged_pages = LoadQrels(qrels_path);
      const PipelineResult result =
          serial ? RunPipelineSerial(anchors, res, config)
                 : RunPipeline(anchors, res, config, threads);
      corpus::WriteFile(mine_out, result.tuples);
      if (!stats_path.empty()) {
        std::ofstream stats_file(stats_path, std::ios::binary);
        if (!stats_file) throw IoError("cannot write " + stats_path);
        stats_file << result.stats.ToTsv(&config);
      }
      if (!stats_json_path.empty()) {
        std::ofstream stats_file(stats_json_path, std::ios::binary);
        if (!stats_file) throw IoError("cannot write " + stats_json_path);
        for (const auto& row : result.stats.ToJsonRows()) {
          stats_file << corpus::Dump(row) << '\n';
        }
      }
      err << result.stats.ToText();
      return 0;
    }

    if (directory->parsed()) {
      DirectoryParseStats parse_stats;
      const std::vector<DirectoryEntry> entries =
          ReadDirectoryDump(dump_path, &parse_stats);
      for (const std::string& warning : parse_stats.warnings) {
        err << "warning: " << warning << '\n';
      }
      const StepResources res = StepResources::FromDocuments(
          LoadDocuments(source, config, threads, err), threads);
      const DirectoryFilterResult result =
          FilterDescriptions(entries, res, config, threads);
      corpus::WriteFile(directory_out, result.tuples);
      err << "directory: " << entries.size() << " entries ("
          << parse_stats.skipped << " skipped while parsing), "
          << result.tuples.size() << " kept\n";
      for (const auto& [reason, count] : result.drops) {
        err << "  " << DropReasonName(reason) << '\t' << count << '\n';
      }
      return 0;
    }

    if (queries->parsed()) {
      std::vector<SnippetTuple> tuples;
      for (const std::string& path : tuple_paths) {
        std::vector<SnippetTuple> part = corpus::ReadTuples(path);
        std::move(part.begin(), part.end(), std::back_inserter(tuples));
      }
      const std::vector<DocumentRecord> docs =
          LoadDocuments(source, config, threads, err);
      const auto index = IndexById(docs);
      const TripleBuildResult result = BuildTriples(
          tuples,
          [&](const std::string& id) -> const DocumentRecord* {
            auto it = index.find(id);
            return it == index.end() ? nullptr : it->second;
          },
          LexiconTagger::Bundled(), config, threads);
      corpus::WriteFile(queries_out, result.triples);
      err << "gen-queries: " << tuples.size() << " tuples, "
          << result.triples.size() << " triples, " << result.no_candidates
          << " without candidates, " << result.missing_documents
          << " with missing documents\n";
      return 0;
    }

    if (summarize->parsed()) {
      const std::vector<TrainingTriple> triples =
          corpus::ReadTriples(triples_path);
      const std::vector<DocumentRecord> docs =
          LoadDocuments(source, config, threads, err);
      const auto index = IndexById(docs);
      DocumentFrequencyTable table;
      if (!df_path.empty()) {
        table = DocumentFrequencyTable::Load(df_path);
      } else {
        for (const DocumentRecord& doc : docs) table.AddDocument(doc.plain_text);
      }
      if (!df_out.empty()) {
        std::ofstream df_file(df_out, std::ios::binary);
        if (!df_file) throw IoError("cannot write " + df_out);
        table.Write(df_file);
      }
      std::vector<corpus::PreparedInput> inputs;
      std::vector<corpus::GeneratedSnippet> snippets;
      std::size_t missing = 0;
      for (const TrainingTriple& triple : triples) {
        auto it = index.find(triple.doc_id);
        if (it == index.end()) {
          ++missing;
          continue;
        }
        const std::string& text = it->second->plain_text;
        if (mode == "input") {
          inputs.push_back({triple.triple_id, triple.query,
                            ModelInput(triple.query, text, table,
                                       config.input_sentences,
                                       config.input_max_words)});
        } else {
          snippets.push_back({triple.triple_id,
                              ExtractiveSnippet(triple.query, text, table,
                                                config.snippet_sentences)});
        }
      }
      if (mode == "input") {
        corpus::WriteFile(summarize_out, inputs);
      } else {
        corpus::WriteFile(summarize_out, snippets);
      }
      if (missing > 0) {
        err << "warning: " << missing << " triples with missing documents\n";
      }
      return 0;
    }

    if (score->parsed()) {
      const std::vector<TrainingTriple> triples =
          corpus::ReadTriples(triples_path);
      const std::vector<corpus::GeneratedSnippet> generated =
          corpus::ReadGenerated(generated_path);
      const std::vector<DocumentRecord> docs =
          LoadDocuments(source, config, threads, err);
      const auto index = IndexById(docs);
      std::unordered_map<std::string, const TrainingTriple*> by_id;
      for (const TrainingTriple& triple : triples) {
        by_id.emplace(triple.triple_id, &triple);
      }

      std::unique_ptr<FluencyBackend> backend;
      if (uniform_vocab > 0) {
        backend = std::make_unique<UniformBackend>(uniform_vocab);
      } else {
        std::vector<std::string> texts;
        if (!lm_corpus.empty()) {
          std::ifstream in(lm_corpus);
          if (!in) throw IoError("cannot open " + lm_corpus);
          for (std::string line; std::getline(in, line);) {
            texts.push_back(line);
          }
        } else {
          for (const DocumentRecord& doc : docs) texts.push_back(doc.plain_text);
        }
        auto lm = std::make_unique<BigramLanguageModel>();
        lm->Train(texts);
        backend = std::move(lm);
      }

      std::ostringstream table;
      table << "triple_id\trouge1\trouge2\trougeL\tfluency\tfactuality\treuse\n";
      double sums[6] = {0, 0, 0, 0, 0, 0};
      std::size_t rows = 0;
      std::size_t fluent_rows = 0;
      for (const corpus::GeneratedSnippet& gen : generated) {
        auto tit = by_id.find(gen.triple_id);
        if (tit == by_id.end()) {
          throw ParseError("generated snippet for unknown triple " +
                           gen.triple_id);
        }
        const TrainingTriple& triple = *tit->second;
        auto dit = index.find(triple.doc_id);
        if (dit == index.end()) {
          throw ParseError("missing document " + triple.doc_id);
        }
        const std::string& doc_text = dit->second->plain_text;
        double values[6];
        values[0] = RougeN(gen.snippet, triple.snippet, 1).f1;
        values[1] = RougeN(gen.snippet, triple.snippet, 2).f1;
        values[2] = RougeL(gen.snippet, triple.snippet).f1;
        bool fluent = true;
        try {
          values[3] = Fluency(gen.snippet, *backend);
        } catch (const InvalidInputError&) {
          fluent = false;
          values[3] = 0.0;
        }
        values[4] = Factuality(gen.snippet, doc_text, LexiconTagger::Bundled(),
                               config.max_phrase_words);
        values[5] = Reuse(gen.snippet, doc_text);
        table << gen.triple_id;
        for (int c = 0; c < 6; ++c) {
          table << '\t' << (c == 3 && !fluent ? "nan" : Fixed(values[c]));
          if (c != 3 || fluent) sums[c] += values[c];
        }
        table << '\n';
        ++rows;
        if (fluent) ++fluent_rows;
      }
      if (rows > 0) {
        table << "mean";
        for (int c = 0; c < 6; ++c) {
          const std::size_t n = c == 3 ? fluent_rows : rows;
          table << '\t' << (n == 0 ? "nan" : Fixed(sums[c] / n));
        }
        table << '\n';
      }
      if (score_out == "-") {
        out << table.str();
      } else {
        std::ofstream file(score_out, std::ios::binary);
        if (!file) throw IoError("cannot write " + score_out);
        file << table.str();
      }
      return 0;
    }

    if (split->parsed()) {
      const std::vector<TrainingTriple> triples =
          corpus::ReadTriples(triples_path);
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
      for (const auto& [name, part] : SplitTriples(triples)) {
        corpus::WriteFile(
            (std::filesystem::path(out_dir) / (name + ".jsonl")).string(), part);
        err << name << '\t' << part.size() << '\n';
      }
      return 0;
    }

    if (report->parsed()) {
      if (report_stats.empty() && report_triples.empty()) {
        err << "error: report needs --stats and/or --triples\n\n"
            << report->help();
        return 2;
      }
      if (!report_stats.empty()) {
        const std::vector<StatsRow> rows = ReadStatsTsv(report_stats);
        if (rows.empty()) throw ParseError("no rows in " + report_stats);
        PipelineStats stats;
        stats.input = rows.front().remaining;
        for (std::size_t i = 1; i < rows.size(); ++i) {
          stats.steps.push_back({rows[i].name, rows[i].remaining, {}});
        }
        out << stats.ToText();
      }
      if (!report_triples.empty()) {
        const std::vector<TrainingTriple> triples =
            corpus::ReadTriples(report_triples);
        std::size_t words = 0;
        std::size_t longest = 0;
        std::size_t shortest = triples.empty() ? 0 : SIZE_MAX;
        std::map<std::string, std::size_t> by_provenance;
        for (const TrainingTriple& triple : triples) {
          const std::size_t n = CountWords(triple.query);
          words += n;
          longest = std::max(longest, n);
          shortest = std::min(shortest, n);
          ++by_provenance[std::string(ProvenanceName(triple.provenance))];
        }
        out << "triples\t" << triples.size() << '\n';
        for (const auto& [name, count] : by_provenance) {
          out << "  " << name << '\t' << count << '\n';
        }
        out << "query words (mean/min/max)\t"
            << (triples.empty() ? "0.00" : [&] {
                 std::ostringstream m;
                 m << std::fixed << std::setprecision(2)
                   << static_cast<double>(words) / triples.size();
                 return m.str();
               }())
            << '/' << shortest << '/' << longest << '\n';
      }
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace snipmine
