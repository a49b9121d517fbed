// Copyright 2026 The ART Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// art: command-line driver for analysis, regeneration and tampering.
//
// Exit status: 0 on success or a Safe verdict, 1 on an Unsafe verdict (or
// differing results, or an undetected tampering), 2 on any operational error.

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "art/artwork.hpp"
#include "art/consumer.hpp"
#include "art/corpus.hpp"
#include "art/error.hpp"
#include "art/producer.hpp"
#include "art/tamper.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kUnsafe = 1;
constexpr int kError = 2;

bool use_color() {
  const char* env = std::getenv("ART_COLOR");
  if (env != nullptr && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to a sibling temporary and renames it over the target.
void write_file(const std::string& path, const std::string& bytes) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << bytes;
    out.close();
    if (!out) throw std::runtime_error("cannot write " + path);
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot write " + path + ": " + ec.message());
  }
}

art::Program load_program(const std::string& path) {
  return art::parse_program(read_file(path));
}

void print_verdict(const art::RegenOutcome& outcome) {
  if (outcome.safe()) {
    std::cout << paint("SAFE", "32") << "\n";
    return;
  }
  std::cout << paint("UNSAFE", "31") << "\n";
  for (const auto& v : outcome.violations) std::cout << art::describe(v);
}

// Lists, per program point, the edges found on only one side.
void structural_diff(const art::AnalysisResult& a, const art::AnalysisResult& b) {
  std::set<art::ProgramPoint> points;
  for (const auto& [point, g] : a.out) points.insert(point);
  for (const auto& [point, g] : b.out) points.insert(point);
  const art::PointsToGraph empty;
  for (const auto& point : points) {
    auto ia = a.out.find(point);
    auto ib = b.out.find(point);
    const auto& ga = ia == a.out.end() ? empty : ia->second;
    const auto& gb = ib == b.out.end() ? empty : ib->second;
    if (ga == gb && (ia == a.out.end()) == (ib == b.out.end())) continue;
    std::cout << art::render(point);
    if (ia == a.out.end()) std::cout << " (only in second)";
    if (ib == b.out.end()) std::cout << " (only in first)";
    std::cout << "\n";
    for (const auto& e : ga.edges()) {
      if (!gb.contains(e)) std::cout << "  - " << art::render(e) << "\n";
    }
    for (const auto& e : gb.edges()) {
      if (!ga.contains(e)) std::cout << "  + " << art::render(e) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artwork producer, consumer and tampering tools"};
  app.require_subcommand(1);

  struct {
    std::string program, artwork, output, dump, kind, other, program_opt;
    bool optimize = false, keep_going = false;
    std::uint64_t seed = 0;
    std::size_t count = 10;
    art::CorpusConfig corpus;
  } o;

  auto* analyze = app.add_subcommand("analyze", "Run the producer and write an artwork");
  analyze->add_option("program", o.program)->required();
  analyze->add_flag("-O", o.optimize, "Drop entries the consumer can default");
  analyze->add_option("-o", o.output)->required();
  analyze->add_option("--dump-results", o.dump);

  auto* regen = app.add_subcommand("regen", "Regenerate the analysis from an artwork");
  regen->add_option("program", o.program)->required();
  regen->add_option("artwork", o.artwork)->required();
  regen->add_option("--dump-results", o.dump);
  regen->add_flag("--keep-going", o.keep_going, "Report every violation");

  auto* tamper = app.add_subcommand("tamper", "Apply one seeded mutation to an artwork");
  tamper->add_option("artwork", o.artwork)->required();
  tamper->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"remove-edge", "remove-node", "replace-object",
                             "shrink-set", "delete-entry", "add-edge"}));
  tamper->add_option("--seed", o.seed)->required();
  tamper->add_option("-o", o.output)->required();
  tamper->add_option("--program", o.program_opt,
                     "Program the artwork belongs to; needed by add-edge");

  auto* rq2 = app.add_subcommand("rq2", "Run a campaign of reductive tamperings");
  rq2->add_option("program", o.program)->required();
  rq2->add_option("artwork", o.artwork)->required();
  rq2->add_option("-n", o.count)->required();
  rq2->add_option("--seed", o.seed)->required();

  auto* diff = app.add_subcommand("diff", "Compare two results dumps");
  diff->add_option("results1", o.artwork)->required();
  diff->add_option("results2", o.other)->required();

  auto* stats = app.add_subcommand("stats", "Report artwork and naive sizes");
  stats->add_option("program", o.program)->required();
  stats->add_option("artwork", o.artwork)->required();

  auto* gen = app.add_subcommand("gen-corpus", "Write the fixture and generated programs");
  gen->add_option("--seed", o.corpus.seed)->required();
  gen->add_option("--out", o.output)->required();
  gen->add_option("--programs", o.corpus.program_count);
  gen->add_option("--min-methods", o.corpus.min_methods);
  gen->add_option("--max-methods", o.corpus.max_methods);
  gen->add_option("--min-statements", o.corpus.min_statements);
  gen->add_option("--max-statements", o.corpus.max_statements);
  gen->add_option("--loop-probability", o.corpus.loop_probability);
  gen->add_option("--recursion-probability", o.corpus.recursion_probability);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*analyze) {
      const art::Program p = load_program(o.program);
      const art::AnalysisResult r = art::analyze_inter(p);
      art::Artwork a = art::emit_artwork(p, r);
      if (o.optimize) a = art::optimize_artwork(p, a);
      write_file(o.output, art::encode(a));
      if (!o.dump.empty()) write_file(o.dump, art::naive_encode(r));
      return kOk;
    }

    if (*regen) {
      const art::Program p = load_program(o.program);
      const art::Artwork a = art::decode(read_file(o.artwork), p);
      art::RegenOptions options;
      options.keep_going = o.keep_going;
      const art::RegenOutcome outcome = art::regen_inter(p, a, options);
      print_verdict(outcome);
      if (!o.dump.empty()) {
        if (outcome.safe()) {
          write_file(o.dump, art::naive_encode(outcome.result));
        } else {
          std::cerr << "art: results not written for an unsafe artwork\n";
        }
      }
      return outcome.safe() ? kOk : kUnsafe;
    }

    if (*tamper) {
      const auto kind = art::parse_tamper_kind(o.kind);
      const art::Artwork a = art::parse_artwork(read_file(o.artwork));
      std::optional<art::Program> p;
      if (!o.program_opt.empty()) {
        p = load_program(o.program_opt);
        art::validate(a, *p);
      }
      if (*kind == art::TamperKind::kAddEdge && !p) {
        throw std::runtime_error("add-edge needs --program");
      }
      auto [mutated, spec] = art::tamper(a, *kind, o.seed, p ? &*p : nullptr);
      write_file(o.output, art::encode(mutated));
      std::cout << art::to_string(spec.kind) << " " << spec.target << "\n";
      return kOk;
    }

    if (*rq2) {
      const art::Program p = load_program(o.program);
      const art::Artwork a = art::decode(read_file(o.artwork), p);
      const art::CampaignReport report = art::rq2_campaign(p, a, o.count, o.seed);
      std::cout << report.render();
      return report.detected() == report.trials.size() ? kOk : kUnsafe;
    }

    if (*diff) {
      const std::string first = read_file(o.artwork);
      const std::string second = read_file(o.other);
      if (first == second) return kOk;
      const art::AnalysisResult a = art::parse_naive(first);
      const art::AnalysisResult b = art::parse_naive(second);
      if (art::same_results(a, b)) return kOk;
      structural_diff(a, b);
      return kUnsafe;
    }

    if (*stats) {
      const art::Program p = load_program(o.program);
      const art::Artwork a = art::decode(read_file(o.artwork), p);
      const art::ArtworkStats s = art::stats(p, a, art::analyze_inter(p));
      std::cout << "artwork bytes   " << s.bytes_art << "\n"
                << "naive bytes     " << s.bytes_naive << "\n"
                << "loop entries    " << s.entries_loop << "\n"
                << "in entries      " << s.entries_in << "\n"
                << "out entries     " << s.entries_out << "\n"
                << "dedup savings   " << s.dedup_savings << "\n";
      if (s.compressed_art && s.compressed_naive) {
        std::cout << "artwork zlib    " << *s.compressed_art << "\n"
                  << "naive zlib      " << *s.compressed_naive << "\n";
      }
      return kOk;
    }

    if (*gen) {
      const auto corpus = art::generate_corpus(o.corpus);
      fs::create_directories(o.output);
      for (const auto& program : corpus) {
        write_file((fs::path(o.output) / (program.name + ".ir")).string(), program.text);
      }
      std::cout << corpus.size() << " programs written to " << o.output << "\n";
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "art: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
