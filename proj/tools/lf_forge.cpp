// lf-forge: build, verify, compare and export genus-one Lefschetz fibrations
// on disk cotangent bundles.

#include "lfforge/report.h"

#include "CLI11.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <regex>

namespace fs = std::filesystem;
using lf::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string genus = "1";
  std::string construction = "both";
  std::string out;
  std::string format = "json";
  std::string against;
  std::string input;
  std::string what = "fiber";
  bool stamp = false;
  bool verbose = false;
  int max_genus = 32;
};

std::vector<int> parse_genus(const std::string& text, int cap) {
  static const std::regex single(R"(\s*(-?\d+)\s*)"), range(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  int lo, hi;
  if (std::regex_match(text, m, range)) {
    lo = std::stoi(m[1]);
    hi = std::stoi(m[2]);
  } else if (std::regex_match(text, m, single)) {
    lo = hi = std::stoi(m[1]);
  } else {
    throw UsageError("--genus expects N or A..B, got '" + text + "'");
  }
  if (lo < 0 || hi < 0) throw UsageError("genus must be non-negative");
  if (lo > hi) throw UsageError("empty genus range " + text);
  if (hi > cap) throw UsageError("genus " + std::to_string(hi) + " exceeds --max-genus " + std::to_string(cap));
  std::vector<int> out;
  for (int g = lo; g <= hi; ++g) out.push_back(g);
  return out;
}

std::vector<std::string> constructions(const std::string& sel) {
  if (sel == "both") return {"johns", "ishikawa"};
  if (sel == "johns" || sel == "ishikawa" || sel == "sphere") return {sel};
  throw UsageError("unknown construction '" + sel + "'");
}

lf::LefschetzFibration build(const std::string& construction, int genus) {
  if (construction == "johns") return lf::johns_fibration(genus);
  if (construction == "ishikawa") return lf::ishikawa_fibration(genus);
  if (construction == "sphere") {
    if (genus != 0) throw UsageError("the sphere construction only exists for genus 0");
    return lf::sphere_planar_fibration();
  }
  throw UsageError("unknown construction '" + construction + "'");
}

// One job per (construction, genus); results come back in input order.
template <class F>
auto run_ordered(const std::vector<std::pair<std::string, int>>& jobs, F work) {
  using R = decltype(work(jobs.front().first, jobs.front().second));
  std::vector<std::future<R>> futures;
  for (const auto& [c, g] : jobs) futures.push_back(std::async(std::launch::async, work, c, g));
  std::vector<R> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::vector<std::pair<std::string, int>> jobs_for(const RunConfig& cfg) {
  std::vector<std::pair<std::string, int>> jobs;
  auto cs = constructions(cfg.construction);
  std::vector<int> gs = cs == std::vector<std::string>{"sphere"} && cfg.genus == "1" ? std::vector<int>{0}
                                                                                      : parse_genus(cfg.genus, cfg.max_genus);
  for (int g : gs)
    for (const auto& c : cs) jobs.push_back({c, g});
  return jobs;
}

void stamp(json& j, const RunConfig& cfg) {
  if (!cfg.stamp) return;
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  j["generated_at"] = buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

bool wants_directory(const std::string& out) {
  return !out.empty() && (out.back() == '/' || (fs::exists(out) && fs::is_directory(out)));
}

// Writes one document per job into a directory, or everything to one sink.
void emit(const RunConfig& cfg, const std::vector<std::pair<std::string, int>>& jobs, const std::vector<std::string>& texts,
          const std::string& ext) {
  if (wants_directory(cfg.out)) {
    fs::create_directories(cfg.out);
    for (size_t i = 0; i < jobs.size(); ++i)
      write_text((fs::path(cfg.out) / (jobs[i].first + "_g" + std::to_string(jobs[i].second) + ext)).string(), texts[i]);
    return;
  }
  std::string all;
  for (const auto& t : texts) all += t;
  write_text(cfg.out, all);
}

std::string dump_documents(std::vector<json> docs, bool directory) {
  if (directory || docs.size() != 1) return json(docs).dump(2) + "\n";
  return docs.front().dump(2) + "\n";
}

int cmd_generate(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "dot") throw UsageError("--format must be json or dot");
  auto jobs = jobs_for(cfg);
  auto docs = run_ordered(jobs, [&](const std::string& c, int g) {
    auto fib = build(c, g);
    if (cfg.format == "dot") return lf::to_dot(fib.fiber, c + "_g" + std::to_string(g));
    json j = lf::to_json(fib);
    stamp(j, cfg);
    return j.dump(2) + "\n";
  });
  if (cfg.format == "json" && !wants_directory(cfg.out) && docs.size() > 1) {
    std::vector<json> parsed;
    for (auto& d : docs) parsed.push_back(json::parse(d));
    write_text(cfg.out, json(parsed).dump(2) + "\n");
    return 0;
  }
  emit(cfg, jobs, docs, cfg.format == "dot" ? ".dot" : ".json");
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  auto jobs = jobs_for(cfg);
  auto certs = run_ordered(jobs, [](const std::string& c, int g) { return lf::certify(build(c, g)); });
  std::vector<json> docs;
  int failed = 0;
  for (const auto& c : certs) {
    json j = lf::to_json(c);
    stamp(j, cfg);
    docs.push_back(j);
    if (cfg.verbose)
      std::cerr << c.construction << " g=" << c.genus << ": " << (c.all_pass() ? "pass" : "FAIL")
                << ", boundary H1 " << c.boundary_h1.to_string() << "\n";
    if (!c.all_pass()) {
      ++failed;
      for (const auto& name : c.failures())
        std::cerr << c.construction << " g=" << c.genus << ": check failed: " << name << "\n";
    }
  }
  if (wants_directory(cfg.out)) {
    std::vector<std::string> texts;
    for (auto& d : docs) texts.push_back(d.dump(2) + "\n");
    emit(cfg, jobs, texts, ".cert.json");
  } else {
    write_text(cfg.out, dump_documents(docs, false));
  }
  return failed ? 1 : 0;
}

int cmd_compare(const RunConfig& cfg) {
  auto gs = parse_genus(cfg.genus, cfg.max_genus);
  std::string other_c;
  int other_g = -1;
  if (!cfg.against.empty()) {
    auto colon = cfg.against.find(':');
    if (colon == std::string::npos) throw UsageError("--against expects construction:genus");
    other_c = cfg.against.substr(0, colon);
    try {
      other_g = std::stoi(cfg.against.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("--against expects construction:genus");
    }
    if (other_g < 0 || other_g > cfg.max_genus) throw UsageError("--against genus out of range");
    constructions(other_c);
  }
  std::vector<std::pair<std::string, int>> jobs;
  for (int g : gs) jobs.push_back({"johns", g});
  auto docs = run_ordered(jobs, [&](const std::string&, int g) {
    auto a = lf::johns_fibration(g);
    auto b = other_c.empty() ? lf::ishikawa_fibration(g) : build(other_c, other_g);
    auto r = lf::find_isomorphism(a, b);
    json j = lf::iso_certificate(g, a, b, r);
    stamp(j, cfg);
    return j;
  });
  int missing = 0;
  for (const auto& d : docs) {
    if (!d["found"].get<bool>()) ++missing;
    if (cfg.verbose) std::cerr << "g=" << d["genus"] << ": " << (d["found"].get<bool>() ? "found" : "not found") << "\n";
  }
  write_text(cfg.out, dump_documents(docs, false));
  return missing ? 1 : 0;
}

lf::Divide read_divide(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return lf::divide_from_json(json::parse(text));
  return lf::parse_divide_text(text);
}

int cmd_export(const RunConfig& cfg) {
  if (cfg.what == "divide") {
    lf::Divide d = cfg.input.empty() ? lf::standard_divide(parse_genus(cfg.genus, cfg.max_genus).front()) : read_divide(cfg.input);
    auto report = lf::check_admissible(d);
    if (cfg.format == "text") {
      write_text(cfg.out, lf::divide_to_text(d));
      return report.admissible() ? 0 : 1;
    }
    if (cfg.format == "dot") {
      write_text(cfg.out, lf::to_dot(d.graph, "divide"));
      return report.admissible() ? 0 : 1;
    }
    json j = lf::to_json(d);
    j["admissible"] = report.admissible();
    j["problems"] = report.problems;
    if (report.admissible()) {
      auto col = lf::checkerboard_coloring(d);
      auto m = lf::morse_data(d, col);
      j["coloring"] = col.black;
      j["morse_data"] = {m.index0, m.index1, m.index2};
    }
    stamp(j, cfg);
    write_text(cfg.out, j.dump(2) + "\n");
    return report.admissible() ? 0 : 1;
  }
  if (cfg.what == "pattern") {
    auto g = parse_genus(cfg.genus, cfg.max_genus).front();
    auto sel = constructions(cfg.construction);
    json j = lf::to_json(sel.front() == "johns" && sel.size() == 1 ? lf::johns_pattern(g)
                                                                  : lf::extract_plumbing_pattern(build(sel.back(), g)));
    stamp(j, cfg);
    write_text(cfg.out, j.dump(2) + "\n");
    return 0;
  }
  if (cfg.what == "fiber") {
    lf::LefschetzFibration fib;
    if (!cfg.input.empty()) {
      std::ifstream f(cfg.input);
      if (!f) throw UsageError("cannot read " + cfg.input);
      fib = lf::fibration_from_json(json::parse(f));
    } else {
      auto sel = constructions(cfg.construction);
      if (sel.size() != 1) throw UsageError("export fiber needs a single --construction");
      fib = build(sel.front(), sel.front() == "sphere" ? 0 : parse_genus(cfg.genus, cfg.max_genus).front());
    }
    if (cfg.format == "dot") {
      write_text(cfg.out, lf::to_dot(fib.fiber, fib.construction));
    } else {
      json j = lf::to_json(fib.fiber, fib.cycles);
      stamp(j, cfg);
      write_text(cfg.out, j.dump(2) + "\n");
    }
    return 0;
  }
  throw UsageError("export target must be fiber, divide or pattern");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-one Lefschetz fibrations on disk cotangent bundles"};
  app.require_subcommand(1);
  RunConfig cfg;
  // LF_FORGE_SEED is reserved; the core is deterministic and ignores it.

  auto common = [&](CLI::App* sub) {
    sub->add_option("--genus", cfg.genus, "genus N or range A..B");
    sub->add_option("--out", cfg.out, "output file, or directory ending in / for one file per genus");
    sub->add_flag("--stamp", cfg.stamp, "add a generation timestamp");
    sub->add_flag("-v,--verbose", cfg.verbose, "progress lines on stderr");
    sub->add_option("--max-genus", cfg.max_genus, "largest genus accepted")->check(CLI::NonNegativeNumber);
  };

  auto* gen = app.add_subcommand("generate", "write fibration documents");
  common(gen);
  gen->add_option("construction,--construction", cfg.construction, "johns, ishikawa, sphere or both");
  gen->add_option("--format", cfg.format, "json or dot");

  auto* ver = app.add_subcommand("verify", "check invariants and print certificates");
  common(ver);
  ver->add_option("construction,--construction", cfg.construction, "johns, ishikawa, sphere or both");

  auto* cmp = app.add_subcommand("compare", "search for an isomorphism between the two constructions");
  common(cmp);
  cmp->add_option("--against", cfg.against, "compare Johns' fibration with construction:genus instead");

  auto* exp = app.add_subcommand("export", "export a fiber, divide or plumbing pattern");
  common(exp);
  exp->add_option("what", cfg.what, "fiber, divide or pattern");
  exp->add_option("--construction", cfg.construction, "johns, ishikawa or sphere");
  exp->add_option("--format", cfg.format, "json, dot, or text (divides)");
  exp->add_option("--in", cfg.input, "read a divide (text or JSON) or fibration JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*gen) return cmd_generate(cfg);
    if (*ver) return cmd_verify(cfg);
    if (*cmp) return cmd_compare(cfg);
    if (*exp) return cmd_export(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
