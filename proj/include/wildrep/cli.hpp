#pragma once

// Commands behind the `wildrep` executable. Each returns a process exit
// code; reports and diagnostics are JSON documents.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wildrep/classifier.hpp"
#include "wildrep/errors.hpp"
#include "wildrep/io.hpp"
#include "wildrep/selftest.hpp"

namespace wildrep::cli {

/// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,  // also usage errors and unreadable files
  kOutOfScope = 3,  // abelian inertia
  kNotPotentiallyGood = 4,
  kInsufficientPrecision = 5,
  kSelftestFailed = 6,
  kSingular = 7,
  kInvalidInput = 8,
};

inline int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::AbelianInertia: return kOutOfScope;
    case ErrorKind::NotPotentiallyGood: return kNotPotentiallyGood;
    case ErrorKind::InsufficientPrecision: return kInsufficientPrecision;
    case ErrorKind::Parse: return kParse;
    case ErrorKind::Singular: return kSingular;
    case ErrorKind::Precondition: return kInvalidInput;
    default: return kInternal;
  }
}

struct RunConfig {
  std::string field_path;  // may be empty when the curve names its field
  std::string curve_path;
  std::optional<int> precision;
  std::optional<int> max_precision;
  bool dual = false;
  std::string out_path;  // empty: stdout
  std::string manifest_path;
  unsigned jobs = 1;
};

struct Outcome {
  int code = kOk;
  io::json record;
};

/// Classifies one (field, curve) pair given as JSON, escalating precision
/// on demand. `base` resolves relative paths.
inline Outcome classify_one(const io::json& field, const io::json& curve, const std::filesystem::path& base,
                            std::optional<int> precision, std::optional<int> max_precision, bool dual,
                            const std::string& id) {
  try {
    const LocalField probe = io::load_field(field, base, precision);
    const int start = probe.precision();
    const int cap = max_precision ? *max_precision : default_max_precision(start);
    require(cap >= start, ErrorKind::Parse, "max precision is below the starting precision");
    return with_precision_escalation(start, cap, [&](int p) {
      const LocalField k = io::load_field(field, base, p);
      const ShortWeierstrass<LocalElement> E = io::parse_curve(curve, k);
      ClassificationInput in{k, E, {dual, id}};
      const GaloisRepReport r = classify(in);
      return Outcome{kOk, io::report(r, k, E)};
    });
  } catch (const Error& e) {
    const int c = exit_code(e.kind());
    return {c, io::diagnostic(id, to_string(e.kind()), e.what(), c)};
  } catch (const std::exception& e) {
    return {kInternal, io::diagnostic(id, "internal", e.what(), kInternal)};
  }
}

inline void emit(const io::json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  require(static_cast<bool>(f), ErrorKind::Parse, "cannot write " + out_path);
  f << text;
}

inline int emit_or_fail(const io::json& doc, const std::string& out_path, std::ostream& out, std::ostream& err,
                        int code) {
  try {
    emit(doc, out_path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  return code;
}

inline int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    const io::json curve = io::read_json_file(cfg.curve_path);
    const std::filesystem::path curve_dir = std::filesystem::path(cfg.curve_path).parent_path();
    io::json field;
    std::filesystem::path base;
    if (!cfg.field_path.empty()) {
      field = io::read_json_file(cfg.field_path);
      base = std::filesystem::path(cfg.field_path).parent_path();
    } else {
      require(curve.is_object() && curve.contains("field"), ErrorKind::Parse,
              "no --field given and the curve descriptor names no field");
      field = curve["field"];
      base = curve_dir;
    }
    o = classify_one(field, curve, base, cfg.precision, cfg.max_precision, cfg.dual,
                     std::filesystem::path(cfg.curve_path).stem().string());
  } catch (const Error& e) {
    const int c = exit_code(e.kind());
    o = {c, io::diagnostic("", to_string(e.kind()), e.what(), c)};
  }
  if (o.code != kOk) err << "error: " << o.record["error"]["message"].get<std::string>() << "\n";
  return emit_or_fail(o.record, cfg.out_path, out, err, o.code);
}

/// Manifest: {"items": [{"id": .., "field": path|object, "curve": path|object,
/// "precision": optional, "dual": optional}, ...]}. Output is a JSON array in
/// manifest order. Exit code: 0 if every item succeeded, otherwise the code
/// of the first failing item.
inline int cmd_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  io::json manifest;
  try {
    manifest = io::read_json_file(cfg.manifest_path);
    require(manifest.is_object() && manifest.contains("items") && manifest["items"].is_array(), ErrorKind::Parse,
            "manifest needs an 'items' list");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return emit_or_fail(io::diagnostic("", to_string(e.kind()), e.what(), exit_code(e.kind())), cfg.out_path, out,
                        err, exit_code(e.kind()));
  }
  const std::filesystem::path base = std::filesystem::path(cfg.manifest_path).parent_path();
  const auto& items = manifest["items"];
  auto run = [&](std::size_t i) -> Outcome {
    const io::json& it = items[i];
    const std::string id =
        it.contains("id") && it["id"].is_string() ? it["id"].get<std::string>() : "item-" + std::to_string(i + 1);
    try {
      require(it.is_object() && it.contains("curve"), ErrorKind::Parse, "item " + id + " needs a 'curve'");
      io::json curve = it["curve"];
      std::filesystem::path curve_base = base;
      if (curve.is_string()) {
        const auto path = io::resolve(base, curve.get<std::string>());
        curve = io::read_json_file(path);
        curve_base = path.parent_path();
      }
      io::json field;
      std::filesystem::path field_base = base;
      if (it.contains("field")) {
        field = it["field"];
      } else {
        require(curve.contains("field"), ErrorKind::Parse, "item " + id + " names no field");
        field = curve["field"];
        field_base = curve_base;
      }
      std::optional<int> prec = cfg.precision;
      if (!prec && it.contains("precision")) prec = it["precision"].get<int>();
      const bool dual = cfg.dual || (it.contains("dual") && it["dual"].get<bool>());
      return classify_one(field, curve, field_base, prec, cfg.max_precision, dual, id);
    } catch (const Error& e) {
      const int c = exit_code(e.kind());
      return {c, io::diagnostic(id, to_string(e.kind()), e.what(), c)};
    } catch (const std::exception& e) {
      return {kParse, io::diagnostic(id, "parse_error", e.what(), kParse)};
    }
  };
  std::vector<Outcome> results(items.size());
  const unsigned jobs = std::max(1u, cfg.jobs);
  for (std::size_t start = 0; start < items.size(); start += jobs) {
    std::vector<std::future<Outcome>> fut;
    for (std::size_t i = start; i < std::min(items.size(), start + jobs); ++i)
      fut.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run, i));
    for (std::size_t i = 0; i < fut.size(); ++i) results[start + i] = fut[i].get();
  }
  io::json doc = io::json::array();
  int code = kOk;
  for (const auto& r : results) {
    doc.push_back(r.record);
    if (code == kOk && r.code != kOk) code = r.code;
  }
  return emit_or_fail(doc, cfg.out_path, out, err, code);
}

struct SelftestConfig {
  int precision = 64;
  long trials = 1000;
  bool inject_fault = false;
};

inline int cmd_selftest(const SelftestConfig& cfg, std::ostream& out) {
  checks::Options o;
  o.precision = cfg.precision;
  o.cube_trials = cfg.trials;
  o.inject_fault = cfg.inject_fault;
  bool all = true;
  for (const auto& r : checks::run_all(o)) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  out << (all ? "selftest: all checks passed" : "selftest: FAILED") << "\n";
  return all ? kOk : kSelftestFailed;
}

}  // namespace wildrep::cli
