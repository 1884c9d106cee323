// Command-line front end. Talks to the library only through kakeya.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kakeya/kakeya.h"

namespace {

enum ExitCode : int {
  kSuccess = 0,
  kFalse = 1,
  kUsage = 2,
  kBudget = 3,
  kInternal = 4,
};

/// Thrown to unwind with a specific exit code; message goes to stderr.
struct Failure {
  int code;
  std::string message;
};

int exit_code_for(kk_status s) {
  switch (s) {
    case KK_OK: return kSuccess;
    case KK_ERR_OVERFLOW:
    case KK_ERR_BUDGET_EXCEEDED: return kBudget;
    case KK_ERR_INTERNAL: return kInternal;
    default: return kUsage;
  }
}

void check(kk_status s) {
  if (s != KK_OK)
    throw Failure{exit_code_for(s),
                  std::string(kk_status_name(s)) + ": " + kk_last_error()};
}

// RAII holders for the C handles.
template <class T, void (*Destroy)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr_) Destroy(ptr_);
  }
  T** out() { return &ptr_; }
  T* get() const { return ptr_; }

 private:
  T* ptr_ = nullptr;
};

using FieldHandle = Handle<kk_field, kk_field_destroy>;
using ConstructionHandle = Handle<kk_construction, kk_construction_destroy>;
using PointSetHandle = Handle<kk_pointset, kk_pointset_destroy>;

std::string take(char* s) {
  std::string out(s ? s : "");
  kk_string_free(s);
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Failure{kUsage, "cannot open output file " + path};
  os << text;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kUsage, "not an unsigned integer: '" + item + "'"};
    }
  }
  return out;
}

const std::map<std::string, kk_construction_kind> kConstructions{
    {"radius-spherical", KK_RADIUS_SPHERICAL},
    {"center-spherical", KK_CENTER_SPHERICAL},
    {"hypersphere-union", KK_HYPERSPHERE_UNION},
    {"circular-prime", KK_CIRCULAR_PRIME},
    {"circular-square", KK_CIRCULAR_SQUARE},
    {"circular-odd-power", KK_CIRCULAR_ODD_POWER},
};

const std::map<std::string, kk_variant> kVariants{
    {"radius", KK_VARIANT_RADIUS},
    {"center", KK_VARIANT_CENTER},
};

const std::map<std::string, kk_verify_mode> kModes{
    {"witness", KK_VERIFY_WITNESS},
    {"exhaustive", KK_VERIFY_EXHAUSTIVE},
    {"both", KK_VERIFY_BOTH},
};

bool is_circular(kk_construction_kind k) {
  return k == KK_CIRCULAR_PRIME || k == KK_CIRCULAR_SQUARE ||
         k == KK_CIRCULAR_ODD_POWER;
}

struct ConstructConfig {
  std::uint64_t p = 0;
  unsigned k = 1;
  unsigned n = 2;
  std::string which;
  std::string variant = "radius";
  std::uint64_t nonsquare = UINT64_MAX;
  std::string mode = "witness";
  std::uint64_t budget = 100'000'000;
  std::string format = "json";
  std::string output;
  std::string save_set;
};

int run_construct(const ConstructConfig& cfg) {
  FieldHandle field;
  check(kk_field_create(cfg.p, cfg.k, field.out()));
  const kk_construction_kind kind = kConstructions.at(cfg.which);
  ConstructionHandle c;
  check(kk_construct(field.get(), is_circular(kind) ? 1 : cfg.n, kind,
                     kVariants.at(cfg.variant), cfg.nonsquare, c.out()));
  const kk_verify_mode mode = kModes.at(cfg.mode);
  if (mode != KK_VERIFY_WITNESS)
    check(kk_construction_verify(c.get(), mode, cfg.budget));

  std::string text;
  if (cfg.format == "csv") {
    char* row = nullptr;
    check(kk_construction_csv_row(c.get(), &row));
    text = std::string(kk_csv_header()) + "\n" + take(row) + "\n";
  } else {
    char* json = nullptr;
    check(kk_construction_json(c.get(), &json));
    text = take(json) + "\n";
  }
  if (!cfg.save_set.empty()) {
    PointSetHandle points;
    check(kk_construction_points(c.get(), points.out()));
    char* json = nullptr;
    check(kk_pointset_to_json(points.get(), &json));
    write_output(take(json) + "\n", cfg.save_set);
  }
  write_output(text, cfg.output);
  return kk_construction_valid(c.get()) ? kSuccess : kFalse;
}

struct VerifyConfig {
  std::string input;
  std::string property;
  std::uint64_t budget = 100'000'000;
  std::string output;
};

int run_verify(const VerifyConfig& cfg) {
  std::ifstream is(cfg.input, std::ios::binary);
  if (!is) throw Failure{kUsage, "cannot read set file " + cfg.input};
  std::stringstream buf;
  buf << is.rdbuf();
  PointSetHandle set;
  check(kk_pointset_from_json(buf.str().c_str(), set.out()));

  static const std::map<std::string, kk_set_property> properties{
      {"radius", KK_PROP_RADIUS_SPHERES},
      {"center", KK_PROP_CENTER_SPHERES},
      {"hypersphere", KK_PROP_HYPERSPHERES},
      {"circular-radius", KK_PROP_CIRCULAR_RADIUS},
      {"circular-center", KK_PROP_CIRCULAR_CENTER},
  };
  std::string property = cfg.property;
  if (property.empty())
    property = kk_pointset_dim(set.get()) == 1 ? "circular-radius" : "radius";
  int verdict = 0;
  char* report = nullptr;
  check(kk_verify_set(set.get(), properties.at(property), cfg.budget, &verdict,
                      &report));
  write_output(take(report) + "\n", cfg.output);
  return verdict ? kSuccess : kFalse;
}

struct CountConfig {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::string coeffs;
  std::uint64_t rhs = 0;
  std::string method = "closed";
  std::string output;
};

int run_count(const CountConfig& cfg) {
  FieldHandle field;
  check(kk_field_create(cfg.p, cfg.k, field.out()));
  const std::vector<std::uint64_t> coeffs = parse_list(cfg.coeffs);
  std::ostringstream os;
  os << "{\"q\":" << kk_field_q(field.get()) << ",\"n\":" << coeffs.size()
     << ",\"coeffs\":[";
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    os << (i ? "," : "") << coeffs[i];
  os << "],\"rhs\":" << cfg.rhs;

  std::uint64_t closed = 0, brute = 0;
  const bool want_closed = cfg.method != "bruteforce";
  const bool want_brute = cfg.method != "closed";
  if (want_closed) {
    check(kk_diagonal_count(field.get(), coeffs.data(), coeffs.size(), cfg.rhs,
                            KK_COUNT_CLOSED, &closed));
    os << ",\"closed\":" << closed;
  }
  if (want_brute) {
    check(kk_diagonal_count(field.get(), coeffs.data(), coeffs.size(), cfg.rhs,
                            KK_COUNT_BRUTEFORCE, &brute));
    os << ",\"bruteforce\":" << brute;
  }
  const bool agree = !(want_closed && want_brute) || closed == brute;
  if (want_closed && want_brute) os << ",\"agree\":" << (agree ? "true" : "false");
  os << "}\n";
  write_output(os.str(), cfg.output);
  return agree ? kSuccess : kFalse;
}

struct BoundConfig {
  std::uint64_t p = 0;
  unsigned k = 1;
  unsigned n = 2;
  std::string output;
};

int run_bound(const BoundConfig& cfg) {
  FieldHandle field;
  check(kk_field_create(cfg.p, cfg.k, field.out()));
  char* json = nullptr;
  if (cfg.n == 1)
    check(kk_circular_bounds_json(kk_field_q(field.get()), &json));
  else
    check(kk_bound_json(kk_field_q(field.get()), cfg.n, &json));
  write_output(take(json) + "\n", cfg.output);
  return kSuccess;
}

struct SearchConfig {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::string kind = "radius";
  std::string method = "exact";
  std::uint64_t limit = 0;
  std::uint64_t budget = 0;
  std::string output;
};

int run_search(const SearchConfig& cfg) {
  FieldHandle field;
  check(kk_field_create(cfg.p, cfg.k, field.out()));
  char* json = nullptr;
  check(kk_search_json(field.get(), kVariants.at(cfg.kind),
                       cfg.method == "greedy" ? KK_SEARCH_GREEDY : KK_SEARCH_EXACT,
                       cfg.limit, cfg.budget, &json));
  write_output(take(json) + "\n", cfg.output);
  return kSuccess;
}

struct ReportConfig {
  std::string which;
  std::string qs;
  std::string ns = "2,3,4";
  std::uint64_t p_max = 0;
  std::string variant = "both";
  std::string format = "csv";
  std::string output;
};

bool odd_prime(std::uint64_t v) {
  FieldHandle f;
  return kk_field_create(v, 1, f.out()) == KK_OK;
}

int run_report(const ReportConfig& cfg) {
  const kk_construction_kind kind = kConstructions.at(cfg.which);
  std::vector<std::uint64_t> qs = parse_list(cfg.qs);
  if (cfg.p_max > 0)
    for (std::uint64_t v = 3; v <= cfg.p_max; v += 2)
      if (odd_prime(v)) qs.push_back(v);
  std::vector<std::uint64_t> ns = parse_list(cfg.ns);
  if (is_circular(kind)) ns = {1};
  std::vector<kk_variant> variants{KK_VARIANT_RADIUS};
  if (is_circular(kind)) {
    if (cfg.variant == "both")
      variants = {KK_VARIANT_RADIUS, KK_VARIANT_CENTER};
    else
      variants = {kVariants.at(cfg.variant)};
  }

  // validate the whole sweep before computing anything
  for (std::uint64_t q : qs) {
    FieldHandle f;
    check(kk_field_from_order(q, f.out()));
  }

  std::string csv = std::string(kk_csv_header()) + "\n";
  std::string json = "[";
  bool first = true;
  for (std::uint64_t q : qs) {
    FieldHandle field;
    check(kk_field_from_order(q, field.out()));
    for (std::uint64_t n : ns) {
      for (kk_variant v : variants) {
        ConstructionHandle c;
        check(kk_construct(field.get(), static_cast<unsigned>(n), kind, v,
                           UINT64_MAX, c.out()));
        char* row = nullptr;
        check(kk_construction_csv_row(c.get(), &row));
        csv += take(row) + "\n";
        char* doc = nullptr;
        check(kk_construction_json(c.get(), &doc));
        json += (first ? "" : ",") + take(doc);
        first = false;
      }
    }
  }
  json += "]\n";
  write_output(cfg.format == "json" ? json : csv, cfg.output);
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical and circular Kakeya sets over finite fields"};
  app.require_subcommand(1);

  const std::vector<std::string> construction_names{
      "radius-spherical", "center-spherical", "hypersphere-union",
      "circular-prime",   "circular-square",  "circular-odd-power"};

  ConstructConfig construct;
  auto* c = app.add_subcommand("construct", "Build a Kakeya-type set and verify it");
  c->add_option("--p", construct.p, "Characteristic (odd prime)")->required();
  c->add_option("--k", construct.k, "Extension degree")->capture_default_str();
  c->add_option("--n", construct.n, "Dimension (ignored for circular sets)")
      ->capture_default_str();
  c->add_option("--which", construct.which, "Construction")
      ->required()
      ->check(CLI::IsMember(construction_names));
  c->add_option("--variant", construct.variant, "Circular variant")
      ->check(CLI::IsMember({"radius", "center"}))
      ->capture_default_str();
  c->add_option("--nonsquare", construct.nonsquare,
                "Rank of the nonsquare r for center-spherical");
  c->add_option("--mode", construct.mode, "Verification mode")
      ->check(CLI::IsMember({"witness", "exhaustive", "both"}))
      ->capture_default_str();
  c->add_option("--budget", construct.budget, "Exhaustive work budget")
      ->capture_default_str();
  c->add_option("--format", construct.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  c->add_option("--output", construct.output, "Output file (default stdout)");
  c->add_option("--save-set", construct.save_set, "Also write the set file here");

  VerifyConfig verify;
  auto* v = app.add_subcommand("verify", "Exhaustively verify a saved set file");
  v->add_option("--input", verify.input, "Set file")->required();
  v->add_option("--property", verify.property,
                "radius | center | hypersphere | circular-radius | circular-center")
      ->check(CLI::IsMember({"radius", "center", "hypersphere", "circular-radius",
                             "circular-center"}));
  v->add_option("--budget", verify.budget)->capture_default_str();
  v->add_option("--output", verify.output);

  CountConfig count;
  auto* n = app.add_subcommand("count", "Count solutions of a diagonal equation");
  n->add_option("--p", count.p)->required();
  n->add_option("--k", count.k)->capture_default_str();
  n->add_option("--coeffs", count.coeffs, "Comma-separated coefficient ranks")
      ->required();
  n->add_option("--rhs", count.rhs, "Right-hand side rank")->capture_default_str();
  n->add_option("--method", count.method)
      ->check(CLI::IsMember({"closed", "bruteforce", "both"}))
      ->capture_default_str();
  n->add_option("--output", count.output);

  BoundConfig bound;
  auto* b = app.add_subcommand("bound", "Lower bound for F_q^n (n = 1: circular)");
  b->add_option("--p", bound.p)->required();
  b->add_option("--k", bound.k)->capture_default_str();
  b->add_option("--n", bound.n)->capture_default_str();
  b->add_option("--output", bound.output);

  SearchConfig search;
  auto* s = app.add_subcommand("search", "Smallest circular Kakeya set in F_q");
  s->add_option("--p", search.p)->required();
  s->add_option("--k", search.k)->capture_default_str();
  s->add_option("--kind", search.kind)
      ->check(CLI::IsMember({"radius", "center"}))
      ->capture_default_str();
  s->add_option("--method", search.method)
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
  s->add_option("--limit", search.limit, "Largest q for the exact search");
  s->add_option("--budget", search.budget, "Node budget for the exact search");
  s->add_option("--output", search.output);

  ReportConfig report;
  auto* r = app.add_subcommand("report", "Size-versus-bound table over a sweep");
  r->add_option("--which", report.which)
      ->required()
      ->check(CLI::IsMember(construction_names));
  r->add_option("--q", report.qs, "Comma-separated field orders");
  r->add_option("--n", report.ns, "Comma-separated dimensions")->capture_default_str();
  r->add_option("--p-max", report.p_max, "Add every odd prime up to this value");
  r->add_option("--variant", report.variant)
      ->check(CLI::IsMember({"radius", "center", "both"}))
      ->capture_default_str();
  r->add_option("--format", report.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  r->add_option("--output", report.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c->parsed()) return run_construct(construct);
    if (v->parsed()) return run_verify(verify);
    if (n->parsed()) return run_count(count);
    if (b->parsed()) return run_bound(bound);
    if (s->parsed()) return run_search(search);
    if (r->parsed()) return run_report(report);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kUsage;
}
