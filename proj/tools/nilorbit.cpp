// nilorbit: classify GL2-orbits of nilpotent 2x2 matrix tuples over small
// finite fields, count them in closed form with brute-force cross-checks,
// and build/verify separating invariant sets.
//
// Exit codes: 0 verified/success, 1 property violated (witness printed),
// 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nilorbit/canonical.hpp"
#include "nilorbit/counting.hpp"
#include "nilorbit/indicator.hpp"
#include "nilorbit/invariants.hpp"
#include "nilorbit/json_io.hpp"

using namespace nilorbit;
using nlohmann::json;

namespace {

struct Output {
  std::string format = "text";
  std::string path;  // empty = stdout

  void emit(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << payload;
  }
};

std::string join_codes(const Field& F, const std::vector<Fe>& xs, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << F.encode(xs[i]);
  }
  return os.str();
}

std::string mat_codes(const Field& F, const Mat2& A, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < 4; ++i) {
    if (i) os << sep;
    os << F.encode(A.a[i]);
  }
  return os.str();
}

std::string form_line(const Field& F, const CanonicalForm& c) {
  std::ostringstream os;
  switch (c.tag) {
    case FormTag::zero:
      os << "zero";
      break;
    case FormTag::line:
      os << "line alphas=[" << join_codes(F, c.alphas, ",") << "]";
      break;
    case FormTag::split: {
      os << "split r=" << c.r() << " alphas=[" << join_codes(F, c.alphas, ",")
         << "] pivot=" << F.encode(*c.pivot) << " tail=[";
      for (size_t i = 0; i < c.tail.size(); ++i) {
        if (i) os << "|";
        os << mat_codes(F, c.tail[i], ",");
      }
      os << "]";
      break;
    }
  }
  return os.str();
}

json witness_pair_json(const Field& F, const NilTuple& A, const NilTuple& B,
                       int rep_i, int rep_j) {
  json w;
  w["kind"] = "unseparated-pair";
  w["rep_indices"] = {rep_i, rep_j};
  w["tuples"] = {tuple_to_json(F, A), tuple_to_json(F, B)};
  return w;
}

int cmd_orbits(const Field& F, int m, const Output& out) {
  auto reps = orbit_representatives(F, m);
  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["field"] = F.spec();
    j["m"] = m;
    j["kappa"] = reps.size();
    json arr = json::array();
    for (const auto& c : reps) arr.push_back(form_to_json(F, c));
    j["orbits"] = std::move(arr);
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "index,tag,alphas,pivot,tail\n";
    for (size_t i = 0; i < reps.size(); ++i) {
      const auto& c = reps[i];
      os << i << "," << form_tag_name(c.tag) << "," << join_codes(F, c.alphas, " ") << ",";
      if (c.pivot) os << F.encode(*c.pivot);
      os << ",";
      for (size_t t = 0; t < c.tail.size(); ++t) {
        if (t) os << "|";
        os << mat_codes(F, c.tail[t], " ");
      }
      os << "\n";
    }
  } else {
    os << "# orbits field=" << F.spec() << " m=" << m << " kappa=" << reps.size() << "\n";
    for (size_t i = 0; i < reps.size(); ++i)
      os << i << " " << form_line(F, reps[i]) << "\n";
  }
  out.emit(os.str());
  return 0;
}

int cmd_count(const Field& F, int n, int m, const std::string& check,
              const std::string& method_name, uint64_t budget, const Output& out) {
  std::optional<BigInt> formula;
  std::optional<BigInt> brute;
  std::optional<BigInt> reps;
  std::string algorithm;

  if (n == 2) formula = kappa(F.q(), m);

  const bool want_brute = (n == 3) || check == "brute-force" || check == "both";
  const bool want_reps = (n == 2) && (check == "representatives" || check == "both");

  if (want_brute) {
    OrbitCensus c = [&] {
      if (method_name == "auto") return brute_force_orbit_count(F, n, m, budget);
      OrbitMethod mm = OrbitMethod::canonical_hash;
      if (method_name == "union-find") mm = OrbitMethod::unionfind_generators;
      else if (method_name == "full-group") mm = OrbitMethod::full_group;
      else if (method_name != "canonical-hash")
        throw CLI::ValidationError("--method", "unknown method " + method_name);
      return brute_force_orbit_count(F, n, m, mm, budget);
    }();
    brute = c.count;
    algorithm = c.algorithm;
  }
  if (want_reps) reps = BigInt(static_cast<long>(orbit_representatives(F, m).size()));

  bool match = true;
  const BigInt& ref = formula ? *formula : *brute;
  if (formula && brute && *formula != *brute) match = false;
  if (formula && reps && *formula != *reps) match = false;
  if (brute && reps && *brute != *reps) match = false;

  long gam = n == 2 ? gamma_size(F.q(), m) : ceil_log_q(F.q(), ref);

  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["field"] = F.spec();
    j["q"] = F.q();
    j["n"] = n;
    j["m"] = m;
    j["kappa_formula"] = formula ? json(formula->str()) : json(nullptr);
    j["kappa_bruteforce"] = brute ? json(brute->str()) : json(nullptr);
    if (reps) j["kappa_representatives"] = reps->str();
    j["gamma"] = gam;
    j["match"] = match;
    if (!algorithm.empty()) j["algorithm"] = algorithm;
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "q,n,m,kappa_formula,kappa_bruteforce,gamma\n";
    os << F.q() << "," << n << "," << m << ",";
    if (formula) os << formula->str();
    os << ",";
    if (brute) os << brute->str();
    os << "," << gam << "\n";
  } else {
    os << "q=" << F.q() << " n=" << n << " m=" << m;
    if (formula) os << " kappa=" << formula->str();
    if (brute) os << " kappa_bruteforce=" << brute->str();
    if (reps) os << " kappa_representatives=" << reps->str();
    os << " gamma=" << gam;
    if (want_brute || want_reps) os << " match=" << (match ? "true" : "false");
    os << "\n";
  }
  out.emit(os.str());
  return match ? 0 : 1;
}

int cmd_verify_separating(const Field& F, int m, const std::string& set_name,
                          const std::string& witness_file, const Output& out) {
  InvariantSet set = build_set(set_kind_from_string(set_name), F, m);

  if (!witness_file.empty()) {
    std::ifstream is(witness_file);
    if (!is) throw std::runtime_error("cannot open witness file: " + witness_file);
    json j = json::parse(is);
    const json* tuples = nullptr;
    if (j.contains("tuples")) tuples = &j["tuples"];
    else if (j.contains("witnesses") && !j["witnesses"].empty())
      tuples = &j["witnesses"][0]["tuples"];
    if (!tuples || tuples->size() != 2)
      throw std::invalid_argument("witness file carries no tuple pair");
    NilTuple A = tuple_from_json(F, (*tuples)[0]);
    NilTuple B = tuple_from_json(F, (*tuples)[1]);
    bool unseparated = separating_indices(F, set, A, B).empty();
    bool dissimilar = !are_similar(F, A, B);
    bool confirmed = unseparated && dissimilar;
    std::ostringstream os;
    if (out.format == "json") {
      json r;
      r["set"] = set_name;
      r["field"] = F.spec();
      r["q"] = F.q();
      r["m"] = m;
      r["witness_confirmed"] = confirmed;
      r["unseparated"] = unseparated;
      r["dissimilar"] = dissimilar;
      os << r.dump(2) << "\n";
    } else {
      os << "set=" << set_name << " q=" << F.q() << " m=" << m
         << " witness_confirmed=" << (confirmed ? "true" : "false") << "\n";
    }
    out.emit(os.str());
    return confirmed ? 0 : 1;
  }

  SeparationCheck sep = check_separating(set, F, m);
  std::optional<MinimalityCheck> min;
  if (sep.separating) min = check_minimality(set, F, m);

  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["set"] = set_name;
    j["field"] = F.spec();
    j["q"] = F.q();
    j["m"] = m;
    j["separating"] = sep.separating;
    j["minimal"] = min ? json(min->minimal) : json(nullptr);
    json ws = json::array();
    if (!sep.separating) {
      auto [i, jdx] = *sep.witness;
      NilTuple A = materialize(F, sep.reps[static_cast<size_t>(i)]);
      NilTuple B = materialize(F, sep.reps[static_cast<size_t>(jdx)]);
      ws.push_back(witness_pair_json(F, A, B, i, jdx));
    }
    j["witnesses"] = std::move(ws);
    os << j.dump(2) << "\n";
  } else {
    os << "set=" << set_name << " q=" << F.q() << " m=" << m << " separating="
       << (sep.separating ? "true" : "false");
    if (min) os << " minimal=" << (min->minimal ? "true" : "false");
    os << "\n";
    if (!sep.separating) {
      auto [i, jdx] = *sep.witness;
      os << "witness: orbit " << i << " (" << form_line(F, sep.reps[static_cast<size_t>(i)])
         << ") vs orbit " << jdx << " (" << form_line(F, sep.reps[static_cast<size_t>(jdx)])
         << ") have equal values\n";
    }
  }
  out.emit(os.str());
  if (!sep.separating) return 1;
  return min->minimal ? 0 : 1;
}

int cmd_verify_minimal(const Field& F, int m, const std::string& set_name,
                       const Output& out) {
  InvariantSet set = build_set(set_kind_from_string(set_name), F, m);
  SeparationCheck sep = check_separating(set, F, m);
  MinimalityCheck min = check_minimality(set, F, m);

  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["set"] = set_name;
    j["field"] = F.spec();
    j["q"] = F.q();
    j["m"] = m;
    j["separating"] = sep.separating;
    j["minimal"] = min.minimal;
    json ws = json::array();
    for (const MinimalityEntry& e : min.entries) {
      json w;
      w["element"] = invariant_name(F, set.fns[e.fn_index]);
      if (e.found) {
        w["rep_indices"] = {e.witness.first, e.witness.second};
        NilTuple A = materialize(F, min.reps[static_cast<size_t>(e.witness.first)]);
        NilTuple B = materialize(F, min.reps[static_cast<size_t>(e.witness.second)]);
        w["tuples"] = {tuple_to_json(F, A), tuple_to_json(F, B)};
      } else {
        w["rep_indices"] = nullptr;
      }
      ws.push_back(std::move(w));
    }
    j["witnesses"] = std::move(ws);
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "element,found,rep_i,rep_j\n";
    for (const MinimalityEntry& e : min.entries) {
      os << invariant_name(F, set.fns[e.fn_index]) << "," << (e.found ? "true" : "false") << ",";
      if (e.found) os << e.witness.first << "," << e.witness.second;
      else os << ",";
      os << "\n";
    }
  } else {
    os << "set=" << set_name << " q=" << F.q() << " m=" << m << " separating="
       << (sep.separating ? "true" : "false") << " minimal=" << (min.minimal ? "true" : "false")
       << "\n";
    for (const MinimalityEntry& e : min.entries) {
      os << invariant_name(F, set.fns[e.fn_index]) << ": ";
      if (e.found)
        os << "witness orbits (" << e.witness.first << "," << e.witness.second << ")";
      else
        os << "no witness";
      os << "\n";
    }
  }
  out.emit(os.str());
  return (sep.separating && min.minimal) ? 0 : 1;
}

int cmd_build_h(const Field& F, int m, bool with_polys, uint64_t budget,
                const Output& out) {
  HSet H = build_h_set(F, m, std::nullopt, with_polys, budget);
  HVerdict v = verify_h_separating(H, F);
  const int gamma = static_cast<int>(H.tables.size());
  const long kap = static_cast<long>(H.orbits.size());

  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["field"] = F.spec();
    j["m"] = m;
    j["kappa"] = kap;
    j["gamma"] = gamma;
    j["separating"] = v.separating;
    j["lower_bound_ok"] = v.lower_bound_ok;
    json tables = json::array();
    for (const auto& row : H.tables) {
      json r = json::array();
      for (const Fe& x : row) r.push_back(F.encode(x));
      tables.push_back(std::move(r));
    }
    j["value_tables"] = std::move(tables);
    if (with_polys) {
      json polys = json::array();
      for (const ReducedPoly& p : H.polys) {
        json e = poly_to_json(p);
        e["degree"] = p.degree();
        polys.push_back(std::move(e));
      }
      j["polys"] = std::move(polys);
    }
    os << j.dump(2) << "\n";
  } else {
    os << "# h-set field=" << F.spec() << " m=" << m << " kappa=" << kap
       << " gamma=" << gamma << " separating=" << (v.separating ? "true" : "false")
       << " lower_bound_ok=" << (v.lower_bound_ok ? "true" : "false") << "\n";
    for (size_t i = 0; i < H.tables.size(); ++i) {
      os << "h" << (i + 1) << " values=[" << join_codes(F, H.tables[i], ",") << "]";
      if (with_polys) os << " degree=" << H.polys[i].degree();
      os << "\n";
    }
  }
  out.emit(os.str());
  return (v.separating && v.lower_bound_ok) ? 0 : 1;
}

int cmd_conjecture_scan(int n, int m, const std::string& fields_arg, uint64_t budget,
                        const Output& out) {
  std::vector<Field> fields;
  std::string spec;
  std::istringstream is(fields_arg);
  while (std::getline(is, spec, ',')) fields.push_back(Field::make(spec));
  if (fields.empty()) throw std::invalid_argument("no fields given");

  ScanResult res = conjecture_scan(n, m, fields, budget);

  std::ostringstream os;
  if (out.format == "json") {
    json j;
    j["n"] = n;
    j["m"] = m;
    json rows = json::array();
    for (const ScanRow& r : res.rows) rows.push_back({{"q", r.q}, {"count", r.count.str()}});
    j["rows"] = std::move(rows);
    j["note"] = res.note;
    os << j.dump(2) << "\n";
  } else if (out.format == "csv") {
    os << "q,n,m,count\n";
    for (const ScanRow& r : res.rows)
      os << r.q << "," << n << "," << m << "," << r.count.str() << "\n";
    if (!res.note.empty()) os << "# " << res.note << "\n";
  } else {
    os << "# conjecture-scan n=" << n << " m=" << m << "\n";
    for (const ScanRow& r : res.rows)
      os << "q=" << r.q << " count=" << r.count.str() << "\n";
    if (!res.note.empty()) os << "# " << res.note << "\n";
  }
  out.emit(os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact GL2-orbit classification of nilpotent 2x2 matrix tuples"};
  app.require_subcommand(1);

  std::string field_spec = "q=2";
  std::string fields_arg;
  std::string set_name = "H";
  std::string format = "text";
  std::string out_path;
  std::string check = "none";
  std::string method = "auto";
  std::string witness_file;
  int m = 1;
  int n = 2;
  bool no_polys = false;
  uint64_t budget = 1'000'000'000;

  auto add_common = [&](CLI::App* sub, bool with_field = true) {
    if (with_field) sub->add_option("--field", field_spec, "field spec: q=p, q=p^k[;poly=c0,..,ck], rational");
    sub->add_option("--format", format, "output format: text, json, csv");
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
    sub->add_option("--budget", budget, "max matrix-operation budget for exhaustive runs");
  };

  CLI::App* orbits = app.add_subcommand("orbits", "list all orbit representatives");
  orbits->add_option("--m", m, "tuple length")->required();
  add_common(orbits);

  CLI::App* count = app.add_subcommand("count", "orbit census (formula and oracles)");
  count->add_option("--m", m, "tuple length")->required();
  count->add_option("--n", n, "matrix size (2 or 3)");
  count->add_option("--check", check, "cross-check: brute-force, representatives, both");
  count->add_option("--method", method,
                    "oracle: auto, canonical-hash, union-find, full-group");
  add_common(count);

  CLI::App* vsep = app.add_subcommand("verify-separating", "check a set separates all orbits");
  vsep->add_option("--m", m, "tuple length")->required();
  vsep->add_option("--set", set_name, "invariant set: S, S2, H, H2")->required();
  vsep->add_option("--witness", witness_file, "re-check a previously emitted witness pair");
  add_common(vsep);

  CLI::App* vmin = app.add_subcommand("verify-minimal", "per-element minimality witnesses");
  vmin->add_option("--m", m, "tuple length")->required();
  vmin->add_option("--set", set_name, "invariant set: S, S2, H, H2")->required();
  add_common(vmin);

  CLI::App* bh = app.add_subcommand("build-h", "build the indicator combination set");
  bh->add_option("--m", m, "tuple length")->required();
  bh->add_flag("--no-polys", no_polys, "skip reduced-polynomial expansion");
  add_common(bh);

  CLI::App* scan = app.add_subcommand("conjecture-scan", "orbit-count census over several fields");
  scan->add_option("--m", m, "tuple length")->required();
  scan->add_option("--n", n, "matrix size (2 or 3)");
  scan->add_option("--fields", fields_arg, "comma-separated field specs")->required();
  add_common(scan, /*with_field=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (format != "text" && format != "json" && format != "csv")
      throw std::invalid_argument("unknown format: " + format);
    Output out{format, out_path};
    if (orbits->parsed()) return cmd_orbits(Field::make(field_spec), m, out);
    if (count->parsed()) {
      if (n != 2 && n != 3) throw std::invalid_argument("matrix size must be 2 or 3");
      return cmd_count(Field::make(field_spec), n, m, check, method, budget, out);
    }
    if (vsep->parsed())
      return cmd_verify_separating(Field::make(field_spec), m, set_name, witness_file, out);
    if (vmin->parsed()) return cmd_verify_minimal(Field::make(field_spec), m, set_name, out);
    if (bh->parsed()) return cmd_build_h(Field::make(field_spec), m, !no_polys, budget, out);
    if (scan->parsed()) return cmd_conjecture_scan(n, m, fields_arg, budget, out);
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
