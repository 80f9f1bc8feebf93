#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sweeps.hpp"

namespace asympoly::cli {

using nlohmann::json;

enum exit_code { ok = 0, verification_failed = 1, usage = 2 };

// --- rendering ------------------------------------------------------------------------

inline std::string cells_text(const std::vector<Cell>& cells) {
  std::string out;
  for (const auto& c : cells) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
  }
  return out;
}

// Rows separated by '/', entries by ','.
inline std::string rows_text(const std::vector<std::vector<int>>& rows, std::size_t skip = 0) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = skip; c < rows[r].size(); ++c) {
      if (c > skip) out += ',';
      out += std::to_string(rows[r][c]);
    }
  }
  return out;
}

inline json terms_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"coefficient", c.str()}, {"exponent", e.parts()}});
  return terms;
}

inline json terms_json(const BasisExpansion& e) {
  json terms = json::array();
  for (const auto& [i, c] : e.terms) terms.push_back({{"index", to_string(i)}, {"coefficient", c.str()}});
  return terms;
}

inline json sweep_json(const SweepReport& r) {
  return {{"name", r.name}, {"checked", r.checked}, {"status", r.ok() ? "OK" : "MISMATCH"}, {"failures", r.failures}};
}

// --- verbs ----------------------------------------------------------------------------------

struct Options {
  bool structured = false;
  // basis / expand / multiply
  std::string id, index, source, target, method = "default", a, b, poly_file;
  std::optional<std::size_t> n;
  bool check = false;
  // enumerate
  std::string object, perm, shape;
  // verify / conjecture
  std::string suite = "all", name;
  std::optional<int> max_entry;
  std::optional<std::size_t> max_len;
};

struct Output {
  std::string text;
  json doc;
  int status = ok;
};

inline Output basis_verb(const Options& o) {
  auto id = parse_basis_id(o.id);
  auto idx = parse_index(id, o.index);
  std::size_t n = o.n.value_or(default_n(idx));
  auto f = basis_polynomial(id, idx, n, o.method);
  return {to_text(f),
          {{"verb", "basis"}, {"basis", basis_name(id)}, {"index", to_string(idx)}, {"n", n}, {"terms", terms_json(f)}}};
}

inline Output expand_verb(const Options& o) {
  auto target = parse_basis_id(o.target);
  if (!o.poly_file.empty()) {
    std::ifstream in(o.poly_file);
    if (!in) throw error(errc::invalid_argument, "cannot read " + o.poly_file);
    std::stringstream ss;
    ss << in.rdbuf();
    if (!o.n) throw error(errc::invalid_argument, "--n is required with --poly");
    auto e = expand_via_solver(from_text(ss.str(), *o.n), target, *o.n);
    return {to_text(e), {{"verb", "expand"}, {"basis", basis_name(target)}, {"n", *o.n}, {"terms", terms_json(e)}}};
  }
  auto source = parse_basis_id(o.source);
  auto idx = parse_index(source, o.index);
  std::size_t n = o.n.value_or(default_n(idx));
  json doc{{"verb", "expand"}, {"source", basis_name(source)}, {"index", to_string(idx)},
           {"basis", basis_name(target)}, {"n", n}};
  if (has_rule(source, target)) {
    auto c = verify_expansion(source, idx, target, n);
    doc["terms"] = terms_json(c.combinatorial);
    doc["status"] = c.agrees() ? "OK" : "MISMATCH";
    return {to_text(c), doc, c.agrees() ? ok : verification_failed};
  }
  auto e = expand_via_solver(cached_basis_polynomial(source, idx, n), target, n);
  doc["terms"] = terms_json(e);
  return {to_text(e), doc};
}

inline std::optional<ProductRule> rule_for(BasisId basis) {
  switch (basis) {
    case BasisId::F: return ProductRule::shuffle_F;
    case BasisId::M: return ProductRule::oshuffle_M;
    case BasisId::fslide: return ProductRule::slide_fslide;
    case BasisId::mslide: return ProductRule::oslide_mslide;
    case BasisId::s: return ProductRule::lr_s;
    default: return std::nullopt;
  }
}

inline Output multiply_verb(const Options& o) {
  auto basis = parse_basis_id(o.id);
  auto a = parse_index(basis, o.a);
  auto b = parse_index(basis, o.b);
  std::size_t n = o.n.value_or(default_product_n(basis, a, b));
  auto e = structure_constants(basis, a, b, n);
  Output out{to_text(e),
             {{"verb", "multiply"}, {"basis", basis_name(basis)}, {"a", to_string(a)}, {"b", to_string(b)}, {"n", n},
              {"terms", terms_json(e)}}};
  if (o.check) {
    auto rule = rule_for(basis);
    if (!rule) throw error(errc::unsupported_pair, "no product rule for basis " + std::string(basis_name(basis)));
    bool agree = combinatorial_product(*rule, a, b, n) == e;
    out.text += status_line(agree ? 0 : (combinatorial_product(*rule, a, b, n).terms - e.terms).size());
    out.doc["status"] = agree ? "OK" : "MISMATCH";
    out.status = agree ? ok : verification_failed;
  }
  return out;
}

// Each object is one line: weight, a tab, then the object.
inline Output enumerate_verb(const Options& o) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto weak = [&] { return parse_weak_composition(o.index); };
  std::string obj = o.object;
  if (obj == "pipedreams") obj = "pipe-dreams";
  if (obj == "qy-pipedreams") obj = "qy-pipe-dreams";
  if (obj == "pipe-dreams" || obj == "qy-pipe-dreams") {
    auto p = parse_permutation(o.perm);
    std::size_t n = o.n.value_or(p.trimmed().size());
    for (const auto& d : enumerate_pipe_dreams(p))
      if (obj == "pipe-dreams" || is_quasi_yamanouchi(d)) rows.emplace_back(to_string(d.weight(n)), cells_text(d.crosses()));
  } else if (obj == "kohnert") {
    BoxDiagram start;
    std::size_t n;
    if (!o.perm.empty()) {
      auto p = parse_permutation(o.perm);
      start = rothe_box_diagram(p);
      n = o.n.value_or(p.trimmed().size());
    } else {
      auto a = weak();
      start = composition_diagram(a);
      n = o.n.value_or(a.size());
    }
    for (const auto& d : kohnert_closure(start)) rows.emplace_back(to_string(d.weight(n)), cells_text(d.boxes()));
  } else if (obj == "skylines") {
    auto a = weak();
    std::size_t n = o.n.value_or(a.size());
    for (const auto& t : enumerate_key_skylines(detail::fit_weak(a, n), n))
      rows.emplace_back(to_string(t.weight(n)), rows_text(t.rows()));
  } else if (obj == "ssyt") {
    auto shape = parse_partition(o.shape);
    std::size_t n = o.n.value_or(std::max<std::size_t>(1, shape.size()));
    for (const auto& t : enumerate_ssyt(shape, static_cast<int>(n)))
      rows.emplace_back(to_string(t.weight(n)), rows_text(t.rows()));
  } else if (obj == "composition-tableaux" || obj == "qy-composition-tableaux") {
    auto a = weak();
    std::size_t n = o.n.value_or(a.size());
    for (const auto& t : enumerate_composition_tableaux(detail::fit_weak(a, n), n))
      if (obj == "composition-tableaux" || is_quasi_yamanouchi(t))
        rows.emplace_back(to_string(t.weight(n)), rows_text(t.rows()));
  } else if (obj == "reduced-words") {
    for (const auto& w : reduced_words(parse_permutation(o.perm))) rows.emplace_back(to_string(w), "");
  } else if (obj == "compatible") {
    auto alpha = parse_strong_composition(o.index);
    for (const auto& b : enumerate_compatible(alpha)) rows.emplace_back(to_string(b), "");
  } else if (obj == "lswap" || obj == "qlswap") {
    auto a = weak();
    for (const auto& b : obj == "lswap" ? lswap_closure(a) : qlswap(a)) rows.emplace_back(to_string(b), "");
  } else {
    throw error(errc::invalid_argument, "unknown object " + obj);
  }
  std::sort(rows.begin(), rows.end());
  Output out;
  out.doc = {{"verb", "enumerate"}, {"object", obj}, {"count", rows.size()}, {"items", json::array()}};
  for (const auto& [w, s] : rows) {
    out.text += s.empty() ? w + "\n" : w + "\t" + s + "\n";
    out.doc["items"].push_back(s.empty() ? json{{"value", w}} : json{{"weight", w}, {"object", s}});
  }
  return out;
}

inline Output verify_verb(const Options& o) {
  SweepBounds b;
  if (o.max_entry) b.max_entry = *o.max_entry;
  if (o.max_len) b.max_len = *o.max_len;
  auto reports = run_suite(o.suite, b);
  Output out;
  out.doc = {{"verb", "verify"}, {"suite", o.suite}, {"reports", json::array()}};
  std::size_t bad = 0;
  for (const auto& r : reports) {
    out.text += to_text(r);
    out.doc["reports"].push_back(sweep_json(r));
    if (!r.ok()) ++bad;
  }
  out.text += status_line(bad);
  out.doc["status"] = bad ? "MISMATCH" : "OK";
  out.status = bad ? verification_failed : ok;
  return out;
}

inline Output conjecture_verb(const Options& o) {
  if (o.name != "reiner-shimozono") throw error(errc::invalid_argument, "unknown conjecture " + o.name);
  auto r = reiner_shimozono(o.max_entry.value_or(2), o.max_len.value_or(3));
  Output out{to_text(r), {{"verb", "conjecture"}, {"name", o.name}, {"pairs", r.pairs},
                          {"max_coefficient", r.max_coefficient.str()}, {"negatives", json::array()}}};
  for (const auto& [a, b, c, k] : r.negatives)
    out.doc["negatives"].push_back({{"a", to_string(a)}, {"b", to_string(b)}, {"index", to_string(c)}, {"coefficient", k.str()}});
  out.doc["status"] = r.ok() ? "OK" : "MISMATCH";
  out.status = r.ok() ? ok : verification_failed;
  return out;
}

// --- entry point --------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial bases of the asymmetric, quasisymmetric and symmetric worlds", "asympoly"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format = "text";
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

  auto* basis = app.add_subcommand("basis", "print a basis polynomial");
  basis->add_option("--id", o.id, "basis name")->required();
  basis->add_option("--index", o.index, "index, e.g. (0,2,1) or 15324")->required();
  basis->add_option("--n", o.n, "number of variables");
  basis->add_option("--method", o.method, "alternative construction");

  auto* expand = app.add_subcommand("expand", "expand a basis element or a polynomial in another basis");
  auto* src = expand->add_option("--source", o.source, "source basis");
  expand->add_option("--index", o.index, "source index")->needs(src);
  expand->add_option("--poly", o.poly_file, "polynomial text file")->excludes(src);
  expand->add_option("--target", o.target, "target basis")->required();
  expand->add_option("--n", o.n, "number of variables");

  auto* multiply = app.add_subcommand("multiply", "structure constants of a product");
  multiply->add_option("--basis", o.id, "basis name")->required();
  multiply->add_option("--a", o.a, "first index")->required();
  multiply->add_option("--b", o.b, "second index")->required();
  multiply->add_option("--n", o.n, "number of variables");
  multiply->add_flag("--check", o.check, "compare with the combinatorial product rule");

  auto* enumerate = app.add_subcommand("enumerate", "list combinatorial objects with weights");
  enumerate->add_option("--object", o.object,
                        "pipe-dreams, qy-pipe-dreams, kohnert, skylines, ssyt, composition-tableaux, "
                        "qy-composition-tableaux, reduced-words, compatible, lswap, qlswap")
      ->required();
  enumerate->add_option("--perm", o.perm, "permutation");
  enumerate->add_option("--index", o.index, "composition");
  enumerate->add_option("--shape", o.shape, "partition");
  enumerate->add_option("--n", o.n, "number of variables");

  auto* verify = app.add_subcommand("verify", "run verification sweeps");
  verify->add_option("--suite", o.suite, "all or one of the suite names");
  verify->add_option("--max-entry", o.max_entry, "largest composition entry");
  verify->add_option("--max-len", o.max_len, "composition length and ambient size");

  auto* conjecture = app.add_subcommand("conjecture", "run a conjecture harness");
  conjecture->add_option("--name", o.name, "reiner-shimozono")->required();
  conjecture->add_option("--max-entry", o.max_entry, "largest composition entry");
  conjecture->add_option("--max-len", o.max_len, "composition length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    err << "asympoly: " << msg.substr(0, msg.find('\n')) << "\n";
    return usage;
  }
  o.structured = o.structured || format == "structured";

  try {
    Output res;
    if (*basis) res = basis_verb(o);
    else if (*expand) {
      if (o.poly_file.empty() && (o.source.empty() || o.index.empty()))
        throw error(errc::invalid_argument, "expand needs --source and --index, or --poly");
      res = expand_verb(o);
    } else if (*multiply) res = multiply_verb(o);
    else if (*enumerate) res = enumerate_verb(o);
    else if (*verify) res = verify_verb(o);
    else res = conjecture_verb(o);
    if (o.structured)
      out << res.doc.dump(2) << "\n";
    else
      out << res.text;
    return res.status;
  } catch (const error& e) {
    err << "asympoly: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace asympoly::cli
