#include "cmfock/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "cmfock/json_io.hpp"

namespace cmfock {

namespace {

using io::Json;

// Identifies the elimination-order policy; cache files embed it so a policy
// change invalidates them.
constexpr const char* kCanonPolicy = "bprime-zlex-1";

std::string fnv1a_hex(const std::string& data) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Json parse_json_arg(const std::string& arg) {
  // Inline JSON or a file path.
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) fail(ErrorCode::BadInput, "cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return Json::parse(text);
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void emit(std::ostream& out, const Json& j, const std::string& format,
          const std::string& text) {
  if (format == "text")
    out << text << "\n";
  else
    out << j.dump() << "\n";
}

std::string fock_text(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mp, c] : v.terms()) {
    if (!first) os << "\n";
    first = false;
    os << "(" << c.str() << ") " << mp.str();
  }
  return os.str();
}

// Terms rendered as bracketed symbol rows for eyeball comparison.
std::string expansion_text(const FockVector& v, const Charge& s, int m) {
  std::ostringstream os;
  int idx = 0;
  for (const auto& [mp, c] : v.terms()) {
    if (idx++) os << "\n";
    os << c.str() << "\n" << symbol_of(mp, s, m).str() << "\n";
  }
  return os.str();
}

int cmd_fock_apply(const std::string& charge_csv, const std::string& word_arg,
                   const std::string& in_arg, const std::string& format,
                   std::ostream& out) {
  Charge s = io::charge_from_string(charge_csv);
  MonomialWord word = io::word_from_json(Json::parse(word_arg));
  FockVector v = in_arg.empty() ? FockVector::vacuum(s)
                                : io::fock_from_json(parse_json_arg(in_arg));
  for (const Letter& letter : word)
    v = apply_divided_F(letter.content, letter.power, v);
  emit(out, io::fock_to_json(v), format, fock_text(v));
  return 0;
}

Json canon_value(int rank, const Charge& s, EliminationOrder order) {
  Json j;
  j["charge"] = io::charge_to_json(s);
  j["rank"] = rank;
  j["policy"] = kCanonPolicy;
  Json vectors = Json::array();
  for (const auto& [mp, g] : canonical_basis(rank, s, order)) {
    Json entry;
    entry["lambda"] = io::multipartition_to_json(mp);
    entry["vector"] = io::fock_to_json(g);
    vectors.push_back(entry);
  }
  j["vectors"] = vectors;
  return j;
}

int cmd_canon(const std::string& charge_csv, int rank,
              const std::string& cache_dir, bool perturbed,
              const std::string& format, std::ostream& out) {
  Charge s = io::charge_from_string(charge_csv, ChargeFlavor::decreasing);
  EliminationOrder order =
      perturbed ? EliminationOrder::perturbed : EliminationOrder::standard;

  Json value;
  if (!cache_dir.empty() && order == EliminationOrder::standard) {
    std::ostringstream name;
    name << "canon";
    for (int x : s.s) name << "_" << (x < 0 ? "m" + std::to_string(-x) : std::to_string(x));
    name << "_r" << rank << "_" << kCanonPolicy << ".json";
    std::filesystem::path path = std::filesystem::path(cache_dir) / name.str();
    bool hit = false;
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      Json entry = Json::parse(in);
      std::string payload = entry.at("value").dump();
      if (entry.at("checksum") == fnv1a_hex(payload)) {
        value = entry.at("value");
        hit = true;
      }
    }
    if (!hit) {
      value = canon_value(rank, s, order);
      Json entry;
      entry["key"] = {{"charge", io::charge_to_json(s)},
                      {"rank", rank},
                      {"policy", kCanonPolicy}};
      entry["value"] = value;
      entry["checksum"] = fnv1a_hex(value.dump());
      std::filesystem::create_directories(path.parent_path());
      std::ofstream fout(path);
      fout << entry.dump() << "\n";
    }
  } else {
    value = canon_value(rank, s, order);
  }

  std::ostringstream text;
  for (const auto& entry : value.at("vectors")) {
    FockVector g = io::fock_from_json(entry.at("vector"));
    text << "G" << io::multipartition_from_json(entry.at("lambda")).str() << ":\n"
         << fock_text(g) << "\n";
  }
  emit(out, value, format, text.str());
  return 0;
}

int cmd_expand_simple(const std::string& symbol_arg, const std::string& format,
                      std::ostream& out) {
  Symbol S = io::symbol_from_json(parse_json_arg(symbol_arg));
  FockVector v = expand_simple(S);
  emit(out, io::fock_to_json(v), format,
       expansion_text(v, S.charge(), S.truncation()));
  return 0;
}

FamilyKey parse_family_key(const std::string& charge_csv,
                           const std::string& multiset_csv) {
  FamilyKey key;
  key.charge = io::charge_from_string(charge_csv, ChargeFlavor::decreasing);
  key.flavor = SymbolFlavor::finite;
  key.m = 0;
  key.entries = parse_int_list(multiset_csv);
  std::sort(key.entries.begin(), key.entries.end());
  return key;
}

int cmd_family_enum(const std::string& charge_csv, const std::string& multiset_csv,
                    const std::string& format, std::ostream& out) {
  FamilyKey key = parse_family_key(charge_csv, multiset_csv);
  auto family = enumerate_family(key);
  Json j = Json::array();
  std::ostringstream text;
  for (size_t i = 0; i < family.size(); ++i) {
    j.push_back(io::symbol_to_json(family[i]));
    if (i) text << "\n";
    text << family[i].str() << "\n";
  }
  emit(out, j, format, text.str());
  return 0;
}

int cmd_family_min_b(const std::string& charge_csv, const std::string& multiset_csv,
                     const std::string& format, std::ostream& out) {
  FamilyKey key = parse_family_key(charge_csv, multiset_csv);
  Symbol sf = minimal_symbol(key);
  BInvariants inv = b_invariants(sf);
  Json j;
  j["symbol"] = io::symbol_to_json(sf);
  j["z"] = z_sequence(sf);
  j["b"] = inv.b.str();
  j["b_prime"] = inv.b_prime.str();
  std::ostringstream text;
  text << sf.str() << "\nb = " << inv.b.str() << ", b' = " << inv.b_prime.str();
  emit(out, j, format, text.str());
  return 0;
}

int cmd_chars(bool jm, const std::string& charge_csv, int rank,
              const std::string& format, std::ostream& out) {
  Charge s = io::charge_from_string(
      charge_csv, jm ? ChargeFlavor::general : ChargeFlavor::decreasing);
  std::set<Character> chars = jm ? jm_cellular_characters(rank, s)
                                 : constructible_characters(rank, s);
  Json j = Json::array();
  std::ostringstream text;
  bool first = true;
  for (const Character& chi : chars) {
    j.push_back(io::character_to_json(chi));
    if (!first) text << "\n";
    first = false;
    text << chi.str();
  }
  emit(out, j, format, text.str());
  return 0;
}

// ---- checks: JSON-lines reports, nonzero exit on failure ----

int cmd_check_serre(int level_max, int n_max, std::ostream& out) {
  bool all_pass = true;
  std::vector<Charge> charges = {Charge({0})};
  if (level_max >= 2) {
    charges.push_back(Charge({1, 0}));
    charges.push_back(Charge({0, 0}));
  }
  if (level_max >= 3) {
    charges.push_back(Charge({2, 1, 0}));
    charges.push_back(Charge({3, 1, 2}));
  }
  for (const Charge& s : charges) {
    int lo = *std::min_element(s.s.begin(), s.s.end()) - n_max - 1;
    int hi = *std::max_element(s.s.begin(), s.s.end()) + n_max + 1;
    for (int n = 0; n <= n_max; ++n) {
      for (const auto& mp : all_multipartitions(s.level(), n)) {
        FockVector v = FockVector::basis_vector(s, mp);
        bool ok = true;
        for (int i = lo; i <= hi && ok; ++i) {
          // [E_i, F_i] = (K_i - K_i^{-1})/(q - q^{-1}) = [N_i]
          FockVector lhs = apply_generator(Gen::E, i, apply_generator(Gen::F, i, v)) -
                           apply_generator(Gen::F, i, apply_generator(Gen::E, i, v));
          FockVector rhs = v.scaled(quantum_int(weight_statistic(mp, i, s)));
          ok = lhs == rhs;
          if (!ok) break;
          auto F = [&](int a, const FockVector& w) { return apply_generator(Gen::F, a, w); };
          auto E = [&](int a, const FockVector& w) { return apply_generator(Gen::E, a, w); };
          for (int j : {i - 1, i + 1}) {
            // F_i^2 F_j - [2] F_i F_j F_i + F_j F_i^2 = 0, same for E
            FockVector sf = F(i, F(i, F(j, v))) - F(i, F(j, F(i, v))).scaled(quantum_int(2)) +
                            F(j, F(i, F(i, v)));
            FockVector se = E(i, E(i, E(j, v))) - E(i, E(j, E(i, v))).scaled(quantum_int(2)) +
                            E(j, E(i, E(i, v)));
            if (!sf.is_zero() || !se.is_zero()) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
          for (int j : {i - 3, i + 2}) {
            // |i-j| > 1: the operators commute
            if (!(F(i, F(j, v)) == F(j, F(i, v))) ||
                !(E(i, E(j, v)) == E(j, E(i, v)))) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
          // K_i F_j twist on j in {i-1, i, i+1, i+2}
          for (int j = i - 1; j <= i + 2; ++j) {
            int tw = (j == i - 1 ? 1 : 0) - 2 * (j == i ? 1 : 0) + (j == i + 1 ? 1 : 0);
            FockVector lhs2 = apply_generator(Gen::K, i, F(j, v));
            FockVector rhs2 = F(j, apply_generator(Gen::K, i, v)).scaled(LaurentPoly::q_power(tw));
            if (!(lhs2 == rhs2)) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) all_pass = false;
        Json line;
        line["check"] = "relations";
        line["charge"] = io::charge_to_json(s);
        line["lambda"] = io::multipartition_to_json(mp);
        line["pass"] = ok;
        if (!ok) out << line.dump() << "\n";
      }
    }
    Json summary;
    summary["check"] = "relations";
    summary["charge"] = io::charge_to_json(s);
    summary["pass"] = all_pass;
    out << summary.dump() << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_check_oracle(int rank_max, std::ostream& out) {
  bool all_pass = true;
  std::vector<Charge> charges = {Charge({1, 0}), Charge({0, 0}),
                                 Charge({3, 1, 2}), Charge({2, 1, 0})};
  for (const Charge& s : charges) {
    int lo = *std::min_element(s.s.begin(), s.s.end()) - rank_max - 1;
    int hi = *std::max_element(s.s.begin(), s.s.end()) + rank_max + 1;
    bool ok = true;
    for (int n = 0; n <= rank_max && ok; ++n)
      for (const auto& mp : all_multipartitions(s.level(), n)) {
        FockVector v = FockVector::basis_vector(s, mp);
        for (int i = lo; i <= hi; ++i) {
          for (Gen g : {Gen::E, Gen::F, Gen::K}) {
            if (!(apply_generator(g, i, v) == tensor_oracle_apply(g, i, v))) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    if (!ok) all_pass = false;
    Json line;
    line["check"] = "oracle";
    line["charge"] = io::charge_to_json(s);
    line["pass"] = ok;
    out << line.dump() << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_check_conj(const std::string& which, const std::string& charge_csv,
                   int n_max, long budget, std::ostream& out) {
  bool all_pass = true;
  if (which == "l5") {
    MonomialityEntry entry = check_l5_counterexample(budget);
    Json line;
    line["check"] = "l5_counterexample";
    line["lambda"] = io::multipartition_to_json(entry.lambda);
    line["monomial"] = entry.answer == MonomialAnswer::yes;
    line["nodes"] = entry.nodes;
    line["pass"] = entry.pass;
    line["schur_oracle"] = nullptr;  // reserved
    out << line.dump() << "\n";
    all_pass = entry.pass;
  } else if (which == "min_b" || which == "m_lambda") {
    Charge s = io::charge_from_string(charge_csv, ChargeFlavor::decreasing);
    if (which == "min_b") {
      for (const MinBEntry& e : check_min_b_constituent(s, n_max)) {
        Json line;
        line["check"] = "min_b_constituent";
        line["lambda"] = io::multipartition_to_json(e.lambda);
        line["minimizer"] = io::multipartition_to_json(e.minimizer);
        line["pass"] = e.pass;
        if (!e.ties.empty()) {
          Json ties = Json::array();
          for (const auto& t : e.ties) ties.push_back(io::multipartition_to_json(t));
          line["ties"] = ties;
        }
        out << line.dump() << "\n";
        all_pass = all_pass && e.pass;
      }
    } else {
      for (const MLambdaEntry& e : check_m_lambda_family(s, n_max)) {
        Json line;
        line["check"] = "m_lambda_family";
        line["lambda"] = io::multipartition_to_json(e.lambda);
        line["minimizer"] = io::multipartition_to_json(e.minimizer);
        line["family_minimal"] = io::multipartition_to_json(e.family_minimal);
        line["pass"] = e.pass;
        out << line.dump() << "\n";
        all_pass = all_pass && e.pass;
      }
    }
  } else if (which == "canonical_monomial_l2") {
    Charge s = io::charge_from_string(charge_csv, ChargeFlavor::decreasing);
    for (const MonomialityEntry& e : check_canonical_monomial_l2(s, n_max, budget)) {
      Json line;
      line["check"] = "canonical_monomial_l2";
      line["lambda"] = io::multipartition_to_json(e.lambda);
      line["pass"] = e.pass;
      if (e.pass) line["witness"] = io::word_to_json(e.witness);
      out << line.dump() << "\n";
      all_pass = all_pass && e.pass;
    }
  } else {
    fail(ErrorCode::BadInput, "unknown conjecture " + which);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact Fock-space combinatorics: canonical bases, symbol "
               "families and character sets"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string charge, word, in_vec, symbol_arg, multiset, cache_dir, which;
  int rank = 0, n_max = 2, level_max = 2, rank_max = 2;
  long budget = 2000000;
  bool perturbed = false;

  auto* fock_cmd = app.add_subcommand("fock", "apply monomial words");
  auto* fock_apply = fock_cmd->add_subcommand("apply", "apply a word to a vector");
  fock_apply->add_option("--charge", charge)->required();
  fock_apply->add_option("--word", word, "JSON [[i,r],...]")->required();
  fock_apply->add_option("--in", in_vec, "input vector (file or inline JSON)");

  auto* canon = app.add_subcommand("canon", "canonical basis of one rank");
  canon->add_option("--charge", charge)->required();
  canon->add_option("--rank", rank)->required();
  canon->add_option("--cache", cache_dir);
  canon->add_flag("--perturbed-order", perturbed,
                  "use the alternate elimination order (output must agree)");

  auto* expand = app.add_subcommand("expand-simple",
                                    "closed-form expansion of a simple symbol");
  expand->add_option("--symbol", symbol_arg, "file or inline JSON")->required();

  auto* family = app.add_subcommand("family", "symbol families");
  auto* family_enum = family->add_subcommand("enum", "list the whole family");
  family_enum->add_option("--charge", charge)->required();
  family_enum->add_option("--multiset", multiset)->required();
  auto* family_min = family->add_subcommand("min-b", "greedy minimal symbol");
  family_min->add_option("--charge", charge)->required();
  family_min->add_option("--multiset", multiset)->required();

  auto* chars = app.add_subcommand("chars", "character sets");
  auto* chars_jm = chars->add_subcommand("jm", "truncated-induction closure");
  chars_jm->add_option("--charge", charge)->required();
  chars_jm->add_option("--rank", rank)->required();
  auto* chars_con = chars->add_subcommand("constructible", "level-2 canonical shadows");
  chars_con->add_option("--charge", charge)->required();
  chars_con->add_option("--rank", rank)->required();

  auto* check = app.add_subcommand("check", "verification reports");
  auto* check_serre = check->add_subcommand("serre", "operator relations");
  check_serre->add_option("--level-max", level_max);
  check_serre->add_option("--n-max", n_max);
  auto* check_oracle = check->add_subcommand("oracle", "dual-implementation agreement");
  check_oracle->add_option("--rank-max", rank_max);
  auto* check_conj = check->add_subcommand("conj", "conjecture checkers");
  check_conj->add_option("--which", which,
                         "min_b | m_lambda | l5 | canonical_monomial_l2")
      ->required();
  check_conj->add_option("--charge", charge);
  check_conj->add_option("--n-max", n_max);
  check_conj->add_option("--budget", budget);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (fock_apply->parsed())
      return cmd_fock_apply(charge, word, in_vec, format, out);
    if (canon->parsed())
      return cmd_canon(charge, rank, cache_dir, perturbed, format, out);
    if (expand->parsed()) return cmd_expand_simple(symbol_arg, format, out);
    if (family->parsed() && family_enum->parsed())
      return cmd_family_enum(charge, multiset, format, out);
    if (family->parsed() && family_min->parsed())
      return cmd_family_min_b(charge, multiset, format, out);
    if (chars->parsed() && chars_jm->parsed())
      return cmd_chars(true, charge, rank, format, out);
    if (chars->parsed() && chars_con->parsed())
      return cmd_chars(false, charge, rank, format, out);
    if (check->parsed() && check_serre->parsed())
      return cmd_check_serre(level_max, n_max, out);
    if (check->parsed() && check_oracle->parsed())
      return cmd_check_oracle(rank_max, out);
    if (check->parsed() && check_conj->parsed())
      return cmd_check_conj(which, charge, n_max, budget, out);
    err << "missing subcommand\n";
    return 2;
  } catch (const DomainError& e) {
    Json diag;
    diag["error"] = error_code_name(e.code());
    diag["detail"] = e.detail();
    err << diag.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    Json diag;
    diag["error"] = "Unexpected";
    diag["detail"] = e.what();
    err << diag.dump() << "\n";
    return 3;
  }
}

}  // namespace cmfock
