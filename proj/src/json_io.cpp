#include "cmfock/json_io.hpp"

#include <sstream>

namespace cmfock::io {

Json laurent_to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, c.str()}));
  return arr;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& term : j) {
    long e = term.at(0).get<long>();
    Int c(term.at(1).get<std::string>());
    p += LaurentPoly::monomial(e, c);
  }
  return p;
}

Json multipartition_to_json(const Multipartition& mp) {
  Json arr = Json::array();
  for (const auto& part : mp.components()) arr.push_back(part.parts());
  return arr;
}

Multipartition multipartition_from_json(const Json& j) {
  std::vector<Partition> comps;
  for (const auto& part : j) comps.emplace_back(part.get<std::vector<int>>());
  return Multipartition(std::move(comps));
}

Json charge_to_json(const Charge& s) { return Json(s.s); }

Charge charge_from_json(const Json& j, ChargeFlavor flavor) {
  return Charge(j.get<std::vector<int>>(), flavor);
}

Charge charge_from_string(const std::string& csv, ChargeFlavor flavor) {
  std::vector<int> entries;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    entries.push_back(std::stoi(item));
  }
  if (entries.empty()) fail(ErrorCode::BadInput, "empty charge");
  return Charge(std::move(entries), flavor);
}

Json fock_to_json(const FockVector& v) {
  Json j;
  j["charge"] = charge_to_json(v.charge());
  j["rank"] = v.rank();
  Json terms = Json::array();
  for (const auto& [mp, c] : v.terms()) {
    Json t;
    t["mp"] = multipartition_to_json(mp);
    t["coeff"] = laurent_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

FockVector fock_from_json(const Json& j) {
  Charge s = charge_from_json(j.at("charge"));
  FockVector v(s, j.at("rank").get<int>());
  for (const auto& t : j.at("terms"))
    v.add_term(multipartition_from_json(t.at("mp")),
               laurent_from_json(t.at("coeff")));
  return v;
}

Json symbol_to_json(const Symbol& S) {
  Json j;
  j["charge"] = charge_to_json(S.charge());
  j["m"] = S.truncation();
  if (S.flavor() == SymbolFlavor::finite) j["flavor"] = "finite";
  Json rows = Json::array();
  for (int c = 1; c <= S.level(); ++c) {
    const auto& row = S.row(c);
    size_t keep_from = 0;
    if (S.flavor() == SymbolFlavor::semi_infinite) {
      int lo = S.first_position(c);
      while (keep_from < row.size() && row[keep_from] == lo + (int)keep_from)
        ++keep_from;
    }
    rows.push_back(std::vector<int>(row.begin() + keep_from, row.end()));
  }
  j["rows"] = rows;
  return j;
}

Symbol symbol_from_json(const Json& j) {
  SymbolFlavor flavor = SymbolFlavor::semi_infinite;
  if (j.contains("flavor") && j.at("flavor") == "finite")
    flavor = SymbolFlavor::finite;
  Charge s = charge_from_json(j.at("charge"));
  int m = j.value("m", 0);
  std::vector<std::vector<int>> rows;
  for (const auto& row : j.at("rows")) rows.push_back(row.get<std::vector<int>>());
  if ((int)rows.size() != s.level())
    fail(ErrorCode::ShapeMismatch, "row count differs from charge level");
  if (flavor == SymbolFlavor::semi_infinite) {
    // Rows may arrive as the non-frozen suffix; rebuild the frozen prefix.
    for (int c = 1; c <= s.level(); ++c) {
      int full = std::max(0, s.at(c) + m);
      int have = (int)rows[c - 1].size();
      if (have > full)
        fail(ErrorCode::ShapeMismatch, "row longer than charge+truncation");
      if (have < full) {
        std::vector<int> row(full);
        int lo = 1 - m;
        for (int idx = 0; idx < full - have; ++idx) row[idx] = lo + idx;
        std::copy(rows[c - 1].begin(), rows[c - 1].end(),
                  row.begin() + (full - have));
        rows[c - 1] = std::move(row);
      }
    }
  }
  return Symbol(s, m, flavor, std::move(rows));
}

Json word_to_json(const MonomialWord& w) {
  Json arr = Json::array();
  for (const Letter& letter : w)
    arr.push_back(Json::array({letter.content, letter.power}));
  return arr;
}

MonomialWord word_from_json(const Json& j) {
  MonomialWord w;
  for (const auto& entry : j) {
    Letter letter;
    letter.content = entry.at(0).get<int>();
    letter.power = entry.size() > 1 ? entry.at(1).get<int>() : 1;
    if (letter.power < 1) fail(ErrorCode::BadInput, "letter power must be >= 1");
    w.push_back(letter);
  }
  return w;
}

Json character_to_json(const Character& chi) {
  Json j;
  j["rank"] = chi.rank;
  j["level"] = chi.level;
  Json cs = Json::array();
  for (const auto& [mp, k] : chi.multiplicities) {
    Json entry;
    entry["mp"] = multipartition_to_json(mp);
    entry["mult"] = k.str();
    cs.push_back(entry);
  }
  j["constituents"] = cs;
  return j;
}

}  // namespace cmfock::io
