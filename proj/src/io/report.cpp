#include "latnorm/error.hpp"
#include "latnorm/io.hpp"
#include "latnorm/report.hpp"

namespace latnorm {

namespace {

Json labels_of(const FiniteLattice& L, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(L.label(x));
  return out;
}

std::vector<Elem> elems_of(const Json& j, const FiniteLattice& L) {
  std::vector<Elem> out;
  for (const auto& s : j) out.push_back(L.index_of(s.get<std::string>()));
  return out;
}

}  // namespace

Json to_json(const FiniteLattice& L, const Witness& w) {
  Json j;
  j["kind"] = w.kind == WitnessKind::LawViolation ? "law_violation" : "pattern_embedding";
  j["law"] = w.law;
  j["elements"] = labels_of(L, w.elements);
  j["detail"] = w.detail;
  return j;
}

Witness witness_from_json(const Json& j, const FiniteLattice& L) {
  Witness w;
  w.kind = j.at("kind") == "law_violation" ? WitnessKind::LawViolation : WitnessKind::PatternEmbedding;
  w.law = j.at("law").get<std::string>();
  w.elements = elems_of(j.at("elements"), L);
  w.detail = j.at("detail").get<std::string>();
  return w;
}

Json to_json(const FiniteLattice& L, const ClassificationReport& r) {
  Json j;
  j["size"] = L.size();
  j["atoms"] = labels_of(L, r.classes.atoms);
  j["join_irreducible"] = labels_of(L, r.classes.join_irreducible);
  j["meet_irreducible"] = labels_of(L, r.classes.meet_irreducible);
  j["bi_irreducible"] = labels_of(L, r.classes.bi_irreducible);
  j["modular"] = r.modular;
  j["distributive"] = r.distributive;
  j["one_distributive"] = r.one_distributive;
  j["atomistic"] = r.atomistic;
  j["boolean"] = r.boolean;
  j["complemented"] = r.complemented;
  j["one_distributive_elements"] = labels_of(L, r.one_distributive_elements);
  Json rect;
  rect["holds"] = r.rectangular.holds;
  rect["pair"] = r.rectangular.pair ? labels_of(L, {r.rectangular.pair->first, r.rectangular.pair->second})
                                    : Json(nullptr);
  rect["boundary_checked"] = r.rectangular.boundary_checked;
  j["rectangular"] = rect;
  j["forbidden_1_sublattice"] = r.forbidden ? to_json(L, *r.forbidden) : Json(nullptr);
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(L, w));
  return j;
}

ClassificationReport classification_from_json(const Json& j, const FiniteLattice& L) {
  ClassificationReport r;
  r.classes.atoms = elems_of(j.at("atoms"), L);
  r.classes.join_irreducible = elems_of(j.at("join_irreducible"), L);
  r.classes.meet_irreducible = elems_of(j.at("meet_irreducible"), L);
  r.classes.bi_irreducible = elems_of(j.at("bi_irreducible"), L);
  r.modular = j.at("modular");
  r.distributive = j.at("distributive");
  r.one_distributive = j.at("one_distributive");
  r.atomistic = j.at("atomistic");
  r.boolean = j.at("boolean");
  r.complemented = j.at("complemented");
  r.one_distributive_elements = elems_of(j.at("one_distributive_elements"), L);
  const Json& rect = j.at("rectangular");
  r.rectangular.holds = rect.at("holds");
  if (!rect.at("pair").is_null()) {
    const auto p = elems_of(rect.at("pair"), L);
    r.rectangular.pair = std::pair{p.at(0), p.at(1)};
  }
  r.rectangular.boundary_checked = rect.at("boundary_checked");
  if (!j.at("forbidden_1_sublattice").is_null()) r.forbidden = witness_from_json(j.at("forbidden_1_sublattice"), L);
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(w, L));
  return r;
}

Json to_json(const FiniteLattice& L, const VerificationReport& r) {
  Json j = Json::object();
  for (Law law : kAllLaws) {
    const auto& res = r.get(law);
    if (!res) continue;
    Json e;
    e["pass"] = res->pass;
    e["witness"] = res->witness ? to_json(L, *res->witness) : Json(nullptr);
    j[std::string(to_string(law))] = e;
  }
  return j;
}

VerificationReport verification_from_json(const Json& j, const FiniteLattice& L) {
  VerificationReport r;
  for (const auto& [key, e] : j.items()) {
    const auto law = parse_law(key);
    if (!law) throw LatticeError(ErrorCode::InvalidArgument, "unknown law '" + key + "'");
    LawResult res;
    res.pass = e.at("pass");
    if (!e.at("witness").is_null()) res.witness = witness_from_json(e.at("witness"), L);
    r.set(*law, res);
  }
  return r;
}

Json to_json(const SearchOutcome& o) {
  Json j;
  j["status"] = to_string(o.status);
  j["nodes_explored"] = o.nodes_explored;
  j["complete"] = o.complete;
  j["solutions"] = Json::array();
  for (const auto& T : o.solutions) {
    const FiniteLattice& L = T.lattice();
    Json rows = Json::array();
    for (Elem x = 0; x < L.size(); ++x) {
      Json row = Json::array();
      for (Elem y = 0; y < L.size(); ++y) row.push_back(L.label(T.at(x, y)));
      rows.push_back(row);
    }
    j["solutions"].push_back(rows);
  }
  return j;
}

SearchOutcome search_outcome_from_json(const Json& j, std::shared_ptr<const FiniteLattice> L) {
  SearchOutcome o;
  const std::string status = j.at("status");
  if (status == "found")
    o.status = SearchStatus::Found;
  else if (status == "exhausted-none")
    o.status = SearchStatus::ExhaustedNone;
  else if (status == "budget-exceeded")
    o.status = SearchStatus::BudgetExceeded;
  else
    throw LatticeError(ErrorCode::InvalidArgument, "unknown search status '" + status + "'");
  o.nodes_explored = j.at("nodes_explored");
  o.complete = j.at("complete");
  for (const auto& rows : j.at("solutions")) {
    std::vector<Elem> cells;
    for (const auto& row : rows)
      for (const auto& cell : row) cells.push_back(L->index_of(cell.get<std::string>()));
    o.solutions.emplace_back(L, std::move(cells));
  }
  return o;
}

Json to_json(const LawSuiteReport& r) {
  auto checks_json = [](const std::vector<LawCheck>& cs) {
    Json a = Json::array();
    for (const auto& c : cs) a.push_back(Json{{"law", c.law}, {"subject", c.subject}, {"detail", c.detail}});
    return a;
  };
  Json j;
  j["scope"] = r.scope;
  j["lattices"] = r.lattices;
  j["pairs"] = r.pairs;
  j["checks"] = Json::object();
  for (const auto& [law, count] : r.checks) j["checks"][law] = count;
  j["counterexamples"] = checks_json(r.counterexamples);
  j["converse_witnesses"] = checks_json(r.converse_witnesses);
  j["budget_exceeded"] = r.budget_exceeded;
  return j;
}

LawSuiteReport law_suite_from_json(const Json& j) {
  auto checks_from = [](const Json& a) {
    std::vector<LawCheck> out;
    for (const auto& c : a) out.push_back({c.at("law"), c.at("subject"), c.at("detail")});
    return out;
  };
  LawSuiteReport r;
  r.scope = j.at("scope");
  r.lattices = j.at("lattices");
  r.pairs = j.at("pairs");
  for (const auto& [law, count] : j.at("checks").items()) r.checks[law] = count.get<std::size_t>();
  r.counterexamples = checks_from(j.at("counterexamples"));
  r.converse_witnesses = checks_from(j.at("converse_witnesses"));
  r.budget_exceeded = j.at("budget_exceeded").get<std::vector<std::string>>();
  return r;
}

Json envelope(std::string_view kind, std::string_view input, Json result) {
  Json j;
  j["format"] = 1;
  j["tool"] = "latnorm";
  j["version"] = kToolVersion;
  j["kind"] = kind;
  j["input_hash"] = hash_hex(fnv1a(input));
  j["result"] = std::move(result);
  return j;
}

}  // namespace latnorm
