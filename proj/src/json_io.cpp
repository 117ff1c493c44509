#include "toric/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace toric::io {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

json arrangement_to_json(const ToricArrangement& arr) {
  json hyps = json::array();
  for (const auto& h : arr.hypersurfaces) {
    json chi = json::array();
    for (const Int& c : h.character) chi.push_back(int_to_json(c));
    hyps.push_back(json{{"character", chi}, {"offset", rat_to_string(h.offset)}});
  }
  return json{{"rank", arr.rank}, {"hypersurfaces", hyps}};
}

ToricArrangement arrangement_from_json(const json& j) {
  std::vector<std::string> errors;
  ToricArrangement arr;
  if (!j.is_object() || !j.contains("rank") || !j.contains("hypersurfaces"))
    throw std::invalid_argument("arrangement JSON needs 'rank' and 'hypersurfaces'");
  arr.rank = j.at("rank").get<int>();
  for (const json& hj : j.at("hypersurfaces")) {
    Hypersurface h;
    for (const json& cj : hj.at("character")) h.character.push_back(int_from_json(cj));
    const json& oj = hj.at("offset");
    if (oj.is_string())
      h.offset = parse_offset(oj.get<std::string>(), &errors);
    else if (oj.is_number_integer() && oj.get<long long>() == 0)
      h.offset = Rat(0);
    else
      errors.push_back("offset must be a reduced fraction string");
    arr.hypersurfaces.push_back(std::move(h));
  }
  for (const std::string& e : validate(arr)) errors.push_back(e);
  if (!errors.empty()) {
    std::string msg = "invalid arrangement:";
    for (const std::string& e : errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  return arr;
}

IntMatrix parse_matrix(const std::string& s) {
  std::vector<IntVec> rows;
  std::istringstream all(s);
  std::string row;
  while (std::getline(all, row, ';')) {
    IntVec r;
    std::istringstream rs(row);
    std::string entry;
    while (std::getline(rs, entry, ',')) {
      size_t a = entry.find_first_not_of(" \t");
      size_t b = entry.find_last_not_of(" \t");
      if (a == std::string::npos) throw std::invalid_argument("empty matrix entry");
      r.emplace_back(entry.substr(a, b - a + 1));
    }
    if (!rows.empty() && r.size() != rows.front().size())
      throw std::invalid_argument("ragged matrix rows");
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  return IntMatrix::from_rows(rows);
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json layer_to_json(const Layer& l) {
  json psi = json::array();
  for (const Rat& x : l.psi) psi.push_back(rat_to_string(x));
  return json{{"gamma", matrix_to_json(l.gamma)}, {"psi", psi}, {"dim", l.dim()}};
}

json layers_to_json(const std::vector<Layer>& layers) {
  json out = json::array();
  for (const Layer& l : layers) out.push_back(layer_to_json(l));
  return out;
}

json poset_to_json(const LayerPoset& lp) {
  json elements = json::array();
  for (int i = 0; i < lp.size(); ++i) {
    json e = layer_to_json(lp.layers[i]);
    e["index"] = i;
    e["mobius"] = int_to_json(lp.mobius[i]);
    elements.push_back(e);
  }
  auto cov = posets::cover_relation(to_finite_poset(lp));
  json covers = json::array();
  for (int i = 0; i < lp.size(); ++i)
    for (int j = 0; j < lp.size(); ++j)
      if (cov[i][j]) covers.push_back(json::array({i, j}));
  return json{{"size", lp.size()}, {"elements", elements}, {"cover_relations", covers}};
}

json polynomial_to_json(const std::vector<Int>& coeffs) {
  json out = json::array();
  for (const Int& c : coeffs) out.push_back(int_to_json(c));
  return out;
}

json certificate_to_json(const posets::SupersolvabilityCertificate& cert) {
  json chain = json::array();
  for (size_t i = 0; i < cert.chain.size(); ++i) {
    chain.push_back(json{{"elements", cert.chain[i]},
                         {"is_m_ideal", bool(cert.ideal_is_m[i])},
                         {"is_tm_ideal", bool(cert.ideal_is_tm[i])}});
  }
  return json{{"strict", cert.strict}, {"chain", chain}};
}

json witness_to_json(const NonGenerationWitness& w) {
  if (w.kind == NonGenerationWitness::Kind::BettiInequality) {
    return json{{"kind", "betti_inequality"},
                {"b1", int_to_json(w.b1)},
                {"b2", int_to_json(w.b2)},
                {"justification", w.justification}};
  }
  return json{{"kind", "deck_orbit"},
              {"cover", w.cover ? matrix_to_json(w.cover->m) : json()},
              {"orbit", layers_to_json(w.orbit)},
              {"justification", w.justification}};
}

json report_to_json(const ObstructionReport& report) {
  const ArrangementDigest& d = report.digest;
  json digest{{"rank", d.rank},
              {"hypersurfaces", d.hypersurfaces},
              {"central", d.central},
              {"primitive", d.primitive},
              {"essential", d.essential},
              {"supersolvable", d.supersolvable},
              {"strictly_supersolvable", d.strictly_supersolvable}};
  json verdicts = json::array();
  for (const PrimeVerdict& v : report.verdicts) {
    json vj{{"p", v.p}};
    if (v.status == PrimeVerdict::Status::NonBlochKato) {
      vj["status"] = "non_bloch_kato";
      vj["cover"] = matrix_to_json(v.cover->m);
      vj["degree"] = int_to_json(v.cover->degree());
      json ws = json::array();
      for (const NonGenerationWitness& w : v.witnesses) ws.push_back(witness_to_json(w));
      vj["witnesses"] = ws;
    } else {
      vj["status"] = "inconclusive";
      vj["reason"] = v.reason;
    }
    verdicts.push_back(vj);
  }
  json ep = json::array();
  for (unsigned p : report.exceptional_primes) ep.push_back(p);
  return json{{"digest", digest},
              {"exceptional_primes", ep},
              {"exceptional_primes_known", report.exceptional_primes_known},
              {"verdicts", verdicts},
              {"search_depth_used", report.search_depth_used}};
}

}  // namespace toric::io
