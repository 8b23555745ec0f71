#include "rbchar/json_io.hpp"

#include <stdexcept>

namespace rbchar {

namespace {

std::string coeff_string(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument("coefficient must be a string or an integer");
}

json ideal_string(const KIdeal& ideal) { return ideal.generator().get_str(); }

KIdeal ideal_from(const CoeffRing& ring, const json& j) {
  return KIdeal(ring, mpz_class(coeff_string(j), 10));
}

}  // namespace

json element_to_json(const RBElement& f) {
  json out = json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    out.push_back(json::array({it->first, to_string(it->second)}));
  return out;
}

RBElement element_from_json(const AlgebraCtx& ctx, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("element must be a list of [degree, coefficient]");
  RBElement f(ctx);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned())
      throw std::invalid_argument("term must be [degree, coefficient]");
    f.add_term(term[0].get<std::size_t>(), ctx.ring.parse_coeff(coeff_string(term[1])));
  }
  return f;
}

IdealFile ideal_file_from_json(const json& j) {
  CoeffRing ring = CoeffRing::parse(j.at("ring").get<std::string>());
  AlgebraCtx ctx(ring, ring.parse_coeff(coeff_string(j.at("weight"))));
  std::vector<RBElement> gens;
  for (const auto& g : j.at("generators")) gens.push_back(element_from_json(ctx, g));
  return IdealFile{ctx, std::move(gens), j.at("bound").get<std::size_t>()};
}

json to_json(const IdealFile& file) {
  json gens = json::array();
  for (const auto& g : file.generators) gens.push_back(element_to_json(g));
  return json{{"ring", file.ctx.ring.descriptor()},
              {"weight", to_string(file.ctx.weight)},
              {"generators", gens},
              {"bound", file.bound}};
}

json saturation_report(const SaturationState& state) {
  json omegas = json::array();
  for (const auto& w : state.omegas()) omegas.push_back(ideal_string(w));
  json ascent = json::array();
  const AscentSet a = ascent_set(state, true);
  for (const auto& p : a.pairs())
    ascent.push_back(json::array({p.point, ideal_string(p.level)}));
  json out{{"omegas", omegas}, {"ascent", ascent}, {"stable", state.stable()}, {"slack_used", state.slack()}};
  if (!state.diagnostic().empty()) out["diagnostic"] = state.diagnostic();
  return out;
}

json ascent_to_json(const AscentSet& ascent) {
  json pairs = json::array();
  for (const auto& p : ascent.pairs()) pairs.push_back(json::array({p.point, ideal_string(p.level)}));
  return json{{"ring", ascent.ring().descriptor()}, {"pairs", pairs}};
}

AscentSet ascent_from_json(const json& j) {
  CoeffRing ring = CoeffRing::parse(j.at("ring").get<std::string>());
  std::vector<AscentPair> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("ascent pair must be [point, level]");
    pairs.push_back({p[0].get<std::size_t>(), ideal_from(ring, p[1])});
  }
  return AscentSet(ring, std::move(pairs));
}

json prime_report_to_json(const PrimeReport& report) {
  json out{{"prime", report.prime}, {"quotient", report.quotient}};
  if (report.witness)
    out["witness"] = json::array({to_string(report.witness->first), to_string(report.witness->second)});
  return out;
}

RingFile ring_file_from_json(const json& j) {
  auto orders = j.at("orders").get<std::vector<std::int64_t>>();
  auto unit = j.at("unit").get<RingElem>();
  auto mult = j.at("mult").get<std::vector<std::vector<RingElem>>>();
  auto op = j.at("operator").get<std::vector<std::vector<std::int64_t>>>();
  return RingFile{FiniteRing(std::move(orders), std::move(unit), std::move(mult)), RBOperatorTable(std::move(op))};
}

json to_json(const RingFile& file) {
  const FiniteRing& r = file.ring;
  const std::size_t k = r.components();
  std::vector<std::vector<RingElem>> mult(k, std::vector<RingElem>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      RingElem ei(k, 0), ej(k, 0);
      ei[i] = 1 % r.orders()[i];
      ej[j] = 1 % r.orders()[j];
      mult[i][j] = r.mul(ei, ej);
    }
  }
  return json{{"orders", r.orders()}, {"unit", r.unit()}, {"mult", mult}, {"operator", file.op.rows()}};
}

json characteristic_to_json(const CharacteristicReport& report) {
  json omegas = json::array();
  for (const auto& w : report.omegas) omegas.push_back(ideal_string(w));
  json witnesses = json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(w ? json(to_string(*w)) : json(nullptr));
  json out = ascent_to_json(report.ascent);
  out["omegas"] = omegas;
  out["witnesses"] = witnesses;
  out["images"] = report.images;
  out["orbit"] = json{{"start", report.orbit_start}, {"period", report.orbit_period}};
  out["stable"] = report.stable;
  return out;
}

}  // namespace rbchar
