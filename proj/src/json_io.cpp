#include "orbitkit/json_io.hpp"

#include <charconv>
#include <string>

namespace orbitkit {

Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const Complex& v) { return Json::array({v.real(), v.imag()}); }

Json to_json(const MomentTensor& t) {
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries()) {
    MultiIndex index = key.first;
    index.push_back(key.second);
    entries.push_back(Json::array({index, value.real(), value.imag()}));
  }
  return entries;
}

Json to_json(const TranscendenceReport& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"num_invariants", r.num_invariants},
          {"ambient_dim", r.ambient_dim},
          {"jacobian_rank", r.jacobian_rank},
          {"contains_basis", r.contains_basis},
          {"necessary_condition", r.necessary_condition},
          {"points_sampled", r.points_sampled},
          {"seed", r.seed},
          {"sample_ranks", r.sample_ranks}};
}

Json to_json(const Table1Row& row) {
  Json j = to_json(row.report);
  j["expected"] = row.expected ? "Yes" : "No";
  j["verdict"] = row.report.contains_basis ? "Yes" : "No";
  j["match"] = row.matches();
  return j;
}

Json to_json(const ConjectureCell& cell) {
  return {{"n", cell.n},
          {"d", cell.d},
          {"inequality_holds", cell.inequality_holds},
          {"contains_basis", cell.contains_basis},
          {"agree", cell.agree()},
          {"jacobian_rank", cell.report.jacobian_rank},
          {"ambient_dim", cell.report.ambient_dim},
          {"num_invariants", cell.report.num_invariants}};
}

Json to_json(const CmfCounterexample& c) {
  Json witness = nullptr;
  if (c.verdict.witness_group_element) witness = *c.verdict.witness_group_element;
  return {{"n", c.n},
          {"seed", c.seed},
          {"x", to_json<Rational>(c.x)},
          {"y", to_json<Rational>(c.y)},
          {"invariants_agree_to_degree", c.verdict.invariants_agree_to_degree},
          {"same_orbit", c.verdict.same_orbit},
          {"witness_group_element", witness},
          {"resamples", c.resamples},
          {"holds", c.holds()}};
}

Json to_json(const BenchRecord& r) {
  return {{"case", r.case_name},
          {"group_order", r.group_order},
          {"dim", r.dim},
          {"wall_ms", r.wall_ms},
          {"scalar", scalar_kind_name(r.scalar)}};
}

namespace {

double parse_double(std::string_view token) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error(ErrorCode::ParseError, "not a number: '" + std::string(token) + "'");
  return value;
}

double parse_real(std::string_view token) {
  if (token.find('/') != std::string_view::npos) return parse_rational(token).get_d();
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  return parse_double(token);
}

}  // namespace

template <>
Rational parse_scalar<Rational>(std::string_view token) {
  return parse_rational(token);
}

template <>
Complex parse_scalar<Complex>(std::string_view token) {
  if (token.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  if (token.back() != 'i') return {parse_real(token), 0.0};
  token.remove_suffix(1);
  // split "a+b" / "a-b" at the last sign that is not part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t k = token.size(); k-- > 1;) {
    if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(token)};
  return {parse_real(token.substr(0, split)), imag_part(token.substr(split))};
}

template <class S>
Vector<S> parse_vector(std::string_view text) {
  Vector<S> out;
  while (true) {
    const auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    out.push_back(parse_scalar<S>(token));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

template Vector<Rational> parse_vector<Rational>(std::string_view);
template Vector<Complex> parse_vector<Complex>(std::string_view);

}  // namespace orbitkit
