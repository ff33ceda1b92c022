#pragma once

#include <span>
#include <string_view>

#include "json.hpp"
#include "orbitkit/bench.hpp"
#include "orbitkit/separation.hpp"
#include "orbitkit/tensors.hpp"
#include "orbitkit/transcendence.hpp"

namespace orbitkit {

using Json = nlohmann::ordered_json;

/// Rationals as "p/q" (or "p" when integral); complex numbers as [re, im].
Json to_json(const Rational& v);
Json to_json(const Complex& v);

template <class S>
Json to_json(std::span<const S> v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

/// Entries as [[i1..id], "p/q"] on the exact path and [[i1..id], re, im] on
/// the F64 path, in sorted index order.
template <class S>
Json to_json(const SymmetricTensor<S>& t) {
  Json entries = Json::array();
  for (const auto& [index, value] : t.entries()) {
    Json entry = Json::array({index});
    if constexpr (ScalarTraits<S>::exact) {
      entry.push_back(to_json(value));
    } else {
      entry.push_back(value.real());
      entry.push_back(value.imag());
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

/// Entries as [[i1..i(d-1), k], re, im] where k is the conjugated slot.
Json to_json(const MomentTensor& t);
Json to_json(const TranscendenceReport& r);
Json to_json(const Table1Row& row);
Json to_json(const ConjectureCell& cell);
Json to_json(const CmfCounterexample& c);
Json to_json(const BenchRecord& r);

/// Parses one scalar token: "3", "-1/2", and on the F64 path also "2.5",
/// "1e-3", "1+2i", "-0.5i". Throws ParseError.
template <class S>
S parse_scalar(std::string_view token);

/// Comma separated list of parse_scalar tokens; blanks around tokens are ignored.
template <class S>
Vector<S> parse_vector(std::string_view text);

}  // namespace orbitkit
