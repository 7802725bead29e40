#pragma once

#include <json.hpp>

#include "qhb/classify.hpp"
#include "qhb/dinv.hpp"
#include "qhb/lattice.hpp"
#include "qhb/obstruct.hpp"
#include "qhb/plumbing.hpp"

namespace qhb::io {

using json = nlohmann::ordered_json;

// Rationals are strings "a/b", "a" when integral.
json to_json(const Rational& r);
json to_json(const DInvariantTable& t);
json to_json(const PlumbingGraph& g);
json to_json(const SeifertData& s);
json to_json(const EmbedResult& r);
json to_json(const ObstructionReport& r);
json to_json(const SweepEntry& e);

PlumbingGraph graph_from_json(const json& j);
SeifertData seifert_from_json(const json& j);

std::string csv_header();
std::string csv_row(const SweepEntry& e);

}  // namespace qhb::io
