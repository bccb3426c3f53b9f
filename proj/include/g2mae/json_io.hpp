#pragma once

#include <json.hpp>

#include "g2mae/equivalence.hpp"
#include "g2mae/invariants.hpp"
#include "g2mae/mae.hpp"
#include "g2mae/rootsys.hpp"

namespace g2mae::json_io {

using nlohmann::json;

/// All rationals serialize as strings "p" or "p/q"; keys are plain ASCII.

json matrix_json(const QMatrix& m);
json form_json(const QForm& f);
json poly_json(const PolyU& p);
json gradation_json(const rootsys::Gradation& g);
json named_form_json(const invariants::NamedForm& nf);
json mae_entry_json(const mae::MAEEntry& e);
json separation_json(const equivalence::SeparationReport& r);
json point_json(const std::array<Rat, 15>& pt);

/// { "command": ..., "format": "json", "payload": ..., "toolversion": ... }
json envelope(const std::string& command, json payload);

extern const char* kToolVersion;

}  // namespace g2mae::json_io
