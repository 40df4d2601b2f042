#pragma once

#include <json.hpp>

#include "focklat/fock.hpp"
#include "focklat/integral_ops.hpp"
#include "focklat/symfunc.hpp"

// JSON encodings of every value that crosses the process boundary.
// Rationals are always "num/den" strings; partitions are descending
// integer arrays; map-backed containers serialize in their canonical
// order, so output is deterministic.

namespace focklat {

using Json = nlohmann::json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const MultiPartition& mp);
MultiPartition multipartition_from_json(const Json& j);

Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

// {"name", "mid_rank", "gram", "exceptional_slot"?}; the slot is 1-based
// in files.
Json to_json(const FrobeniusModel& model);
ModelPtr model_from_json(const Json& j);

// {"model": name, "terms": [[key, "num/den"], ...]}.  Reading requires the
// model; a name mismatch is an input_error.
Json to_json(const FockState& s);
FockState fockstate_from_json(const Json& j, const ModelPtr& model);

// {"n", "model", "labels": [{"lambda","mu","nus"}...], "gram_det"}.
Json to_json(const BasisManifest& basis);

Json to_json(const ModelPtr& model, const SectorDecomposition& parts);
Json to_json(const ModelPtr& model, const BlowupDecomposition& parts);

Json load_json_file(const std::string& path);

} // namespace focklat
