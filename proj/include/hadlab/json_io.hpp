#pragma once

#include <json.hpp>

#include "hadlab/classify.hpp"
#include "hadlab/equivalence.hpp"
#include "hadlab/families.hpp"
#include "hadlab/mub.hpp"
#include "hadlab/witness.hpp"

namespace hadlab {

using Json = nlohmann::ordered_json;

// Grid schema: {"rows": R, "cols": C, "entries": [[entry, ...], ...]} where
// an entry is {"re": x, "im": y} or {"phase_turns": t} (meaning e^{2*pi*i*t});
// the two forms may be mixed. Malformed shapes or entries with modulus off 1
// by more than 1e-6 raise std::invalid_argument.
CHMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const CHMatrix& m);

// Same grid schema without the modulus restriction; 6x6 only.
DenseMatrix dense_from_json(const Json& j);

UnimodEntry entry_from_json(const Json& j);
Json entry_to_json(const UnimodEntry& e);

Json move_to_json(const EquivalenceMove& mv);

Json f6t_params_to_json(const FourierTParams& p);
Json x6_params_to_json(const X6Params& p);

Json report_to_json(const ClassificationReport& rep);
Json sweep_to_json(const PivotSweep& sweep);
Json witness_to_json(const WitnessReport& rep);
Json mub_to_json(const MubAuditReport& rep);

} // namespace hadlab
