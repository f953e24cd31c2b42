#pragma once

#include <json.hpp>

#include "subshift/classify.hpp"
#include "subshift/errors.hpp"
#include "subshift/measures.hpp"
#include "subshift/spectral.hpp"
#include "subshift/structure.hpp"

namespace subshift::cli {

using Json = nlohmann::ordered_json;

Json letters_json(const Alphabet& a);
Json chain_json(const ComponentChain& chain);
Json matrix_json(const IntMatrix& m);
Json spectral_json(const SpectralProfile& spectral);
Json eigen_json(const EigenPair& e);
Json classification_json(const DecompositionReport& d);
Json descriptor_json(const MeasureDescriptor& d);
Json cylinder_json(const CylinderValue& c);
Json error_json(const Error& e);

}  // namespace subshift::cli
