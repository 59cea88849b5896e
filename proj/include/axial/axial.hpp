#ifndef AXIAL_AXIAL_HPP
#define AXIAL_AXIAL_HPP

// Umbrella header. JSON support (axial/io.hpp) is separate because it pulls in
// nlohmann/json.

#include "axial/appell.hpp"
#include "axial/axial_series.hpp"
#include "axial/error.hpp"
#include "axial/fueter.hpp"
#include "axial/halfspace.hpp"
#include "axial/herglotz.hpp"
#include "axial/linalg.hpp"
#include "axial/matrix.hpp"
#include "axial/quaternion.hpp"
#include "axial/realize.hpp"
#include "axial/schur.hpp"
#include "axial/toeplitz.hpp"

#endif  // AXIAL_AXIAL_HPP
