#pragma once

#include "hk/bundle/rep.hpp"
#include "hk/space/model.hpp"

namespace hk::oracle {

/// a_1 = (R/6)·I.
Matrix gilkey_a1(const SymmetricSpaceModel& model, const FiberRep& rep);

/// a_2 = [(|Riem|² − |Ric|²)/180 + R²/72]·I + (1/12) Σ_ab Ω_ab Ω_ab for a
/// locally symmetric metric in an orthonormal frame.
Matrix gilkey_a2(const SymmetricSpaceModel& model, const FiberRep& rep);

}  // namespace hk::oracle
