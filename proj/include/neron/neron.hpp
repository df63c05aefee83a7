#pragma once

#include "neron/appendix.hpp"
#include "neron/arch_discrepancy.hpp"
#include "neron/bounds.hpp"
#include "neron/complexnum.hpp"
#include "neron/curve.hpp"
#include "neron/errors.hpp"
#include "neron/global.hpp"
#include "neron/heights.hpp"
#include "neron/lattice.hpp"
#include "neron/logvalue.hpp"
#include "neron/modular.hpp"
#include "neron/neron_arch.hpp"
#include "neron/neron_nonarch.hpp"
#include "neron/numeric.hpp"
#include "neron/places.hpp"
#include "neron/verify.hpp"
