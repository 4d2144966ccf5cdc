#pragma once

#include "tamari/brackets.hpp"
#include "tamari/bracketing_fn.hpp"
#include "tamari/embedding.hpp"
#include "tamari/families.hpp"
#include "tamari/inversion_set.hpp"
#include "tamari/lattice.hpp"
#include "tamari/serialization.hpp"
#include "tamari/verify.hpp"
