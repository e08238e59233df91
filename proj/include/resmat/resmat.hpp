#pragma once

#include "resmat/error.hpp"
#include "resmat/higher.hpp"
#include "resmat/integer.hpp"
#include "resmat/packed.hpp"
#include "resmat/parallel.hpp"
#include "resmat/qr.hpp"
#include "resmat/quadratic_integer.hpp"
#include "resmat/residue_symbol.hpp"
#include "resmat/root_matrix.hpp"
#include "resmat/splitting.hpp"
#include "resmat/text.hpp"
