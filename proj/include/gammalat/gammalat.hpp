#pragma once

#include "gammalat/errors.hpp"
#include "gammalat/integer.hpp"
#include "gammalat/int_matrix.hpp"
#include "gammalat/normal_form.hpp"
#include "gammalat/local_snf.hpp"
#include "gammalat/group.hpp"
#include "gammalat/group_ring.hpp"
#include "gammalat/fox.hpp"
#include "gammalat/lattice.hpp"
#include "gammalat/gamma.hpp"
#include "gammalat/tate.hpp"
#include "gammalat/constructions.hpp"
#include "gammalat/module_expr.hpp"
#include "gammalat/report.hpp"
#include "gammalat/verify.hpp"
